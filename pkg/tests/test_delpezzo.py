import pytest

from steinerrep.delpezzo import (
    PipelineConfig,
    PipelineError,
    anticanonical_ideal,
    build_surface_ideals,
    check_center,
    find_smooth_cubic,
    linear_form_rank,
    project_surface,
    run_pipeline,
    surface_ring,
)
from steinerrep.field import Field
from steinerrep.groebner import Budget, BudgetExceeded
from steinerrep.ideal import Ideal, hilbert_polynomial, minimal_generator_degrees
from steinerrep.matrices import PolyMatrix, minors
from steinerrep.rng import SplitMix64, random_linear_forms

from oracles import minimal_generator_counts

GF = Field.prime()


@pytest.fixture(scope="module")
def d8():
    return build_surface_ideals("d8", GF)


@pytest.fixture(scope="module")
def d8_projection(d8):
    forms = random_linear_forms(d8.surface.ring, 6, 1)
    return forms, project_surface(d8.surface, forms)


def _point_forms(ring, point, seed):
    """Six independent linear forms vanishing at ``point``."""
    p = GF.characteristic
    gen = SplitMix64(seed)
    k = next(i for i, c in enumerate(point) if c % p)
    inv = pow(point[k], -1, p)
    forms = []
    while len(forms) < 6:
        coeffs = [gen.below(p) for _ in point]
        val = sum(c * x for c, x in zip(coeffs, point)) % p
        coeffs[k] = (coeffs[k] - val * inv) % p
        f = ring.from_terms((c, tuple(int(i == j) for j in range(ring.nvars))) for i, c in enumerate(coeffs))
        if linear_form_rank(forms + [f]) == len(forms) + 1:
            forms.append(f)
    return forms


# -- construction -------------------------------------------------------------


def test_surface_ideals(d8):
    assert all(g.degree() == 2 for g in d8.surface.generators)
    hp = hilbert_polynomial(d8.surface)
    assert hp.projective_degree == 8 and hp.degree == 2
    assert all(g.degree() == 3 for g in d8.secant.generators)


def test_d7_surface():
    s = build_surface_ideals("d7", GF)
    assert s.surface.ring.nvars == 8
    assert len(minors(s.matrix, 2)) == 18
    hp = hilbert_polynomial(s.surface)
    assert hp.projective_degree == 7 and hp.degree == 2


@pytest.mark.parametrize("variant", ["d8", "d7"])
def test_minors_agree_with_the_anticanonical_parametrization(variant):
    assert build_surface_ideals(variant, GF).surface == anticanonical_ideal(variant, GF)


def test_custom_matrix_validation():
    R = surface_ring("d8", GF)
    with pytest.raises(ValueError, match="linear"):
        build_surface_ideals(PolyMatrix(R, [["x0^2", "x1", "x2"]] * 3))
    with pytest.raises(ValueError, match="variant"):
        build_surface_ideals("d6", GF)


# -- centers -------------------------------------------------------------------


def test_random_center_is_admissible(d8):
    assert check_center(d8.secant, random_linear_forms(d8.surface.ring, 6, 1))


def test_center_through_a_surface_point_is_rejected(d8):
    # the image of (s, t, u) = (1, 2, 3) lies on the surface, hence on its secant variety
    s, t, u = 1, 2, 3
    cubes = [s**3, s*s*t, s*s*u, s*t*t, s*t*u, s*u*u, t**3, t*t*u, t*u*u]
    forms = _point_forms(d8.surface.ring, cubes, 5)
    assert not check_center(d8.secant, forms)


def test_coordinate_center_is_rejected(d8):
    # x0 = ... = x5 = 0 leaves a pencil of rank-2 matrices
    assert not check_center(d8.secant, list(d8.surface.ring.gens[:6]))


def test_dependent_center_is_an_error(d8):
    x = d8.surface.ring.gens
    with pytest.raises(ValueError, match="dependent"):
        check_center(d8.secant, [x[0], x[1], x[2], x[3], x[4], x[0] + x[1]])


# -- projection ------------------------------------------------------------------


def test_kernel_generators_vanish_on_the_surface(d8, d8_projection):
    forms, J = d8_projection
    for g in J.generators:
        assert d8.surface.contains(g.substitute(forms))


def test_projection_preserves_hilbert_polynomial(d8, d8_projection):
    _, J = d8_projection
    assert J.ring.var_names == ("y0", "y1", "y2", "y3", "y4", "y5")
    assert hilbert_polynomial(J) == hilbert_polynomial(d8.surface)


def test_projected_minimal_generators_by_linear_algebra(d8_projection):
    _, J = d8_projection
    counts = {}
    for d in minimal_generator_degrees(J):
        counts[d] = counts.get(d, 0) + 1
    assert counts == minimal_generator_counts(J.generators) == {3: 7, 4: 6}


# -- cubic search ------------------------------------------------------------------


def test_smooth_cubic_found(d8_projection):
    _, J = d8_projection
    res = find_smooth_cubic(J, seed=1)
    assert res.smooth and res.form.degree() == 3 and J.contains(res.form)


def test_singular_cubic_is_reported():
    R = surface_ring("d8", GF)
    J = Ideal(R, [R.gen(0) ** 3])
    res = find_smooth_cubic(J, max_tries=3)
    assert not res.smooth and res.tried == 3
    with pytest.raises(ValueError, match="no cubic"):
        find_smooth_cubic(Ideal(R, [R.gen(0) ** 2]))


# -- full runs ---------------------------------------------------------------------


def test_pipeline_d8_is_deterministic():
    a = run_pipeline(PipelineConfig("d8", seed=1))
    b = run_pipeline(PipelineConfig("d8", seed=1))
    assert a.to_dict(timings=False) == b.to_dict(timings=False)
    assert a.center_ok and a.attempts == 1 and a.seed_used == 1
    assert a.generator_degrees == {3: 7, 4: 12}
    assert a.cubic_found and a.cubic_smooth
    assert set(a.timings) >= {"build", "center", "project", "smooth_cubic"}
    assert "7 of degree 3" in a.transcript()


def test_pipeline_d7():
    r = run_pipeline(PipelineConfig("d7", seed=42))
    assert r.generator_degrees == r.minimal_generator_degrees == {3: 13, 4: 1}
    assert r.cubic_smooth and r.projective_degree == 7


def test_pipeline_without_smoothness_check():
    r = run_pipeline(PipelineConfig("d7", smoothness_check=False))
    assert r.cubic_found and r.cubic_smooth is None and "smooth_cubic" not in r.timings


def test_pipeline_config_validation():
    with pytest.raises(ValueError):
        PipelineConfig("d7", max_retries=0)
    with pytest.raises(ValueError):
        PipelineConfig("p2")


def test_pipeline_budget_propagates():
    with pytest.raises(BudgetExceeded):
        run_pipeline(PipelineConfig("d7", budget=Budget(max_pairs=5)))


def test_pipeline_error_carries_stage():
    err = PipelineError("project", "boom")
    assert err.stage == "project" and str(err) == "[project] boom"


@pytest.mark.slow
def test_pipeline_over_rationals():
    r = run_pipeline(PipelineConfig("d7", field=Field.rationals()))
    assert r.generator_degrees == {3: 13, 4: 1} and r.cubic_smooth
