"""Projection of del Pezzo surfaces of degree 8 and 7 into P^5.

The surfaces are cut out by the 2x2 minors of a 3 x k matrix of linear
forms; the 3x3 minors cut out their secant varieties.  A random P^{m-6}
spanned by six linear forms is accepted as a projection center when it
misses the secant variety, the image ideal is computed as a ring-map
kernel, and a smooth cubic fourfold through the image is searched for.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import Field
from .groebner import Budget, BudgetExceeded
from .hilbert import HilbertPolynomial
from .ideal import (
    Ideal,
    hilbert_polynomial,
    irrelevant_ideal,
    is_projectively_empty,
    jacobian_ideal,
    minimal_generators,
    ring_map_kernel,
    saturate,
)
from .matrices import PolyMatrix, minors_ideal
from .poly import PolyRing, Polynomial, format_poly
from .rng import SplitMix64, random_combination, random_linear_forms

log = logging.getLogger(__name__)

VARIANTS = ("d8", "d7")

# Cubic monomials in (s, t, u) in lex order, u^3 omitted: the anticanonical
# system of P^2 blown up at (0:0:1).  Coordinate x_i is the i-th of these.
_CUBICS = [
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2),
]
# The 3 x 5 matrix is (s, t, u)^T times (s^2, st, su, t^2, tu), written in x.
_D8_MATRIX = [[0, 1, 2, 3, 4], [1, 3, 4, 6, 7], [2, 4, 5, 7, 8]]
# Dropping the t^2 column leaves t^3 = x6 unused: the surface spans P^7.
_D7_COLUMNS = [0, 1, 2, 4]
_D7_VARS = [0, 1, 2, 3, 4, 5, 7, 8]


class PipelineError(RuntimeError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass
class SurfaceIdeals:
    matrix: PolyMatrix
    surface: Ideal
    secant: Ideal


def surface_ring(variant: str, field: Field) -> PolyRing:
    variant = _variant(variant)
    indices = range(9) if variant == "d8" else _D7_VARS
    return PolyRing(field, [f"x{i}" for i in indices])


def _variant(v: str) -> str:
    v = v.lower()
    if v not in VARIANTS:
        raise ValueError(f"unknown variant {v!r}; expected one of {', '.join(VARIANTS)}")
    return v


def surface_matrix(variant: str, ring: PolyRing) -> PolyMatrix:
    variant = _variant(variant)
    cols = range(5) if variant == "d8" else _D7_COLUMNS
    return PolyMatrix(ring, [[ring.gen(f"x{row[c]}") for c in cols] for row in _D8_MATRIX])


def build_surface_ideals(variant: str | PolyMatrix, field: Field | None = None) -> SurfaceIdeals:
    """Minors ideals of the surface (2x2) and of its secant variety (3x3)."""
    if isinstance(variant, PolyMatrix):
        m = variant
        if not m.is_linear():
            raise ValueError("custom surface matrices must have linear entries")
        if m.nrows < 3 or m.ncols < 3:
            raise ValueError("custom surface matrices need at least 3 rows and 3 columns")
    else:
        m = surface_matrix(variant, surface_ring(variant, field or Field.prime()))
    return SurfaceIdeals(m, minors_ideal(m, 2), minors_ideal(m, 3))


def anticanonical_ideal(variant: str, field: Field | None = None, budget: Budget | None = None) -> Ideal:
    """The same surface as the kernel of its parametrization by plane cubics."""
    variant = _variant(variant)
    field = field or Field.prime()
    ring = surface_ring(variant, field)
    plane = PolyRing(field, ["s", "t", "u"])
    images = [plane.monomial(_CUBICS[int(name[1:])]) for name in ring.var_names]
    return ring_map_kernel(Ideal(plane), images, target=ring, budget=budget)


def linear_form_rank(forms: Sequence[Polynomial]) -> int:
    """Rank of the constant coefficient matrix of linear forms."""
    if not forms:
        return 0
    ring = forms[0].ring
    if any(not f.is_zero() and not (f.is_homogeneous() and f.degree() == 1) for f in forms):
        raise ValueError("expected linear forms")
    field = ring.field
    pivots: dict[int, dict[int, object]] = {}
    for f in forms:
        row = dict(f._t)
        while row:
            lead = max(row)
            if lead not in pivots:
                inv = field.inv(row[lead])
                pivots[lead] = {k: field(v * inv) for k, v in row.items()}
                break
            c = row[lead]
            for k, v in pivots[lead].items():
                val = field(row.get(k, 0) - c * v)
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
    return len(pivots)


def check_center(secant: Ideal, center_forms: Sequence[Polynomial], budget: Budget | None = None) -> bool:
    """True iff the linear space cut out by ``center_forms`` misses the secant variety."""
    if linear_form_rank(center_forms) != len(center_forms):
        raise ValueError("center forms are linearly dependent")
    total = secant + Ideal(secant.ring, center_forms)
    return saturate(total, irrelevant_ideal(secant.ring), budget).is_unit(budget)


def target_ring(field: Field, n: int = 6) -> PolyRing:
    return PolyRing(field, [f"y{i}" for i in range(n)])


def project_surface(surface: Ideal, center_forms: Sequence[Polynomial], budget: Budget | None = None) -> Ideal:
    """Homogeneous ideal of the image of the surface under the linear projection."""
    return ring_map_kernel(surface, center_forms, target_ring(surface.ring.field, len(center_forms)), budget)


@dataclass
class CubicSearch:
    form: Polynomial
    smooth: bool
    tried: int


def find_smooth_cubic(
    projected: Ideal, seed: int = 1, max_tries: int = 8, budget: Budget | None = None
) -> CubicSearch:
    """Look for a cubic in ``projected`` whose hypersurface is smooth.

    The cubic generators are tried in order, then seeded random linear
    combinations of them, ``max_tries`` candidates in all.
    """
    cubics = [g for g in projected.generators if g.is_homogeneous() and g.degree() == 3]
    if not cubics:
        raise ValueError("the ideal contains no cubic generator")
    gen = SplitMix64(seed)
    candidate = cubics[0]
    for k in range(max_tries):
        if k < len(cubics):
            candidate = cubics[k]
        else:
            candidate = random_combination(cubics, gen)
            if candidate.is_zero():
                continue
        if is_projectively_empty(jacobian_ideal(candidate), budget):
            return CubicSearch(candidate, True, k + 1)
    return CubicSearch(candidate, False, max_tries)


@dataclass(frozen=True)
class PipelineConfig:
    variant: str = "d8"
    field: Field = dc_field(default_factory=Field.prime)
    seed: int = 1
    max_retries: int = 5
    smoothness_check: bool = True
    cubic_tries: int = 8
    budget: Budget | None = None

    def __post_init__(self):
        _variant(self.variant)
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")


@dataclass
class PipelineReport:
    variant: str
    field_used: str
    seed_used: int | None
    center_ok: bool
    attempts: int
    failed_seeds: list[int]
    surface_hilbert_polynomial: str = ""
    projected_hilbert_polynomial: str | None = None
    projective_degree: int | None = None
    generator_degrees: dict[int, int] = dc_field(default_factory=dict)
    minimal_generator_degrees: dict[int, int] = dc_field(default_factory=dict)
    cubic: str | None = None
    cubic_found: bool = False
    cubic_smooth: bool | None = None
    cubic_candidates_tried: int = 0
    timings: dict[str, float] = dc_field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "variant": self.variant,
            "field_used": self.field_used,
            "seed_used": self.seed_used,
            "center_ok": self.center_ok,
            "attempts": self.attempts,
            "failed_seeds": list(self.failed_seeds),
            "surface_hilbert_polynomial": self.surface_hilbert_polynomial,
            "projected_hilbert_polynomial": self.projected_hilbert_polynomial,
            "projective_degree": self.projective_degree,
            "generator_degrees": {str(k): v for k, v in sorted(self.generator_degrees.items())},
            "minimal_generator_degrees": {str(k): v for k, v in sorted(self.minimal_generator_degrees.items())},
            "cubic": self.cubic,
            "cubic_found": self.cubic_found,
            "cubic_smooth": self.cubic_smooth,
            "cubic_candidates_tried": self.cubic_candidates_tried,
        }
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out

    def transcript(self) -> str:
        lines = [
            f"field: {self.field_used}",
            f"surface: {self.variant}, Hilbert polynomial {self.surface_hilbert_polynomial}",
        ]
        for s in self.failed_seeds:
            lines.append(f"center (seed {s}): meets the secant variety, redrawn")
        if not self.center_ok:
            lines.append(f"no admissible center after {self.attempts} attempts")
            return "\n".join(lines) + "\n"
        lines.append(f"center (seed {self.seed_used}): saturation of secant + center is the unit ideal")
        lines.append(f"projected ideal: Hilbert polynomial {self.projected_hilbert_polynomial}")
        lines.append(f"kernel generators by degree: {_fmt_counts(self.generator_degrees)}")
        lines.append(f"minimal generators by degree: {_fmt_counts(self.minimal_generator_degrees)}")
        if self.cubic is not None:
            lines.append(f"cubic: {self.cubic}")
        if self.cubic_smooth is not None:
            verdict = "0 (smooth)" if self.cubic_smooth else "nonzero (singular)"
            lines.append(
                f"Hilbert polynomial of the singular locus: {verdict} after {self.cubic_candidates_tried} candidate(s)"
            )
        return "\n".join(lines) + "\n"


def _fmt_counts(c: dict[int, int]) -> str:
    return ", ".join(f"{v} of degree {k}" for k, v in sorted(c.items())) or "none"


def _stage(report: PipelineReport, name: str):
    class _Timer:
        def __enter__(self):
            self.t = time.perf_counter()

        def __exit__(self, exc_type, exc, tb):
            report.timings[name] = report.timings.get(name, 0.0) + time.perf_counter() - self.t
            if isinstance(exc, BudgetExceeded):
                return False
            if exc is not None and not isinstance(exc, PipelineError):
                raise PipelineError(name, str(exc)) from exc
            return False

    return _Timer()


def run_pipeline(config: PipelineConfig) -> PipelineReport:
    """Build, pick a center (seed, seed+1, ...), project, count generators, find a smooth cubic."""
    budget = config.budget
    report = PipelineReport(
        variant=config.variant.lower(),
        field_used=str(config.field),
        seed_used=None,
        center_ok=False,
        attempts=0,
        failed_seeds=[],
    )
    with _stage(report, "build"):
        ideals = build_surface_ideals(config.variant, config.field)
        hp_surface = hilbert_polynomial(ideals.surface, budget)
        report.surface_hilbert_polynomial = str(hp_surface)
    ring = ideals.surface.ring
    forms = None
    for attempt in range(config.max_retries):
        seed = config.seed + attempt
        report.attempts = attempt + 1
        with _stage(report, "center"):
            candidate = random_linear_forms(ring, 6, seed)
            ok = linear_form_rank(candidate) == 6 and check_center(ideals.secant, candidate, budget)
        if ok:
            forms = candidate
            report.seed_used = seed
            report.center_ok = True
            break
        report.failed_seeds.append(seed)
        log.info("center from seed %d rejected", seed)
    if forms is None:
        return report
    with _stage(report, "project"):
        J = project_surface(ideals.surface, forms, budget)
        hp: HilbertPolynomial = hilbert_polynomial(J, budget)
        report.projected_hilbert_polynomial = str(hp)
        report.projective_degree = hp.projective_degree
        report.generator_degrees = dict(sorted(Counter(g.degree() for g in J.generators).items()))
    with _stage(report, "minimal_generators"):
        mins = minimal_generators(J, budget)
        report.minimal_generator_degrees = dict(sorted(Counter(g.degree() for g in mins).items()))
    if 3 not in report.generator_degrees:
        return report
    if config.smoothness_check:
        with _stage(report, "smooth_cubic"):
            found = find_smooth_cubic(J, config.seed, config.cubic_tries, budget)
        report.cubic = format_poly(found.form)
        report.cubic_found = True
        report.cubic_smooth = found.smooth
        report.cubic_candidates_tried = found.tried
    else:
        report.cubic = format_poly(next(g for g in J.generators if g.degree() == 3))
        report.cubic_found = True
    return report
