import pytest
from hypothesis import given, strategies as st

from steinerrep.lattice import (
    ASSUMPTIONS,
    DETERMINANTAL_GRAM,
    Lattice2,
    class_search,
    closed_form_q,
    determinantal_q_scan,
    determinantal_targets,
    existence_lattice,
    existence_obstruction,
    qscan_report,
    search_report,
)

L0 = Lattice2.from_gram(DETERMINANTAL_GRAM)


def brute_force(L, deg, selfint, bound):
    return sorted(
        ((x, y) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)
         if L.degree((x, y)) == deg and L.square((x, y)) == selfint),
        key=lambda s: (s[1], s[0]),
    )


def test_lattice_basics():
    assert L0.is_even and L0.discriminant == -20
    assert L0.square((0, 1)) == 4 and L0.degree((0, 1)) == 6
    with pytest.raises(ValueError):
        Lattice2.from_gram(((4, 6), (5, 4)))


def test_class_search_examples():
    assert (17, 3) in class_search(L0, 86, 1804, 200)
    assert (0, 1) in class_search(L0, 6, 4, 10)
    assert class_search(L0, *determinantal_targets(5), 200) == []
    with pytest.raises(ValueError):
        class_search(L0, 6, 4, 0)


@given(st.integers(-6, 6).filter(bool), st.integers(-8, 8), st.integers(-6, 6), st.integers(-40, 40), st.integers(-80, 80))
def test_class_search_matches_brute_force(a, b, c, deg, selfint):
    L = Lattice2(a, b, c)
    assert class_search(L, deg, selfint, 12) == brute_force(L, deg, selfint, 12)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_class_search_finds_every_planted_class(x, y):
    deg, selfint = L0.degree((x, y)), L0.square((x, y))
    sols = class_search(L0, deg, selfint, 25)
    assert (x, y) in sols
    assert all(L0.degree(s) == deg and L0.square(s) == selfint for s in sols)


def test_q_scan_examples():
    assert determinantal_q_scan(25) == {0, 20}
    assert determinantal_q_scan(200) == {0, 20, 60, 120, 200}
    assert determinantal_q_scan(19) == {0}
    assert closed_form_q(1000) == {10 * k * (k + 1) for k in range(10)}


def test_q_scan_search_window_is_exhaustive():
    # the restricted scan agrees with an unrestricted square-window search
    for q in range(0, 45):
        deg, selfint = determinantal_targets(q)
        assert bool(brute_force(L0, deg, selfint, 4 * q + 8)) == (q in determinantal_q_scan(q) and q in closed_form_q(q))


def test_existence_obstruction_examples():
    assert existence_obstruction(3, 3)
    assert not existence_obstruction(1, 0)
    assert not existence_obstruction(0, 10)
    # 5 * 3^2 = 45 = 2*20 + 5
    assert existence_obstruction(0, 20)
    with pytest.raises(ValueError):
        existence_obstruction(-1, 0)


def test_existence_lattice():
    L = existence_lattice(1)
    assert L.gram == ((4, 10), (10, 18))
    assert L.degree((0, 1)) == 10 and L.square((0, 1)) == 18


def test_reports_carry_assumptions():
    rep = search_report(L0, 86, 1804, 50)
    assert rep["assumptions"] == list(ASSUMPTIONS)
    assert [17, 3] in rep["outputs"]["classes"] and rep["cross_checks"][0]["pass"]
    rep = qscan_report(120)
    assert rep["outputs"]["admissible"] == [0, 20, 60, 120] and rep["cross_checks"][0]["pass"]
