"""Hypothesis strategies for polynomials over small rings."""

from itertools import combinations_with_replacement

from hypothesis import strategies as st

from steinerrep.field import Field
from steinerrep.poly import PolyRing

GF = Field.prime()
QQ = Field.rationals()


def exponents(nvars, max_deg=4):
    return st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).map(tuple)


def coefficients(field):
    if field.characteristic:
        return st.integers(0, field.characteristic - 1)
    return st.fractions(min_value=-20, max_value=20, max_denominator=7)


def polynomials(ring, max_terms=6, max_deg=4):
    term = st.tuples(coefficients(ring.field), exponents(ring.nvars, max_deg))
    return st.lists(term, max_size=max_terms).map(ring.from_terms)


def homogeneous(ring, degree, max_terms=5):
    monos = []
    for combo in combinations_with_replacement(range(ring.nvars), degree):
        e = [0] * ring.nvars
        for v in combo:
            e[v] += 1
        monos.append(tuple(e))
    term = st.tuples(coefficients(ring.field), st.sampled_from(monos))
    return st.lists(term, min_size=1, max_size=max_terms).map(ring.from_terms)


RINGS = {
    "gf-grevlex": PolyRing(GF, ["x", "y", "z"]),
    "gf-lex": PolyRing(GF, ["x", "y", "z"], "lex"),
    "q-grevlex": PolyRing(QQ, ["x", "y", "z"]),
    "q-elim": PolyRing(QQ, ["t", "x", "y", "z"], "elim:1"),
}
