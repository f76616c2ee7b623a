"""Independent reference computations used only by the tests.

Nothing here calls the Groebner engine: graded pieces of ideals are handled
by dense linear algebra over GF(p) or Q, and Hilbert functions of monomial
ideals by enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from steinerrep.poly import Polynomial


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def rank_mod(rows: list[dict], p: int) -> int:
    """Rank of sparse rows (column -> value) over GF(p), or Q when p = 0."""
    pivots: dict = {}
    for row in rows:
        row = {k: (v % p if p else Fraction(v)) for k, v in row.items()}
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = max(row)
            if lead not in pivots:
                inv = pow(int(row[lead]), -1, p) if p else 1 / row[lead]
                pivots[lead] = {k: (v * inv % p if p else v * inv) for k, v in row.items()}
                break
            c = row[lead]
            for k, v in pivots[lead].items():
                val = row.get(k, 0) - c * v
                if p:
                    val %= p
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
    return len(pivots)


def _rows(polys: list[Polynomial]) -> list[dict]:
    return [{exps: c for c, exps in f.terms()} for f in polys]


def graded_piece(gens: list[Polynomial], d: int) -> list[Polynomial]:
    """Spanning set of the degree-d part of the ideal of homogeneous ``gens``."""
    ring = gens[0].ring
    out = []
    for g in gens:
        e = g.degree()
        if e <= d:
            for m in monomials_of_degree(ring.nvars, d - e):
                out.append(ring.monomial(m) * g)
    return out


def graded_dim(gens: list[Polynomial], d: int) -> int:
    if not gens:
        return 0
    p = gens[0].ring.field.characteristic
    return rank_mod(_rows(graded_piece(gens, d)), p)


def minimal_generator_counts(gens: list[Polynomial]) -> dict[int, int]:
    """Number of minimal generators in each degree: dim I_d - dim (S_1 I_{d-1})."""
    out = {}
    for d in sorted({g.degree() for g in gens}):
        lower = [g for g in gens if g.degree() < d]
        full = graded_dim(gens, d)
        below = graded_dim(lower, d) if lower else 0
        if full > below:
            out[d] = full - below
    return out


def count_standard_monomials(lead_exps: list[tuple[int, ...]], nvars: int, d: int) -> int:
    """Monomials of degree d divisible by no element of ``lead_exps``."""
    def divisible(m):
        return any(all(a <= b for a, b in zip(g, m)) for g in lead_exps)

    return sum(1 for m in monomials_of_degree(nvars, d) if not divisible(m))


def in_span(f: Polynomial, gens: list[Polynomial]) -> bool:
    """f lies in the degree-deg(f) piece of the ideal of homogeneous ``gens``."""
    d = f.degree()
    piece = graded_piece(gens, d)
    p = f.ring.field.characteristic
    return rank_mod(_rows(piece + [f]), p) == rank_mod(_rows(piece), p)
