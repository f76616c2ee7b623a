"""Hilbert series and Hilbert polynomials of graded quotients via lead-term ideals."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def hilbert_numerator(gens: Sequence[tuple]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/(gens).

    ``gens`` are exponent tuples of a monomial ideal.  Uses the pivot
    recursion N(I) = N(I + (x^a)) + t^|a| N(I : x^a) with the pivot taken on
    the variable occurring in the most minimal generators.
    """
    gens = _minimalize([tuple(g) for g in gens])
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        for v, e in enumerate(g):
            if e:
                counts[v] += 1
    if max(counts) <= 1:
        # supports pairwise disjoint: product of (1 - t^deg g)
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    v = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[v] for g in gens if g[v])
    # lower median: strictly below any pure power of v already present
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == v else 0 for i in range(n))
    left = hilbert_numerator(gens + [pivot])
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    right = hilbert_numerator(colon)
    return _padd(left, [0] * e + right)


def _binomial_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients (ascending in s) of C(s + shift, k) as a polynomial in s."""
    coeffs = [Fraction(1)]
    for j in range(k):
        # multiply by (s + shift - j)
        c0 = shift - j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * c0
            nxt[i + 1] += c
        coeffs = nxt
    fk = factorial(k)
    return [c / fk for c in coeffs]


class HilbertPolynomial:
    """Hilbert polynomial of a graded quotient S/I, plus its Hilbert series data.

    ``coefficients`` are ascending in the variable t.  ``numerator`` and
    ``dim`` describe the Hilbert series reduced to Q(t)/(1-t)^dim.
    """

    def __init__(self, numerator: list[int], nvars: int):
        q = list(numerator)
        while q and q[-1] == 0:
            q.pop()
        dim = nvars
        while q and dim > 0 and sum(q) == 0:
            # divide by (1 - t)
            out, acc = [], 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = out
            dim -= 1
        self.numerator = q
        self.dim = dim if q else 0
        coeffs = [Fraction(0)]
        if q and dim > 0:
            for i, qi in enumerate(q):
                if qi:
                    term = _binomial_poly(dim - 1 - i, dim - 1)
                    coeffs += [Fraction(0)] * (len(term) - len(coeffs))
                    for j, b in enumerate(term):
                        coeffs[j] += qi * b
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = coeffs

    def __call__(self, t: int) -> Fraction:
        return sum(c * t**i for i, c in enumerate(self.coefficients))

    def __eq__(self, other):
        if isinstance(other, HilbertPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == [Fraction(c) for c in other]
        if isinstance(other, int):
            return self.coefficients == [Fraction(other)]
        return NotImplemented

    def is_zero(self) -> bool:
        return self.coefficients == [0]

    @property
    def degree(self) -> int:
        """Dimension of the projective scheme; -1 when it is empty."""
        return -1 if self.is_zero() else len(self.coefficients) - 1

    @property
    def projective_degree(self) -> int:
        """Degree of the projective scheme (leading coefficient times dim!)."""
        if self.is_zero():
            return 0
        return int(self.coefficients[-1] * factorial(self.degree))

    @property
    def regularity_index(self) -> int:
        """First t from which the Hilbert function equals the polynomial."""
        return max(0, len(self.numerator) - self.dim)

    def hilbert_function(self, t: int) -> int:
        """Exact value of dim (S/I)_t from the series."""
        if t < 0:
            return 0
        if self.dim == 0:
            return self.numerator[t] if t < len(self.numerator) else 0
        total = 0
        for i, qi in enumerate(self.numerator[: t + 1]):
            total += qi * _binomial_int(t - i + self.dim - 1, self.dim - 1)
        return total

    def __str__(self):
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0 and (terms or i):
                continue
            mag = abs(c)
            cs = str(mag)
            body = cs if i == 0 else (("" if mag == 1 else cs + "*") + ("t" if i == 1 else f"t^{i}"))
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append((" - " if c < 0 else " + ") + body)
        return "".join(terms)

    def __repr__(self):
        return f"HilbertPolynomial({self})"


def _binomial_int(a: int, k: int) -> int:
    if k < 0 or a < k:
        return 0
    out = 1
    for j in range(k):
        out = out * (a - j) // (j + 1)
    return out


def hilbert_polynomial_of_monomials(lead_exps: Sequence[tuple], nvars: int) -> HilbertPolynomial:
    return HilbertPolynomial(hilbert_numerator(list(lead_exps)) if lead_exps else [1], nvars)
