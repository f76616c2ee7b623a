"""Rank-2 intersection lattices Zh + ZC and the class searches run on them."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

# Geometric hypotheses under which the lattice arithmetic below is meaningful.
# They are recorded in reports, never checked.
ASSUMPTIONS = (
    "the surface is a very general member of its family, so its Picard lattice is exactly the given rank-2 lattice",
    "the first basis class is the hyperplane class h",
)

DETERMINANTAL_GRAM = ((4, 6), (6, 4))


@dataclass(frozen=True)
class Lattice2:
    """Symmetric integral form ``[[a, b], [b, c]]`` on the basis ``basis_names``.

    The first basis vector plays the role of the polarization h, so the
    degree of a class is its pairing with (1, 0).
    """

    a: int
    b: int
    c: int
    basis_names: tuple[str, str] = ("h", "C0")

    @classmethod
    def from_gram(cls, gram, basis_names=("h", "C0")) -> "Lattice2":
        (a, b), (b2, c) = gram
        if b != b2:
            raise ValueError("gram matrix must be symmetric")
        return cls(int(a), int(b), int(c), tuple(basis_names))

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.b, self.c)

    @property
    def is_even(self) -> bool:
        return self.a % 2 == 0 and self.c % 2 == 0

    @property
    def discriminant(self) -> int:
        return self.a * self.c - self.b * self.b

    def pair(self, u: tuple[int, int], v: tuple[int, int]) -> int:
        return self.a * u[0] * v[0] + self.b * (u[0] * v[1] + u[1] * v[0]) + self.c * u[1] * v[1]

    def square(self, u: tuple[int, int]) -> int:
        return self.pair(u, u)

    def degree(self, u: tuple[int, int]) -> int:
        return self.pair(u, (1, 0))


def _search(L: Lattice2, deg: int, selfint: int, ybound: int, xbound: int) -> list[tuple[int, int]]:
    # deg = a*x + b*y, so for a != 0 each y determines at most one x
    out = []
    for y in range(-ybound, ybound + 1):
        if L.a:
            num = deg - L.b * y
            if num % L.a:
                continue
            xs = [num // L.a]
        elif L.b * y == deg:
            xs = range(-xbound, xbound + 1)
        else:
            continue
        for x in xs:
            if abs(x) <= xbound and L.square((x, y)) == selfint:
                out.append((x, y))
    return out


def class_search(L: Lattice2, deg_target: int, selfint_target: int, bound: int) -> list[tuple[int, int]]:
    """All (x, y) with |x|, |y| <= bound, (x h + y C).h = deg_target and
    (x h + y C)^2 = selfint_target, sorted by (y, x)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return _search(L, deg_target, selfint_target, bound, bound)


def determinantal_targets(q: int) -> tuple[int, int]:
    """(degree, self-intersection) of the curve class for a size 4 + 2q
    determinantal representation of a quartic surface."""
    return 4 * q + 6, 4 * q * q + 10 * q + 4


def determinantal_q_scan(q_max: int) -> set[int]:
    """Quantum numbers q <= q_max whose curve class exists in Zh + ZC0."""
    if q_max < 0:
        raise ValueError("q_max must be non-negative")
    L = Lattice2.from_gram(DETERMINANTAL_GRAM)
    found = set()
    for q in range(q_max + 1):
        deg, selfint = determinantal_targets(q)
        # |y| <= 2q + 3 and x = (deg - 6y)/4 then satisfies |x| <= 4q + 6
        if _search(L, deg, selfint, 2 * q + 3, 4 * q + 6):
            found.add(q)
    return found


def closed_form_q(q_max: int) -> set[int]:
    """{10 l (l + 1) : l >= 0} up to q_max."""
    out = set()
    lam = 0
    while 10 * lam * (lam + 1) <= q_max:
        out.add(10 * lam * (lam + 1))
        lam += 1
    return out


def existence_obstruction(q: int, q_hat: int) -> bool:
    """Whether (2q + 5) y^2 = 2 q_hat + 5 has an integer solution.

    When it has none, the surface whose Picard lattice carries the size
    4 + 2q class admits no representation of size 4 + 2 q_hat.
    """
    if q < 0 or q_hat < 0:
        raise ValueError("quantum numbers are non-negative")
    num, den = 2 * q_hat + 5, 2 * q + 5
    if num % den:
        return False
    r = num // den
    return isqrt(r) ** 2 == r


def existence_lattice(q: int) -> Lattice2:
    """Gram form of Zh + ZC with deg C = 4q + 6 and C^2 = 4q^2 + 10q + 4."""
    deg, selfint = determinantal_targets(q)
    return Lattice2(4, deg, selfint, ("h", "C"))


def search_report(L: Lattice2, deg: int, selfint: int, bound: int) -> dict:
    sols = class_search(L, deg, selfint, bound)
    return {
        "inputs": {"gram": [list(r) for r in L.gram], "deg": deg, "selfint": selfint, "bound": bound},
        "outputs": {"classes": [list(s) for s in sols], "even": L.is_even, "discriminant": L.discriminant},
        "cross_checks": [
            {"name": "recheck", "pass": all(L.degree(s) == deg and L.square(s) == selfint for s in sols)}
        ],
        "assumptions": list(ASSUMPTIONS),
    }


def qscan_report(q_max: int) -> dict:
    scan = determinantal_q_scan(q_max)
    return {
        "inputs": {"q_max": q_max},
        "outputs": {"admissible": sorted(scan)},
        "cross_checks": [{"name": "closed_form", "pass": scan == closed_form_q(q_max)}],
        "assumptions": list(ASSUMPTIONS),
    }
