"""Matrices of forms: determinants, pfaffians, minors and representation checks."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .ideal import Ideal, is_projectively_empty, jacobian_ideal
from .poly import PolyRing, Polynomial, RingMismatch, dot, exact_quotient, format_poly


class MatrixError(ValueError):
    pass


class PolyMatrix:
    """Rectangular matrix over a polynomial ring.

    Entries may be given as polynomials, integers/fractions or grammar
    strings.  ``degree_profile`` is an optional pair (row degrees, column
    degrees) such that entry (i, j) is zero or homogeneous of degree
    ``rdeg[i] + cdeg[j]``.
    """

    def __init__(
        self,
        ring: PolyRing,
        rows: Sequence[Sequence[Polynomial | int | Fraction | str]],
        degree_profile: tuple[Sequence[int], Sequence[int]] | None = None,
    ):
        table = [list(r) for r in rows]
        if not table or not table[0]:
            raise MatrixError("a matrix needs at least one row and one column")
        ncols = len(table[0])
        if any(len(r) != ncols for r in table):
            raise MatrixError("rows have different lengths")
        self.ring = ring
        self.entries = tuple(tuple(self._coerce(ring, e) for e in r) for r in table)
        self.nrows = len(table)
        self.ncols = ncols
        self.degree_profile = None
        if degree_profile is not None:
            rdeg, cdeg = (tuple(d) for d in degree_profile)
            if len(rdeg) != self.nrows or len(cdeg) != self.ncols:
                raise MatrixError("degree profile does not match the matrix shape")
            self.degree_profile = (rdeg, cdeg)
            bad = self.profile_violations()
            if bad:
                i, j = bad[0]
                raise MatrixError(f"entry ({i}, {j}) is not homogeneous of degree {rdeg[i] + cdeg[j]}")

    @staticmethod
    def _coerce(ring: PolyRing, e) -> Polynomial:
        if isinstance(e, Polynomial):
            if e.ring.var_names != ring.var_names or e.ring.field != ring.field:
                raise RingMismatch("matrix entry lives in another ring")
            return e.to_ring(ring)
        if isinstance(e, str):
            return ring.parse(e)
        return ring.constant(e)

    @classmethod
    def skew(cls, ring: PolyRing, upper: dict[tuple[int, int], Polynomial | int | str], size: int) -> "PolyMatrix":
        """Skew-symmetric matrix from its strictly upper entries (0-based keys)."""
        rows = [[ring.zero] * size for _ in range(size)]
        for (i, j), e in upper.items():
            if not 0 <= i < j < size:
                raise MatrixError(f"({i}, {j}) is not a strictly upper position")
            v = cls._coerce(ring, e)
            rows[i][j] = v
            rows[j][i] = -v
        return cls(ring, rows)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, list(zip(*self.entries)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[fn(e) for e in r] for r in self.entries])

    def replace(self, i: int, j: int, value) -> "PolyMatrix":
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return PolyMatrix(self.ring, rows)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise MatrixError("shapes do not compose")
        zero = self.ring.zero
        out = []
        for r in self.entries:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(r):
                    if a and other.entries[k][j]:
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def is_skew_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        return all(
            self.entries[i][j] == -self.entries[j][i] and (i != j or self.entries[i][i].is_zero())
            for i in range(n)
            for j in range(i, n)
        )

    def entry_degrees(self) -> list[int]:
        """Sorted distinct degrees of the nonzero entries."""
        return sorted({d for r in self.entries for e in r if e for d in e.degrees()})

    def is_linear(self) -> bool:
        return all(e.is_zero() or (e.is_homogeneous() and e.degree() == 1) for r in self.entries for e in r)

    def profile_violations(self) -> list[tuple[int, int]]:
        if self.degree_profile is None:
            return []
        rdeg, cdeg = self.degree_profile
        return [
            (i, j)
            for i, r in enumerate(self.entries)
            for j, e in enumerate(r)
            if e and not (e.is_homogeneous() and e.degree() == rdeg[i] + cdeg[j])
        ]

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"rows: {self.nrows}; cols: {self.ncols}"]
        lines += ["; ".join(format_poly(e) for e in r) for r in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, ring: PolyRing, text: str) -> "PolyMatrix":
        """Parse ``rows: r; cols: c`` followed by r lines of ``;``-separated entries."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise MatrixError("empty matrix file")
        header = dict(_header_fields(lines[0]))
        try:
            r, c = int(header["rows"]), int(header["cols"])
        except (KeyError, ValueError):
            raise MatrixError("matrix header must read 'rows: r; cols: c'") from None
        body = lines[1:]
        if len(body) != r:
            raise MatrixError(f"expected {r} rows, found {len(body)}")
        rows = []
        for k, ln in enumerate(body):
            cells = [s.strip() for s in ln.split(";")]
            if len(cells) != c:
                raise MatrixError(f"row {k} has {len(cells)} entries, expected {c}")
            rows.append([ring.parse(s) for s in cells])
        return cls(ring, rows)


def _header_fields(line: str):
    for part in line.split(";"):
        if ":" not in part:
            raise MatrixError(f"malformed header field {part.strip()!r}")
        key, value = part.split(":", 1)
        yield key.strip(), value.strip()


# -- determinants ------------------------------------------------------------


def determinant(m: PolyMatrix) -> Polynomial:
    """Fraction-free Bareiss elimination; every division is exact."""
    if not m.is_square:
        raise MatrixError("determinant of a non-square matrix")
    n = m.nrows
    a = [list(r) for r in m.entries]
    ring = m.ring
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return ring.zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = dot([akk, -aik], [a[i][j], a[k][j]])
                a[i][j] = num if k == 0 else exact_quotient(num, prev)
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_determinant(m: PolyMatrix) -> Polynomial:
    """Laplace expansion along rows, memoized on the remaining column set."""
    if not m.is_square:
        raise MatrixError("determinant of a non-square matrix")
    n = m.nrows
    entries = m.entries
    zero = m.ring.zero

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == n:
            return m.ring.one
        es, subs = [], []
        for pos, c in enumerate(cols):
            e = entries[row][c]
            if e.is_zero():
                continue
            es.append(-e if pos % 2 else e)
            subs.append(minor(row + 1, cols[:pos] + cols[pos + 1 :]))
        return dot(es, subs) if es else zero

    return minor(0, tuple(range(n)))


def pfaffian(m: PolyMatrix) -> Polynomial:
    """Pfaffian by expansion along the first row, with pf([[0, a], [-a, 0]]) = a."""
    if not m.is_square:
        raise MatrixError("pfaffian of a non-square matrix")
    if m.nrows % 2:
        raise MatrixError("pfaffian of an odd-size matrix")
    if not m.is_skew_symmetric():
        raise MatrixError("pfaffian needs a skew-symmetric matrix")
    entries = m.entries
    zero = m.ring.zero

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return m.ring.one
        i, rest = idx[0], idx[1:]
        es, subs = [], []
        for pos, j in enumerate(rest):
            e = entries[i][j]
            if e.is_zero():
                continue
            es.append(-e if pos % 2 else e)
            subs.append(pf(rest[:pos] + rest[pos + 1 :]))
        return dot(es, subs) if es else zero

    return pf(tuple(range(m.nrows)))


def minors(m: PolyMatrix, size: int) -> list[Polynomial]:
    """All ``size``-minors in lexicographic (rows, cols) order, zeros included."""
    if not 1 <= size <= min(m.nrows, m.ncols):
        raise MatrixError(f"minor size {size} out of range for a {m.nrows}x{m.ncols} matrix")
    out = []
    for rows in combinations(range(m.nrows), size):
        for cols in combinations(range(m.ncols), size):
            out.append(cofactor_determinant(m.submatrix(rows, cols)))
    return out


def minors_ideal(m: PolyMatrix, size: int) -> Ideal:
    return Ideal(m.ring, minors(m, size))


def degeneracy_locus_ideal(m: PolyMatrix, r: int) -> Ideal:
    """Ideal of the locus where ``m`` has rank at most ``r``."""
    if not 0 <= r < min(m.nrows, m.ncols):
        raise MatrixError(f"rank bound {r} out of range for a {m.nrows}x{m.ncols} matrix")
    return minors_ideal(m, r + 1)


# -- representation certificates -------------------------------------------


DETERMINANTAL = "determinantal"
PFAFFIAN = "pfaffian"


@dataclass(frozen=True)
class RepresentationCertificate:
    """Claim that det (or pf) of ``matrix`` equals ``scalar * form**power``.

    ``scalar=None`` lets the verifier solve for the scalar from leading
    coefficients.  ``epsilon`` is the symmetry sign for pfaffian mode; only
    the skew case -1 is supported.
    """

    matrix: PolyMatrix
    form: Polynomial
    power: int = 1
    mode: str = DETERMINANTAL
    epsilon: int = -1
    scalar: object = None

    def __post_init__(self):
        if self.mode not in (DETERMINANTAL, PFAFFIAN):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.power < 1:
            raise ValueError("power must be positive")
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")


@dataclass
class VerificationReport:
    verified: bool
    mode: str
    size: int
    form_degree: int
    power: int
    bundle_rank: int
    entry_degrees: list[int]
    quantum_number: int | None
    scalar: object = None
    difference_leading_term: str | None = None
    smooth: bool | None = None
    notes: list[str] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verified": self.verified,
            "mode": self.mode,
            "size": self.size,
            "form_degree": self.form_degree,
            "power": self.power,
            "bundle_rank": self.bundle_rank,
            "entry_degrees": self.entry_degrees,
            "quantum_number": self.quantum_number,
            "scalar": None if self.scalar is None else str(self.scalar),
            "difference_leading_term": self.difference_leading_term,
            "smooth": self.smooth,
            "notes": list(self.notes),
        }


def verify_representation(cert: RepresentationCertificate, check_smoothness: bool = False) -> VerificationReport:
    """Check the polynomial identity exactly and report the size bookkeeping.

    The bundle rank is ``power`` for a determinant and ``2 * power`` for a
    pfaffian (pf^2 = det), and the quantum number is read off the size
    formula ``size = rank * d + 2q``.
    """
    m, F = cert.matrix, cert.form
    if F.ring != m.ring:
        F = PolyMatrix._coerce(m.ring, F)
    if F.is_zero() or not F.is_homogeneous():
        raise ValueError("the form must be a nonzero homogeneous polynomial")
    if not m.is_square:
        raise MatrixError("representations use square matrices")
    d = F.degree()
    s = m.nrows
    notes = []
    if cert.mode == PFAFFIAN:
        if cert.epsilon != -1:
            raise MatrixError("only skew (epsilon = -1) pfaffian representations are supported")
        value = pfaffian(m)
        rank = 2 * cert.power
    else:
        value = determinant(m)
        rank = cert.power
    excess = s - rank * d
    if excess < 0 or excess % 2:
        raise MatrixError(
            f"size {s} is incompatible with rank {rank} and degree {d}: size - rank*d must be even and non-negative"
        )
    q = excess // 2
    target = F**cert.power
    field = m.ring.field
    scalar = cert.scalar
    if scalar is None:
        if value.is_zero():
            scalar = field.one
            notes.append("matrix value is zero")
        else:
            scalar = field.inv(target.leading_coefficient()) * value.leading_coefficient()
            scalar = field(scalar)
    else:
        scalar = field(scalar)
    diff = value - target.scale(scalar) if scalar else value
    verified = bool(scalar) and diff.is_zero()
    lead = None
    if not diff.is_zero():
        lt = Polynomial(m.ring, {diff.leading_key(): diff._t[diff.leading_key()]})
        lead = format_poly(lt)
    if q:
        notes.append("size exceeds rank*d: the underlying bundle is not Ulrich")
    smooth = None
    if check_smoothness:
        smooth = is_projectively_empty(jacobian_ideal(F))
    return VerificationReport(
        verified=verified,
        mode=cert.mode,
        size=s,
        form_degree=d,
        power=cert.power,
        bundle_rank=rank,
        entry_degrees=m.entry_degrees(),
        quantum_number=q,
        scalar=field.signed(scalar) if field.characteristic else scalar,
        difference_leading_term=lead,
        smooth=smooth,
        notes=notes,
    )
