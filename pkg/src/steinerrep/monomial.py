"""Monomial orders and the packed integer encoding of monomials.

A monomial is stored as a single Python int whose natural integer order *is*
the monomial order.  Variables are split into blocks (one block for grevlex,
two for an elimination order, one per variable for lex); each block
contributes a 32-bit degree field followed by one 16-bit field per variable
holding the complemented exponent ``MAX_EXP - e``.  Blocks earlier in the
variable list sit in more significant bits.  Within a block the last variable
is the most significant field, which is what makes equal-degree comparisons
reverse-lexicographic.

With this layout multiplication is affine: ``key(a*b) = key(a) + key(b) - ONE``
where ``ONE`` is the key of the constant monomial, and divisibility is a
single masked subtraction using the top bit of each 16-bit field as a guard.
"""

from __future__ import annotations

from dataclasses import dataclass

EXP_BITS = 16
MAX_EXP = (1 << (EXP_BITS - 1)) - 1
DEG_BITS = 32
_FIELD = (1 << EXP_BITS) - 1
_DMASK = (1 << DEG_BITS) - 1


class ExponentOverflow(OverflowError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.

    ``elim`` with ``k`` compares the first ``k`` variables by grevlex and
    breaks ties by grevlex on the remaining ones.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 1:
            raise ValueError("elimination order needs k >= 1")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def elimination(cls, k: int):
        return cls("elim", k)

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        t = text.strip().lower()
        if t.startswith("elim:"):
            return cls.elimination(int(t[5:]))
        return cls(t)

    def __str__(self):
        return f"elim:{self.k}" if self.kind == "elim" else self.kind

    def blocks(self, nvars: int) -> list[list[int]]:
        if self.kind == "grevlex":
            return [list(range(nvars))]
        if self.kind == "lex":
            return [[i] for i in range(nvars)]
        if not self.k < nvars:
            raise ValueError(f"elimination of {self.k} variables needs more than {self.k} variables")
        return [list(range(self.k)), list(range(self.k, nvars))]

    def sort_key(self, exps) -> tuple:
        """Reference comparison key on exponent tuples (slow, for checking)."""
        key = []
        for block in self.blocks(len(exps)):
            key.append(sum(exps[v] for v in block))
            key.extend(-exps[v] for v in reversed(block))
        return tuple(key)


class Packing:
    """Encoder between exponent tuples and order-preserving int keys."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        self.blocks = order.blocks(nvars)
        shifts = [0] * nvars
        deg_shifts = []
        pos = 0
        for block in reversed(self.blocks):
            for v in block:
                shifts[v] = pos
                pos += EXP_BITS
            deg_shifts.append(pos)
            pos += DEG_BITS
        deg_shifts.reverse()
        self.shifts = shifts
        self.deg_shifts = deg_shifts
        self.one = sum(MAX_EXP << s for s in shifts)
        self.exp_mask = sum(_FIELD << s for s in shifts)
        self.guard = sum(1 << (s + EXP_BITS - 1) for s in shifts)
        self._var_keys = [self.encode(tuple(int(i == v) for i in range(nvars))) for v in range(nvars)]

    def encode(self, exps) -> int:
        key = 0
        for block, ds in zip(self.blocks, self.deg_shifts):
            d = 0
            for v in block:
                e = exps[v]
                if e < 0:
                    raise ValueError("negative exponent")
                if e > MAX_EXP:
                    raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXP}")
                d += e
                key |= (MAX_EXP - e) << self.shifts[v]
            key |= d << ds
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        return tuple(MAX_EXP - ((key >> s) & _FIELD) for s in self.shifts)

    def degree(self, key: int) -> int:
        total = 0
        for ds in self.deg_shifts:
            total += (key >> ds) & _DMASK
        return total

    def var(self, v: int) -> int:
        return self._var_keys[v]

    def mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def divides(self, b: int, a: int) -> bool:
        """True iff monomial ``b`` divides monomial ``a``."""
        m = self.exp_mask
        g = self.guard
        return (((b & m) | g) - (a & m)) & g == g

    def quotient(self, a: int, b: int) -> int:
        """``a / b``; caller guarantees divisibility."""
        return a - b + self.one

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.decode(a), self.decode(b)
        return not any(x and y for x, y in zip(ea, eb))
