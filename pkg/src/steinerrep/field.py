"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

DEFAULT_PRIME = 32003
_MAX_PRIME = 2**31


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Field:
    """A coefficient field.

    ``characteristic`` is 0 for the rationals, otherwise the odd prime p.
    Elements of GF(p) are plain ints in ``[0, p)``; rational elements are
    :class:`fractions.Fraction` instances.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic:
            if characteristic == 2 or not is_prime(characteristic):
                raise FieldError(f"modulus {characteristic} is not an odd prime")
            if characteristic >= _MAX_PRIME:
                raise FieldError(f"modulus {characteristic} must be below 2^31")
        self.characteristic = characteristic

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``q``/``QQ`` or ``gf:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls.rationals()
        if t.startswith("gf:"):
            try:
                return cls.prime(int(t[3:]))
            except ValueError as exc:
                raise FieldError(f"bad field specification {text!r}") from exc
        raise FieldError(f"bad field specification {text!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return f"Field({self})"

    def __str__(self):
        return f"gf:{self.characteristic}" if self.characteristic else "q"

    # -- element arithmetic -------------------------------------------------

    def __call__(self, value) -> int | Fraction:
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if not p:
            return Fraction(value)
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if den % p == 0:
                raise FieldError(f"{value} is not representable in GF({p})")
            return num * pow(den, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise FieldError(f"cannot coerce {value!r} into GF({p})")

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def to_str(self, a) -> str:
        """Canonical text of an element: GF(p) elements as residues."""
        if self.characteristic:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def signed(self, a) -> int | Fraction:
        """Symmetric representative, used only for pretty output."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a
