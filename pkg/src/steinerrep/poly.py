"""Polynomial rings and sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .field import Field
from .monomial import MAX_EXP, ExponentOverflow, MonomialOrder, Packing

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatch(ValueError):
    pass


class PolyRing:
    """``field[var_names]`` with a fixed monomial order.

    Rings compare equal when field, names and order agree, so a ring may be
    rebuilt freely (e.g. by the parser for ideal files).
    """

    def __init__(self, field: Field, var_names: Sequence[str] | int, order: MonomialOrder | str = "grevlex"):
        if isinstance(var_names, int):
            var_names = [f"x{i}" for i in range(var_names)]
        names = tuple(var_names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        self.field = field
        self.var_names = names
        self.order = order
        self.packing = Packing(len(names), order)
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.var_names == other.var_names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.var_names, self.order))

    def __repr__(self):
        return f"PolyRing({self.field}, [{', '.join(self.var_names)}], {self.order})"

    def header(self) -> str:
        return f"ring: {self.field}; vars: {', '.join(self.var_names)}; order: {self.order}"

    def with_order(self, order: MonomialOrder | str) -> "PolyRing":
        return PolyRing(self.field, self.var_names, order)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    # -- element constructors ---------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.packing.one: c} if c else {})

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        return Polynomial(self, {self.packing.var(i): self.field.one})

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {self.packing.encode(tuple(exps)): c} if c else {})

    def from_terms(self, terms: Iterable[tuple[object, Sequence[int]]]) -> "Polynomial":
        """Build from ``(coefficient, exponents)`` pairs; repeats are summed."""
        enc = self.packing.encode
        f = self.field
        p = f.characteristic
        acc: dict[int, object] = {}
        for c, e in terms:
            k = enc(tuple(e))
            acc[k] = acc.get(k, 0) + f(c)
        if p:
            acc = {k: v % p for k, v in acc.items()}
        return Polynomial(self, {k: v for k, v in acc.items() if v})

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_poly

        return parse_poly(self, text)


class Polynomial:
    """Immutable sparse polynomial.

    Terms live in a dict from packed monomial keys to nonzero coefficients;
    the canonical term list is that dict sorted by decreasing key, so equal
    polynomials always have identical term lists.
    """

    __slots__ = ("ring", "_t", "_hash", "_deg")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._t = terms
        self._hash = None
        self._deg = None

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[object, tuple[int, ...]]]:
        """Canonical ``(coefficient, exponents)`` list, decreasing in the order."""
        dec = self.ring.packing.decode
        return [(self._t[k], dec(k)) for k in sorted(self._t, reverse=True)]

    def keys(self) -> list[int]:
        return sorted(self._t, reverse=True)

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def leading_key(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        return max(self._t)

    def leading_monomial(self) -> tuple[int, ...]:
        return self.ring.packing.decode(self.leading_key())

    def leading_coefficient(self):
        return self._t[self.leading_key()]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._deg is None:
            deg = self.ring.packing.degree
            self._deg = max((deg(k) for k in self._t), default=-1)
        return self._deg

    def degrees(self) -> set[int]:
        deg = self.ring.packing.degree
        return {deg(k) for k in self._t}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_constant(self) -> bool:
        return not self._t or set(self._t) == {self.ring.packing.one}

    def constant_coefficient(self):
        return self._t.get(self.ring.packing.one, self.ring.field.zero)

    def variables(self) -> set[int]:
        dec = self.ring.packing.decode
        used = set()
        for k in self._t:
            used.update(i for i, e in enumerate(dec(k)) if e)
        return used

    def coefficient(self, exps: Sequence[int]):
        return self._t.get(self.ring.packing.encode(tuple(exps)), self.ring.field.zero)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._t.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring!r} is not {self.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def _combine(self, other, sign: int) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        p = self.ring.field.characteristic
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) + sign * c
            if p:
                v %= p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        p = self.ring.field.characteristic
        if p:
            return Polynomial(self.ring, {k: p - c for k, c in self._t.items()})
        return Polynomial(self.ring, {k: -c for k, c in self._t.items()})

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero
        p = f.characteristic
        if p:
            return Polynomial(self.ring, {k: v * c % p for k, v in self._t.items()})
        return Polynomial(self.ring, {k: v * c for k, v in self._t.items()})

    def monic(self) -> "Polynomial":
        if not self._t:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution -----------------------------------------

    def diff(self, v: int | str) -> "Polynomial":
        ring = self.ring
        if isinstance(v, str):
            v = ring.index(v)
        pk = ring.packing
        step = pk.var(v) - pk.one
        p = ring.field.characteristic
        out = {}
        for k, c in self._t.items():
            e = pk.decode(k)[v]
            if not e:
                continue
            c2 = c * e
            if p:
                c2 %= p
            if c2:
                out[k - step] = c2
        return Polynomial(ring, out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        return substitute(self, images)

    def to_ring(self, ring: PolyRing, var_map: Sequence[int] | None = None) -> "Polynomial":
        """Re-encode into ``ring``, sending variable ``i`` to ``var_map[i]``.

        Without ``var_map`` variables are matched by name.  Coefficients must
        already lie in ``ring.field``.
        """
        if var_map is None and ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatch("coefficient fields differ")
        if var_map is None:
            var_map = [ring.index(n) for n in self.ring.var_names]
        dec = self.ring.packing.decode
        enc = ring.packing.encode
        n = ring.nvars
        out = {}
        for k, c in self._t.items():
            e = [0] * n
            for i, x in enumerate(dec(k)):
                if x:
                    e[var_map[i]] += x
            out[enc(e)] = c
        return Polynomial(ring, out)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _check_product_exponents(f: Polynomial, g: Polynomial) -> None:
    if f.degree() + g.degree() <= MAX_EXP:
        return
    dec = f.ring.packing.decode
    n = f.ring.nvars
    mf = [max(dec(k)[i] for k in f._t) for i in range(n)]
    mg = [max(dec(k)[i] for k in g._t) for i in range(n)]
    if any(a + b > MAX_EXP for a, b in zip(mf, mg)):
        raise ExponentOverflow("product exponent exceeds the 15-bit exponent range")


def _integral(t: dict) -> dict | None:
    """Integer copy of rational coefficients, or None if one is not integral."""
    out = {}
    for k, c in t.items():
        if c.denominator != 1:
            return None
        out[k] = c.numerator
    return out


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact product of two polynomials over the same ring."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring!r} is not {g.ring!r}")
    return dot([f], [g])


def dot(fs: Sequence[Polynomial], gs: Sequence[Polynomial]) -> Polynomial:
    """``sum(f * g for f, g in zip(fs, gs))`` with one reduction at the end."""
    if len(fs) != len(gs) or not fs:
        raise ValueError("dot needs two sequences of the same nonzero length")
    ring = fs[0].ring
    if any(h.ring != ring for h in (*fs, *gs)):
        raise RingMismatch("operands live in different rings")
    pairs = [(f, g) if len(f._t) >= len(g._t) else (g, f) for f, g in zip(fs, gs) if f._t and g._t]
    for f, g in pairs:
        _check_product_exponents(f, g)
    one = ring.packing.one
    p = ring.field.characteristic
    tables = [(f._t, g._t) for f, g in pairs]
    lift = None
    if not p:
        # Fraction arithmetic is slow; multiply integral operands as ints
        ints = [(_integral(ft), _integral(gt)) for ft, gt in tables]
        if all(fi is not None and gi is not None for fi, gi in ints):
            tables, lift = ints, Fraction
    out: dict[int, object] = {}
    get = out.get
    for ft, gt in tables:
        gt = list(gt.items())
        for ka, ca in ft.items():
            base = ka - one
            for kb, cb in gt:
                k = base + kb
                out[k] = get(k, 0) + ca * cb
    if p:
        out = {k: v % p for k, v in out.items() if v % p}
    elif lift:
        out = {k: lift(v) for k, v in out.items() if v}
    else:
        out = {k: v for k, v in out.items() if v}
    return Polynomial(ring, out)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Evaluate ``f`` at ``images`` (one polynomial per variable of f's ring)."""
    images = list(images)
    if len(images) != f.ring.nvars:
        raise ValueError(f"expected {f.ring.nvars} images, got {len(images)}")
    if not images:
        raise ValueError("no images")
    target = images[0].ring
    for img in images:
        if img.ring != target:
            raise RingMismatch("images live in different rings")
    if target.field != f.ring.field:
        raise RingMismatch("coefficient fields differ")
    dec = f.ring.packing.decode
    powers: list[dict[int, Polynomial]] = [{0: target.one, 1: img} for img in images]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = target.zero
    for k in sorted(f._t, reverse=True):
        term = target.constant(f._t[k])
        for i, e in enumerate(dec(k)):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def partial_derivatives(f: Polynomial) -> list[Polynomial]:
    return [f.diff(i) for i in range(f.ring.nvars)]


def format_poly(f: Polynomial) -> str:
    """Print terms in decreasing order with explicit ``*`` and ``^``."""
    if not f._t:
        return "0"
    ring = f.ring
    field = ring.field
    names = ring.var_names
    dec = ring.packing.decode
    parts = []
    for k in sorted(f._t, reverse=True):
        c = f._t[k]
        exps = dec(k)
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
        )
        neg = not field.characteristic and c < 0
        mag = -c if neg else c
        if not mono:
            body = field.to_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{field.to_str(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


class InexactDivision(ArithmeticError):
    pass


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises InexactDivision otherwise."""
    if g.ring != f.ring:
        raise RingMismatch("operands live in different rings")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if not ring.field.characteristic:
        fi, gi = _integral(f._t), _integral(g._t)
        if fi is not None and gi is not None:
            quot = _divide(ring, fi, gi, None)
            if quot is not None:
                return Polynomial(ring, {k: Fraction(v) for k, v in quot.items()})
    return Polynomial(ring, _divide(ring, f._t, g._t, ring.field))


def _divide(ring: PolyRing, ft: dict, gt: dict, field: Field | None) -> dict | None:
    """Long division of term dicts; ``field=None`` divides over the integers
    and returns None once a quotient coefficient is not integral."""
    pk = ring.packing
    p = field.characteristic if field else 0
    lg = max(gt)
    lc = gt[lg]
    inv = field.inv(lc) if field else None
    tail = [(k, c) for k, c in gt.items() if k != lg]
    rem = dict(ft)
    quot = {}
    while rem:
        lk = max(rem)
        if not pk.divides(lg, lk):
            raise InexactDivision(f"{format_poly(Polynomial(ring, gt))} does not divide the dividend")
        if field:
            c = rem.pop(lk) * inv
            if p:
                c %= p
        else:
            c, r = divmod(rem.pop(lk), lc)
            if r:
                return None
        m = lk - lg
        quot[m + pk.one] = c
        for k, v in tail:
            key = k + m
            val = rem.get(key, 0) - c * v
            if p:
                val %= p
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return quot
