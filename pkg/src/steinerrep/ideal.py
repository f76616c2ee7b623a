"""Ideals and the commutative-algebra operations built on Groebner bases."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .groebner import Budget, GroebnerBasis, elimination_degree_zero, groebner_basis, kept_generators
from .hilbert import HilbertPolynomial, hilbert_polynomial_of_monomials
from .monomial import MonomialOrder
from .poly import PolyRing, Polynomial, RingMismatch, partial_derivatives


class Ideal:
    """Ideal of ``ring`` spanned by nonzero ``generators``.

    Groebner bases are computed lazily and cached per monomial order.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring.var_names != ring.var_names or g.ring.field != ring.field:
                raise RingMismatch("generator outside the ideal's ring")
            g = g.to_ring(ring)
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = gens
        self._bases: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one])

    @property
    def is_graded(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"

    def __len__(self):
        return len(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring.var_names != self.ring.var_names:
            raise RingMismatch("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def groebner(self, order: MonomialOrder | str | None = None, budget: Budget | None = None) -> GroebnerBasis:
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        order = order or self.ring.order
        if order not in self._bases:
            self._bases[order] = groebner_basis(self.generators, self.ring, order, budget)
        return self._bases[order]

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self, budget: Budget | None = None) -> bool:
        if self.is_zero():
            return False
        return self.groebner(budget=budget).is_unit()

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        gb = self.groebner()
        return gb.contains(f.to_ring(gb.ring))

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring.var_names != self.ring.var_names or other.ring.field != self.ring.field:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a = self.groebner("grevlex")
        b = other.groebner("grevlex")
        return a.basis == b.basis

    __hash__ = None


# -- elimination and ring maps ---------------------------------------------


def _subring(ring: PolyRing, k: int) -> PolyRing:
    return PolyRing(ring.field, ring.var_names[k:], "grevlex")


def eliminate(ideal: Ideal, k: int, budget: Budget | None = None) -> Ideal:
    """``ideal`` intersected with the subring of the last ``nvars - k`` variables.

    The result lives in that subring (grevlex order).
    """
    ring = ideal.ring
    if not 1 <= k < ring.nvars:
        raise ValueError(f"cannot eliminate {k} of {ring.nvars} variables")
    sub = _subring(ring, k)
    if ideal.is_zero():
        return Ideal(sub)
    gb = ideal.groebner(MonomialOrder.elimination(k), budget)
    var_map = [i - k if i >= k else 0 for i in range(ring.nvars)]
    kept = [f for f in gb.basis if elimination_degree_zero(gb.ring, f.leading_key())]
    return Ideal(sub, [f.to_ring(sub, var_map) for f in kept])


def _fresh_names(taken: Sequence[str], wanted: Sequence[str]) -> list[str]:
    used = set(taken)
    out = []
    for name in wanted:
        cand = name
        while cand in used:
            cand = "_" + cand
        used.add(cand)
        out.append(cand)
    return out


def ring_map_kernel(
    ideal: Ideal,
    images: Sequence[Polynomial],
    target: PolyRing | None = None,
    budget: Budget | None = None,
) -> Ideal:
    """Kernel of ``target -> ideal.ring / ideal`` sending variable i to ``images[i]``.

    Computed by eliminating the source variables from the graph ideal
    ``ideal + (z_i - images[i])`` in the product ring.
    """
    source = ideal.ring
    images = list(images)
    if not images:
        raise ValueError("no images")
    for img in images:
        if img.ring.var_names != source.var_names or img.ring.field != source.field:
            raise RingMismatch("images must live in the ideal's ring")
    if target is None:
        target = PolyRing(source.field, [f"z{i}" for i in range(len(images))], "grevlex")
    if target.nvars != len(images):
        raise ValueError(f"target ring has {target.nvars} variables but {len(images)} images were given")
    if target.field != source.field:
        raise RingMismatch("coefficient fields differ")
    nx = source.nvars
    znames = _fresh_names(source.var_names, target.var_names)
    product = PolyRing(source.field, list(source.var_names) + znames, MonomialOrder.elimination(nx))
    xmap = list(range(nx))
    graph = [g.to_ring(product, xmap) for g in ideal.generators]
    for i, img in enumerate(images):
        graph.append(product.gen(nx + i) - img.to_ring(product, xmap))
    elim = eliminate(Ideal(product, graph), nx, budget)
    return Ideal(target, [f.to_ring(target, list(range(target.nvars))) for f in elim.generators])


def _with_extra_variable(ring: PolyRing, name: str = "t") -> tuple[PolyRing, list[int]]:
    (tname,) = _fresh_names(ring.var_names, [name])
    ext = PolyRing(ring.field, [tname] + list(ring.var_names), MonomialOrder.elimination(1))
    return ext, [i + 1 for i in range(ring.nvars)]


def intersect(a: Ideal, b: Ideal, budget: Budget | None = None) -> Ideal:
    """``a`` intersected with ``b`` via elimination of t from t*a + (1-t)*b."""
    if a.ring.var_names != b.ring.var_names:
        raise RingMismatch("ideals live in different rings")
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring)
    if a.is_unit(budget):
        return b
    if b.is_unit(budget):
        return a
    ext, xmap = _with_extra_variable(a.ring)
    t = ext.gen(0)
    gens = [t * g.to_ring(ext, xmap) for g in a.generators]
    gens += [(ext.one - t) * g.to_ring(ext, xmap) for g in b.generators]
    out = eliminate(Ideal(ext, gens), 1, budget)
    return Ideal(a.ring, [f.to_ring(a.ring, list(range(a.ring.nvars))) for f in out.generators])


def saturate_by_element(ideal: Ideal, g: Polynomial, budget: Budget | None = None) -> Ideal:
    """``ideal : g^infinity`` by the auxiliary-variable trick ``ideal + (1 - t*g)``."""
    ring = ideal.ring
    ext, xmap = _with_extra_variable(ring)
    t = ext.gen(0)
    gens = [f.to_ring(ext, xmap) for f in ideal.generators]
    gens.append(ext.one - t * g.to_ring(ext, xmap))
    out = eliminate(Ideal(ext, gens), 1, budget)
    return Ideal(ring, [f.to_ring(ring, list(range(ring.nvars))) for f in out.generators])


def saturate(ideal: Ideal, by: Ideal, budget: Budget | None = None) -> Ideal:
    """``ideal : by^infinity``, the intersection of the saturations by each generator."""
    if ideal.ring.var_names != by.ring.var_names:
        raise RingMismatch("ideals live in different rings")
    ring = ideal.ring
    if by.is_zero():
        return Ideal.unit(ring)
    if ideal.is_unit(budget):
        return Ideal.unit(ring)
    result: Ideal | None = None
    for g in by.generators:
        part = saturate_by_element(ideal, g, budget)
        result = part if result is None else intersect(result, part, budget)
    return _interreduced(result, budget)


def _interreduced(ideal: Ideal, budget: Budget | None = None) -> Ideal:
    """Same ideal, generated by its reduced grevlex basis."""
    if ideal.is_zero():
        return ideal
    gb = ideal.groebner("grevlex", budget)
    ring = ideal.ring
    return Ideal(ring, [f.to_ring(ring) for f in gb.basis])


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens)


# -- graded invariants ------------------------------------------------------


def jacobian_ideal(form: Polynomial) -> Ideal:
    """``(F, dF/dx_0, ..., dF/dx_n)``; F is kept for characteristic safety."""
    if form.is_zero():
        raise ValueError("jacobian ideal of the zero form")
    if not form.is_homogeneous():
        raise ValueError("jacobian ideal expects a homogeneous form")
    return Ideal(form.ring, [form] + partial_derivatives(form))


def hilbert_polynomial(ideal: Ideal, budget: Budget | None = None) -> HilbertPolynomial:
    """Hilbert polynomial of ring/ideal from the grevlex lead-term ideal."""
    if not ideal.is_graded:
        raise ValueError("Hilbert polynomial needs a graded ideal")
    n = ideal.ring.nvars
    if ideal.is_zero():
        return hilbert_polynomial_of_monomials([], n)
    gb = ideal.groebner("grevlex", budget)
    return hilbert_polynomial_of_monomials(gb.leading_monomials(), n)


def is_projectively_empty(ideal: Ideal, budget: Budget | None = None) -> bool:
    """True iff V(ideal) is empty in projective space (Hilbert polynomial 0)."""
    return hilbert_polynomial(ideal, budget).is_zero()


def minimal_generators(ideal: Ideal, budget: Budget | None = None) -> list[Polynomial]:
    """A minimal homogeneous generating subset of the given generators."""
    if not ideal.is_graded:
        raise ValueError("minimal generators need a graded ideal")
    keep = kept_generators(ideal.generators, budget)
    return [ideal.generators[i] for i in keep]


def minimal_generator_degrees(ideal: Ideal, budget: Budget | None = None) -> list[int]:
    """Sorted degrees of a minimal homogeneous generating set."""
    return sorted(g.degree() for g in minimal_generators(ideal, budget))


def degree_counts(degrees: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(degrees).items()))
