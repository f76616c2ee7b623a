"""Buchberger's algorithm with Gebauer-Moeller pair pruning.

Pairs are selected by sugar degree, except under lex where the pair with the
smallest lcm goes first (the normal strategy).

Polynomials enter the engine as ``{packed monomial: coefficient}`` dicts.  Basis
elements are kept monic so a reduction step is a single scaled, shifted sweep
of the reducer's tail.  Inputs are queued with the S-pairs and processed at
their sugar degree, after all pairs of the same degree; for homogeneous input
this makes the engine graded, and the inputs that survive reduction form a
minimal generating set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence

from .monomial import DEG_BITS, MAX_EXP, MonomialOrder
from .poly import PolyRing, Polynomial, RingMismatch

log = logging.getLogger(__name__)

DEFAULT_MAX_PAIRS = 2_000_000
DEFAULT_MAX_TERMS = 50_000_000


class BudgetExceeded(RuntimeError):
    """The computation outgrew its configured pair or term budget."""


@dataclass
class Budget:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_terms: int = DEFAULT_MAX_TERMS


@dataclass
class EngineStats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    pairs_pruned: int = 0
    max_sugar: int = 0
    basis_terms: int = 0
    kept_inputs: list[int] = field(default_factory=list)


def normal_form_terms(terms: dict, reducers: Sequence[tuple], mask: int, guard: int, p: int) -> dict:
    """Full multivariate division of ``terms`` by monic ``reducers``.

    ``reducers`` holds ``(guarded_lm, lm, tail)`` triples where ``tail`` is a
    list of ``(key, coeff)`` pairs.  Returns the remainder dict.
    """
    f = dict(terms)
    heap = [-k for k in f]
    heapify(heap)
    rem = {}
    pop = heappop
    push = heappush
    get = f.get
    while heap:
        m = -pop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        am = m & mask
        for lmg, lm, tail in reducers:
            if (lmg - am) & guard == guard:
                break
        else:
            rem[m] = c
            continue
        shift = m - lm
        if p:
            for k, ck in tail:
                k2 = k + shift
                old = get(k2)
                if old is None:
                    f[k2] = (-c * ck) % p
                    push(heap, -k2)
                else:
                    v = (old - c * ck) % p
                    if v:
                        f[k2] = v
                    else:
                        del f[k2]
        else:
            for k, ck in tail:
                k2 = k + shift
                old = get(k2)
                if old is None:
                    f[k2] = -c * ck
                    push(heap, -k2)
                else:
                    v = old - c * ck
                    if v:
                        f[k2] = v
                    else:
                        del f[k2]
    return rem


def _monic(terms: dict, p: int) -> tuple[int, list]:
    lm = max(terms)
    lc = terms[lm]
    if p:
        inv = pow(lc, -1, p)
        tail = [(k, c * inv % p) for k, c in terms.items() if k != lm]
    else:
        tail = [(k, c / lc) for k, c in terms.items() if k != lm]
    tail.sort(reverse=True)
    return lm, tail


class _Engine:
    def __init__(self, ring: PolyRing, budget: Budget | None, max_degree: int | None):
        self.ring = ring
        self.pk = ring.packing
        self.p = ring.field.characteristic
        self.budget = budget or Budget()
        self.max_degree = max_degree
        # sugar degrades badly under lex; there the smallest lcm goes first
        self.normal = ring.order.kind == "lex"
        self.lms: list[int] = []
        self.exps: list[tuple] = []
        self.tails: list[list] = []
        self.sugar: list[int] = []
        self.lmdeg: list[int] = []
        self.active: list[bool] = []
        self.reducers: list[tuple] = []
        self.pairs: dict[tuple[int, int], int] = {}
        self.queue: list[tuple] = []
        self.stats = EngineStats()
        self.terms_total = 0

    # -- pair bookkeeping --------------------------------------------------

    def _lcm(self, i: int, j: int) -> tuple[int, tuple]:
        e = tuple(map(max, self.exps[i], self.exps[j]))
        return self.pk.encode(e), e

    def _pair_sugar(self, i: int, j: int, lcm_deg: int) -> int:
        return lcm_deg + max(self.sugar[i] - self.lmdeg[i], self.sugar[j] - self.lmdeg[j])

    def _coprime(self, i: int, j: int) -> bool:
        for a, b in zip(self.exps[i], self.exps[j]):
            if a and b:
                return False
        return True

    def _rebuild_reducers(self):
        mask, guard = self.pk.exp_mask, self.pk.guard
        order = sorted((i for i, a in enumerate(self.active) if a), key=lambda i: (len(self.tails[i]), self.lms[i]))
        self.reducers = [((self.lms[i] & mask) | guard, self.lms[i], self.tails[i]) for i in order]

    def _add(self, terms: dict, sugar: int) -> int:
        lm, tail = _monic(terms, self.p)
        h = len(self.lms)
        e = self.pk.decode(lm)
        self.lms.append(lm)
        self.exps.append(e)
        self.tails.append(tail)
        self.sugar.append(sugar)
        self.lmdeg.append(sum(e))
        self.active.append(True)
        self.terms_total += len(tail) + 1
        if self.terms_total > self.budget.max_terms:
            raise BudgetExceeded(f"basis exceeded {self.budget.max_terms} terms")
        self._update(h)
        self._rebuild_reducers()
        return h

    def _update(self, h: int):
        """Gebauer-Moeller installation of the new element ``h``."""
        pk = self.pk
        div = pk.divides
        lm_h = self.lms[h]
        candidates = []
        for g in range(h):
            if not self.active[g]:
                continue
            lcm, e = self._lcm(h, g)
            candidates.append((g, lcm, sum(e)))
        # step 1: among new pairs drop those whose lcm is a multiple of another's
        kept = []
        for idx, (g, lcm, d) in enumerate(candidates):
            if self._coprime(h, g):
                kept.append((g, lcm, d))
                continue
            redundant = False
            for g2, lcm2, _ in candidates[idx + 1:]:
                if div(lcm2, lcm):
                    redundant = True
                    break
            if not redundant:
                for g2, lcm2, _ in kept:
                    if div(lcm2, lcm):
                        redundant = True
                        break
            if not redundant:
                kept.append((g, lcm, d))
            else:
                self.stats.pairs_pruned += 1
        # step 2: product criterion, coprime leading monomials need no pair
        new_pairs = []
        for g, lcm, d in kept:
            if self._coprime(h, g):
                self.stats.pairs_pruned += 1
                continue
            new_pairs.append((g, lcm, d))
        # step 3: prune old pairs via the chain criterion
        if self.pairs:
            lm_h_e = self.exps[h]
            dead = []
            for (i, j), lcm in self.pairs.items():
                if div(lm_h, lcm):
                    lih = tuple(map(max, self.exps[i], lm_h_e))
                    ljh = tuple(map(max, self.exps[j], lm_h_e))
                    lij = pk.decode(lcm)
                    if lih != lij and ljh != lij:
                        dead.append((i, j))
            for key in dead:
                del self.pairs[key]
            self.stats.pairs_pruned += len(dead)
        # step 4: retire elements whose leading monomial h divides
        for g in range(h):
            if self.active[g] and div(lm_h, self.lms[g]):
                self.active[g] = False
        for g, lcm, d in new_pairs:
            key = (g, h)
            self.pairs[key] = lcm
            s = self._pair_sugar(g, h, d)
            heappush(self.queue, (lcm if self.normal else s, s, 0, lcm, g, h))

    # -- main loop ----------------------------------------------------------

    def _spoly(self, i: int, j: int, lcm: int) -> dict:
        p = self.p
        si = lcm - self.lms[i]
        sj = lcm - self.lms[j]
        out = {k + si: c for k, c in self.tails[i]}
        get = out.get
        for k, c in self.tails[j]:
            k2 = k + sj
            v = get(k2)
            if v is None:
                out[k2] = (-c) % p if p else -c
            else:
                v = (v - c) % p if p else v - c
                if v:
                    out[k2] = v
                else:
                    del out[k2]
        return out

    def run(self, inputs: list[dict]) -> None:
        deg = self.pk.degree
        for idx, t in enumerate(inputs):
            if not t:
                continue
            s = max(deg(k) for k in t)
            heappush(self.queue, (max(t) if self.normal else s, s, 1, idx, -1, idx))
        mask, guard, p = self.pk.exp_mask, self.pk.guard, self.p
        budget = self.budget
        while self.queue:
            _, s, kind, lcm, i, j = heappop(self.queue)
            if self.max_degree is not None and s > self.max_degree:
                if self.normal:
                    continue
                break
            if kind == 1:
                terms = inputs[j]
            else:
                if self.pairs.pop((i, j), None) is None:
                    continue
                terms = self._spoly(i, j, lcm)
            self.stats.pairs_reduced += 1
            if self.stats.pairs_reduced > budget.max_pairs:
                raise BudgetExceeded(f"more than {budget.max_pairs} pair reductions")
            self.stats.max_sugar = max(self.stats.max_sugar, s)
            rem = normal_form_terms(terms, self.reducers, mask, guard, p)
            if not rem:
                self.stats.zero_reductions += 1
                continue
            top = max(deg(k) for k in rem)
            if top > MAX_EXP:
                raise BudgetExceeded("degree exceeds the exponent range")
            # reductions under a non-graded order can lift the degree past the sugar
            s = max(s, top)
            h = self._add(rem, s)
            if kind == 1:
                self.stats.kept_inputs.append(j)
            if self.lmdeg[h] == 0:
                # unit ideal
                self.queue.clear()
                self.pairs.clear()
                break

    def reduced_basis(self) -> list[dict]:
        mask, guard, p = self.pk.exp_mask, self.pk.guard, self.p
        idx = sorted((i for i, a in enumerate(self.active) if a), key=lambda i: self.lms[i])
        if any(self.lmdeg[i] == 0 for i in idx):
            one = self.pk.one
            return [{one: 1 if p else self.ring.field.one}]
        out = []
        for i in idx:
            others = [((self.lms[g] & mask) | guard, self.lms[g], self.tails[g]) for g in idx if g != i]
            tail = normal_form_terms(dict(self.tails[i]), others, mask, guard, p)
            tail[self.lms[i]] = 1 if p else self.ring.field.one
            out.append(tail)
        self.stats.basis_terms = sum(len(t) for t in out)
        return out


class GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    ``basis`` is sorted by increasing leading monomial; every element is monic.
    """

    def __init__(self, ring: PolyRing, basis: list[Polynomial], stats: EngineStats | None = None):
        self.ring = ring
        self.order = ring.order
        self.basis = basis
        self.stats = stats or EngineStats()
        pk = ring.packing
        self._reducers = [
            ((f.leading_key() & pk.exp_mask) | pk.guard, f.leading_key(), sorted(((k, c) for k, c in f._t.items() if k != f.leading_key()), reverse=True))
            for f in basis
        ]

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero()

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [f.leading_monomial() for f in self.basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        pk = self.ring.packing
        rem = normal_form_terms(f._t, self._reducers, pk.exp_mask, pk.guard, self.ring.field.characteristic)
        return Polynomial(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def s_polynomial_certificate(self) -> bool:
        """Replay Buchberger's criterion: every S-polynomial reduces to zero."""
        pk = self.ring.packing
        p = self.ring.field.characteristic
        for a in range(len(self.basis)):
            for b in range(a + 1, len(self.basis)):
                f, g = self.basis[a], self.basis[b]
                lf, lg = f.leading_key(), g.leading_key()
                lcm = pk.lcm(lf, lg)
                sf = Polynomial(self.ring, {pk.quotient(lcm, lf): 1 if p else self.ring.field.one})
                sg = Polynomial(self.ring, {pk.quotient(lcm, lg): 1 if p else self.ring.field.one})
                s = sf * f - sg * g
                if not self.normal_form(s).is_zero():
                    return False
        return True

    def is_reduced(self) -> bool:
        pk = self.ring.packing
        for f in self.basis:
            if f.leading_coefficient() != 1:
                return False
            for g in self.basis:
                if g is f:
                    continue
                lg = g.leading_key()
                if any(pk.divides(lg, k) for k in f._t):
                    return False
        return True


def groebner_basis(
    generators: Iterable[Polynomial],
    ring: PolyRing | None = None,
    order: MonomialOrder | str | None = None,
    budget: Budget | None = None,
    max_degree: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``generators``.

    When ``order`` differs from the generators' ring order the polynomials are
    re-encoded into a copy of the ring carrying ``order``; the returned basis
    lives in that ring.
    """
    gens = [g for g in generators]
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring.var_names != ring.var_names or g.ring.field != ring.field:
            raise RingMismatch("generators live in different rings")
    if order is not None:
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        if order != ring.order:
            ring = ring.with_order(order)
    gens = [g.to_ring(ring) for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, [])
    engine = _Engine(ring, budget, max_degree)
    engine.run([dict(g._t) for g in gens])
    basis = [Polynomial(ring, t) for t in engine.reduced_basis()]
    log.debug(
        "groebner: %d elements, %d pairs reduced (%d to zero), %d pruned, max sugar %d",
        len(basis), engine.stats.pairs_reduced, engine.stats.zero_reductions,
        engine.stats.pairs_pruned, engine.stats.max_sugar,
    )
    return GroebnerBasis(ring, basis, engine.stats)


def kept_generators(
    generators: Sequence[Polynomial], budget: Budget | None = None
) -> list[int]:
    """Indices of a minimal generating subset of homogeneous ``generators``.

    Generators are tested in order of increasing degree (stable within a
    degree); one is kept iff it does not lie in the ideal spanned by all
    lower-degree generators together with the already kept ones of its degree.
    """
    gens = list(generators)
    if not gens:
        return []
    ring = gens[0].ring.with_order("grevlex")
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("minimal generators are defined for homogeneous ideals only")
    order = sorted((i for i, g in enumerate(gens) if not g.is_zero()), key=lambda i: gens[i].degree())
    engine = _Engine(ring, budget, None)
    engine.run([dict(gens[i].to_ring(ring)._t) for i in order])
    return sorted(order[j] for j in engine.stats.kept_inputs)


def elimination_degree_zero(ring: PolyRing, key: int) -> bool:
    """True iff the monomial ``key`` is free of the eliminated block."""
    return (key >> ring.packing.deg_shifts[0]) & ((1 << DEG_BITS) - 1) == 0
