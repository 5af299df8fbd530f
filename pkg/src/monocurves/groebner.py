"""Buchberger's algorithm, basis verification, normal forms, homogenization."""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .orders import MonomialOrder
from .poly import (DivisionRecord, Polynomial, divide, exp_coprime, exp_lcm,
                   s_polynomial)


class ComputationLimitExceeded(RuntimeError):
    """Raised when a configured size guard stops a computation."""


class GroebnerBasis:
    """Ordered list of monic generators plus S-pair reduction transcripts.

    Transcripts are built on demand: for a pair with coprime leading
    monomials the combination -(g - Lm g)*f + (f - Lm f)*g is taken as the
    reduction to zero, every other pair is divided against the basis.
    Requesting a transcript on a non-basis raises ValueError.
    """

    def __init__(self, generators: Iterable[Polynomial], order: MonomialOrder):
        gens = tuple(generators)
        if any(not g for g in gens):
            raise ValueError("zero polynomial in basis")
        self.generators = tuple(g.monic(order) for g in gens)
        self.order = order
        self._leads = tuple(g.leading(order)[0] for g in self.generators)
        self._transcripts: dict[tuple[int, int], DivisionRecord] = {}

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    @property
    def leading_exponents(self):
        return self._leads

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.generators:
            return f
        return divide(f, self.generators, self.order).remainder

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def transcript(self, i: int, j: int) -> DivisionRecord:
        if not 0 <= i < j < len(self.generators):
            raise ValueError("transcript wants a pair i < j of basis indices")
        if (i, j) in self._transcripts:
            return self._transcripts[(i, j)]
        gi, gj = self.generators[i], self.generators[j]
        if exp_coprime(self._leads[i], self._leads[j]):
            lt_i = Polynomial.monomial(gi.variables, self._leads[i])
            lt_j = Polynomial.monomial(gj.variables, self._leads[j])
            quots = [Polynomial.zero(gi.variables) for _ in self.generators]
            quots[i] = -(gj - lt_j)
            quots[j] = gi - lt_i
            rec = DivisionRecord(tuple(quots), Polynomial.zero(gi.variables),
                                 tuple(range(len(self.generators))),
                                 via_coprime_criterion=True)
        else:
            rec = divide(s_polynomial(gi, gj, self.order), self.generators, self.order)
            if rec.remainder:
                raise ValueError(f"not a Groebner basis: pair ({i}, {j}) "
                                 "does not reduce to zero")
        self._transcripts[(i, j)] = rec
        return rec

    def spair_transcripts(self) -> dict[tuple[int, int], DivisionRecord]:
        n = len(self.generators)
        return {(i, j): self.transcript(i, j) for i in range(n) for j in range(i + 1, n)}


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder, *,
               use_coprime_criterion: bool = True,
               max_basis: int | None = None) -> GroebnerBasis:
    """Complete gens to a Groebner basis.

    Input generators are kept (made monic) and completions are appended, so
    a set that already is a Groebner basis comes back unchanged.  Pair
    selection is the normal strategy: least lcm total degree first, ties by
    pair index, which makes runs reproducible.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generating set")
    if any(not g for g in gens):
        raise ValueError("zero polynomial among generators")
    ambient = gens[0].variables
    for g in gens:
        if g.variables != ambient:
            raise ValueError("generators live in different ambients")
    basis = [g.monic(order) for g in gens]
    leads = [g.leading(order)[0] for g in basis]
    pairs: list[tuple[int, int, int]] = []
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(pairs, (sum(exp_lcm(leads[i], leads[j])), i, j))
    while pairs:
        _, i, j = heapq.heappop(pairs)
        if use_coprime_criterion and exp_coprime(leads[i], leads[j]):
            continue
        s = s_polynomial(basis[i], basis[j], order)
        if not s:
            continue
        r = divide(s, basis, order).remainder
        if not r:
            continue
        if max_basis is not None and len(basis) >= max_basis:
            raise ComputationLimitExceeded(
                f"Groebner basis exceeded {max_basis} elements")
        basis.append(r.monic(order))
        leads.append(r.leading(order)[0])
        k = len(basis) - 1
        for i2 in range(k):
            heapq.heappush(pairs, (sum(exp_lcm(leads[i2], leads[k])), i2, k))
    return GroebnerBasis(basis, order)


def is_groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder):
    """Buchberger's criterion: (all S-pairs reduce to zero, transcripts)."""
    gb = GroebnerBasis(gens, order)
    records: dict[tuple[int, int], DivisionRecord] = {}
    ok = True
    n = len(gb.generators)
    for i in range(n):
        for j in range(i + 1, n):
            if exp_coprime(gb.leading_exponents[i], gb.leading_exponents[j]):
                records[(i, j)] = gb.transcript(i, j)
                continue
            rec = divide(s_polynomial(gb[i], gb[j], order), gb.generators, order)
            records[(i, j)] = rec
            if rec.remainder:
                ok = False
    return ok, records


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of f modulo the basis; zero iff f is in the ideal."""
    return gb.normal_form(f)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The reduced Groebner basis: monic, auto-reduced, sorted, unique."""
    order = gb.order
    if not gb.generators:
        return gb
    # drop generators whose leading monomial another one divides
    by_lead = sorted(range(len(gb.generators)),
                     key=lambda k: order.key(gb.leading_exponents[k]))
    kept: list[Polynomial] = []
    kept_leads: list[tuple] = []
    for k in by_lead:
        lead = gb.leading_exponents[k]
        if any(all(a <= b for a, b in zip(kl, lead)) for kl in kept_leads):
            continue
        kept.append(gb.generators[k])
        kept_leads.append(lead)
    # tail-reduce until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            if not others:
                continue
            r = divide(kept[i], others, order).remainder.monic(order)
            if r != kept[i]:
                kept[i] = r
                changed = True
    kept.sort(key=lambda g: order.key(g.leading(order)[0]))
    return GroebnerBasis(kept, order)


def homogenize_basis(gb: GroebnerBasis, homvar: str = "h") -> list[Polynomial]:
    """Homogenize each generator to its total degree with a fresh variable.

    Only valid under a degree-compatible order: then the output is again a
    Groebner basis and cuts out the projective closure.
    """
    if not gb.order.degree_compatible:
        raise ValueError("homogenization needs a degree-compatible order")
    ambient = gb.generators[0].variables if gb.generators else ()
    if homvar in ambient:
        raise ValueError(f"homogenizing variable {homvar!r} is not fresh")
    new_vars = ambient + (homvar,)
    out = []
    for g in gb.generators:
        d = g.total_degree()
        out.append(Polynomial._raw(
            new_vars, {e + (d - sum(e),): c for e, c in g.terms.items()}))
    return out
