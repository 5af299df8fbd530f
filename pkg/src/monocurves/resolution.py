"""Schreyer syzygies, graded free resolutions, minimalization, Betti numbers.

The resolution is built level by level.  A Groebner basis of the ideal gives
the first differential; the reduction transcript of each S-pair yields a
generating set of the syzygy module which is again a Groebner basis with
respect to the order induced on positions by the parent leading terms, so
the construction iterates without ever running a module Buchberger
completion.  Minimalization then cancels unit entries of the differentials
to split off trivial summands; the surviving ranks are the Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import GroebnerBasis, buchberger
from .orders import MonomialOrder
from .poly import (Polynomial, exp_add, exp_coprime, exp_divides, exp_lcm,
                   exp_sub, weighted_degree)
from .toric import GradedIdealPresentation, MonomialCurve, defining_ideal, monomial_curve


# ---- orders on free-module monomials (position, exponent vector) ----------

class _RankOneOrder:
    """Module order on R^1: compare the ring monomials."""

    __slots__ = ("ring_order",)

    def __init__(self, ring_order: MonomialOrder):
        self.ring_order = ring_order

    def compare(self, a, b) -> int:
        c = self.ring_order.compare(a[1], b[1])
        if c:
            return c
        if a[0] != b[0]:
            return 1 if a[0] < b[0] else -1
        return 0


class SchreyerOrder:
    """Order induced on syzygy positions by the parent leading monomials.

    (i, u) beats (j, v) iff u * Lm(g_i) beats v * Lm(g_j) in the parent
    module, ties going to the smaller index.  With this order the Schreyer
    generators of the syzygy module are already a Groebner basis.
    """

    __slots__ = ("parent", "leads")

    def __init__(self, parent, leads):
        self.parent = parent
        self.leads = tuple(leads)

    def compare(self, a, b) -> int:
        pa, ua = a
        pb, ub = b
        la = self.leads[pa]
        lb = self.leads[pb]
        c = self.parent.compare((la[0], exp_add(ua, la[1])),
                                (lb[0], exp_add(ub, lb[1])))
        if c:
            return c
        if pa != pb:
            return 1 if pa < pb else -1
        return 0


# ---- free module elements --------------------------------------------------

class FreeModuleElement:
    """Vector of polynomials in a graded free module.

    ``shifts`` carries the weighted-degree label of each basis vector of the
    ambient module, so homogeneity of the element is checkable locally.
    """

    __slots__ = ("coordinates", "shifts")

    def __init__(self, coordinates: Sequence[Polynomial], shifts: Sequence[int]):
        coordinates = tuple(coordinates)
        if len(coordinates) != len(shifts):
            raise ValueError("one shift per coordinate")
        object.__setattr__(self, "coordinates", coordinates)
        object.__setattr__(self, "shifts", tuple(shifts))

    def __setattr__(self, name, value):
        raise AttributeError("FreeModuleElement is immutable")

    @property
    def rank(self) -> int:
        return len(self.coordinates)

    def __bool__(self):
        return any(self.coordinates)

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement)
                and self.coordinates == other.coordinates
                and self.shifts == other.shifts)

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.coordinates) + ")"

    def sub(self, other: "FreeModuleElement") -> "FreeModuleElement":
        return FreeModuleElement(
            tuple(a - b for a, b in zip(self.coordinates, other.coordinates)),
            self.shifts)

    def scale(self, c) -> "FreeModuleElement":
        return FreeModuleElement(tuple(p.scale(c) for p in self.coordinates),
                                 self.shifts)

    def times_term(self, coeff, exp) -> "FreeModuleElement":
        return FreeModuleElement(
            tuple(p.times_term(coeff, exp) for p in self.coordinates), self.shifts)

    def leading(self, order):
        """(position, exponents, coefficient) of the largest module monomial."""
        best = None
        best_c = None
        for pos, poly in enumerate(self.coordinates):
            for exp, c in poly.terms.items():
                mm = (pos, exp)
                if best is None or order.compare(mm, best) > 0:
                    best, best_c = mm, c
        if best is None:
            raise ValueError("zero element has no leading term")
        return best[0], best[1], best_c

    def degree(self, weights) -> int:
        """Homogeneous degree; raises when coordinates disagree."""
        degs = set()
        for shift, poly in zip(self.shifts, self.coordinates):
            for exp in poly.terms:
                degs.add(weighted_degree(exp, weights) + shift)
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def sort_key(self):
        return tuple(p.sort_key() for p in self.coordinates)


def _combine(coeffs: Sequence[Polynomial],
             elements: Sequence[FreeModuleElement]) -> FreeModuleElement:
    rank = elements[0].rank
    ambient = elements[0].coordinates[0].variables
    coords = [Polynomial.zero(ambient)] * rank
    for c, e in zip(coeffs, elements):
        if not c:
            continue
        for k in range(rank):
            if e.coordinates[k]:
                coords[k] = coords[k] + c * e.coordinates[k]
    return FreeModuleElement(coords, elements[0].shifts)


def _module_divide(f: FreeModuleElement, elements, leads, flat, order):
    """Divide a vector by monic divisors; returns (quotients, remainder dict).

    Same first-match strategy as ring division, restricted to divisors whose
    leading monomial sits at the current leading position.
    """
    ambient = f.coordinates[0].variables
    p = {(pos, exp): c
         for pos, poly in enumerate(f.coordinates)
         for exp, c in poly.terms.items()}
    quots: list[dict] = [{} for _ in elements]
    rem: dict = {}
    while p:
        best = None
        for mm in p:
            if best is None or order.compare(mm, best) > 0:
                best = mm
        c = p[best]
        pos, exp = best
        for k, (dpos, dexp) in enumerate(leads):
            if dpos == pos and exp_divides(dexp, exp):
                qexp = exp_sub(exp, dexp)
                quots[k][qexp] = quots[k].get(qexp, 0) + c
                for (tpos, texp), tc in flat[k]:
                    key = (tpos, exp_add(qexp, texp))
                    s = p.get(key, 0) - c * tc
                    if s:
                        p[key] = s
                    elif key in p:
                        del p[key]
                break
        else:
            rem[best] = c
            del p[best]
    return [Polynomial._raw(ambient, {e: c for e, c in q.items() if c})
            for q in quots], rem


def _syzygy_from_pair(i, j, quotients, leads, elements, shifts) -> FreeModuleElement:
    # Schreyer tuple (h_1, ..., h_i - u, ..., h_j + v, ..., h_t) for the
    # transcript S(g_i, g_j) = u g_i - v g_j = sum h_k g_k
    ambient = elements[0].coordinates[0].variables
    lcm = exp_lcm(leads[i][1], leads[j][1])
    coords = list(quotients)
    coords[i] = coords[i] - Polynomial.monomial(ambient, exp_sub(lcm, leads[i][1]))
    coords[j] = coords[j] + Polynomial.monomial(ambient, exp_sub(lcm, leads[j][1]))
    syz = FreeModuleElement(coords, shifts)
    if _combine(syz.coordinates, elements):
        raise AssertionError("syzygy does not annihilate the basis")
    return syz


def _level_syzygies(elements, order, shifts, *, rank_one: bool):
    """All Schreyer tuples of one level, in pair order."""
    t = len(elements)
    leads = []
    for e in elements:
        pos, exp, c = e.leading(order)
        if c != 1:
            raise AssertionError("level elements must be monic")
        leads.append((pos, exp))
    flat = [tuple(((pos, exp), c)
                  for pos, poly in enumerate(e.coordinates)
                  for exp, c in poly.terms.items())
            for e in elements]
    ambient = elements[0].coordinates[0].variables
    out = []
    for i in range(t):
        for j in range(i + 1, t):
            if leads[i][0] != leads[j][0]:
                continue
            if rank_one and exp_coprime(leads[i][1], leads[j][1]):
                # closed-form transcript for coprime leading monomials;
                # valid in the ring case only
                gi = elements[i].coordinates[0]
                gj = elements[j].coordinates[0]
                lt_i = Polynomial.monomial(ambient, leads[i][1])
                lt_j = Polynomial.monomial(ambient, leads[j][1])
                quots = [Polynomial.zero(ambient) for _ in range(t)]
                quots[i] = -(gj - lt_j)
                quots[j] = gi - lt_i
            else:
                lcm = exp_lcm(leads[i][1], leads[j][1])
                spair = (elements[i].times_term(1, exp_sub(lcm, leads[i][1]))
                         .sub(elements[j].times_term(1, exp_sub(lcm, leads[j][1]))))
                quots, rem = _module_divide(spair, elements, leads, flat, order)
                if rem:
                    raise AssertionError("transcript integrity failure: "
                                         f"pair ({i}, {j}) left a remainder")
            out.append(_syzygy_from_pair(i, j, quots, leads, elements, shifts))
    return leads, out


def schreyer_syzygies(gb: GroebnerBasis, weights=None) -> list[FreeModuleElement]:
    """Generators of Syz(g_1, ..., g_t) read off the S-pair transcripts."""
    t = len(gb.generators)
    if t <= 1:
        return []
    if weights is None:
        weights = (1,) * len(gb.generators[0].variables)
    elements = [FreeModuleElement((g,), (0,)) for g in gb.generators]
    order = _RankOneOrder(gb.order)
    shifts = tuple(g.weighted_degree(weights) for g in gb.generators)
    _, syz = _level_syzygies(elements, order, shifts, rank_one=True)
    return syz


def _prune_and_sort(syzygies, order):
    """Keep a minimal Groebner subset, arranged for the length bound.

    A syzygy whose leading monomial is divisible by another kept one at the
    same position is redundant as a basis element.  Survivors are sorted by
    position, then by descending plain-lex leading exponent; with that
    arrangement each level drops one more variable from the leading
    monomials, which caps the resolution length by the variable count.
    """
    info = []
    for s in syzygies:
        pos, exp, c = s.leading(order)
        if c != 1:
            s = s.scale(Fraction(1) / c)
        info.append(((pos, exp), s))
    info.sort(key=lambda it: (it[0][0], sum(it[0][1]), it[0][1], it[1].sort_key()))
    kept: list[tuple] = []
    kept_elems: list[FreeModuleElement] = []
    for (pos, exp), s in info:
        if any(kp == pos and exp_divides(ke, exp) for kp, ke in kept):
            continue
        kept.append((pos, exp))
        kept_elems.append(s)
    arranged = sorted(zip(kept, kept_elems),
                      key=lambda it: (it[0][0], tuple(-e for e in it[0][1]),
                                      it[1].sort_key()))
    return [s for _, s in arranged]


# ---- graded resolutions -----------------------------------------------------

@dataclass
class GradedResolution:
    """Chain of free modules with degree labels and differential matrices.

    ``differentials[k]`` maps module k+1 to module k; its column c is the
    image of the c-th basis vector.  Entry (r, c) is homogeneous of degree
    shifts[k+1][c] - shifts[k][r].
    """

    ranks: list[int]
    shifts: list[list[int]]
    differentials: list[list[list[Polynomial]]]
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    @property
    def betti(self) -> list[int]:
        return list(self.ranks[1:])

    def is_complex(self) -> bool:
        """Exact check that consecutive differentials compose to zero."""
        for k in range(len(self.differentials) - 1):
            a = self.differentials[k]
            b = self.differentials[k + 1]
            for r in range(self.ranks[k]):
                for c in range(self.ranks[k + 2]):
                    acc = Polynomial.zero(self.variables)
                    for m in range(self.ranks[k + 1]):
                        acc = acc + a[r][m] * b[m][c]
                    if acc:
                        return False
        return True

    def is_homogeneous(self) -> bool:
        for k, mat in enumerate(self.differentials):
            for r, row in enumerate(mat):
                for c, entry in enumerate(row):
                    if not entry:
                        continue
                    want = self.shifts[k + 1][c] - self.shifts[k][r]
                    if (not entry.is_weighted_homogeneous(self.weights)
                            or entry.weighted_degree(self.weights) != want):
                        return False
        return True

    def has_constant_entries(self) -> bool:
        return any(_constant_value(e) is not None
                   for mat in self.differentials for row in mat for e in row)

    def to_json_dict(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "shifts": [list(s) for s in self.shifts],
            "minimal": self.minimal,
            "variables": list(self.variables),
            "weights": list(self.weights),
            "differentials": [[[str(e) for e in row] for row in mat]
                              for mat in self.differentials],
        }

    def to_text(self) -> str:
        lines = [f"graded free resolution, length {self.length}"
                 f"{' (minimal)' if self.minimal else ''}"]
        lines.append("ranks: " + " ".join(str(r) for r in self.ranks))
        for k, s in enumerate(self.shifts):
            lines.append(f"shifts[{k}]: " + " ".join(str(x) for x in s))
        for k, mat in enumerate(self.differentials):
            lines.append(f"differential {k + 1} ({self.ranks[k]} x {self.ranks[k + 1]}):")
            for row in mat:
                lines.append("  [" + ", ".join(str(e) for e in row) + "]")
        return "\n".join(lines)


def _constant_value(poly: Polynomial):
    if len(poly.terms) != 1:
        return None
    (exp, c), = poly.terms.items()
    if any(exp):
        return None
    return c


def free_resolution(pres: GradedIdealPresentation, *,
                    max_basis: int | None = None) -> GradedResolution:
    """Schreyer resolution of R/I from a graded presentation of I.

    The presentation generators are completed to a Groebner basis, pruned to
    a minimal one, and sorted; each further level is the pruned set of
    Schreyer syzygies of the previous, which the induced order keeps a
    Groebner basis, so iteration stops at the variable-count bound.
    """
    variables, weights = pres.variables, pres.weights
    for g in pres.generators:
        if not g.is_weighted_homogeneous(weights):
            raise ValueError(f"non-homogeneous generator {g}")
    if not pres.generators:
        return GradedResolution([1], [[0]], [], variables, weights)
    gb = buchberger(pres.generators, pres.order, max_basis=max_basis)
    order = pres.order
    by_lead = sorted(gb.generators, key=lambda g: order.key(g.leading(order)[0]))
    kept: list[Polynomial] = []
    for g in by_lead:
        lead = g.leading(order)[0]
        if any(exp_divides(h.leading(order)[0], lead) for h in kept):
            continue
        kept.append(g)
    kept.sort(key=lambda g: (tuple(-e for e in g.leading(order)[0]), g.sort_key()))

    nvars = len(variables)
    shifts: list[list[int]] = [[0], [g.weighted_degree(weights) for g in kept]]
    diffs: list[list[list[Polynomial]]] = [[list(kept)]]
    elements = [FreeModuleElement((g,), (0,)) for g in kept]
    order_mod = _RankOneOrder(order)
    while True:
        leads, syz = _level_syzygies(elements, order_mod, tuple(shifts[-1]),
                                     rank_one=len(diffs) == 1)
        if not syz:
            break
        if len(diffs) >= nvars:
            raise AssertionError("resolution exceeded the variable-count bound")
        induced = SchreyerOrder(order_mod, leads)
        nxt = _prune_and_sort(syz, induced)
        rank = len(elements)
        diffs.append([[nxt[c].coordinates[r] for c in range(len(nxt))]
                      for r in range(rank)])
        shifts.append([s.degree(weights) for s in nxt])
        elements = nxt
        order_mod = induced
    ranks = [len(s) for s in shifts]
    return GradedResolution(ranks, shifts, diffs, variables, weights)


def minimalize(res: GradedResolution) -> GradedResolution:
    """Cancel unit entries to extract the minimal resolution.

    Each nonzero constant entry spans a trivial direct summand; clearing its
    row and column with exact row/column operations (mirrored onto the
    neighbouring differentials) and deleting both basis vectors splits the
    summand off without changing homology.  Entries are processed one at a
    time in row-major scan order for reproducibility.
    """
    diffs = [[row[:] for row in mat] for mat in res.differentials]
    shifts = [list(s) for s in res.shifts]
    zero = Polynomial.zero(res.variables)
    while True:
        found = None
        for k, mat in enumerate(diffs):
            for r, row in enumerate(mat):
                for c, entry in enumerate(row):
                    if _constant_value(entry) is not None:
                        found = (k, r, c)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        k, r0, c0 = found
        mat = diffs[k]
        u = _constant_value(mat[r0][c0])
        inv = Fraction(1) / u
        lam = {c: mat[r0][c].scale(inv) for c in range(len(mat[r0]))
               if c != c0 and mat[r0][c]}
        for c, l in lam.items():
            for r in range(len(mat)):
                if mat[r][c0]:
                    mat[r][c] = mat[r][c] - l * mat[r][c0]
        if k + 1 < len(diffs) and lam:
            nxt = diffs[k + 1]
            for c, l in lam.items():
                for cc in range(len(nxt[c])):
                    if nxt[c][cc]:
                        nxt[c0][cc] = nxt[c0][cc] + l * nxt[c][cc]
        mu = {r: mat[r][c0].scale(inv) for r in range(len(mat))
              if r != r0 and mat[r][c0]}
        for r in mu:
            mat[r][c0] = zero
        if k - 1 >= 0 and mu:
            prv = diffs[k - 1]
            for r, m in mu.items():
                for q in range(len(prv)):
                    if prv[q][r]:
                        prv[q][r0] = prv[q][r0] + m * prv[q][r]
        diffs[k] = [[row[c] for c in range(len(row)) if c != c0]
                    for r, row in enumerate(mat) if r != r0]
        if k + 1 < len(diffs):
            diffs[k + 1] = [row for r, row in enumerate(diffs[k + 1]) if r != c0]
        if k - 1 >= 0:
            diffs[k - 1] = [[row[c] for c in range(len(row)) if c != r0]
                            for row in diffs[k - 1]]
        del shifts[k + 1][c0]
        del shifts[k][r0]
    while len(shifts) > 1 and not shifts[-1]:
        shifts.pop()
        diffs.pop()
    ranks = [len(s) for s in shifts]
    return GradedResolution(ranks, shifts, diffs, res.variables, res.weights,
                            minimal=True)


def betti_numbers(curve, *, max_basis: int | None = None) -> list[int]:
    """Betti numbers beta_1, ..., beta_p of the curve's defining ideal."""
    if not isinstance(curve, MonomialCurve):
        curve = monomial_curve(tuple(curve))
    pres = defining_ideal(curve, max_basis=max_basis)
    res = free_resolution(pres, max_basis=max_basis)
    return minimalize(res).betti
