"""Bresinsky's four-variable curves and concatenations of arithmetic sequences."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, buchberger, is_groebner_basis
from .orders import MonomialOrder
from .poly import Polynomial
from .resolution import betti_numbers, free_resolution, minimalize
from .semigroup import NumericalSemigroup
from .toric import eta_check, minimal_generators, parametrization_kernel

_BRESINSKY_VARS = ("x1", "x2", "x3", "x4")


@dataclass(frozen=True)
class BresinskyInstance:
    """Sequence (q1*q2, q1*d1, q1*q2 + d1, q2*d1) with q1 = q2+1, d1 = q2-1.

    Variable x_i carries weight n[i-1]; this assignment is the one under
    which every listed generator is weighted-homogeneous.
    """
    q2: int
    q1: int
    d1: int
    n: tuple[int, int, int, int]
    variables: tuple[str, str, str, str] = _BRESINSKY_VARS

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return self.n


def bresinsky_sequence(q2: int) -> BresinskyInstance:
    if not isinstance(q2, int) or q2 < 4 or q2 % 2:
        raise ValueError("q2 must be an even integer >= 4")
    q1, d1 = q2 + 1, q2 - 1
    n = (q1 * q2, q1 * d1, q1 * q2 + d1, q2 * d1)
    g = 0
    for x in n:
        g = gcd(g, x)
    assert g == 1
    return BresinskyInstance(q2, q1, d1, n)


def bresinsky_generators(inst: BresinskyInstance) -> list[Polynomial]:
    """The 2*q2 binomials: the f_mu family, the h_m family, g1 and g2."""
    q1, q2, d1 = inst.q1, inst.q2, inst.d1
    vars4 = inst.variables

    def binom(plus, minus):
        return Polynomial(vars4, {tuple(plus): 1, tuple(minus): -1})

    gens = []
    for mu in range(1, q2 + 1):
        gens.append(binom((mu - 1, 0, q2 - mu, 0), (0, q2 - mu, 0, mu + 1)))
    for m in range(1, q2 - 1):
        gens.append(binom((m, 0, 0, q1 - m), (0, q2 - m, m, 0)))
    gens.append(binom((d1, 0, 0, 0), (0, q2, 0, 0)))
    gens.append(binom((0, 0, 1, 1), (1, 1, 0, 0)))
    return gens


def bresinsky_order() -> MonomialOrder:
    """Lex order induced by x3 > x2 > x1 > x4."""
    return MonomialOrder.lex(4, perm=(2, 1, 0, 3))


@dataclass(frozen=True)
class BresinskyReport:
    generates: bool
    is_gb: bool
    betti_match: bool
    betti: tuple[int, ...]
    expected_betti: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.generates and self.is_gb and self.betti_match


def verify_bresinsky(inst: BresinskyInstance, *,
                     max_basis: int | None = None) -> BresinskyReport:
    """Check the three claims about the generating set S of the instance:

    it equals the defining ideal (mutual reduction to zero), it is a
    Groebner basis under lex x3 > x2 > x1 > x4, and the minimalized
    resolution has Betti numbers (2*q2, 4*(q2-1), 2*q2-3).
    """
    gens = bresinsky_generators(inst)
    order = bresinsky_order()
    ok_gb, _ = is_groebner_basis(gens, order)

    kernel = parametrization_kernel(inst.n, inst.variables, max_basis=max_basis)
    kernel_gb = kernel.groebner_basis()
    s_gb = GroebnerBasis(gens, order) if ok_gb else buchberger(gens, order,
                                                               max_basis=max_basis)
    generates = (all(not kernel_gb.normal_form(g) for g in gens)
                 and all(not s_gb.normal_form(g) for g in kernel.generators))

    betti = tuple(betti_numbers(sorted(inst.n), max_basis=max_basis))
    expected = (2 * inst.q2, 4 * (inst.q2 - 1), 2 * inst.q2 - 3)
    return BresinskyReport(generates, ok_gb, betti == expected, betti, expected)


@dataclass(frozen=True)
class ConcatenationInstance:
    """Generators a, a+d, ..., a+(p-2)d followed by b, b+d with d not
    dividing b - a."""
    a: int
    d: int
    b: int
    p: int
    generators: tuple[int, ...]


def concatenation_semigroup(a: int, d: int, b: int, p: int):
    """Validated instance plus its numerical semigroup.

    Raises ValueError when the arithmetic conditions fail or when the
    concatenated set is not a minimal generating system.
    """
    for name, v in (("a", a), ("d", d), ("b", b), ("p", p)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer")
    if p < 3:
        raise ValueError("p must be at least 3")
    if gcd(a, d) != 1:
        raise ValueError("a and d must be coprime")
    if b <= a + (p - 2) * d:
        raise ValueError("b must exceed a + (p-2)*d")
    if (b - a) % d == 0:
        raise ValueError("d must not divide b - a")
    gens = tuple(a + i * d for i in range(p - 1)) + (b, b + d)
    semigroup = NumericalSemigroup(gens)
    if semigroup.minimal_generators != gens:
        raise ValueError(f"{gens} is not a minimal generating system")
    return ConcatenationInstance(a, d, b, p, gens), semigroup


def _curve_row(sorted_gens: Sequence[int], *, max_basis: int | None = None) -> dict:
    semigroup = NumericalSemigroup(sorted_gens)
    pres = parametrization_kernel(semigroup.minimal_generators, max_basis=max_basis)
    mini = minimal_generators(pres)
    res = minimalize(free_resolution(pres, max_basis=max_basis))
    return {
        "beta": res.betti,
        "beta1": mini.beta1,
        "frobenius": semigroup.frobenius,
        "symmetric": semigroup.is_symmetric(),
        "eta_ok": eta_check(pres),
    }


def family_sweep(family: str, params: Iterable, *,
                 max_basis: int | None = None) -> list[dict]:
    """Batch the full pipeline over a parameter range; errors are recorded
    per row and never abort the sweep."""
    rows = []
    if family == "bresinsky":
        for q2 in params:
            row: dict = {"family": family, "params": {"q2": q2}}
            try:
                inst = bresinsky_sequence(q2)
                row["n"] = list(inst.n)
                row.update(_curve_row(sorted(inst.n), max_basis=max_basis))
                row["error"] = None
            except Exception as exc:
                row["error"] = str(exc)
            rows.append(row)
    elif family == "concatenation":
        for a, d, b, p in params:
            row = {"family": family, "params": {"a": a, "d": d, "b": b, "p": p}}
            try:
                inst, _ = concatenation_semigroup(a, d, b, p)
                row["n"] = list(inst.generators)
                row.update(_curve_row(inst.generators, max_basis=max_basis))
                row["error"] = None
            except Exception as exc:
                row["error"] = str(exc)
            rows.append(row)
    else:
        raise ValueError(f"unknown family {family!r}")
    return rows


def sweep_to_jsonl(rows: list[dict]) -> str:
    return "\n".join(json.dumps(row, sort_keys=True) for row in rows)


def sweep_to_text(rows: list[dict]) -> str:
    lines = []
    for row in rows:
        params = " ".join(f"{k}={v}" for k, v in sorted(row["params"].items()))
        if row.get("error"):
            lines.append(f"{params}: error: {row['error']}")
        else:
            lines.append(f"{params}: n={row['n']} beta={row['beta']} "
                         f"F={row['frobenius']} symmetric={row['symmetric']}")
    return "\n".join(lines)
