"""Minimal generator count of the derivation module from gap combinatorics."""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import NumericalSemigroup


def delta_prime(semigroup: NumericalSemigroup) -> frozenset[int]:
    """Gaps a with a + s in the semigroup for every nonzero element s.

    Checking a + n_i over the minimal generators n_i suffices: any nonzero
    element s is n_i + s' with s' in the semigroup, so a + s = (a + n_i) + s'
    stays inside once all a + n_i do.
    """
    gens = semigroup.minimal_generators
    return frozenset(a for a in semigroup.gaps()
                     if all(semigroup.contains(a + n) for n in gens))


@dataclass(frozen=True)
class KraftData:
    """Derivation-module data: mu equals card(delta_prime) + 1, realized by
    the derivations t^(a+1) d/dt for a in delta_prime and the Euler one."""
    semigroup: NumericalSemigroup
    delta_prime: frozenset[int]
    mu: int
    generator_exponents: frozenset[int]


def derivation_rank(semigroup: NumericalSemigroup) -> KraftData:
    dp = delta_prime(semigroup)
    return KraftData(
        semigroup=semigroup,
        delta_prime=dp,
        mu=len(dp) + 1,
        generator_exponents=frozenset(a + 1 for a in dp | {0}),
    )
