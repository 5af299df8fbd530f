import random
from itertools import combinations

import pytest

from monocurves import (GradedIdealPresentation, Polynomial, defining_ideal,
                        eta_check, minimal_generators, monomial_curve,
                        parametrization_kernel, parse_polynomial)
from monocurves.poly import weighted_degree

CURVES = [(2, 3), (3, 5, 7), (3, 4, 5), (4, 6, 7), (6, 10, 15), (5, 7, 9, 13)]


def is_pure_difference_binomial(f):
    return sorted(f.terms.values()) == [-1, 1]


def test_curve_validation():
    curve = monomial_curve((3, 5, 7))
    assert curve.weights == (3, 5, 7)
    assert curve.variables == ("x0", "x1", "x2")
    with pytest.raises(ValueError):
        monomial_curve((2, 3, 4))  # 4 is redundant
    with pytest.raises(ValueError):
        monomial_curve((5, 3, 7))  # unsorted
    with pytest.raises(ValueError):
        monomial_curve((4, 6))  # gcd 2


def test_kernel_two_three():
    pres = parametrization_kernel((2, 3))
    assert [str(g) for g in pres.generators] == ["x0^3 - x1^2"]
    assert minimal_generators(pres).beta1 == 1


def test_kernel_trivial_curve():
    pres = parametrization_kernel((1,))
    assert pres.generators == ()
    mini = minimal_generators(pres)
    assert mini.beta1 == 0


def test_kernel_357():
    curve = monomial_curve((3, 5, 7))
    pres = defining_ideal(curve)
    mini = minimal_generators(pres)
    assert mini.beta1 == 3
    gb = pres.groebner_basis()
    f = parse_polynomial("x1^2 - x0*x2", pres.variables)
    assert not gb.normal_form(f)


def test_generators_are_homogeneous_binomials():
    for gens in CURVES:
        pres = parametrization_kernel(gens)
        for g in pres.generators:
            assert is_pure_difference_binomial(g), (gens, g)
            assert g.is_weighted_homogeneous(gens), (gens, g)
            # a prime toric ideal contains no monomial
            assert len(g.terms) == 2


def test_eta_check():
    for gens in CURVES:
        pres = parametrization_kernel(gens)
        assert eta_check(pres)
    bad = GradedIdealPresentation(
        variables=("x0", "x1"), weights=(2, 3),
        order=parametrization_kernel((2, 3)).order,
        generators=(parse_polynomial("x0 - x1", ("x0", "x1")),))
    assert not eta_check(bad)


def test_eta_check_bresinsky_ambient():
    # unsorted exponent assignment: variables keep their own weights
    pres = parametrization_kernel((20, 15, 23, 12), ("x1", "x2", "x3", "x4"))
    assert eta_check(pres)
    for g in pres.generators:
        assert g.is_weighted_homogeneous((20, 15, 23, 12))


def test_minimal_generators_order_independent():
    rng = random.Random(13)
    for gens in [(3, 5, 7), (4, 6, 7), (5, 7, 9, 13)]:
        pres = parametrization_kernel(gens)
        base = minimal_generators(pres).beta1
        for _ in range(3):
            shuffled = list(pres.generators)
            rng.shuffle(shuffled)
            alt = GradedIdealPresentation(pres.variables, pres.weights,
                                          pres.order, tuple(shuffled))
            assert minimal_generators(alt).beta1 == base


def test_minimal_generators_rejects_inhomogeneous():
    pres = parametrization_kernel((2, 3))
    bad = GradedIdealPresentation(
        pres.variables, pres.weights, pres.order,
        (parse_polynomial("x0 + x1^2", pres.variables),))
    with pytest.raises(ValueError):
        minimal_generators(bad)


def test_binomial_membership_matches_weighted_degree():
    # scaled-down version of the acceptance sweep
    gens = (3, 5, 7)
    pres = parametrization_kernel(gens)
    gb = pres.groebner_basis()
    vecs = [(a, b, c) for a in range(4) for b in range(4) for c in range(4)]
    for u, v in combinations(vecs, 2):
        f = Polynomial(pres.variables, {u: 1, v: -1})
        if not f:
            continue
        member = not gb.normal_form(f)
        assert member == (weighted_degree(u, gens) == weighted_degree(v, gens))


def test_kernel_validation():
    with pytest.raises(ValueError):
        parametrization_kernel((4, 6))
    with pytest.raises(ValueError):
        parametrization_kernel(())
    with pytest.raises(ValueError):
        parametrization_kernel((2, 3), ("x0",))
