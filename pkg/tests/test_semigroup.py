"""Numerical and plane affine semigroups, their ideals and closures."""

from itertools import product

import pytest

from rrlab.errors import PreconditionError, ZeroIdealError
from rrlab.ratliff_rush import rr_closure, rr_power
from rrlab.semigroup import (AffineIdeal, AffineSemigroup2D,
                             NumericalSemigroup, SemigroupIdeal)


def test_numerical_semigroup_basics():
    S = NumericalSemigroup([4, 5, 11])
    assert S.contains(0) and S.contains(9) and S.contains(4 + 11)
    assert not S.contains(7)
    members = set(S.members_upto(30))
    # Brute force: all non-negative combinations of 4, 5, 11 up to 30.
    brute = {4 * a + 5 * b + 11 * c
             for a in range(9) for b in range(7) for c in range(3)}
    assert members == {m for m in brute if m <= 30}


def test_redundant_generators_harmless():
    # 9 = 4 + 5 is redundant; same members either way.
    A = NumericalSemigroup([4, 5, 9, 11])
    B = NumericalSemigroup([4, 5, 11])
    assert A.members_upto(40) == B.members_upto(40)
    with pytest.raises(Exception):
        NumericalSemigroup([4, 6])  # gcd != 1


def test_semigroup_ideal_membership_stable_under_bound_doubling():
    S = NumericalSemigroup([4, 5, 11])
    I = SemigroupIdeal.from_gens(S, [4, 5, 11])
    small = set(I.elements_upto(40))
    large = set(I.elements_upto(80))
    assert small == {z for z in large if z <= 40}


def test_semigroup_ideal_operations():
    S = NumericalSemigroup([4, 5, 11])
    I = SemigroupIdeal.from_gens(S, [4, 5, 11])
    I2 = I.power(2)
    assert set(I2.elements_upto(40)) == {
        z for z in range(41)
        if any(g <= z and I.contains(z - g) for g in I.elements_upto(40))}
    # Colon defining property: z in (A : B) iff z + B subset A.
    C = I2.colon(I)
    for z in C.elements_upto(30):
        for b in I.elements_upto(30 - z if 30 - z > 0 else 0):
            assert I2.contains(z + b)
    # Intersection is elementwise.
    J = SemigroupIdeal.from_gens(S, [5])
    M = I2.intersect(J)
    for z in range(40):
        assert M.contains(z) == (I2.contains(z) and J.contains(z))


def test_semigroup_closure_is_exact():
    S = NumericalSemigroup([4, 5, 11])
    I = SemigroupIdeal.from_gens(S, [4, 5, 11])
    res = rr_closure(I)
    assert res.certified
    assert res.value.gens == I.gens  # the maximal ideal is chain-fixed
    sq = rr_power(I, 2)
    assert sq.certified
    assert set(sq.value.gens) == {8, 9, 10, 11}


def test_zero_ideal_rejected():
    S = NumericalSemigroup([4, 5, 11])
    with pytest.raises(ZeroIdealError):
        SemigroupIdeal.from_gens(S, [])
    with pytest.raises(Exception):
        SemigroupIdeal.from_gens(S, [7])  # 7 is not in the semigroup


def test_affine_membership_matches_brute_force():
    S = AffineSemigroup2D([(1, 0), (0, 2), (0, 7), (2, 5), (3, 1)])
    # Brute force: dynamic programming over the box [0, 20]^2.
    reach = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        p = frontier.pop()
        for g in S.gens:
            q = (p[0] + g[0], p[1] + g[1])
            if q[0] <= 20 and q[1] <= 20 and q not in reach:
                reach.add(q)
                frontier.append(q)
    for p in product(range(21), repeat=2):
        assert S.contains(p) == (p in reach)


def test_affine_ideal_operations():
    S = AffineSemigroup2D([(1, 0), (0, 2), (0, 7), (2, 5), (3, 1)])
    I = AffineIdeal.from_gens(S, [(1, 0), (0, 2)])
    I2 = I.power(2)
    for g in I.gens:
        for h in I.gens:
            assert I2.contains((g[0] + h[0], g[1] + h[1]))
    C = I2.colon(I)
    assert C.contains((2, 5))  # X^2*Y^5 multiplies I into I^2
    assert not I.contains((2, 5))


def test_affine_closure_gains_witness():
    S = AffineSemigroup2D([(1, 0), (0, 2), (0, 7), (2, 5), (3, 1)])
    I = AffineIdeal.from_gens(S, [(1, 0), (0, 2)])
    res = rr_closure(I)
    assert res.certified
    assert res.value.contains((2, 5))
    assert not I.contains((2, 5))
