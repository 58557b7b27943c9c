"""Monomial-ideal operations cross-checked against independent oracles.

The fast combinatorial routines (colon, intersection, power membership,
integral closure) are compared with basis-driven computations and with
explicit expansions on randomized inputs.
"""

import random
from itertools import product

from rrlab.core import RingDescriptor
from rrlab.groebner import IdealHandle
from rrlab.monomial import (MonomialIdeal, PowerLadder,
                            associated_primes_monomial, colon_monomial,
                            colon_single, in_newton_polyhedron,
                            integral_closure_monomial, intersect_monomial,
                            is_borel_fixed, member_of_power,
                            socle_candidates, variable_ideal)


def _ring(n=2):
    return RingDescriptor(("X", "Y", "Z", "W")[:n])


def _random_ideal(ring, rng, ngens=4, max_deg=6):
    gens = {tuple(rng.randint(0, max_deg) for _ in range(ring.nvars))
            for _ in range(ngens)}
    gens.discard((0,) * ring.nvars)
    if not gens:
        gens = {(1,) * ring.nvars}
    return MonomialIdeal.from_gens(ring, sorted(gens))


def test_membership_and_minimal_generators():
    R = _ring()
    I = MonomialIdeal.from_gens(R, [(4, 0), (3, 1), (2, 2), (3, 1), (4, 2)])
    assert I.num_min_gens() == 3          # (4,2) and duplicate dropped
    assert I.contains((5, 3))
    assert not I.contains((1, 4))


def test_colon_matches_groebner_colon_randomized():
    rng = random.Random(17)
    for nvars in (2, 3):
        R = _ring(nvars)
        for _ in range(12):
            A = _random_ideal(R, rng)
            B = _random_ideal(R, rng, ngens=2, max_deg=3)
            fast = colon_monomial(A, B)
            slow = IdealHandle.from_monomial(A).colon(
                IdealHandle.from_monomial(B)).to_monomial_ideal()
            assert fast == slow


def test_colon_single_matches_full_colon():
    rng = random.Random(23)
    R = _ring(3)
    for _ in range(10):
        A = _random_ideal(R, rng)
        b = tuple(rng.randint(0, 3) for _ in range(3))
        B = MonomialIdeal.from_gens(R, [b])
        assert colon_single(A, b) == colon_monomial(A, B)


def test_intersection_matches_groebner_randomized():
    rng = random.Random(29)
    R = _ring(2)
    for _ in range(12):
        A = _random_ideal(R, rng)
        B = _random_ideal(R, rng)
        fast = intersect_monomial(A, B)
        slow = IdealHandle.from_monomial(A).intersect(
            IdealHandle.from_monomial(B)).to_monomial_ideal()
        assert fast == slow


def test_member_of_power_matches_explicit_expansion():
    # Oracle: I^n contains e iff some product of n generators divides e.
    rng = random.Random(31)
    R = _ring(2)
    for _ in range(8):
        I = _random_ideal(R, rng, ngens=3, max_deg=4)
        ladder = PowerLadder(I)
        for n in range(1, 5):
            explicit = I
            for _ in range(n - 1):
                explicit = explicit * I
            for e in product(range(10), repeat=2):
                assert member_of_power(e, ladder, n) == explicit.contains(e)


def test_integral_closure_known_values():
    R = _ring()
    I = MonomialIdeal.from_gens(R, [(4, 0), (0, 4)])
    C = integral_closure_monomial(I)
    assert C == MonomialIdeal.from_gens(R, [(4, 0), (3, 1), (2, 2), (1, 3),
                                            (0, 4)])


def test_integral_closure_properties_randomized():
    rng = random.Random(37)
    R = _ring(2)
    for _ in range(10):
        I = _random_ideal(R, rng)
        C = integral_closure_monomial(I)
        assert C.contains_ideal(I)
        # Idempotence: closing twice changes nothing.
        assert integral_closure_monomial(C) == C
        # Every closure generator sits in the Newton polyhedron of I.
        for g in C.gens:
            assert in_newton_polyhedron(g, I.gens)


def test_newton_polyhedron_membership():
    R = _ring()
    gens = ((4, 0), (0, 4))
    assert in_newton_polyhedron((2, 2), gens)
    assert not in_newton_polyhedron((1, 2), gens)


def test_borel_fixed_examples():
    R = _ring()
    prio = (0, 1)  # X is the larger variable
    B = MonomialIdeal.from_gens(R, [(2, 0), (1, 1), (0, 2)])
    assert is_borel_fixed(B, prio, "to-larger")
    # (X^2, Y^2) misses X*Y, so moving Y -> X escapes the ideal.
    N = MonomialIdeal.from_gens(R, [(2, 0), (0, 2)])
    assert not is_borel_fixed(N, prio, "to-larger")


def test_associated_primes_known_example():
    R = _ring(3)
    # (X*Y, Y*Z) = (Y) cap (X, Z).
    I = MonomialIdeal.from_gens(R, [(1, 1, 0), (0, 1, 1)])
    assert associated_primes_monomial(I) == (("X", "Z"), ("Y",))


def test_socle_candidates_zero_dimensional():
    R = _ring()
    I = MonomialIdeal.from_gens(R, [(3, 0), (0, 3)])
    socle = set(socle_candidates(I))
    assert socle == {(2, 2)}
    m = variable_ideal(R)
    for e in socle:
        for v in m.gens:
            assert I.contains(tuple(a + b for a, b in zip(e, v)))


def test_power_ladder_consistency():
    R = _ring()
    I = MonomialIdeal.from_gens(R, [(2, 0), (0, 3)])
    ladder = PowerLadder(I)
    assert ladder.power(2) == I * I
    assert ladder.power(3) == I.power(3)
