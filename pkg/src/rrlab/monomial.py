"""Exact calculus for monomial ideals.

A monomial ideal is stored by its (unique) minimal generator set of
exponent vectors, so structural equality is ideal equality.  All ops are
pure; PowerLadder memoizes minimal generators of powers behind a lock.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .core import (Exponents, Monomial, RingDescriptor, exps_divides,
                   exps_lcm, exps_mul, exps_quotient)
from .errors import PreconditionError, RingMismatchError, ZeroIdealError


def minimalize(exps: Iterable[Exponents]) -> Tuple[Exponents, ...]:
    """Divisibility-pruned canonical generator tuple."""
    by_degree = sorted(set(exps), key=lambda e: (sum(e), e))
    kept: List[Exponents] = []
    for e in by_degree:
        if not any(exps_divides(k, e) for k in kept):
            kept.append(e)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingDescriptor
    gens: Tuple[Exponents, ...]

    @staticmethod
    def from_gens(ring: RingDescriptor, gens: Iterable[Exponents]) -> "MonomialIdeal":
        gens = tuple(gens)
        if not gens:
            raise ZeroIdealError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != ring.nvars:
                raise PreconditionError("exponent vector length != number of variables")
        return MonomialIdeal(ring, minimalize(gens))

    @staticmethod
    def parse_gens(ring: RingDescriptor, *texts: str) -> "MonomialIdeal":
        from .parser import parse_polynomial
        gens = []
        for t in texts:
            p = parse_polynomial(ring, t)
            [(e, _)] = p.terms.items()
            gens.append(e)
        return MonomialIdeal.from_gens(ring, gens)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.ring.variables != other.ring.variables:
            raise RingMismatchError("monomial ideals live in different rings")

    # -- membership -------------------------------------------------------

    def contains(self, e: Exponents) -> bool:
        return any(exps_divides(g, e) for g in self.gens)

    def contains_monomial(self, m: Monomial) -> bool:
        return self.contains(m.exps)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    # -- semiring ops ------------------------------------------------------

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ring, minimalize(self.gens + other.gens))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        prods = [exps_mul(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal(self.ring, minimalize(prods))

    def power(self, n: int) -> "MonomialIdeal":
        return PowerLadder(self).power(n)

    def num_min_gens(self) -> int:
        return len(self.gens)

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.ring.nvars,)

    def is_zero_dimensional(self) -> bool:
        """A pure power of every variable is among the generators."""
        pure = set()
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e > 0]
            if len(support) == 1:
                pure.add(support[0])
            elif len(support) == 0:
                return True  # unit ideal
        return len(pure) == self.ring.nvars

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(Monomial(self.ring, g) for g in self.gens)

    def __str__(self):
        return "(" + ", ".join(self.ring.format_exponents(g) for g in self.gens) + ")"


def unit_ideal(ring: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.nvars,))


def minimal_generators(ring: RingDescriptor, gens: Iterable[Exponents]) -> MonomialIdeal:
    return MonomialIdeal.from_gens(ring, gens)


# ---------------------------------------------------------------------------
# colon / intersection


def colon_single(A: MonomialIdeal, b: Exponents) -> MonomialIdeal:
    return MonomialIdeal(A.ring, minimalize(exps_quotient(g, b) for g in A.gens))


def intersect_monomial(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    A._check(B)
    return MonomialIdeal(A.ring, minimalize(exps_lcm(a, b) for a in A.gens for b in B.gens))


def colon_monomial(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """(A : B) = intersection over B's generators of (A : b)."""
    A._check(B)
    result = None
    for b in B.gens:
        part = colon_single(A, b)
        result = part if result is None else intersect_monomial(result, part)
    if result is None:
        raise ZeroIdealError("colon by the zero ideal")
    return result


def sum_monomial(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return A + B


def product_monomial(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return A * B


def num_min_gens(A: MonomialIdeal) -> int:
    return A.num_min_gens()


# ---------------------------------------------------------------------------
# powers


class PowerLadder:
    """Memoized minimal generator sets for I^1, I^2, ..."""

    _cache: dict = {}
    _cache_lock = threading.Lock()

    def __new__(cls, base: MonomialIdeal):
        key = (base.ring.variables, base.gens)
        with cls._cache_lock:
            inst = cls._cache.get(key)
            if inst is None:
                inst = super().__new__(cls)
                inst.base = base
                inst._powers = [base.gens]
                inst._lock = threading.Lock()
                cls._cache[key] = inst
            return inst

    def power(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise PreconditionError("negative power")
        if n == 0:
            return unit_ideal(self.base.ring)
        with self._lock:
            while len(self._powers) < n:
                prev = self._powers[-1]
                nxt = minimalize(exps_mul(a, b) for a in prev for b in self.base.gens)
                self._powers.append(nxt)
            return MonomialIdeal(self.base.ring, self._powers[n - 1])


def ideal_power_monomial(I: MonomialIdeal, n: int) -> MonomialIdeal:
    return PowerLadder(I).power(n)


def member_of_power(m: Exponents, ladder: PowerLadder, n: int) -> bool:
    """m in I^n, decided by multiplicity search over the generators.

    Looks for non-negative generator multiplicities summing to n whose
    exponent sum divides m, with componentwise-residual pruning.
    """
    if n < 1:
        raise PreconditionError("power must be >= 1")
    gens = ladder.base.gens
    memo: dict = {}

    def search(residual: Exponents, i: int, left: int) -> bool:
        if left == 0:
            return True
        if i == len(gens):
            return False
        key = (residual, i, left)
        hit = memo.get(key)
        if hit is not None:
            return hit
        g = gens[i]
        # max copies of g that still fit in the residual
        fit = min((r // e for r, e in zip(residual, g) if e), default=left)
        ok = False
        for t in range(min(fit, left), -1, -1):
            rem = tuple(r - t * e for r, e in zip(residual, g))
            if search(rem, i + 1, left - t):
                ok = True
                break
        memo[key] = ok
        return ok

    return search(m, 0, n)


# ---------------------------------------------------------------------------
# socle candidates / Borel / associated primes


def variable_ideal(ring: RingDescriptor) -> MonomialIdeal:
    gens = []
    for i in range(ring.nvars):
        e = [0] * ring.nvars
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, tuple(sorted(gens)))


def socle_candidates(I: MonomialIdeal) -> Tuple[Exponents, ...]:
    """Minimal monomials of (I : (X_1,...,X_d)) \\ I.

    These are the only candidate monomial members of the Ratliff-Rush
    closure outside I when I is zero-dimensional.
    """
    if not I.is_zero_dimensional():
        raise PreconditionError("socle candidates need a zero-dimensional ideal")
    C = colon_monomial(I, variable_ideal(I.ring))
    return tuple(g for g in C.gens if not I.contains(g))


def is_borel_fixed(I: MonomialIdeal, priority: Sequence[int], direction: str) -> bool:
    """Closure under single-variable exchanges.

    priority lists variable indices largest first; direction 'to-larger'
    moves one unit of exponent from a variable to each larger variable,
    'to-smaller' to each smaller one.
    """
    if direction not in ("to-larger", "to-smaller"):
        raise PreconditionError("direction must be 'to-larger' or 'to-smaller'")
    prio = list(priority)
    rank = {v: i for i, v in enumerate(prio)}  # smaller rank = larger variable
    for g in I.gens:
        for v, e in enumerate(g):
            if e == 0:
                continue
            for w in range(len(g)):
                if w == v:
                    continue
                larger = rank[w] < rank[v]
                if (direction == "to-larger") != larger:
                    continue
                moved = list(g)
                moved[v] -= 1
                moved[w] += 1
                if not I.contains(tuple(moved)):
                    return False
    return True


def associated_primes_monomial(I: MonomialIdeal) -> Tuple[Tuple[str, ...], ...]:
    """All primes (subsets of variables) of the form (I : m), m | lcm(gens)."""
    if I.is_unit():
        raise ZeroIdealError("the unit ideal has no associated primes")
    lcm = tuple(max(g[i] for g in I.gens) for i in range(I.ring.nvars))
    primes: Set[Tuple[int, ...]] = set()
    for divisor in itertools.product(*(range(e + 1) for e in lcm)):
        if I.contains(divisor):
            continue
        C = colon_monomial(I, MonomialIdeal(I.ring, (divisor,)))
        support = []
        ok = True
        for g in C.gens:
            nz = [i for i, e in enumerate(g) if e > 0]
            if len(nz) != 1 or g[nz[0]] != 1:
                ok = False
                break
            support.append(nz[0])
        if ok and support:
            primes.add(tuple(sorted(support)))
    return tuple(sorted(tuple(I.ring.variables[i] for i in p) for p in primes))


# ---------------------------------------------------------------------------
# integral closure via the Newton polyhedron


def _lp_feasible(rows: List[List[Fraction]], rhs: List[Fraction]) -> bool:
    """Exact phase-1 simplex feasibility for rows * x = rhs, x >= 0."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    # make rhs non-negative
    T = []
    b = []
    for row, r in zip(rows, rhs):
        if r < 0:
            T.append([-v for v in row])
            b.append(-r)
        else:
            T.append(list(row))
            b.append(r)
    # tableau with artificial variables; minimize their sum
    total = n + m
    basis = list(range(n, total))
    tab = [T[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [b[i]]
           for i in range(m)]
    # phase-1 reduced costs: sum of rows over the original columns,
    # zero over the (basic) artificial columns
    cost = [sum((tab[i][j] for i in range(m)), Fraction(0)) if j < n else Fraction(0)
            for j in range(total)]
    cost.append(sum(b, Fraction(0)))
    while True:
        # Bland's rule: first column with positive reduced cost
        pivot_col = next((j for j in range(total) if cost[j] > 0), None)
        if pivot_col is None:
            break
        ratios = [(tab[i][total] / tab[i][pivot_col], basis[i], i)
                  for i in range(m) if tab[i][pivot_col] > 0]
        if not ratios:
            break  # unbounded (cannot happen in phase 1)
        _, _, pivot_row = min(ratios)
        pv = tab[pivot_row][pivot_col]
        tab[pivot_row] = [v / pv for v in tab[pivot_row]]
        for i in range(m):
            if i != pivot_row and tab[i][pivot_col]:
                f = tab[i][pivot_col]
                tab[i] = [a - f * b_ for a, b_ in zip(tab[i], tab[pivot_row])]
        if cost[pivot_col]:
            f = cost[pivot_col]
            cost = [a - f * b_ for a, b_ in zip(cost, tab[pivot_row] + [])]
        basis[pivot_row] = pivot_col
    return cost[total] == 0


def in_newton_polyhedron(e: Exponents, gens: Sequence[Exponents]) -> bool:
    """e in conv(gens) + R_{>=0}^d, by exact rational feasibility.

    Feasibility of: lambda >= 0, slack >= 0, sum lambda = 1,
    sum lambda * g + slack = e.
    """
    d = len(e)
    n = len(gens)
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    rows.append([Fraction(1)] * n + [Fraction(0)] * d)
    rhs.append(Fraction(1))
    for i in range(d):
        row = [Fraction(g[i]) for g in gens] + \
              [Fraction(1 if j == i else 0) for j in range(d)]
        rows.append(row)
        rhs.append(Fraction(e[i]))
    return _lp_feasible(rows, rhs)


def integral_closure_monomial(I: MonomialIdeal) -> MonomialIdeal:
    box = [max(g[i] for g in I.gens) for i in range(I.ring.nvars)]
    found = list(I.gens)
    for e in itertools.product(*(range(b + 1) for b in box)):
        if I.contains(e):
            continue
        if in_newton_polyhedron(e, I.gens):
            found.append(e)
    return MonomialIdeal(I.ring, minimalize(found))


def integral_power_witness(e: Exponents, I: MonomialIdeal, k_max: Optional[int] = None) -> Optional[int]:
    """Smallest k <= k_max with m^k in I^k (power-test oracle), else None."""
    if k_max is None:
        k_max = len(I.gens) + I.ring.nvars
    ladder = PowerLadder(I)
    for k in range(1, k_max + 1):
        if member_of_power(tuple(k * x for x in e), ladder, k):
            return k
    return None
