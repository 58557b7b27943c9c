"""Exact ideal calculus in numerical and 2-D affine semigroup rings.

Ideals here are exponent sets: an ideal of F[[t^S]] generated by monomials
is the set E = gens + S, and every operation (sum, product, colon,
intersection, closure chain) is integer arithmetic on such sets.  Minimal
generator sets are unique, so structural equality is ideal equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import (PreconditionError, ResourceLimitError, ZeroIdealError)
from .ratliff_rush import (ClosureConfig, ClosureResult, DEFAULT_CONFIG,
                           StabilizedWindow)

Pair = Tuple[int, int]


# ---------------------------------------------------------------------------
# numerical semigroups


class NumericalSemigroup:
    """Additive submonoid of N with finite complement."""

    def __init__(self, gens: Sequence[int]):
        gens = tuple(sorted(set(gens)))
        if not gens or any(g <= 0 for g in gens):
            raise PreconditionError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise PreconditionError("generators must be coprime overall")
        self.gens = gens
        self._members = self._sieve()
        self.conductor = self._find_conductor()
        self.gaps = tuple(z for z in range(self.conductor) if z not in self._members)
        self.frobenius = self.conductor - 1 if self.conductor > 0 else -1

    def _sieve(self) -> Set[int]:
        """Sieve members until a full run of min(gens) consecutive ones appears."""
        a = self.gens[0]
        bound = a * max(self.gens) + max(self.gens) + 1  # generous; run found earlier
        members = {0}
        for z in range(1, bound):
            if any(z - g >= 0 and (z - g) in members for g in self.gens):
                members.add(z)
        return members

    def _find_conductor(self) -> int:
        """First point of a run of min(gens) consecutive members: everything
        from there on is a member (add the smallest generator repeatedly)."""
        a = self.gens[0]
        run = 0
        start = 0
        for z in range(max(self._members) + 2):
            if z in self._members:
                if run == 0:
                    start = z
                run += 1
                if run >= a:
                    return start
            else:
                run = 0
        raise ResourceLimitError("sieve bound too small to locate the conductor")

    def contains(self, z: int) -> bool:
        if z < 0:
            raise PreconditionError("membership query must be non-negative")
        return z >= self.conductor or z in self._members

    def members_upto(self, bound: int) -> Tuple[int, ...]:
        return tuple(z for z in range(bound + 1) if self.contains(z))

    def __repr__(self):
        return f"<{','.join(map(str, self.gens))}>"


def ns_membership(S: NumericalSemigroup, z: int) -> bool:
    return S.contains(z)


def ns_conductor(S: NumericalSemigroup) -> int:
    return S.conductor


def _ns_minimalize(S: NumericalSemigroup, cands: Iterable[int]) -> Tuple[int, ...]:
    """Minimal generators: drop g when g - g' lies in S for another candidate."""
    cands = sorted(set(cands))
    kept: List[int] = []
    for g in cands:
        if not any(S.contains(g - k) for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class SemigroupIdeal:
    """Ideal of a numerical semigroup ring, by its unique minimal generators."""

    S: NumericalSemigroup
    gens: Tuple[int, ...]

    @staticmethod
    def from_gens(S: NumericalSemigroup, gens: Iterable[int]) -> "SemigroupIdeal":
        gens = tuple(gens)
        if not gens:
            raise ZeroIdealError("a semigroup ideal needs at least one generator")
        for g in gens:
            if g < 0 or not S.contains(g):
                raise PreconditionError(f"generator {g} is not in the semigroup")
        return SemigroupIdeal(S, _ns_minimalize(S, gens))

    def _check(self, other: "SemigroupIdeal") -> None:
        if self.S.gens != other.S.gens:
            raise PreconditionError("ideals belong to different semigroups")

    def contains(self, z: int) -> bool:
        return any(z - g >= 0 and self.S.contains(z - g) for g in self.gens)

    def contains_ideal(self, other: "SemigroupIdeal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def min_element(self) -> int:
        return min(self.gens)

    def elements_upto(self, bound: int) -> Tuple[int, ...]:
        return tuple(z for z in range(bound + 1) if self.contains(z))

    def __add__(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        self._check(other)
        return SemigroupIdeal(self.S, _ns_minimalize(self.S, self.gens + other.gens))

    def __mul__(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        self._check(other)
        sums = [a + b for a in self.gens for b in other.gens]
        return SemigroupIdeal(self.S, _ns_minimalize(self.S, sums))

    def power(self, n: int) -> "SemigroupIdeal":
        if n < 0:
            raise PreconditionError("negative power")
        if n == 0:
            return SemigroupIdeal(self.S, (0,))
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def shift(self, z: int) -> "SemigroupIdeal":
        return SemigroupIdeal(self.S, tuple(g + z for g in self.gens))

    def colon(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        """{z in S : z + gens(other) inside self}, exact by the conductor bound."""
        self._check(other)
        # everything >= min(self) + conductor works, so candidates are bounded
        ub = self.min_element() + self.S.conductor + 1
        found = [z for z in range(ub)
                 if self.S.contains(z) and all(self.contains(z + g) for g in other.gens)]
        if not found:
            raise ResourceLimitError("colon candidate window exhausted")
        return SemigroupIdeal(self.S, _ns_minimalize(self.S, found))

    def intersect(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        self._check(other)
        ub = max(self.min_element(), other.min_element()) + self.S.conductor + 1
        found = [z for z in range(ub + self.S.conductor + 1)
                 if self.contains(z) and other.contains(z)]
        if not found:
            raise ResourceLimitError("intersection candidate window exhausted")
        return SemigroupIdeal(self.S, _ns_minimalize(self.S, found))

    def __str__(self):
        return "(" + ", ".join(f"t^{g}" for g in self.gens) + ")"

    # exact closure ---------------------------------------------------------

    def principal_reduction_index(self, cap: int = 64) -> int:
        """Smallest r with E^{r+1} = min-element + E^r (exists; t^min reduces E)."""
        x = self.min_element()
        prev = self.power(0)
        for r in range(cap):
            cur = prev * self
            if cur == prev.shift(x):
                return r
            prev = cur
        raise ResourceLimitError("principal reduction index not found within cap")

    def rr_power_result(self, n: int, cfg: ClosureConfig = DEFAULT_CONFIG) -> ClosureResult:
        """Exact closure of E^n: the chain E^{n+k} : E^k stabilizes at the
        principal-reduction index, so the certificate is unconditional here."""
        if n < 1:
            raise PreconditionError("power must be >= 1")
        r = self.principal_reduction_index()
        k_star = max(r, 1)
        acc = self.power(n)
        growth = []
        for k in range(1, k_star + 1):
            cand = self.power(n + k).colon(self.power(k))
            if not acc.contains_ideal(cand):
                acc = acc + cand
                growth.append(k)
        return ClosureResult(acc, StabilizedWindow(k_star, cfg.window), tuple(growth))

    # hooks for the generic probe engine ------------------------------------

    def normalize_element(self, m) -> int:
        if isinstance(m, int):
            return m
        raise PreconditionError("semigroup elements are integers (t-exponents)")

    @staticmethod
    def algebra_factory(I: "SemigroupIdeal") -> "_NSAlg":
        return _NSAlg()


class _NSAlg:
    """Adapter exposing SemigroupIdeal to the generic chain/probe engine."""

    def power(self, I, n):
        return I.power(n)

    def colon(self, A, B):
        return A.colon(B)

    def colon_elem(self, A, z: int):
        return A.colon(SemigroupIdeal.from_gens(A.S, [z]))

    def equals(self, A, B):
        return A.gens == B.gens

    def contains_ideal(self, A, B):
        return A.contains_ideal(B)

    def add(self, A, B):
        return A + B

    def intersect(self, A, B):
        return A.intersect(B)

    def contains(self, I, z):
        return I.contains(z)

    def gens(self, I):
        return I.gens

    def mul_elem(self, a, b):
        return a + b

    def elem_power(self, a, k):
        return k * a

    def gen_power_ideal(self, J, k):
        return SemigroupIdeal.from_gens(J.S, [k * g for g in J.gens])

    def witness_outside(self, A, B):
        for g in A.gens:
            if not B.contains(g):
                return g
        return None

    def cheap_upper_bound_skip(self, power_ideal, elem_k, acc):
        return False


def ns_rr_closure(E: SemigroupIdeal, n: int = 1,
                  cfg: ClosureConfig = DEFAULT_CONFIG) -> ClosureResult:
    return E.rr_power_result(n, cfg)


def ns_ideal_ops(E: SemigroupIdeal, F: SemigroupIdeal, op: str):
    if op == "sum":
        return E + F
    if op == "product":
        return E * F
    if op == "colon":
        return E.colon(F)
    if op == "intersection":
        return E.intersect(F)
    raise PreconditionError(f"unknown semigroup ideal op {op!r}")


# ---------------------------------------------------------------------------
# 2-D affine semigroups


class AffineSemigroup2D:
    """Submonoid of N^2 generated by finitely many nonzero pairs."""

    def __init__(self, gens: Sequence[Pair]):
        gens = tuple(sorted(set(map(tuple, gens))))
        if not gens or any(len(g) != 2 or g < (0, 0) or g == (0, 0) for g in gens):
            raise PreconditionError("generators must be nonzero pairs of naturals")
        if any(a < 0 or b < 0 for a, b in gens):
            raise PreconditionError("generators must be non-negative")
        self.gens = gens
        self._memo = {(0, 0): True}

    def contains(self, p: Pair) -> bool:
        p = tuple(p)
        if p[0] < 0 or p[1] < 0:
            raise PreconditionError("membership query must be componentwise >= 0")
        hit = self._memo.get(p)
        if hit is not None:
            return hit
        # iterative worklist to keep recursion shallow
        result = self._search(p)
        return result

    def _search(self, p: Pair) -> bool:
        memo = self._memo
        stack = [(p, 0)]
        # DFS with explicit memoization over (remaining point)
        def rec(q: Pair) -> bool:
            known = memo.get(q)
            if known is not None:
                return known
            ok = False
            for a, b in self.gens:
                if a <= q[0] and b <= q[1] and rec((q[0] - a, q[1] - b)):
                    ok = True
                    break
            memo[q] = ok
            return ok
        return rec(p)

    def __repr__(self):
        return "<" + ", ".join(map(str, self.gens)) + ">"


def affine_membership(S: AffineSemigroup2D, p: Pair) -> bool:
    return S.contains(p)


def _affine_minimalize(S: AffineSemigroup2D, cands: Iterable[Pair]) -> Tuple[Pair, ...]:
    cands = sorted(set(map(tuple, cands)), key=lambda p: (p[0] + p[1], p))
    kept: List[Pair] = []
    for g in cands:
        if not any(g[0] >= k[0] and g[1] >= k[1]
                   and S.contains((g[0] - k[0], g[1] - k[1])) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class AffineIdeal:
    """Monomial ideal of a 2-D affine semigroup ring, by minimal generators."""

    S: AffineSemigroup2D
    gens: Tuple[Pair, ...]

    @staticmethod
    def from_gens(S: AffineSemigroup2D, gens: Iterable[Pair]) -> "AffineIdeal":
        gens = tuple(map(tuple, gens))
        if not gens:
            raise ZeroIdealError("an affine ideal needs at least one generator")
        for g in gens:
            if not S.contains(g):
                raise PreconditionError(f"generator {g} is not in the semigroup")
        return AffineIdeal(S, _affine_minimalize(S, gens))

    def _check(self, other: "AffineIdeal") -> None:
        if self.S.gens != other.S.gens:
            raise PreconditionError("ideals belong to different semigroups")

    def contains(self, p: Pair) -> bool:
        p = tuple(p)
        return any(p[0] >= g[0] and p[1] >= g[1]
                   and self.S.contains((p[0] - g[0], p[1] - g[1]))
                   for g in self.gens)

    def contains_ideal(self, other: "AffineIdeal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def __add__(self, other: "AffineIdeal") -> "AffineIdeal":
        self._check(other)
        return AffineIdeal(self.S, _affine_minimalize(self.S, self.gens + other.gens))

    def __mul__(self, other: "AffineIdeal") -> "AffineIdeal":
        self._check(other)
        sums = [(a[0] + b[0], a[1] + b[1]) for a in self.gens for b in other.gens]
        return AffineIdeal(self.S, _affine_minimalize(self.S, sums))

    def power(self, n: int) -> "AffineIdeal":
        if n < 0:
            raise PreconditionError("negative power")
        if n == 0:
            return AffineIdeal(self.S, ((0, 0),))
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def colon(self, other: "AffineIdeal") -> "AffineIdeal":
        """Bounded box search for {p in S : p + gens(other) inside self}."""
        self._check(other)
        bx = max(g[0] for g in self.gens) + max(max(s[0] for s in self.S.gens), 1)
        by = max(g[1] for g in self.gens) + max(max(s[1] for s in self.S.gens), 1)
        bx += max(g[0] for g in other.gens)
        by += max(g[1] for g in other.gens)
        found = []
        for x in range(bx + 1):
            for y in range(by + 1):
                p = (x, y)
                if self.S.contains(p) and all(
                        self.contains((x + g[0], y + g[1])) for g in other.gens):
                    found.append(p)
        if not found:
            raise ResourceLimitError("affine colon box exhausted without candidates")
        mins = _affine_minimalize(self.S, found)
        if any(g[0] >= bx or g[1] >= by for g in mins):
            raise ResourceLimitError("affine colon box too small to certify generators")
        return AffineIdeal(self.S, mins)

    def intersect(self, other: "AffineIdeal") -> "AffineIdeal":
        self._check(other)
        bx = max(g[0] for g in self.gens + other.gens) + \
            max(max(s[0] for s in self.S.gens), 1) * 2
        by = max(g[1] for g in self.gens + other.gens) + \
            max(max(s[1] for s in self.S.gens), 1) * 2
        found = [(x, y) for x in range(bx + 1) for y in range(by + 1)
                 if self.contains((x, y)) and other.contains((x, y))]
        if not found:
            raise ResourceLimitError("affine intersection box exhausted")
        mins = _affine_minimalize(self.S, found)
        if any(g[0] >= bx or g[1] >= by for g in mins):
            raise ResourceLimitError("affine intersection box too small to certify")
        return AffineIdeal(self.S, mins)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    # hooks for the generic engine -------------------------------------------

    def normalize_element(self, m) -> Pair:
        if isinstance(m, tuple) and len(m) == 2:
            return m
        raise PreconditionError("affine elements are exponent pairs")

    @staticmethod
    def algebra_factory(I: "AffineIdeal") -> "_AffineAlg":
        return _AffineAlg()

    def rr_power_result(self, n: int, cfg: ClosureConfig = DEFAULT_CONFIG) -> ClosureResult:
        from .ratliff_rush import rr_power
        return rr_power(self, n, cfg)


class _AffineAlg:
    def power(self, I, n):
        return I.power(n)

    def colon(self, A, B):
        return A.colon(B)

    def colon_elem(self, A, p):
        return A.colon(AffineIdeal.from_gens(A.S, [p]))

    def equals(self, A, B):
        return A.gens == B.gens

    def contains_ideal(self, A, B):
        return A.contains_ideal(B)

    def add(self, A, B):
        return A + B

    def intersect(self, A, B):
        return A.intersect(B)

    def contains(self, I, p):
        return I.contains(p)

    def gens(self, I):
        return I.gens

    def mul_elem(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def elem_power(self, a, k):
        return (k * a[0], k * a[1])

    def gen_power_ideal(self, J, k):
        return AffineIdeal.from_gens(J.S, [(k * g[0], k * g[1]) for g in J.gens])

    def witness_outside(self, A, B):
        for g in A.gens:
            if not B.contains(g):
                return g
        return None

    def cheap_upper_bound_skip(self, power_ideal, elem_k, acc):
        return False


def affine_ideal_ops(I: AffineIdeal, J: AffineIdeal, op: str):
    if op == "power":
        raise PreconditionError("use AffineIdeal.power(n)")
    if op == "sum":
        return I + J
    if op == "product":
        return I * J
    if op == "colon":
        return I.colon(J)
    raise PreconditionError(f"unknown affine ideal op {op!r}")
