"""Buchberger engine: normal forms, reduced bases, ideal arithmetic.

IdealHandle wraps a generator list plus ring context.  In a quotient ring
R/Q every operation silently adjoins Q, so handles always compute with
polynomial-ring Groebner bases; results are read as cosets.
"""

from __future__ import annotations

import threading
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (Exponents, Monomial, MonomialOrder, Polynomial,
                   RingDescriptor, exps_divides, exps_lcm, exps_mul,
                   exps_quotient)
from .errors import (PreconditionError, ResourceLimitError, RingMismatchError,
                     UnsupportedOperationError, ZeroIdealError)
from .monomial import MonomialIdeal, minimalize

DEFAULT_PAIR_CAP = 200_000


class _ElimKey:
    """Block order: the last variable first (lex), then base order on the rest."""

    def __init__(self, base: MonomialOrder, nvars: int):
        self.base = base
        self.nvars = nvars  # of the extended ring

    def __call__(self, exps: Exponents):
        return (exps[-1],) + self.base.key(exps[:-1])


# ---------------------------------------------------------------------------
# raw engine on term dicts


def _lt(terms: dict, key) -> Exponents:
    return max(terms, key=key)


def _normal_form(terms: dict, basis: List[Tuple[Exponents, object, dict]], key) -> dict:
    """Full reduction of a term dict by (lt, ltcoef, terms) triples."""
    work = dict(terms)
    remainder: dict = {}
    while work:
        e = max(work, key=key)
        c = work[e]
        for lt, ltc, g in basis:
            if exps_divides(lt, e):
                shift = tuple(a - b for a, b in zip(e, lt))
                factor = c / ltc
                for ge, gc in g.items():
                    t = exps_mul(ge, shift)
                    v = work.get(t, None)
                    nv = (0 if v is None else v) - factor * gc
                    if nv:
                        work[t] = nv
                    elif v is not None:
                        del work[t]
                    # nv zero and t absent: nothing to do (t == e handled below)
                work.pop(e, None)
                break
        else:
            remainder[e] = c
            del work[e]
    return remainder


def _prep(polys: Sequence[dict], key) -> List[Tuple[Exponents, object, dict]]:
    out = []
    for g in polys:
        if g:
            lt = _lt(g, key)
            out.append((lt, g[lt], g))
    # prefer reducers with small leading terms (cheaper tails first is a wash;
    # sorting by lt keeps reduction deterministic)
    out.sort(key=lambda t: key(t[0]))
    return out


def _spoly(f: dict, g: dict, key) -> dict:
    lf, lg = _lt(f, key), _lt(g, key)
    lcm = exps_lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    cf, cg = f[lf], g[lg]
    out: dict = {}
    for e, c in f.items():
        out[exps_mul(e, sf)] = c / cf
    for e, c in g.items():
        t = exps_mul(e, sg)
        v = out.get(t, None)
        nv = (0 if v is None else v) - c / cg
        if nv:
            out[t] = nv
        elif v is not None:
            del out[t]
    return out


def _buchberger(gens: Sequence[dict], key, pair_cap: int = DEFAULT_PAIR_CAP) -> List[dict]:
    G = [dict(g) for g in gens if g]
    if not G:
        return []
    lts = [_lt(g, key) for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    processed = 0
    while pairs:
        processed += 1
        if processed > pair_cap:
            raise ResourceLimitError(f"Buchberger pair cap {pair_cap} exceeded")
        # normal strategy: smallest lcm degree first
        i, j = min(pairs, key=lambda p: (sum(exps_lcm(lts[p[0]], lts[p[1]])),
                                         key(exps_lcm(lts[p[0]], lts[p[1]])), p))
        pairs.discard((i, j))
        li, lj = lts[i], lts[j]
        lcm = exps_lcm(li, lj)
        # coprime criterion
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # chain criterion: some k with lt_k | lcm and both other pairs done
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not exps_divides(lts[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(G[i], G[j], key)
        r = _normal_form(s, _prep(G, key), key)
        if r:
            G.append(r)
            lts.append(_lt(r, key))
            new = len(G) - 1
            pairs.update((k, new) for k in range(new))
    return G


def _autoreduce(G: List[dict], key) -> List[dict]:
    """Reduced basis: minimal leading terms, monic, fully reduced tails."""
    # prune redundant leading terms
    lts = [(_lt(g, key), g) for g in G if g]
    minimal = []
    for lt, g in sorted(lts, key=lambda t: (sum(t[0]), key(t[0]))):
        if not any(exps_divides(m, lt) for m, _ in minimal):
            minimal.append((lt, g))
    polys = [g for _, g in minimal]
    # reduce each by the others
    reduced = []
    for i, g in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        r = _normal_form(g, _prep(others, key), key)
        if r:
            lc = r[_lt(r, key)]
            reduced.append({e: c / lc for e, c in r.items()})
    reduced.sort(key=lambda g: key(_lt(g, key)))
    return reduced


# ---------------------------------------------------------------------------
# GroebnerBasis / IdealHandle


class GroebnerBasis:
    def __init__(self, ring: RingDescriptor, order: MonomialOrder, polys: List[dict]):
        self.ring = ring
        self.order = order
        self._polys = polys
        self._key = order.key
        self._prepped = _prep(polys, order.key)

    @property
    def polynomials(self) -> Tuple[Polynomial, ...]:
        return tuple(Polynomial(self.ring, g) for g in self._polys)

    def leading_exponents(self) -> Tuple[Exponents, ...]:
        return tuple(_lt(g, self._key) for g in self._polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        self.ring.check_compatible(f.ring)
        return Polynomial(self.ring, _normal_form(f.terms, self._prepped, self._key))

    def reduces_to_zero(self, f: Polynomial) -> bool:
        return not _normal_form(f.terms, self._prepped, self._key)

    def __len__(self):
        return len(self._polys)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


class IdealHandle:
    """Generators plus ring context; reduced GB cached per order."""

    def __init__(self, ring: RingDescriptor, gens: Sequence[Polynomial],
                 pair_cap: int = DEFAULT_PAIR_CAP):
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            ring.check_compatible(g.ring)
        self.ring = ring
        self.gens = tuple(gens)
        self.pair_cap = pair_cap
        self._gb: Dict[object, GroebnerBasis] = {}
        self._powers: List[Tuple[Polynomial, ...]] = [self.gens]
        self._lock = threading.Lock()

    # -- construction helpers ---------------------------------------------

    @staticmethod
    def from_monomial(I: MonomialIdeal) -> "IdealHandle":
        one = I.ring.field.one()
        return IdealHandle(I.ring, [Polynomial(I.ring, {g: one}) for g in I.gens])

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens) and not self.ring.quotient

    def to_monomial_ideal(self) -> MonomialIdeal:
        if self.ring.quotient:
            raise UnsupportedOperationError("not a plain monomial ideal")
        gb = self.groebner_basis()
        for g in gb._polys:
            if len(g) != 1:
                raise UnsupportedOperationError("ideal is not monomial")
        return MonomialIdeal.from_gens(self.ring, [next(iter(g)) for g in gb._polys])

    # -- Groebner bases -----------------------------------------------------

    def _order_sig(self, order: MonomialOrder):
        return (order.kind, order.resolved_priority(self.ring.nvars))

    def _effective_gens(self) -> List[dict]:
        eff = [dict(g.terms) for g in self.gens]
        eff.extend(dict(q.terms) for q in self.ring.quotient)
        return eff

    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order or self.ring.order
        sig = self._order_sig(order)
        with self._lock:
            gb = self._gb.get(sig)
        if gb is not None:
            return gb
        raw = _buchberger(self._effective_gens(), order.key, self.pair_cap)
        gb = GroebnerBasis(self.ring, order, _autoreduce(raw, order.key))
        with self._lock:
            self._gb[sig] = gb
        return gb

    # -- predicates ----------------------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        return self.groebner_basis().reduces_to_zero(f)

    def contains_ideal(self, other: "IdealHandle") -> bool:
        self.ring.check_compatible(other.ring)
        gb = self.groebner_basis()
        return all(gb.reduces_to_zero(g) for g in other.gens)

    def equals(self, other: "IdealHandle") -> bool:
        self.ring.check_compatible(other.ring)
        a = self.groebner_basis()._polys
        b = other.groebner_basis()._polys
        return [sorted(g.items()) for g in a] == [sorted(g.items()) for g in b]

    def is_zero(self) -> bool:
        if not self.ring.quotient:
            return len(self.groebner_basis()) == 0
        # Zero in the quotient ring: every generator lies in the quotient
        # ideal.
        Q = IdealHandle(self.ring, [], self.pair_cap)
        gb = Q.groebner_basis()
        return all(gb.reduces_to_zero(g) for g in self.gens)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        self.ring.check_compatible(other.ring)
        return IdealHandle(self.ring, self.gens + other.gens, self.pair_cap)

    def __mul__(self, other: "IdealHandle") -> "IdealHandle":
        self.ring.check_compatible(other.ring)
        return IdealHandle(self.ring, [a * b for a in self.gens for b in other.gens],
                           self.pair_cap)

    def power(self, n: int) -> "IdealHandle":
        if n < 0:
            raise PreconditionError("negative power")
        if n == 0:
            return IdealHandle(self.ring, [self.ring.one()], self.pair_cap)
        with self._lock:
            while len(self._powers) < n:
                prev = self._powers[-1]
                nxt = tuple(dict.fromkeys(a * b for a in prev for b in self.gens))
                self._powers.append(nxt)
            gens = self._powers[n - 1]
        return IdealHandle(self.ring, gens, self.pair_cap)

    def intersect(self, other: "IdealHandle") -> "IdealHandle":
        """Elimination: t*A + (1-t)*B in R[t], keep the t-free basis elements."""
        self.ring.check_compatible(other.ring)
        b_side = [g.terms for g in other.gens] + [q.terms for q in self.ring.quotient]
        return self._intersect_raw(b_side)

    def _intersect_raw(self, b_side: List[dict]) -> "IdealHandle":
        """Intersection of (self + quotient) with the plain ideal gen'd by b_side."""
        ring = self.ring
        ext_names = ring.variables + (_fresh_name(ring),)
        key = _ElimKey(ring.order, len(ext_names))

        def up(terms: dict, tdeg: int) -> dict:
            return {e + (tdeg,): c for e, c in terms.items()}

        gens: List[dict] = []
        a_side = [g.terms for g in self.gens] + [q.terms for q in ring.quotient]
        for g in a_side:
            gens.append(up(g, 1))
        for g in b_side:
            tg = up(g, 1)
            g0 = up(g, 0)
            merged = dict(g0)
            for e, c in tg.items():
                v = merged.get(e, None)
                nv = (0 if v is None else v) - c
                if nv:
                    merged[e] = nv
                elif v is not None:
                    del merged[e]
            gens.append(merged)
        raw = _buchberger(gens, key, self.pair_cap)
        basis = _autoreduce(raw, key)
        kept = []
        for g in basis:
            if all(e[-1] == 0 for e in g):
                kept.append(Polynomial(ring, {e[:-1]: c for e, c in g.items()}))
        return IdealHandle(ring, kept, self.pair_cap)

    def colon_element(self, b: Polynomial) -> "IdealHandle":
        """(A(+Q) : b) via (A cap (b)) scaled by 1/b."""
        if b.is_zero():
            raise ZeroIdealError("colon by zero")
        self.ring.check_compatible(b.ring)
        # intersect with the plain principal ideal (b) in the polynomial ring
        # (no quotient adjoined on that side) so every generator is an honest
        # multiple of b; dividing yields the colon modulo the quotient.
        inter = self._intersect_raw([dict(b.terms)])
        quots = [_exact_divide(g, b) for g in inter.gens]
        return IdealHandle(self.ring, quots, self.pair_cap)

    def colon(self, other: "IdealHandle") -> "IdealHandle":
        if not other.gens:
            raise ZeroIdealError("colon by the zero ideal")
        self.ring.check_compatible(other.ring)
        result: Optional[IdealHandle] = None
        for b in other.gens:
            part = self.colon_element(b)
            result = part if result is None else result.intersect(part)
        return result

    def leading_term_ideal(self, order: Optional[MonomialOrder] = None) -> MonomialIdeal:
        if self.ring.quotient:
            raise UnsupportedOperationError(
                "leading term ideals are defined over the polynomial ring only")
        if not self.gens:
            raise ZeroIdealError("zero ideal")
        gb = self.groebner_basis(order)
        return MonomialIdeal.from_gens(self.ring, gb.leading_exponents())

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _fresh_name(ring: RingDescriptor) -> str:
    name = "t@"
    while name in ring.variables:
        name += "@"
    return name


def _exact_divide(f: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient f/b for f known to be a multiple of b."""
    key = f.ring.order.key
    work = dict(f.terms)
    lt = _lt(b.terms, key)
    ltc = b.terms[lt]
    quot: dict = {}
    while work:
        e = max(work, key=key)
        if not exps_divides(lt, e):
            raise PreconditionError("exact division failed: not a multiple")
        shift = tuple(a - c for a, c in zip(e, lt))
        factor = work[e] / ltc
        quot[shift] = factor
        for ge, gc in b.terms.items():
            t = exps_mul(ge, shift)
            v = work.get(t, None)
            nv = (0 if v is None else v) - factor * gc
            if nv:
                work[t] = nv
            elif v is not None:
                del work[t]
    return Polynomial(f.ring, quot)


# ---------------------------------------------------------------------------
# spec-level operation names


def reduced_groebner_basis(I: IdealHandle, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    return I.groebner_basis(order)


def leading_term_ideal(I: IdealHandle, order: Optional[MonomialOrder] = None) -> MonomialIdeal:
    return I.leading_term_ideal(order)


def ideal_membership(f: Polynomial, I: IdealHandle) -> bool:
    return I.contains(f)


def ideal_colon(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    return A.colon(B)


def ideal_power(I: IdealHandle, n: int) -> IdealHandle:
    if n < 1:
        raise PreconditionError("power must be >= 1")
    return I.power(n)


def ideal_equal(A: IdealHandle, B: IdealHandle) -> bool:
    return A.equals(B)


def ideal_contains(A: IdealHandle, B: IdealHandle) -> bool:
    return A.contains_ideal(B)
