"""Exact scalars, monomials, sparse polynomials and term orders.

Coefficients are exact: rationals (fractions.Fraction) or prime-field
elements.  Exponent vectors are plain tuples of non-negative ints.
Everything here is immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import PreconditionError, RingMismatchError

Exponents = Tuple[int, ...]


# ---------------------------------------------------------------------------
# coefficient fields


@dataclass(frozen=True)
class PrimeFieldElement:
    residue: int
    modulus: int

    def _check(self, other: "PrimeFieldElement") -> None:
        if self.modulus != other.modulus:
            raise RingMismatchError("prime field moduli differ")

    def __add__(self, other):
        self._check(other)
        return PrimeFieldElement((self.residue + other.residue) % self.modulus, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return PrimeFieldElement((self.residue - other.residue) % self.modulus, self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.residue % self.modulus, self.modulus)

    def __mul__(self, other):
        self._check(other)
        return PrimeFieldElement((self.residue * other.residue) % self.modulus, self.modulus)

    def __truediv__(self, other):
        self._check(other)
        if other.residue == 0:
            raise ZeroDivisionError("division by zero in prime field")
        inv = pow(other.residue, -1, self.modulus)
        return PrimeFieldElement((self.residue * inv) % self.modulus, self.modulus)

    def __bool__(self):
        return self.residue != 0

    def __str__(self):
        return str(self.residue)


FieldScalar = Union[Fraction, PrimeFieldElement]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (p == 0) or F_p for prime p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise PreconditionError(f"{self.characteristic} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def from_int(self, n: int) -> FieldScalar:
        if self.is_rational:
            return Fraction(n)
        return PrimeFieldElement(n % self.characteristic, self.characteristic)

    def zero(self) -> FieldScalar:
        return self.from_int(0)

    def one(self) -> FieldScalar:
        return self.from_int(1)

    def __str__(self):
        return "QQ" if self.is_rational else f"F{self.characteristic}"


QQ = Field(0)


# ---------------------------------------------------------------------------
# term orders

ORDER_KINDS = ("lex", "grlex", "grevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative order on exponent vectors.

    priority lists variable indices, largest variable first.  key() maps an
    exponent vector to a tuple whose natural ascending order matches the
    monomial order.
    """

    kind: str = "grevlex"
    priority: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise PreconditionError(f"unknown order kind {self.kind!r}")

    def resolved_priority(self, nvars: int) -> Tuple[int, ...]:
        if self.priority is None:
            return tuple(range(nvars))
        if sorted(self.priority) != list(range(nvars)):
            raise PreconditionError("priority is not a permutation of the variables")
        return self.priority

    def key(self, exps: Exponents):
        prio = self.resolved_priority(len(exps))
        if self.kind == "lex":
            return tuple(exps[i] for i in prio)
        deg = sum(exps)
        if self.kind == "grlex":
            return (deg,) + tuple(exps[i] for i in prio)
        # grevlex: among equal degrees, the monomial whose reversed-priority
        # exponents are larger compares smaller.
        return (deg,) + tuple(-exps[i] for i in reversed(prio))

    def compare(self, a: Exponents, b: Exponents) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# ring descriptor


class RingDescriptor:
    """Variable names, coefficient field, optional quotient generators.

    If quotient generators Q are present, all ideal-level operations are
    interpreted modulo Q (handled by the groebner module).
    """

    def __init__(self, variables: Sequence[str], field: Field = QQ,
                 order: MonomialOrder = MonomialOrder("grevlex"),
                 quotient: Sequence["Polynomial"] = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PreconditionError("variable names must be distinct")
        self.variables = variables
        self.field = field
        self.order = order
        self.quotient = tuple(quotient)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_quotient(self, polys: Sequence["Polynomial"]) -> "RingDescriptor":
        return RingDescriptor(self.variables, self.field, self.order, tuple(polys))

    def compatible(self, other: "RingDescriptor") -> bool:
        return (self.variables == other.variables and self.field == other.field
                and self.quotient_keys() == other.quotient_keys())

    def quotient_keys(self):
        return tuple(frozenset(q.terms.items()) for q in self.quotient)

    def check_compatible(self, other: "RingDescriptor") -> None:
        if not self.compatible(other):
            raise RingMismatchError("operands live in different rings")

    def _key(self):
        return (self.variables, self.field, self.order, self.quotient_keys())

    def __eq__(self, other):
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PreconditionError(f"unknown variable {name!r}") from None

    def monomial(self, exps: Iterable[int]) -> "Monomial":
        return Monomial(self, tuple(exps))

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.var_index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def constant(self, n: int) -> "Polynomial":
        c = self.field.from_int(n)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def format_exponents(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        quo = f" / ({', '.join(map(str, self.quotient))})" if self.quotient else ""
        return f"{self.field}[{','.join(self.variables)}]{quo}"


# ---------------------------------------------------------------------------
# monomials


def exps_divides(a: Exponents, b: Exponents) -> bool:
    """a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def exps_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def exps_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def exps_quotient(a: Exponents, b: Exponents) -> Exponents:
    """lcm(a, b) / b, the colon kernel; equals a/b exactly when b | a."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


@dataclass(frozen=True)
class Monomial:
    ring: RingDescriptor
    exps: Exponents

    def __post_init__(self):
        if len(self.exps) != self.ring.nvars:
            raise PreconditionError("exponent vector length != number of variables")
        if any(e < 0 for e in self.exps):
            raise PreconditionError("negative exponent")

    def degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: "Monomial") -> bool:
        self.ring.check_compatible(other.ring)
        return exps_divides(self.exps, other.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        self.ring.check_compatible(other.ring)
        return Monomial(self.ring, exps_lcm(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self.ring.check_compatible(other.ring)
        return Monomial(self.ring, exps_mul(self.exps, other.exps))

    def as_polynomial(self) -> "Polynomial":
        return Polynomial(self.ring, {self.exps: self.ring.field.one()})

    def __str__(self):
        return self.ring.format_exponents(self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps \
            and self.ring.variables == other.ring.variables

    def __hash__(self):
        return hash((self.ring.variables, self.exps))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """The monomial c with c*b = lcm(a, b)."""
    a.ring.check_compatible(b.ring)
    return Monomial(a.ring, exps_quotient(a.exps, b.exps))


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    a.ring.check_compatible(b.ring)
    return order.compare(a.exps, b.exps)


# ---------------------------------------------------------------------------
# sparse polynomials


class Polynomial:
    """Sparse polynomial in canonical form: no zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Exponents, FieldScalar]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial") -> None:
        self.ring.check_compatible(other.ring)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return Polynomial(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = -c if s is None else s - c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exps_mul(e1, e2)
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return Polynomial(self.ring, out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PreconditionError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: FieldScalar) -> "Polynomial":
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, exps: Exponents, coef: FieldScalar) -> "Polynomial":
        return Polynomial(self.ring, {exps_mul(e, exps): c * coef for e, c in self.terms.items()})

    def leading_term(self, order: Optional[MonomialOrder] = None):
        """(exponents, coefficient) of the leading term; None for zero."""
        if not self.terms:
            return None
        order = order or self.ring.order
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        lt = self.leading_term(order)
        if lt is None:
            raise PreconditionError("zero polynomial has no leading monomial")
        return Monomial(self.ring, lt[0])

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        lt = self.leading_term(order)
        if lt is None:
            return self
        return Polynomial(self.ring, {e: c / lt[1] for e, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and bool(next(iter(self.terms.values())) == self.ring.field.one())

    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.ring.variables == other.ring.variables
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.ring.format_exponents(e)
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
            else:
                neg = False
                mag = c
            coef = str(mag)
            if mono == "1":
                body = coef
            elif coef == "1":
                body = mono
            else:
                body = f"{coef}*{mono}"
            if i == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise PreconditionError(f"unknown op {op!r}")
