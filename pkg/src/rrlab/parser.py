"""Input language: ring/ideal declarations plus one-line commands.

Grammar (semicolon-terminated statements)::

    program   := (ring | semiring | affine | ideal | command ";")*
    ring      := "ring" NAME "=" field "[" vars "]" ("/" "(" polys ")")?
    field     := "QQ" | "F" INT
    semiring  := "semiring" NAME "=" "<" ints ">"
    affine    := "affine" NAME "=" "<" pairs ">"
    ideal     := "ideal" NAME "=" "(" gens ")"
    command   := OP arg* (NAME "=" INT)*          -- trailing config overrides
    arg       := INT | NAME | "(" poly ")"

Polynomials use explicit infix: `X^4*Y^2 - X^2*Y^4`.  Numerical-semigroup
generators are written `t^8` or plain integers; affine generators are
pairs `(2,5)`.  Errors carry (line, column) and are classed as lexical,
syntactic, arity, or unknown-identifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import Field, MonomialOrder, Polynomial, QQ, RingDescriptor
from .errors import (ArityError, LexicalError, SyntacticError,
                     UnknownIdentifierError)

SYMBOLS = set(";=[](){}<>/^*+-,")


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'int' | 'sym' | 'eof'
    value: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":  # comment to end of line
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in SYMBOLS:
            tokens.append(Token("sym", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise LexicalError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# AST

PolyAST = tuple  # ('+',a,b) ('-',a,b) ('*',a,b) ('^',a,int) ('neg',a) ('int',n) ('var',name)


@dataclass(frozen=True)
class RingDecl:
    name: str
    field_char: int          # 0 for the rationals
    variables: Tuple[str, ...]
    quotient: Tuple[PolyAST, ...]


@dataclass(frozen=True)
class SemiringDecl:
    name: str
    gens: Tuple[int, ...]


@dataclass(frozen=True)
class AffineDecl:
    name: str
    gens: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class IdealDecl:
    name: str
    gens: Tuple[PolyAST, ...]


@dataclass(frozen=True)
class Command:
    name: str
    args: Tuple[Tuple[str, object], ...]  # (kind, value); kind in int/ident/poly
    overrides: Tuple[Tuple[str, int], ...]
    line: int = dc_field(compare=False, default=0)
    col: int = dc_field(compare=False, default=0)


@dataclass(frozen=True)
class InputProgram:
    statements: Tuple[object, ...]

    @property
    def commands(self) -> Tuple[Command, ...]:
        return tuple(s for s in self.statements if isinstance(s, Command))


# command name -> expected argument kinds ('ideal' = declared ideal name,
# 'int' = integer literal, 'elem' = parenthesized polynomial/element)
COMMAND_SIGNATURES: Dict[str, Tuple[str, ...]] = {
    "rr_closure": ("ideal",),
    "rr_power": ("ideal", "int"),
    "rr_via_reduction": ("ideal", "ideal", "int"),
    "rr_membership": ("elem", "ideal"),
    "is_rr_closed": ("ideal",),
    "rr_defect": ("ideal", "int"),
    "gb": ("ideal",),
    "lt": ("ideal",),
    "normal_form": ("elem", "ideal"),
    "membership": ("elem", "ideal"),
    "colon": ("ideal", "ideal"),
    "intersect": ("ideal", "ideal"),
    "sum": ("ideal", "ideal"),
    "product": ("ideal", "ideal"),
    "power": ("ideal", "int"),
    "min_gens": ("ideal",),
    "integral_closure": ("ideal",),
    "ass_primes": ("ideal",),
    "socle": ("ideal",),
    "is_borel": ("ideal",),
    "is_reduction": ("ideal", "ideal"),
    "reduction_number": ("ideal", "ideal"),
    "rr_reduction_number": ("ideal", "ideal"),
    "s_invariant": ("ideal",),
    "superficial": ("elem", "ideal"),
    "gr_nzd": ("elem", "ideal", "int"),
    "depth_zero": ("ideal",),
    "prop41": ("ideal", "elem", "int"),
}

OVERRIDE_KEYS = ("k_max", "window", "n_max", "seed")


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[Token]:
        t = self.peek()
        if t.kind == kind and (value is None or t.value == value):
            return self.next()
        return None

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        t = self.accept(kind, value)
        if t is None:
            got = self.peek()
            want = value if value is not None else kind
            raise SyntacticError(f"expected {want!r}, found {got.value!r}",
                                 got.line, got.col)
        return t

    # -- polynomials --------------------------------------------------------

    def poly(self) -> PolyAST:
        node = self.term()
        while True:
            if self.accept("sym", "+"):
                node = ("+", node, self.term())
            elif self.accept("sym", "-"):
                node = ("-", node, self.term())
            else:
                return node

    def term(self) -> PolyAST:
        if self.accept("sym", "-"):
            return ("neg", self.term())
        node = self.factor()
        while self.accept("sym", "*"):
            node = ("*", node, self.factor())
        return node

    def factor(self) -> PolyAST:
        t = self.peek()
        if t.kind == "int":
            self.next()
            node: PolyAST = ("int", int(t.value))
        elif t.kind == "ident":
            self.next()
            node = ("var", t.value)
        elif self.accept("sym", "("):
            node = self.poly()
            self.expect("sym", ")")
        else:
            raise SyntacticError(f"expected a polynomial factor, found {t.value!r}",
                                 t.line, t.col)
        if self.accept("sym", "^"):
            e = self.expect("int")
            node = ("^", node, int(e.value))
        return node

    # -- declarations -------------------------------------------------------

    def ring_decl(self) -> RingDecl:
        name = self.expect("ident").value
        self.expect("sym", "=")
        ft = self.expect("ident")
        if ft.value == "QQ":
            char = 0
        elif ft.value == "F":
            char = int(self.expect("int").value)
        else:
            raise SyntacticError(f"unknown field {ft.value!r}", ft.line, ft.col)
        self.expect("sym", "[")
        variables = [self.expect("ident").value]
        while self.accept("sym", ","):
            variables.append(self.expect("ident").value)
        self.expect("sym", "]")
        quotient: List[PolyAST] = []
        if self.accept("sym", "/"):
            self.expect("sym", "(")
            quotient.append(self.poly())
            while self.accept("sym", ","):
                quotient.append(self.poly())
            self.expect("sym", ")")
        self.expect("sym", ";")
        return RingDecl(name, char, tuple(variables), tuple(quotient))

    def semiring_decl(self) -> SemiringDecl:
        name = self.expect("ident").value
        self.expect("sym", "=")
        self.expect("sym", "<")
        gens = [int(self.expect("int").value)]
        while self.accept("sym", ","):
            gens.append(int(self.expect("int").value))
        self.expect("sym", ">")
        self.expect("sym", ";")
        return SemiringDecl(name, tuple(gens))

    def pair(self) -> Tuple[int, int]:
        self.expect("sym", "(")
        a = int(self.expect("int").value)
        self.expect("sym", ",")
        b = int(self.expect("int").value)
        self.expect("sym", ")")
        return (a, b)

    def affine_decl(self) -> AffineDecl:
        name = self.expect("ident").value
        self.expect("sym", "=")
        self.expect("sym", "<")
        gens = [self.pair()]
        while self.accept("sym", ","):
            gens.append(self.pair())
        self.expect("sym", ">")
        self.expect("sym", ";")
        return AffineDecl(name, tuple(gens))

    def gen(self) -> PolyAST:
        """One ideal generator: a polynomial or an affine exponent pair."""
        if self.accept("sym", "("):
            node = self.poly()
            if self.accept("sym", ","):
                second = self.poly()
                self.expect("sym", ")")
                return ("pair", (node, second))
            self.expect("sym", ")")
            return node
        return self.poly()

    def ideal_decl(self) -> IdealDecl:
        name = self.expect("ident").value
        self.expect("sym", "=")
        self.expect("sym", "(")
        gens = [self.gen()]
        while self.accept("sym", ","):
            gens.append(self.gen())
        self.expect("sym", ")")
        self.expect("sym", ";")
        return IdealDecl(name, tuple(gens))

    # -- commands -----------------------------------------------------------

    def command(self, opname: Token) -> Command:
        args: List[Tuple[str, object]] = []
        overrides: List[Tuple[str, int]] = []
        while not self.accept("sym", ";"):
            t = self.peek()
            if t.kind == "int":
                self.next()
                args.append(("int", int(t.value)))
            elif t.kind == "ident":
                self.next()
                if self.accept("sym", "="):
                    v = self.expect("int")
                    if t.value not in OVERRIDE_KEYS:
                        raise SyntacticError(f"unknown config key {t.value!r}",
                                             t.line, t.col)
                    overrides.append((t.value, int(v.value)))
                else:
                    args.append(("ident", t.value))
            elif t.kind == "sym" and t.value == "(":
                self.next()
                # affine exponent pair or polynomial
                node = self.poly()
                if self.accept("sym", ","):
                    second = self.poly()
                    self.expect("sym", ")")
                    args.append(("pair", (node, second)))
                else:
                    self.expect("sym", ")")
                    args.append(("poly", node))
            else:
                raise SyntacticError(f"unexpected token {t.value!r} in command",
                                     t.line, t.col)
        return Command(opname.value, tuple(args), tuple(overrides),
                       opname.line, opname.col)

    def program(self) -> InputProgram:
        statements: List[object] = []
        while self.peek().kind != "eof":
            t = self.next()
            if t.kind != "ident":
                raise SyntacticError(f"expected a statement, found {t.value!r}",
                                     t.line, t.col)
            if t.value == "ring":
                statements.append(self.ring_decl())
            elif t.value == "semiring":
                statements.append(self.semiring_decl())
            elif t.value == "affine":
                statements.append(self.affine_decl())
            elif t.value == "ideal":
                statements.append(self.ideal_decl())
            else:
                statements.append(self.command(t))
        return InputProgram(tuple(statements))


def _ast_variables(ast: PolyAST):
    op = ast[0]
    if op == "var":
        yield ast[1]
    elif op == "neg":
        yield from _ast_variables(ast[1])
    elif op in ("+", "-", "*"):
        yield from _ast_variables(ast[1])
        yield from _ast_variables(ast[2])
    elif op == "^":
        yield from _ast_variables(ast[1])
    elif op == "pair":
        yield from _ast_variables(ast[1])
        yield from _ast_variables(ast[2])


def _check_program(prog: InputProgram) -> None:
    """Resolve identifiers and check command arity before execution."""
    ideals: set = set()
    have_ring = False
    known_vars: Optional[set] = None
    for st in prog.statements:
        if isinstance(st, RingDecl):
            have_ring = True
            known_vars = set(st.variables)
        elif isinstance(st, SemiringDecl):
            have_ring = True
            known_vars = {"t"}
        elif isinstance(st, AffineDecl):
            have_ring = True
            known_vars = None  # generators are exponent pairs, no names
        elif isinstance(st, IdealDecl):
            if not have_ring:
                raise UnknownIdentifierError(
                    "ideal declared before any ring", 0, 0)
            if known_vars is not None:
                for g in st.gens:
                    for v in _ast_variables(g):
                        if v not in known_vars:
                            raise UnknownIdentifierError(
                                f"unknown variable {v!r}", 0, 0)
            ideals.add(st.name)
        elif isinstance(st, Command):
            sig = COMMAND_SIGNATURES.get(st.name)
            if sig is None:
                raise UnknownIdentifierError(f"unknown command {st.name!r}",
                                             st.line, st.col)
            if len(st.args) != len(sig):
                raise ArityError(
                    f"{st.name} takes {len(sig)} argument(s), got {len(st.args)}",
                    st.line, st.col)
            for (kind, value), want in zip(st.args, sig):
                if want == "ideal":
                    if kind != "ident":
                        raise ArityError(f"{st.name}: expected an ideal name",
                                         st.line, st.col)
                    if value not in ideals:
                        raise UnknownIdentifierError(f"unknown ideal {value!r}",
                                                     st.line, st.col)
                elif want == "int" and kind != "int":
                    raise ArityError(f"{st.name}: expected an integer",
                                     st.line, st.col)
                elif want == "elem" and kind not in ("poly", "pair", "int"):
                    raise ArityError(
                        f"{st.name}: expected a parenthesized element",
                        st.line, st.col)


def parse_program(text: str) -> InputProgram:
    prog = _Parser(tokenize(text)).program()
    _check_program(prog)
    return prog


# ---------------------------------------------------------------------------
# evaluation helpers


def eval_poly(ast: PolyAST, ring: RingDescriptor) -> Polynomial:
    op = ast[0]
    if op == "int":
        return ring.constant(ast[1])
    if op == "var":
        try:
            return ring.variable(ast[1])
        except Exception:
            raise UnknownIdentifierError(f"unknown variable {ast[1]!r}", 0, 0)
    if op == "neg":
        return -eval_poly(ast[1], ring)
    if op == "+":
        return eval_poly(ast[1], ring) + eval_poly(ast[2], ring)
    if op == "-":
        return eval_poly(ast[1], ring) - eval_poly(ast[2], ring)
    if op == "*":
        return eval_poly(ast[1], ring) * eval_poly(ast[2], ring)
    if op == "^":
        return eval_poly(ast[1], ring) ** ast[2]
    raise SyntacticError(f"bad polynomial node {op!r}", 0, 0)


def eval_t_exponent(ast: PolyAST) -> int:
    """Evaluate a numerical-semigroup generator: `t^8`, `t`, or an integer."""
    if ast[0] == "int":
        return ast[1]
    if ast == ("var", "t"):
        return 1
    if ast[0] == "^" and ast[1] == ("var", "t"):
        return ast[2]
    raise SyntacticError("semigroup generators are written t^k or as integers", 0, 0)


def eval_pair(ast: PolyAST) -> Tuple[int, int]:
    if ast[0] == "pair":
        a, b = ast[1]
    else:
        raise SyntacticError("expected an exponent pair (a, b)", 0, 0)
    if a[0] != "int" or b[0] != "int":
        raise SyntacticError("exponent pairs must be integers", 0, 0)
    return (a[1], b[1])


def parse_polynomial(ring: RingDescriptor, text: str) -> Polynomial:
    toks = tokenize(text)
    p = _Parser(toks)
    ast = p.poly()
    if p.peek().kind != "eof":
        t = p.peek()
        raise SyntacticError(f"trailing input {t.value!r}", t.line, t.col)
    return eval_poly(ast, ring)


# ---------------------------------------------------------------------------
# formatting (round-trip support)


def format_poly_ast(ast: PolyAST) -> str:
    op = ast[0]
    if op == "int":
        return str(ast[1])
    if op == "var":
        return ast[1]
    if op == "neg":
        return f"-{format_poly_ast(ast[1])}"
    if op == "^":
        return f"{format_poly_ast(ast[1])}^{ast[2]}"
    if op in ("+", "-"):
        return f"{format_poly_ast(ast[1])} {op} {format_poly_ast(ast[2])}"
    if op == "*":
        return f"{format_poly_ast(ast[1])}*{format_poly_ast(ast[2])}"
    if op == "pair":
        a, b = ast[1]
        return f"({format_poly_ast(a)}, {format_poly_ast(b)})"
    raise SyntacticError(f"bad polynomial node {op!r}", 0, 0)


def format_program(prog: InputProgram) -> str:
    lines = []
    for st in prog.statements:
        if isinstance(st, RingDecl):
            fld = "QQ" if st.field_char == 0 else f"F {st.field_char}"
            quo = ""
            if st.quotient:
                quo = " / (" + ", ".join(map(format_poly_ast, st.quotient)) + ")"
            lines.append(f"ring {st.name} = {fld}[{','.join(st.variables)}]{quo};")
        elif isinstance(st, SemiringDecl):
            lines.append(f"semiring {st.name} = <{','.join(map(str, st.gens))}>;")
        elif isinstance(st, AffineDecl):
            body = ", ".join(f"({a},{b})" for a, b in st.gens)
            lines.append(f"affine {st.name} = <{body}>;")
        elif isinstance(st, IdealDecl):
            lines.append(f"ideal {st.name} = ("
                         + ", ".join(map(format_poly_ast, st.gens)) + ");")
        elif isinstance(st, Command):
            parts = [st.name]
            for kind, value in st.args:
                if kind == "int":
                    parts.append(str(value))
                elif kind == "ident":
                    parts.append(value)
                elif kind == "poly":
                    parts.append(f"({format_poly_ast(value)})")
                elif kind == "pair":
                    a, b = value
                    parts.append(f"({format_poly_ast(a)}, {format_poly_ast(b)})")
            for k, v in st.overrides:
                parts.append(f"{k}={v}")
            lines.append(" ".join(parts) + ";")
    return "\n".join(lines) + "\n"
