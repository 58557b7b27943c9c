"""Input-language lexing, parsing, evaluation and formatting."""

import pytest

from rrlab.core import RingDescriptor
from rrlab.errors import (ArityError, LexicalError, SyntacticError,
                          UnknownIdentifierError)
from rrlab.parser import (format_program, parse_polynomial, parse_program)

PROGRAM = """
ring R = QQ[X, Y];
ideal I = (X^4, X^3*Y, X*Y^3, Y^4);
ideal J = (X^4, Y^4);
rr_closure I;
rr_via_reduction I J 2 k_max = 6 window = 2;
membership (X^2*Y^2) I;
"""


def test_parse_and_format_round_trip():
    prog = parse_program(PROGRAM)
    text = format_program(prog)
    again = parse_program(text)
    assert again == prog
    # Formatting is a fixed point after one pass.
    assert format_program(again) == text


def test_declarations_parsed():
    prog = parse_program(PROGRAM)
    kinds = [type(s).__name__ for s in prog.statements]
    assert kinds == ["RingDecl", "IdealDecl", "IdealDecl",
                     "Command", "Command", "Command"]


def test_overrides_attached_to_command():
    prog = parse_program(PROGRAM)
    cmd = prog.statements[4]
    assert cmd.name == "rr_via_reduction"
    assert dict(cmd.overrides) == {"k_max": 6, "window": 2}


def test_semiring_and_affine_declarations():
    prog = parse_program("""
semiring S = <4, 5, 11>;
ideal M = (t^4, t^5, t^11);
rr_closure M;
affine A = <(1,0), (0,2)>;
ideal N = ((1,0), (0,2));
rr_closure N;
""")
    assert len(prog.statements) == 6


def test_quotient_ring_declaration():
    prog = parse_program(
        "ring R = QQ[X, Z, U] / (Z^2, Z*U, X*Z - U^3);\n"
        "ideal I = (X, Z, U);\nis_rr_closed I;\n")
    ring_decl = prog.statements[0]
    assert len(ring_decl.quotient) == 3


def test_lexical_error():
    with pytest.raises(LexicalError) as e:
        parse_program("ring R = QQ[X, Y]; ideal I = (X$Y);")
    assert e.value.line == 1 and e.value.col > 0


def test_syntactic_error():
    with pytest.raises(SyntacticError):
        parse_program("ring R = QQ[X, Y; ideal I = (X);")


def test_arity_error():
    with pytest.raises(ArityError):
        parse_program("ring R = QQ[X, Y];\nideal I = (X);\nrr_closure I I;")


def test_unknown_identifier_error():
    with pytest.raises(UnknownIdentifierError):
        parse_program("ring R = QQ[X, Y];\nrr_closure K;")
    with pytest.raises(UnknownIdentifierError):
        parse_program("ring R = QQ[X, Y];\nideal I = (X*W);")


def test_polynomial_evaluation():
    R = RingDescriptor(("X", "Y"))
    f = parse_polynomial(R, "(X + Y)^2 - 2*X*Y")
    assert f == parse_polynomial(R, "X^2 + Y^2")
    assert parse_polynomial(R, "3") == R.constant(3)
    assert parse_polynomial(R, "X - X").is_zero()


def test_error_positions_point_at_offender():
    try:
        parse_program("ring R = QQ[X, Y];\nideal I = (X^);")
    except SyntacticError as e:
        assert e.line == 2
    else:
        pytest.fail("expected a syntax error")
