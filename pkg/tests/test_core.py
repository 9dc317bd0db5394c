import pytest

from conftest import affine5
from quandles import (
    FormatError,
    InvalidQuandleError,
    Quandle,
    as_quandle,
    dihedral_quandle,
    direct_product,
    dumps_quandle,
    find_isomorphism,
    parse_quandle,
    parse_quandle_json,
    parse_quandle_text,
    quandle_to_obj,
    trivial_quandle,
    validate_quandle,
)


def test_validate_dihedral3():
    assert validate_quandle([[0, 2, 1], [2, 1, 0], [1, 0, 2]]) == []


def test_validate_trivial2():
    assert validate_quandle([[0, 1], [0, 1]]) == []


def test_validate_reports_q1():
    violations = validate_quandle([[1, 0], [1, 0]])
    assert ("Q1", (0,)) in violations


def test_validate_reports_q2_on_constant_rows():
    # Constant rows satisfy neither bijectivity; the diagonal is fine.
    violations = validate_quandle([[0, 0], [1, 1]])
    axioms = {v.axiom for v in violations}
    assert axioms == {"Q2"}
    assert {v.witness for v in violations} == {(0,), (1,)}


def test_validate_reports_q3_with_witness():
    # Rows are permutations fixing the diagonal but break the third axiom.
    table = [
        [0, 2, 1, 3],
        [2, 1, 0, 3],
        [1, 0, 2, 3],
        [1, 0, 2, 3],
    ]
    violations = validate_quandle(table)
    assert violations
    assert {v.axiom for v in violations} == {"Q3"}
    x, y, z = violations[0].witness
    t = table
    assert t[x][t[y][z]] != t[t[x][y]][t[x][z]]


def test_validate_rejects_malformed():
    with pytest.raises(ValueError):
        validate_quandle([[0, 1], [0]])
    with pytest.raises(ValueError):
        validate_quandle([[0, 2], [0, 1]])
    with pytest.raises(ValueError):
        validate_quandle([])
    with pytest.raises(ValueError):
        validate_quandle([[0.0, 1.0], [0.0, 1.0]])


def test_as_quandle_raises_with_violations():
    with pytest.raises(InvalidQuandleError) as exc:
        as_quandle([[1, 0], [1, 0]])
    assert exc.value.violations


def test_trivial_quandle():
    assert trivial_quandle(1).table == ((0,),)
    assert trivial_quandle(3).table == ((0, 1, 2),) * 3
    assert trivial_quandle(2).table == ((0, 1), (0, 1))
    with pytest.raises(ValueError):
        trivial_quandle(0)


def test_dihedral_quandle():
    assert dihedral_quandle(3).table == ((0, 2, 1), (2, 1, 0), (1, 0, 2))
    assert dihedral_quandle(1).table == ((0,),)
    assert dihedral_quandle(4).row(1) == (2, 1, 0, 3)
    with pytest.raises(ValueError):
        dihedral_quandle(0)


def test_constructors_satisfy_axioms():
    for n in range(1, 13):
        assert validate_quandle(trivial_quandle(n).table) == []
        assert validate_quandle(dihedral_quandle(n).table) == []


def test_corpus_members_are_quandles():
    from conftest import small_corpus

    for X in small_corpus():
        assert validate_quandle(X.table) == []


def test_direct_product_left_unit():
    for X in (dihedral_quandle(4), trivial_quandle(3), affine5()):
        assert direct_product(trivial_quandle(1), X).table == X.table


def test_direct_product_trivials():
    assert direct_product(trivial_quandle(2), trivial_quandle(2)) == trivial_quandle(4)


def test_direct_product_dihedral_3_5():
    P = direct_product(dihedral_quandle(3), dihedral_quandle(5))
    assert P.n == 15
    assert validate_quandle(P.table) == []
    assert find_isomorphism(P, dihedral_quandle(15)) is not None


def test_direct_product_cardinality_and_validity():
    for X, Y in [
        (dihedral_quandle(3), trivial_quandle(4)),
        (affine5(), dihedral_quandle(2)),
        (trivial_quandle(2), affine5()),
    ]:
        P = direct_product(X, Y)
        assert P.n == X.n * Y.n
        assert validate_quandle(P.table) == []


def test_direct_product_associative_up_to_isomorphism():
    triples = [
        (dihedral_quandle(2), dihedral_quandle(3), trivial_quandle(2)),
        (dihedral_quandle(3), trivial_quandle(2), dihedral_quandle(3)),
    ]
    for X, Y, Z in triples:
        left = direct_product(direct_product(X, Y), Z)
        right = direct_product(X, direct_product(Y, Z))
        assert find_isomorphism(left, right) is not None


def test_quandle_is_immutable_and_hashable():
    X = dihedral_quandle(3)
    with pytest.raises(AttributeError):
        X.n = 5
    assert X == dihedral_quandle(3)
    assert hash(X) == hash(dihedral_quandle(3))
    assert X != trivial_quandle(3)


def test_json_round_trip():
    X = dihedral_quandle(4)
    text = dumps_quandle(X)
    assert text == '{"n":4,"table":[[0,3,2,1],[2,1,0,3],[0,3,2,1],[2,1,0,3]]}'
    assert Quandle(parse_quandle(text)) == X
    assert quandle_to_obj(X)["n"] == 4


def test_text_round_trip():
    text = "3\n0 2 1\n2 1 0\n1 0 2\n"
    assert Quandle(parse_quandle(text)) == dihedral_quandle(3)


def test_text_parser_diagnostics():
    with pytest.raises(FormatError, match="line 1"):
        parse_quandle_text("")
    with pytest.raises(FormatError, match="line 2"):
        parse_quandle_text("2\n0 1 1\n0 1\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_quandle_text("2\n0 1\nx 1\n")
    with pytest.raises(FormatError, match="end of input"):
        parse_quandle_text("3\n0 1 2\n")
    with pytest.raises(FormatError, match="trailing"):
        parse_quandle_text("1\n0\n0\n")


def test_json_parser_diagnostics():
    with pytest.raises(FormatError, match="line 1"):
        parse_quandle_json("{not json")
    with pytest.raises(FormatError, match="table"):
        parse_quandle_json('{"n": 2}')
    with pytest.raises(FormatError, match="'n' is 3"):
        parse_quandle_json('{"n": 3, "table": [[0, 1], [0, 1]]}')
    with pytest.raises(FormatError):
        parse_quandle_json('[1, 2, 3]')
