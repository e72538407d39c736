"""Small hand-derived values, one per operation, each pinned exactly."""
from fractions import Fraction

from paramgb.coeffs import ParamField
from paramgb.division import divide, s_polynomial
from paramgb.fibres import specialize
from paramgb.groebner import buchbergerable
from paramgb.idealops import Ideal, decompose, eliminate
from paramgb.parser import parse
from paramgb.polyring import PolyRing, compare


def ring(vars=("x", "y"), params=("s",)):
    return PolyRing(list(vars), "lex", ParamField(params))


def test_coefficient_sum():
    F = ParamField(["s"])
    s = F.param("s")
    assert str(1 / (s + 1) + 1 / (s - 1)) == "2*s/(s^2 - 1)"


def test_inverse_coefficient_is_parsed():
    R = ring()
    p = parse("(1/(s+1))*x", R)
    assert str(p) == "1/(s + 1)*x"
    assert [str(d.as_expr()) for d in R.field.denominators(p.LC)] == ["s + 1"]


def test_grevlex_equal_degree():
    # x*y^2 against x^2*z
    assert compare((1, 2, 0), (2, 0, 1), "grevlex") == 1


def test_division_records_inverted_leading_coefficient():
    R = ring(("x",))
    res = divide(parse("x^3", R), [parse("(s + 1)*x", R)])
    assert str(res.quotients[0]) == "1/(s + 1)*x^2"
    assert not res.remainder
    assert "s + 1" in {str(p.as_expr()) for p in res.locus_contrib}


def test_s_polynomial_with_parametric_leading_coefficient():
    R = ring(("x",))
    S, contrib = s_polynomial(parse("s*x^2", R), parse("x", R))
    assert not S
    assert "s" in {str(p.as_expr()) for p in contrib}


def test_raw_basis_specializations():
    R = ring()
    _, raw = buchbergerable([parse("x^2 + s*y^2", R), parse("x + y", R)])
    polys, on = specialize(raw, (Fraction(1),))
    assert [str(p) for p in polys] == ["x^2 + y^2", "x + y", "2*y^2"] and not on
    polys, on = specialize(raw, (Fraction(-1),))
    assert [str(p) for p in polys] == ["x^2 - y^2", "x + y"] and on


def test_eliminate_worked_example():
    R = ring()
    E = eliminate(Ideal(R, [parse("x^2 + s*y^2", R), parse("x + y", R)]), 1)
    # the monic generator y^2 spans the same ideal as (s + 1)*y^2 off s = -1
    assert [str(g) for g in E.generators] == ["y^2"]
    assert E.groebner().locus.strings() == ["s + 1"]


def test_decompose_with_witness():
    R = ring(params=())
    comps = decompose(Ideal(R, [parse("x*y", R)]), witnesses=[(parse("x", R), parse("y", R))])
    assert [[str(g) for g in C.groebner().basis] for C in comps] == [["x"], ["y"]]
