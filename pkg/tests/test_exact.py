from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import fractions, nonzero_fractions, points_xy, polys_xy

from zvkcert.exact import (
    INFINITY,
    DivisionByZero,
    MissingAssignment,
    Poly,
    Q,
    QComplex,
    RationalFunction,
    fmt_scalar,
    poly_eval,
    poly_resultant,
    pt,
    ratfun_equal,
    scalar_arith,
    univariate_rational_roots,
)

x, y, t = Poly.gens("x", "y", "t")


def test_scalar_examples():
    assert scalar_arith("add", Q(1, 2), Q(1, 4)) == Q(3, 4)
    assert scalar_arith("mul", Q(121, 256), Q(8, 3)) == Q(121, 96)
    with pytest.raises(DivisionByZero):
        scalar_arith("div", 1, 0)


def test_scalar_canonical_form():
    q = Q("-6/8")
    assert (q.numerator, q.denominator) == (-3, 4)
    assert Q(0, 5) == Fraction(0, 1) and Q(0, 5).denominator == 1
    assert fmt_scalar(Q(121, 96)) == "121/96"
    assert fmt_scalar(Q(4)) == "4"


def test_big_integers_do_not_overflow():
    big = Q(2) ** 200 / 3
    assert scalar_arith("mul", big, 3) == 2 ** 200


def test_poly_eval_examples():
    p = x ** 2 - y - 2 * x + 1
    assert poly_eval(p, {"x": Q(3, 4), "y": Q(3, 4)}) == Q(-11, 16)
    assert poly_eval(Poly.const(0, ("x", "y")), {"x": 5, "y": 7}) == 0
    assert poly_eval(x + y - 1, {"x": Q(1, 2), "y": Q(1, 2)}) == 0


def test_poly_eval_missing_assignment():
    with pytest.raises(MissingAssignment):
        poly_eval(x + y, {"x": 1})


def test_poly_printing_is_graded_lex():
    assert str(y + x ** 2 - 2 * x + 1) == "x^2 - 2*x + y + 1"


def test_ratfun_equal_examples():
    x1 = x.with_variables(("x",))
    assert ratfun_equal(RationalFunction(x1 ** 2 - 1, x1 - 1), RationalFunction(x1 + 1))
    xx, yy = Poly.gens("x", "y")
    assert not ratfun_equal(RationalFunction(xx, yy), RationalFunction(yy, xx))


def test_resultant_examples():
    tt, xx, yy = Poly.gens("t", "x", "y")
    # Sylvester determinant with the p-block on top: det [[1, -x], [1, -y]] = x - y
    r = poly_resultant(tt - xx, tt - yy, "t")
    assert r == (xx - yy).with_variables(r.variables)
    t1 = Poly.var("t")
    assert poly_resultant(t1 ** 2, t1 - 1, "t").constant_value() == 1


def test_resultant_matches_sympy_on_fixed_pair():
    tt, xx = Poly.gens("t", "x")
    p = 3 * tt ** 3 - xx * tt + 2
    q = tt ** 2 + xx ** 2 * tt - Q(1, 2)
    ours = poly_resultant(p, q, "t")
    T, X = sympy.symbols("t x")
    theirs = sympy.resultant(3 * T ** 3 - X * T + 2, T ** 2 + X ** 2 * T - sympy.Rational(1, 2), T)
    for xv in (Q(0), Q(1), Q(-2, 3), Q(5, 7)):
        assert ours.eval({"x": xv}) == Fraction(str(theirs.subs(X, sympy.Rational(xv.numerator, xv.denominator))))


def test_projective_points():
    assert pt("oo") == INFINITY and INFINITY.is_infinity
    assert pt(Q(1, 2)) != INFINITY
    assert str(INFINITY) == "oo"


def test_qcomplex_arithmetic():
    i = QComplex(0, 1)
    assert i * i == QComplex.of(-1)
    assert (QComplex(1, 2) / QComplex(1, 2)) == QComplex.of(1)


# -- properties ---------------------------------------------------------------


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    add = lambda u, v: scalar_arith("add", u, v)  # noqa: E731
    mul = lambda u, v: scalar_arith("mul", u, v)  # noqa: E731
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
    if a != 0:
        assert mul(a, scalar_arith("div", 1, a)) == 1


@given(polys_xy(), polys_xy(), points_xy)
def test_eval_is_multiplicative(p, q, point):
    assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
    assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)


def _nonzero(p):
    return p if not p.is_zero() else Poly.const(1, ("x", "y"))


@given(polys_xy(), polys_xy(), polys_xy(), polys_xy(), polys_xy())
def test_ratfun_equal_is_an_equivalence(n1, d1, n2, d2, k):
    f = RationalFunction(n1, _nonzero(d1))
    k = _nonzero(k)
    g = RationalFunction(n1 * k, _nonzero(d1) * k)        # same function, different representative
    h = RationalFunction(n1 * k * k, _nonzero(d1) * k * k)
    other = RationalFunction(n2, _nonzero(d2))
    assert ratfun_equal(f, f)
    assert ratfun_equal(f, g) and ratfun_equal(g, f)
    assert ratfun_equal(g, h) and ratfun_equal(f, h)
    assert ratfun_equal(f, other) == ratfun_equal(other, f)


@given(st.lists(fractions, min_size=1, max_size=2), st.lists(fractions, min_size=1, max_size=2), fractions)
def test_resultant_vanishes_iff_common_root(roots_p, roots_q, lead):
    """Degree <= 2 polynomials built from rational roots: res = 0 iff they share one."""
    tt = Poly.var("t")
    p = Poly.const(1, ("t",))
    for r in roots_p:
        p = p * (tt - r)
    q = Poly.const(1, ("t",))
    for r in roots_q:
        q = q * (tt - r)
    res = poly_resultant(p, q, "t").constant_value()
    assert (res == 0) == bool(set(roots_p) & set(roots_q))
    # Monic case: res(p, q) = prod (a_i - b_j)
    prod = Fraction(1)
    for a in roots_p:
        for b in roots_q:
            prod *= a - b
    assert res == prod


@given(st.lists(fractions, min_size=1, max_size=3), nonzero_fractions)
def test_rational_roots_recovered(roots, lead):
    tt = Poly.var("t")
    p = Poly.const(lead, ("t",))
    for r in roots:
        p = p * (tt - r)
    coeffs = [c.constant_value() for c in p.coeffs("t")]
    assert univariate_rational_roots(coeffs) == sorted(set(roots))
