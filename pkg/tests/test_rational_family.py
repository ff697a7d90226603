import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import fractions

from zvkcert.exact import INFINITY, Poly, RationalFunction, pt, ratfun_equal
from zvkcert.rational_family import (
    BASEPOINT,
    DELTA,
    IndeterminateForm,
    RationalMapOnSphere,
    basepoint_map,
    critical_data,
    delta_contains,
    evaluate_map,
    family_map,
    has_marked_four_cycle,
    points_on_condition,
    portrait_at,
    verify_z_formula,
    z_formula,
    z_value,
)

F = Fraction
T, X, Y = sympy.symbols("t x y")
SYM_F = (X - T) * (-T * X + Y + T + X - 1) / ((X - 1) * T ** 2)
SYM_Z = (-X ** 2 + Y + 2 * X - 1) ** 2 / (4 * X * (Y - 1 + X) * (1 - X))


def to_frac(v):
    v = sympy.Rational(v)
    return Fraction(int(v.p), int(v.q))


def sympy_critical(xv, yv):
    """Finite critical points and values of F(.; x, y) by sympy (independent oracle)."""
    f = sympy.cancel(SYM_F.subs({X: sympy.Rational(xv.numerator, xv.denominator),
                                 Y: sympy.Rational(yv.numerator, yv.denominator)}))
    num, _ = sympy.fraction(sympy.together(sympy.diff(f, T)))
    pts = list(sympy.solve(num, T))
    # poles of order >= 2 are critical too: zeros of (1/f)' where 1/f vanishes
    g = sympy.cancel(1 / f)
    gnum, _ = sympy.fraction(sympy.together(sympy.diff(g, T)))
    pts += [p for p in sympy.solve(gnum, T) if g.subs(T, p) == 0 and p not in pts]
    out = {}
    for p in pts:
        if not p.is_rational:
            return None
        val = f.subs(T, p)
        out[to_frac(p)] = None if val in (sympy.zoo, sympy.oo) else to_frac(val)
    return out


def test_f_cycle_and_critical_value():
    f = basepoint_map()
    assert evaluate_map(f, pt(0)) == INFINITY
    assert evaluate_map(f, INFINITY) == pt(1)
    assert evaluate_map(f, pt(1)) == pt(F(3, 4))
    assert evaluate_map(f, pt(F(3, 4))) == pt(0)
    assert evaluate_map(f, pt(F(12, 5))) == pt(F(121, 96))


def test_identity_map():
    ident = RationalMapOnSphere.from_coeffs([0, 1], [1])
    for p in (pt(0), pt(F(-7, 3)), INFINITY):
        assert evaluate_map(ident, p) == p


def test_critical_data_of_f():
    cd = critical_data(basepoint_map())
    assert cd.point_set == {pt(0), pt(F(12, 5))}
    assert cd.value_set == {INFINITY, pt(F(121, 96))}
    assert cd.charts_agree


def test_critical_data_of_square():
    cd = critical_data(RationalMapOnSphere.from_coeffs([0, 0, 1], [1]))
    assert cd.point_set == {pt(0), INFINITY}
    assert cd.value_set == {pt(0), INFINITY}


def test_family_specialises_to_f():
    Fb = family_map().specialize({"x": F(3, 4), "y": F(3, 4)})
    assert ratfun_equal(Fb.ratfun(), basepoint_map().ratfun())
    a, b = critical_data(Fb), critical_data(basepoint_map())
    assert (a.point_set, a.value_set) == (b.point_set, b.value_set)


def test_indeterminate_on_delta():
    m = family_map().specialize({"x": 1, "y": 2})  # x = 1: the denominator vanishes
    with pytest.raises(IndeterminateForm):
        evaluate_map(m, pt(3))
    with pytest.raises(IndeterminateForm):
        m.reduced()


def test_portrait_examples():
    rep = portrait_at(2, 3)
    assert rep.ok, rep.failing
    assert z_value(2, 3) == pt(F(-1, 8))
    assert has_marked_four_cycle(F(5, 3), F(5, 3))
    assert not has_marked_four_cycle(2, 3)
    assert not portrait_at(F(1, 2), F(1, 2)).ok


def test_z_identity_both_routes():
    rep = verify_z_formula()
    assert rep.ok, [ln for ln in rep.lines if not ln[1]]
    assert z_value(*BASEPOINT) == pt(F(121, 96))


def test_z_identity_against_sympy():
    x, y = Poly.gens("x", "y")
    num, den = sympy.fraction(sympy.factor(SYM_Z))
    ours = z_formula()
    theirs_num = sympy.Poly(sympy.expand(num), X, Y)
    theirs_den = sympy.Poly(sympy.expand(den), X, Y)

    def conv(p):
        terms = {}
        for (i, j), c in p.terms():
            terms[(i, j)] = Fraction(int(c.p), int(c.q))
        return Poly(("x", "y"), terms)

    assert ratfun_equal(ours, RationalFunction(conv(theirs_num), conv(theirs_den)))


def test_delta_examples():
    assert len(DELTA) == 8
    assert delta_contains(F(3, 4), F(3, 4)) == (False, [])
    assert delta_contains(F(1, 2), F(1, 2)) == (True, ["y - 1 + x = 0"])
    assert delta_contains(0, 17)[0]


# -- properties ---------------------------------------------------------------


def off_delta_points(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = (F(rng.randint(-40, 40), rng.randint(1, 9)), F(rng.randint(-40, 40), rng.randint(1, 9)))
        if not delta_contains(*p)[0]:
            out.append(p)
    return out


def test_portrait_off_delta_matches_sympy():
    for xv, yv in off_delta_points(100, 3):
        rep = portrait_at(xv, yv)
        assert rep.ok, (xv, yv, rep.failing)
        oracle = sympy_critical(xv, yv)
        assert oracle is not None
        cd = critical_data(family_map().specialize({"x": xv, "y": yv}).reduced())
        finite = {p.value for p, _ in cd.points if not p.is_infinity}
        assert finite == set(oracle)
        assert oracle[Fraction(0)] is None                  # F(0) = oo
        others = [v for k, v in oracle.items() if k != 0]
        assert [pt(v) for v in others] == [z_value(xv, yv)]


@pytest.mark.parametrize("cond", list(DELTA), ids=lambda c: c.label)
def test_portrait_fails_on_each_delta_condition(cond):
    rng = random.Random(cond.label)
    xs = [F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(60)]
    pts = points_on_condition(cond, xs)[:50]
    assert len(pts) == 50
    for p in pts:
        assert cond.poly.eval({"x": p[0], "y": p[1]}) == 0
        assert not portrait_at(*p).ok


@given(fractions, fractions)
def test_marked_four_cycle_iff_diagonal(xv, yv):
    if delta_contains(xv, yv)[0]:
        return
    assert has_marked_four_cycle(xv, yv) == (xv == yv)


@given(fractions)
def test_diagonal_points_have_the_cycle(v):
    if delta_contains(v, v)[0]:
        return
    assert has_marked_four_cycle(v, v)


@given(st.integers(-20, 20), st.integers(1, 6))
def test_unmarked_cycle_off_diagonal(k, d):
    """Without the marking, 0 -> oo -> 1 -> y -> 0 also closes on y = (x-1)/(x-2)."""
    xv = F(k, d)
    if xv == 2:
        return
    yv = (xv - 1) / (xv - 2)
    if delta_contains(xv, yv)[0] or xv == yv:
        return
    m = family_map().specialize({"x": xv, "y": yv}).reduced()
    assert evaluate_map(m, pt(yv)) == pt(0)
    assert not has_marked_four_cycle(xv, yv)
