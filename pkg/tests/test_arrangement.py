from fractions import Fraction

import pytest

from zvkcert import casestudy as cs
from zvkcert.arrangement import (
    ArrangementSyntaxError,
    BaseLoop,
    DegenerateInput,
    Line,
    NotMeridian,
    OnPuncture,
    base_punctures,
    braid_along,
    fiber_punctures,
    geometric_basis,
    meridian,
    monodromy,
    parse_arrangement,
    parse_loops,
    winding_number,
    zvk_presentation,
)
from zvkcert.braid import artin_action, block_twist
from zvkcert.exact import QComplex, Q

F = Fraction


def C(re, im=0):
    return QComplex(Q(re), Q(im))


def values(pairs):
    return [v.re for _, v in pairs]


def test_line_normalisation():
    ln = Line(-2, 2, 4, "l")
    assert (ln.a, ln.b, ln.c) == (1, -1, -2)
    assert Line(3, 0, 3, "v").vertical


def test_base_punctures_examples():
    assert base_punctures(cs.arrangement()) == [C(0), C(1)]
    assert base_punctures(parse_arrangement("l 0 1 3")) == []
    assert base_punctures(parse_arrangement("a 0 1 0\nb -1 1 0")) == [C(0)]


def test_duplicate_lines_rejected():
    with pytest.raises(DegenerateInput):
        parse_arrangement("a 0 1 0\nb 0 2 0")


def test_fiber_punctures_examples():
    arr = cs.arrangement()
    at = fiber_punctures(arr, F(3, 4))
    assert [n for n, _ in at] == ["s1", "c", "r2"]
    assert values(at) == [0, F(1, 4), 1]
    assert values(fiber_punctures(arr, 2)) == [-1, 0, 1]
    assert values(fiber_punctures(parse_arrangement("l 0 1 5"), 7)) == [5]
    with pytest.raises(OnPuncture):
        fiber_punctures(arr, 0)


def test_parse_errors():
    with pytest.raises(ArrangementSyntaxError):
        parse_arrangement("l 0 1")
    with pytest.raises(ArrangementSyntaxError):
        parse_loops("1 2")


def test_constant_loop_gives_empty_braid():
    assert braid_along(cs.arrangement(), BaseLoop((C(F(3, 4)),))).letters == ()


def test_square_around_triple_value_is_a_full_twist():
    arr = parse_arrangement("u 0 1 1\nc 1 1 1\nfar 0 1 -5")
    q = F(1, 4)
    sq = BaseLoop((C(-q, -q), C(q, -q), C(q, q), C(-q, q)))
    phi, trace = monodromy(arr, sq)
    assert trace.start_order == ("far", "u", "c")
    assert braid_along(arr, sq) == block_twist(3, 2, 3, "full")
    assert artin_action(trace.braid, phi.source) == phi


def test_forward_then_backward_is_trivial():
    arr = cs.arrangement()
    r, _ = cs.base_loops()
    phi, _ = monodromy(arr, r.then(r.reversed()), cs.SECTION)
    assert phi.is_identity()


def test_homotopic_loops_give_equal_actions():
    arr = cs.arrangement()
    r, _ = cs.base_loops()
    v = list(r.vertices)
    # slide an extra vertex off the tail; the triangle swept contains no puncture
    mid = C((v[0].re + v[1].re) / 2, (v[0].im + v[1].im) / 2 + F(1, 16))
    slid = BaseLoop((v[0], mid, *v[1:]))
    assert monodromy(arr, r, cs.SECTION)[0] == monodromy(arr, slid, cs.SECTION)[0]


def test_product_law_on_generic_part():
    gen = parse_arrangement("s1 0 1 0\nc 1 1 1\nr2 0 1 1")
    r, s = cs.base_loops()
    b = F(3, 4)
    big = BaseLoop((C(b), C(b, 2), C(-2, 2), C(-2, -2), C(3, -2), C(3, 2), C(b, 2)))
    assert winding_number(big, C(0)) == winding_number(big, C(1)) == 1
    phi_r, phi_s, phi_big = (monodromy(gen, lp)[0] for lp in (r, s, big))
    assert phi_big == phi_s.then(phi_r)
    assert monodromy(gen, s.then(r))[0] == phi_big


def test_large_loop_is_full_twist_for_generic_lines():
    arr = parse_arrangement("a 0 1 0\nb 1 1 2\nc -1 1 1")
    punct = base_punctures(arr)
    assert len(punct) == 3
    big = BaseLoop((C(10), C(10, 10), C(-10, 10), C(-10, -10), C(10, -10)))
    phi, trace = monodromy(arr, big)
    n = len(trace.start_order)
    assert phi == artin_action(block_twist(n, 1, n, "full"), phi.source)


def test_case_study_reproduces_printed_relations():
    P = cs.presentation()
    got = {(y, x): img.str_letters() for y, x, img in P.relation_words()}
    for y, x, printed in cs.PRINTED_RELATIONS:
        assert got[(y, x)] == printed
    assert P.killed == ()
    assert P.fiber_generators.names == ("s1", "c", "r2")
    assert P.automorphism_checked


def test_mirror_convention_breaks_the_relations():
    P = cs.presentation(_mirror=True)
    got = {(y, x): img.str_letters() for y, x, img in P.relation_words()}
    assert any(got[(y, x)] != printed for y, x, printed in cs.PRINTED_RELATIONS)


def test_lower_half_plane_lassos_break_the_relations():
    arr = cs.arrangement()
    loops = [meridian(cs.BASEPOINT, p, cs.PUNCTURES_AVOIDED, side="lower") for p in (1, 0)]
    P = zvk_presentation(arr, loops, ["r", "s"], section=cs.SECTION)
    got = {(y, x): img.str_letters() for y, x, img in P.relation_words()}
    assert any(got[(y, x)] != printed for y, x, printed in cs.PRINTED_RELATIONS)


def test_single_line_presentation():
    P = zvk_presentation(parse_arrangement("l 0 1 5"), [], [])
    G = P.group_presentation()
    assert G.generators.names == ("l",) and G.relators == ()


def test_node_presentation_is_abelian_rank_two():
    arr = parse_arrangement("a 0 1 0\nb -1 1 0")
    punct, loops = geometric_basis(arr, 1)
    P = zvk_presentation(arr, loops)
    assert P.killed == ("y1",)
    G = P.group_presentation()
    assert G.generators.names == ("a", "b")
    assert G.relators
    for rel in G.relators:
        assert all(rel.exponent_sum(g) == 0 for g in G.generators.names)


def test_not_meridian():
    arr = cs.arrangement()
    r, s = cs.base_loops()
    with pytest.raises(NotMeridian):
        zvk_presentation(arr, [r.then(r), s], ["r", "s"], section=cs.SECTION)
    with pytest.raises(NotMeridian):
        zvk_presentation(arr, [BaseLoop((C(F(3, 4)), C(F(3, 4), 1), C(2, 1))), s], ["r", "s"])


def test_loop_file_round_trip():
    names, loops, section = parse_loops(cs.loops_text())
    assert names == ["r", "s"]
    assert loops == list(cs.base_loops())
    assert section == cs.SECTION
