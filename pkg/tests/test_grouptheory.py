import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zvkcert import casestudy as cs
from zvkcert.freegroup import Alphabet, Endomorphism, FreeWord, apply_endo
from zvkcert.grouptheory import (
    BasisPropertyFails,
    CentralExtElement,
    CentralExtGroup,
    GroupPresentation,
    Homomorphism,
    brute_force_members,
    central_ext_ops,
    central_power_not_in_subgroup,
    check_homomorphism,
    coset_certificate,
)

AB = Alphabet(["a", "b"])
Z = CentralExtGroup(AB)
P = cs.presentation()
G = cs.semidirect(P)
q = cs.quotient_map()


def test_quotient_map_respects_relators():
    chk = check_homomorphism(cs.simplified_presentation(), q)
    assert chk.ok and len(chk.lines) == 6


def test_identity_on_free_presentation():
    free = GroupPresentation(AB, ())
    assert check_homomorphism(free, Endomorphism.identity(AB)).ok


def test_bad_map_names_the_failing_relator():
    X = Alphabet(["x", "y"])
    pres = GroupPresentation.from_equalities(X, ["x y = y x"])
    bad = Endomorphism.from_text(X, AB, {"x": "a", "y": "b"})
    chk = check_homomorphism(pres, bad)
    assert not chk.ok
    assert chk.failing[0][0] == "x y x^-1 y^-1"


def test_semidirect_examples():
    r, r2 = G.generator("r"), G.generator("r2")
    assert G.show(G.mul(r, r2)) == "(r2, r)"
    u = G.fiber_element("s1 c r2^-1")
    assert G.is_identity(G.mul(u, G.inv(u)))


def test_simplified_relators_vanish_in_computed_semidirect_product():
    rewrite = cs.rewrite_in_semidirect(G)
    h = Homomorphism(cs.GENERATORS, G, rewrite)
    for rel in cs.simplified_presentation().relators:
        assert G.is_identity(h(rel)), rel.str_letters()


def test_central_ext_examples():
    g = cs.word(cs.G_WORD)
    qg = q(g)
    assert (qg.central, qg.word.is_identity()) == (2, True)
    assert central_ext_ops("pow", qg, n=3) == Z.element(6)
    x = Z.element(3, "a b^-1")
    assert central_ext_ops("mul", x, central_ext_ops("inv", x)).is_identity()
    b, c, a = Z.element(0, "b"), Z.element(1, "b^-1 a^-1"), Z.element(0, "a")
    assert b * c * a == Z.element(1)


def test_power_certificate_paper_subgroup():
    H = [Z.element(0, "a a"), Z.element(0, "b b"), Z.element(1, "b^-1 a^-1")]
    cert = central_power_not_in_subgroup(H, Z.element(2), 20)
    assert cert.basis and cert.ok and cert.first_member is None
    assert cert.infinite_order_certified
    assert len(cert.checks) == 40


def test_power_certificate_generator_targets():
    H = [Z.element(0, "a a"), Z.element(0, "b b"), Z.element(1, "b^-1 a^-1")]
    assert central_power_not_in_subgroup(H, Z.element(0, "a a"), 3).first_member == 1
    assert central_power_not_in_subgroup(H, Z.element(1, "b^-1 a^-1"), 3).first_member == 1


def test_non_basis_subgroup():
    H = [Z.element(1, "a"), Z.element(0, "a a")]
    with pytest.raises(BasisPropertyFails):
        central_power_not_in_subgroup(H, Z.element(1), 3, require_basis=True)
    cert = central_power_not_in_subgroup(H, Z.element(1), 3)
    assert cert.kernel_step == 2 and not cert.basis
    assert cert.first_member == 2  # (2, e) = (1,a)^2 (0,a^2)^-1


def test_coset_certificate_examples():
    g = cs.word(cs.G_WORD)
    E = cs.e_generators()
    cert = coset_certificate(g, E, [q], 20)
    assert cert.ok and cert.certified_cosets == 21 and cert.distinct_pairs == 210
    assert coset_certificate(g, E, [q], 0).certified_cosets == 1
    bad = coset_certificate(g, E + [g], [q], 20)
    assert bad.refused_at == 1 and not bad.ok


def test_equalizer():
    g = cs.word(cs.G_WORD)
    px = apply_endo(cs.proj_x(), g)
    py = apply_endo(cs.proj_y(), g)
    assert px.str_letters() == py.str_letters() == "s' r'"


# -- properties ---------------------------------------------------------------

names = ["r2", "s1", "c", "r", "s"]
gen_letters = st.lists(st.tuples(st.sampled_from(names), st.sampled_from([1, -1])), max_size=6)


@given(gen_letters, gen_letters, gen_letters)
def test_semidirect_normal_form_is_multiplicative(x, y, z):
    nx, ny, nz = (G.normal_form(w) for w in (x, y, z))
    assert G.normal_form(x + y) == G.mul(nx, ny)
    assert G.mul(G.mul(nx, ny), nz) == G.mul(nx, G.mul(ny, nz))


def test_semidirect_encodes_the_monodromy_relations():
    for yname, xname, img in P.relation_words():
        lhs = G.normal_form([(yname, -1), (xname, 1), (yname, 1)])
        assert lhs == G.fiber_element(img)


def _random_element(rng, max_len=3):
    n = rng.randint(0, max_len)
    word = [(rng.randint(0, 1), rng.choice((1, -1))) for _ in range(n)]
    return CentralExtElement(rng.randint(-2, 2), FreeWord(AB, word))


def test_membership_agrees_with_brute_force():
    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        H = [_random_element(rng) for _ in range(rng.randint(1, 3))]
        H = [h for h in H if not h.is_identity()] or [Z.element(1)]
        found = brute_force_members(H, 5)
        for _ in range(5):
            target = _random_element(rng, 2)
            if target.is_identity():
                continue
            cert = central_power_not_in_subgroup(H, target, 2)
            for c in cert.checks:
                p = target ** c.n
                if (p.central, p.word.letters) in found:
                    assert c.member
                    checked += 1
        # positives built from short products must be recognised
        for _ in range(5):
            k = rng.randint(1, 4)
            prod = Z.identity()
            for _ in range(k):
                h = rng.choice(H)
                prod = prod * (h if rng.random() < 0.5 else h.inverse())
            if prod.is_identity():
                continue
            assert central_power_not_in_subgroup(H, prod, 1).checks[0].member
            checked += 1
    assert checked > 50


def test_case_study_membership_against_brute_force():
    H = [q(e) for e in cs.e_generators()]
    found = brute_force_members(H, 6)
    assert (2, ()) not in found and (-2, ()) not in found
    for key in sorted(found)[:200]:
        c, letters = key
        t = CentralExtElement(c, FreeWord(AB, letters))
        if t.is_identity():
            continue
        assert central_power_not_in_subgroup(H, t, 1).checks[0].member
