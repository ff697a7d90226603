import pytest
from hypothesis import given
from hypothesis import strategies as st

from zvkcert.braid import (
    BraidWord,
    RangeError,
    artin_action,
    block_twist,
    default_alphabet,
    product_of_generators,
)
from zvkcert.freegroup import apply_endo


def images(b, alphabet=None):
    return [img.str_letters() for img in artin_action(b, alphabet).images]


def test_empty_braid_is_identity():
    assert artin_action(BraidWord(3)).is_identity()


def test_sigma1_definition():
    assert images(BraidWord.parse(2, "s1")) == ["x1 x2 x1^-1", "x1"]


def test_sigma1_squared_is_conjugation_by_x1x2():
    X = default_alphabet(2)
    x1, x2 = X.gens()
    p = x1 * x2
    e = artin_action(BraidWord.parse(2, "s1^2"))
    assert e.images[0] == x1.conj(p.inverse())
    assert e.images[1] == x2.conj(p.inverse())


def test_block_twist_examples():
    assert block_twist(2, 1, 2, "full") == BraidWord.parse(2, "s1 s1")
    assert block_twist(4, 3, 3, "half").letters == ()
    full3 = block_twist(3, 1, 3, "full")
    assert full3 == BraidWord.parse(3, "s1 s2 s1 s1 s2 s1")
    # central: commutes with s1 and s2 as automorphisms
    for g in ("s1", "s2"):
        s = BraidWord.parse(3, g)
        assert artin_action(full3 * s).images == artin_action(s * full3).images


def test_block_twist_range_and_orientation():
    with pytest.raises(RangeError):
        block_twist(3, 2, 4)
    cw = block_twist(3, 1, 2, "half", "cw")
    assert cw == BraidWord.parse(3, "s1^-1")


def test_letters_out_of_range():
    with pytest.raises(RangeError):
        BraidWord(2, ((2, 1),))


def test_full_twist_fixes_the_boundary_word():
    for n in (2, 3, 4):
        X = default_alphabet(n)
        e = artin_action(block_twist(n, 1, n, "full"))
        assert apply_endo(e, product_of_generators(X)) == product_of_generators(X)


def test_pure_braid_detection():
    assert BraidWord.parse(3, "s1 s1 s2^-1 s2^-1").is_pure()
    assert not BraidWord.parse(3, "s1").is_pure()


# -- properties ---------------------------------------------------------------

N = 4
braids = st.lists(st.tuples(st.integers(1, N - 1), st.sampled_from([1, -1])), max_size=8).map(
    lambda ls: BraidWord(N, tuple(ls)))


@pytest.mark.parametrize("i", range(1, N - 1))
def test_braid_relations(i):
    a = BraidWord(N, ((i, 1), (i + 1, 1), (i, 1)))
    b = BraidWord(N, ((i + 1, 1), (i, 1), (i + 1, 1)))
    assert artin_action(a).images == artin_action(b).images


def test_far_commutation():
    a = BraidWord(N, ((1, 1), (3, 1)))
    b = BraidWord(N, ((3, 1), (1, 1)))
    assert artin_action(a).images == artin_action(b).images


@given(braids)
def test_inverse_cancels(b):
    assert artin_action(b * b.inverse()).is_identity()
    assert artin_action(b.inverse() * b).is_identity()


@given(braids)
def test_boundary_word_preserved_up_to_conjugacy(b):
    X = default_alphabet(N)
    prod = product_of_generators(X)
    img = apply_endo(artin_action(b), prod)
    assert img.cyclic_reduce().letters in {
        prod.letters[k:] + prod.letters[:k] for k in range(N)} | {prod.letters}


@given(braids)
def test_action_is_multiplicative(b):
    c = BraidWord.parse(N, "s2 s1^-1 s3")
    assert artin_action(b * c).images == artin_action(b).then(artin_action(c)).images


@given(braids)
def test_pure_braids_send_generators_to_conjugates(b):
    pure = b * b  # not always pure; square of the permutation
    if not pure.is_pure():
        pure = BraidWord(N, tuple(x for x in b.letters for _ in range(2)))
    assert pure.is_pure()
    X = default_alphabet(N)
    for k, img in enumerate(artin_action(pure).images):
        assert img.cyclic_reduce() == X.gens()[k]
