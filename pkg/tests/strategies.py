"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from zvkcert.exact import Poly
from zvkcert.freegroup import Alphabet, FreeWord

fractions = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
nonzero_fractions = fractions.filter(lambda q: q != 0)

AB = Alphabet(["a", "b"])


def words(alphabet=AB, max_len=6):
    letter = st.tuples(st.integers(0, len(alphabet) - 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: FreeWord(alphabet, ls))


@st.composite
def polys_xy(draw, max_terms=4, max_deg=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = (draw(st.integers(0, max_deg)), draw(st.integers(0, max_deg)))
        terms[e] = terms.get(e, 0) + draw(nonzero_fractions)
    return Poly(("x", "y"), terms)


points_xy = st.fixed_dictionaries({"x": fractions, "y": fractions})
