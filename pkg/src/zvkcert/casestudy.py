"""The worked example: five real lines, their complement and the diagonal.

Lines (names are also the fiber / base generator names):

    r1: x = 1     s2: x = 0       (vertical, the fibers over the base punctures)
    s1: y = 0     r2: y = 1     c: x + y = 1

Projection to x; base punctures 0 and 1.  The fiber over the basepoint
x = 3/4 meets s1, c, r2 (left to right) and the fiber basepoint is the
diagonal point (3/4, 3/4), tracked along the loops as the section y = x.
The base loops r and s are counter-clockwise lassos around x = 1 and x = 0
whose tails run through the upper half-plane.
"""
from __future__ import annotations

from fractions import Fraction

from .arrangement import (
    SECTION_STRAND,
    Line,
    ZvkPresentation,
    meridian,
    parse_arrangement,
    parse_loops,
    zvk_presentation,
)
from .freegroup import Alphabet, Endomorphism, FreeWord
from .grouptheory import (
    CentralExtGroup,
    GroupPresentation,
    Homomorphism,
    SemidirectGroup,
)

ARRANGEMENT_TEXT = """\
# a*x + b*y = c, projected to x
project x
s1 0 1 0
c  1 1 1
r2 0 1 1
r1 1 0 1
s2 1 0 0
"""

BASEPOINT = Fraction(3, 4)
SECTION = Line(1, -1, 0, SECTION_STRAND)
PUNCTURES_AVOIDED = (Fraction(0), Fraction(1, 2), Fraction(1))


def base_loops():
    r = meridian(BASEPOINT, 1, PUNCTURES_AVOIDED)
    s = meridian(BASEPOINT, 0, PUNCTURES_AVOIDED)
    return r, s


def loops_text() -> str:
    r, s = base_loops()
    out = ["# fiber basepoint on the diagonal y = x", "section 1 -1 0"]
    for name, lp in (("r", r), ("s", s)):
        out.append(f"loop {name}")
        out.append(lp.render())
    return "\n".join(out) + "\n"


def arrangement():
    return parse_arrangement(ARRANGEMENT_TEXT)


def presentation(_mirror: bool = False) -> ZvkPresentation:
    names, loops, section = parse_loops(loops_text())
    return zvk_presentation(arrangement(), loops, names, section=section, _mirror=_mirror)


FIBER = Alphabet(["s1", "c", "r2"])
BASE = Alphabet(["r", "s"])

# The six expected monodromy relations: y^-1 x y = phi_y(x).
PRINTED_RELATIONS = (
    ("r", "r2", "r2"),
    ("r", "c", "r2^-1 s1 c s1^-1 r2"),
    ("r", "s1", "r2^-1 s1 c s1 c^-1 s1^-1 r2"),
    ("s", "r2", "s1^-1 c r2 c^-1 s1"),
    ("s", "c", "s1^-1 c r2 c r2^-1 c^-1 s1"),
    ("s", "s1", "s1"),
)

# Presentation after r1 = r r2^-1, s2 = s s1^-1.
GENERATORS = Alphabet(["r1", "r2", "s1", "s2", "c"])
SIMPLIFIED_EQUALITIES = (
    "r1 r2 = r2 r1",
    "s1 s2 = s2 s1",
    "r1 s1 c = c r1 s1 = s1 c r1",
    "r2 s2 c = s2 c r2 = c r2 s2",
)


def simplified_presentation() -> GroupPresentation:
    return GroupPresentation.from_equalities(GENERATORS, SIMPLIFIED_EQUALITIES)


def semidirect(p: ZvkPresentation) -> SemidirectGroup:
    return SemidirectGroup.from_monodromy(p.fiber_generators, p.base_generators, p.monodromy,
                                          p.inverse_monodromy)


def rewrite_in_semidirect(G: SemidirectGroup) -> dict:
    """Normal forms of r1, r2, s1, s2, c (via r1 = r r2^-1, s2 = s s1^-1)."""
    return {
        "r1": G.normal_form([("r", 1), ("r2", -1)]),
        "r2": G.generator("r2"),
        "s1": G.generator("s1"),
        "s2": G.normal_form([("s", 1), ("s1", -1)]),
        "c": G.generator("c"),
    }


def word(text: str) -> FreeWord:
    return GENERATORS.word(text)


G_WORD = "s2 c r1 s1 c r2"

# Images of the generators of the diagonal's group (its loops r, s, c).
E_IMAGES = {"r": "r1 r2", "s": "s1 s2", "c": "c"}


def e_generators() -> list[FreeWord]:
    return [word(E_IMAGES[k]) for k in ("r", "s", "c")]


BASE_PRIME = Alphabet(["r'", "s'"])


def proj_x() -> Endomorphism:
    return Endomorphism.from_text(GENERATORS, BASE_PRIME, {"r1": "r'", "s2": "s'", "r2": "", "s1": "", "c": ""})


def swap() -> Endomorphism:
    return Endomorphism.from_text(GENERATORS, GENERATORS,
                                  {"r1": "r2", "r2": "r1", "s1": "s2", "s2": "s1", "c": "c"})


def proj_y() -> Endomorphism:
    return swap().then(proj_x())


QUOTIENT_ALPHABET = Alphabet(["a", "b"])


def quotient_model() -> CentralExtGroup:
    return CentralExtGroup(QUOTIENT_ALPHABET)


def quotient_map() -> Homomorphism:
    """``r_i -> (0, a)``, ``s_i -> (0, b)``, ``c -> (1, b^-1 a^-1)`` in ``Z x F<a, b>``."""
    Z = quotient_model()
    a, b = Z.element(0, "a"), Z.element(0, "b")
    return Homomorphism(GENERATORS, Z, {"r1": a, "r2": a, "s1": b, "s2": b, "c": Z.element(1, "b^-1 a^-1")},
                        name="q")


Q_PRESENTATION_EQUALITIES = ("d = a b c = b c a = c a b",)


def q_presentation() -> GroupPresentation:
    return GroupPresentation.from_equalities(Alphabet(["a", "b", "c", "d"]), Q_PRESENTATION_EQUALITIES)


def q_model_map() -> Homomorphism:
    Z = quotient_model()
    return Homomorphism(Alphabet(["a", "b", "c", "d"]), Z,
                        {"a": Z.element(0, "a"), "b": Z.element(0, "b"),
                         "c": Z.element(1, "b^-1 a^-1"), "d": Z.element(1, "")}, name="model")


__all__ = [
    "ARRANGEMENT_TEXT", "BASEPOINT", "SECTION", "base_loops", "loops_text", "arrangement", "presentation",
    "FIBER", "BASE", "PRINTED_RELATIONS", "GENERATORS", "SIMPLIFIED_EQUALITIES", "simplified_presentation",
    "semidirect", "rewrite_in_semidirect", "word", "G_WORD", "E_IMAGES", "e_generators", "BASE_PRIME",
    "proj_x", "swap", "proj_y", "quotient_model", "quotient_map", "q_presentation", "q_model_map",
]
