"""Finite presentations, homomorphism checks and normal forms.

Three kinds of target group have a decidable word problem here:

* :class:`FreeTarget` -- a free group (reduced words);
* :class:`CentralExtGroup` -- ``Z x F(alphabet)``, elements ``(n, w)``;
* :class:`SemidirectGroup` -- ``F(fiber) x| F(base)`` with the base acting
  by explicit automorphisms, elements ``(fiber word, base word)``.

Homomorphisms out of a presented group are given by generator images; a
homomorphism is well defined iff every relator maps to the identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .freegroup import (
    Alphabet,
    Endomorphism,
    FreeWord,
    SpellingUnavailable,
    stallings_fold,
)


class UnsupportedTarget(TypeError):
    pass


class MissingAction(KeyError):
    pass


class BasisPropertyFails(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    generators: Alphabet
    relators: tuple

    def __post_init__(self):
        rels = tuple(self.relators)
        for r in rels:
            if r.alphabet != self.generators:
                raise ValueError(f"relator {r} not over {self.generators}")
            if r.is_identity():
                raise ValueError("relators must be nontrivial reduced words")
        object.__setattr__(self, "relators", rels)

    @classmethod
    def from_equalities(cls, generators: Alphabet, equalities: Sequence[str]) -> "GroupPresentation":
        """Build relators from ``"u = v = w"`` chains (consecutive pairs) and bare relators."""
        rels = []
        for eq in equalities:
            parts = [generators.word(p) for p in eq.split("=")]
            if len(parts) == 1:
                rels.append(parts[0])
            for u, v in zip(parts, parts[1:]):
                rels.append(u * v.inverse())
        return cls(generators, tuple(r for r in rels if not r.is_identity()))

    def render(self) -> str:
        rels = ", ".join(r.str_letters() for r in self.relators)
        return f"< {' '.join(self.generators.names)} : {rels} >"


# ---------------------------------------------------------------------------
# Target groups


class FreeTarget:
    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def identity(self):
        return self.alphabet.identity()

    def mul(self, x: FreeWord, y: FreeWord) -> FreeWord:
        return x * y

    def inv(self, x: FreeWord) -> FreeWord:
        return x.inverse()

    def is_identity(self, x: FreeWord) -> bool:
        return x.is_identity()

    def show(self, x: FreeWord) -> str:
        return x.str_letters()


@dataclass(frozen=True)
class CentralExtElement:
    """``d^central * word`` in ``Z x F``; ``d`` is central."""

    central: int
    word: FreeWord

    def __mul__(self, other: "CentralExtElement") -> "CentralExtElement":
        return CentralExtElement(self.central + other.central, self.word * other.word)

    def inverse(self) -> "CentralExtElement":
        return CentralExtElement(-self.central, self.word.inverse())

    def __pow__(self, n: int) -> "CentralExtElement":
        return CentralExtElement(self.central * n, self.word ** n)

    def is_identity(self) -> bool:
        return self.central == 0 and self.word.is_identity()

    def __str__(self):
        return f"({self.central}, {self.word.str_letters() if not self.word.is_identity() else 'e'})"


class CentralExtGroup:
    """The model ``Z x F(alphabet)``."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def element(self, central: int, word: str | FreeWord = "") -> CentralExtElement:
        if isinstance(word, str):
            word = self.alphabet.word(word)
        return CentralExtElement(central, word)

    def identity(self) -> CentralExtElement:
        return CentralExtElement(0, self.alphabet.identity())

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return x.inverse()

    def is_identity(self, x) -> bool:
        return x.is_identity()

    def show(self, x) -> str:
        return str(x)


def central_ext_ops(op: str, *elements, n: int | None = None):
    if op == "mul":
        out = elements[0]
        for e in elements[1:]:
            out = out * e
        return out
    if op == "inv":
        return elements[0].inverse()
    if op == "pow":
        return elements[0] ** n
    if op == "eq":
        a, b = elements
        return a == b
    raise ValueError(f"unknown operation {op!r}")


class SemidirectGroup:
    """``F(fiber) x| F(base)``; an element ``(u, v)`` stands for the product ``u v``.

    ``actions[(y, +1)]`` is ``phi_y``, i.e. ``u -> y^-1 u y``, and
    ``actions[(y, -1)]`` its inverse ``u -> y u y^-1``.  Multiplication:
    ``(u1, v1)(u2, v2) = (u1 * v1(u2), v1 v2)`` with ``v(u) = v u v^-1``.
    """

    def __init__(self, fiber: Alphabet, base: Alphabet, actions: Mapping[tuple, Endomorphism]):
        self.fiber, self.base = fiber, base
        self.actions = dict(actions)
        for y in base.names:
            for s in (1, -1):
                if (y, s) not in self.actions:
                    raise MissingAction((y, s))
                e = self.actions[(y, s)]
                if e.source != fiber or e.target != fiber:
                    raise ValueError(f"action of {y}^{s} is not an endomorphism of the fiber group")

    @classmethod
    def from_monodromy(cls, fiber: Alphabet, base: Alphabet, forward: Sequence[Endomorphism],
                       backward: Sequence[Endomorphism]) -> "SemidirectGroup":
        acts = {}
        for y, f, b in zip(base.names, forward, backward):
            acts[(y, 1)], acts[(y, -1)] = f, b
        return cls(fiber, base, acts)

    def check_inverse_pairs(self) -> bool:
        return all(
            self.actions[(y, 1)].then(self.actions[(y, -1)]).is_identity()
            and self.actions[(y, -1)].then(self.actions[(y, 1)]).is_identity()
            for y in self.base.names
        )

    def act(self, v: FreeWord, u: FreeWord) -> FreeWord:
        """``v u v^-1`` rewritten in the fiber."""
        for g, s in reversed(v.letters):
            u = self.actions[(self.base.names[g], -s)](u)
        return u

    def identity(self):
        return (self.fiber.identity(), self.base.identity())

    def mul(self, x, y):
        (u1, v1), (u2, v2) = x, y
        return (u1 * self.act(v1, u2), v1 * v2)

    def inv(self, x):
        u, v = x
        vi = v.inverse()
        return (self.act(vi, u.inverse()), vi)

    def is_identity(self, x) -> bool:
        return x[0].is_identity() and x[1].is_identity()

    def fiber_element(self, w: FreeWord | str):
        if isinstance(w, str):
            w = self.fiber.word(w)
        return (w, self.base.identity())

    def base_element(self, w: FreeWord | str):
        if isinstance(w, str):
            w = self.base.word(w)
        return (self.fiber.identity(), w)

    def generator(self, name: str):
        if name in self.fiber.names:
            return self.fiber_element(self.fiber.gen(name))
        if name in self.base.names:
            return self.base_element(self.base.gen(name))
        raise KeyError(name)

    def product(self, elements) -> tuple:
        out = self.identity()
        for e in elements:
            out = self.mul(out, e)
        return out

    def normal_form(self, letters: Sequence[tuple]) -> tuple:
        """Normal form of a product of generators given as ``(name, sign)`` pairs."""
        out = self.identity()
        for name, s in letters:
            g = self.generator(name)
            out = self.mul(out, g if s == 1 else self.inv(g))
        return out

    def show(self, x) -> str:
        u, v = x
        return f"({u.str_letters()}, {v.str_letters()})"


def semidirect_normal_form(group: SemidirectGroup, factors: Sequence[tuple]) -> tuple:
    """Multiply ``(fiber word, base word)`` pairs into normal form."""
    return group.product(factors)


# ---------------------------------------------------------------------------
# Homomorphisms


class Homomorphism:
    """Map from a free group on ``source`` into a target group, by generator images."""

    def __init__(self, source: Alphabet, target, images: Mapping[str, object], name: str = "h"):
        missing = [g for g in source.names if g not in images]
        if missing:
            raise KeyError(f"no image for {missing}")
        self.source, self.target, self.images, self.name = source, target, dict(images), name

    def __call__(self, w: FreeWord):
        if w.alphabet != self.source:
            raise ValueError(f"{w} not over {self.source}")
        out = self.target.identity()
        for g, s in w.letters:
            img = self.images[self.source.names[g]]
            out = self.target.mul(out, img if s == 1 else self.target.inv(img))
        return out


def as_homomorphism(images, target=None, source: Alphabet | None = None) -> Homomorphism:
    if isinstance(images, Homomorphism):
        return images
    if isinstance(images, Endomorphism):
        return Homomorphism(images.source, FreeTarget(images.target),
                            dict(zip(images.source.names, images.images)))
    if target is None or source is None:
        raise UnsupportedTarget("need a target group and source alphabet for a plain image map")
    return Homomorphism(source, target, images)


@dataclass
class HomCheck:
    ok: bool
    lines: list = field(default_factory=list)  # (relator text, image text, passed)

    @property
    def failing(self):
        return [ln for ln in self.lines if not ln[2]]


def check_homomorphism(p: GroupPresentation, images, target=None) -> HomCheck:
    """Does the generator map send every relator of ``p`` to the identity?"""
    h = as_homomorphism(images, target, p.generators)
    t = h.target
    if not all(hasattr(t, a) for a in ("identity", "mul", "inv", "is_identity")):
        raise UnsupportedTarget(type(t).__name__)
    if h.source != p.generators:
        raise ValueError("homomorphism source differs from the presentation's generators")
    lines = []
    for r in p.relators:
        img = h(r)
        lines.append((r.str_letters(), t.show(img) if hasattr(t, "show") else str(img), t.is_identity(img)))
    return HomCheck(all(ok for *_, ok in lines), lines)


# ---------------------------------------------------------------------------
# Subgroups of Z x F and coset certificates


@dataclass
class PowerCheck:
    n: int
    word: str                    # F-part of target^n
    f_member: bool
    spelling: str | None
    implied_central: int | None
    required_central: int
    member: bool
    kernel_step: int = 0         # central parts of <H> with trivial F-part are multiples of this

    def line(self) -> str:
        if not self.f_member:
            why = f"F-part {self.word} is not in the F-projection of H"
        elif self.kernel_step == 0:
            why = (f"F-part {self.word} spells uniquely as [{self.spelling}], implied central "
                   f"exponent {self.implied_central}, required {self.required_central}")
        else:
            why = (f"F-part {self.word} spells as [{self.spelling}], implied central exponent "
                   f"{self.implied_central} mod {self.kernel_step}, required {self.required_central}")
        verdict = "MEMBER" if self.member else "non-member"
        return f"n={self.n}: {verdict}: {why}"


@dataclass
class PowerCertificate:
    basis: bool
    rank: int
    num_generators: int
    kernel_step: int
    checks: list
    structural: list     # (description, passed)
    graph_text: str

    @property
    def first_member(self) -> int | None:
        for c in self.checks:
            if c.member:
                return c.n
        return None

    @property
    def ok(self) -> bool:
        return self.basis and self.first_member is None

    @property
    def infinite_order_certified(self) -> bool:
        """No nonzero power of the target lies in <H>, for every n, not just n <= n_max."""
        return all(ok for _, ok in self.structural)


def _spelling_text(spelling, names) -> str:
    return " ".join(names[j] if s == 1 else f"{names[j]}^-1" for j, s in spelling) or "e"


def central_power_not_in_subgroup(
    H_gens: Sequence[CentralExtElement],
    target: CentralExtElement,
    n_max: int,
    gen_names: Sequence[str] | None = None,
    include_negative: bool = True,
    require_basis: bool = False,
) -> PowerCertificate:
    """Decide ``target^n`` in ``<H_gens>`` inside ``Z x F`` for ``0 < |n| <= n_max``.

    The F-part is tested by Stallings membership and read off as a spelling
    over ``H_gens``; the spelling fixes the central part up to the central
    parts of relations among the F-parts.  When the F-parts are a free basis
    (Stallings rank equals the number of generators) there are no such
    relations and the spelling is unique.  Otherwise the relations found
    while folding give the ambiguity exactly, the decision is still exact,
    and the basis line of the certificate is marked failed (or
    :class:`BasisPropertyFails` is raised with ``require_basis``).
    """
    from math import gcd

    from .freegroup import spelling_of

    H_gens = list(H_gens)
    if not H_gens:
        raise ValueError("empty generating set")
    alphabet = H_gens[0].word.alphabet
    names = list(gen_names) if gen_names else [f"h{k + 1}" for k in range(len(H_gens))]
    words = [h.word for h in H_gens]
    graph = stallings_fold(words, alphabet)
    if require_basis and not graph.is_basis:
        raise BasisPropertyFails(
            f"F-parts {[w.str_letters() for w in words]} have Stallings rank {graph.rank}, "
            f"not {len(words)}: no unique spellings"
        )

    def central_of(spelling) -> int:
        return sum(s * H_gens[j].central for j, s in spelling)

    step = 0
    for rel in graph.kernel:
        step = gcd(step, central_of(rel))

    checks = []
    ns = list(range(1, n_max + 1))
    if include_negative:
        ns += [-n for n in range(1, n_max + 1)]
    for n in ns:
        power = target ** n
        spelling = spelling_of(graph, power.word)
        if spelling is None:
            checks.append(PowerCheck(n, power.word.str_letters(), False, None, None, power.central, False, step))
            continue
        implied = central_of(spelling)
        diff = power.central - implied
        member = diff == 0 if step == 0 else diff % step == 0
        checks.append(PowerCheck(n, power.word.str_letters(), True, _spelling_text(spelling, names),
                                 implied, power.central, member, step))
    structural = [
        (f"basis property: Stallings rank {graph.rank} = {len(words)} generators", graph.is_basis),
        (f"central exponent of the target {target.central} != 0", target.central != 0),
        (f"F-part of the target is trivial ({target.word.str_letters()})", target.word.is_identity()),
    ]
    # All three together: every power target^n has F-part 1, whose unique
    # spelling is empty, so its central part n*c != 0 can never be matched.
    return PowerCertificate(graph.is_basis, graph.rank, len(words), step, checks, structural, graph.render())


def compose_chain(chain: Sequence[Callable]) -> Callable:
    def run(w):
        for h in chain:
            w = h(w)
        return w
    return run


@dataclass
class CosetCertificate:
    n_max: int
    power_certificate: PowerCertificate | None
    distinct_pairs: int
    refused_at: int | None
    lines: list

    @property
    def ok(self) -> bool:
        return self.refused_at is None

    @property
    def certified_cosets(self) -> int:
        return self.n_max + 1 if self.ok else (self.refused_at or 1)


def coset_certificate(
    S_elt: FreeWord,
    E_gens: Sequence[FreeWord],
    hom_chain: Sequence[Callable],
    n_max: int,
    gen_names: Sequence[str] | None = None,
) -> CosetCertificate:
    """Certify ``g^m E != g^n E`` for ``0 <= m < n <= n_max``.

    ``g^m E = g^n E`` iff ``g^(n-m)`` lies in ``E``; the chain maps into
    ``Z x F`` and a non-member there is a non-member upstairs.  So it
    suffices to rule out ``g^k`` for ``k = 1..n_max`` in the image.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max == 0:
        return CosetCertificate(0, None, 0, None, ["n_max = 0: a single coset, nothing to separate"])
    h = compose_chain(hom_chain)
    H = [h(e) for e in E_gens]
    target = h(S_elt)
    names = list(gen_names) if gen_names else [e.str_letters() for e in E_gens]
    cert = central_power_not_in_subgroup(H, target, n_max, names, include_negative=False)
    lines = [c.line() for c in cert.checks]
    refused = cert.first_member
    if refused is None:
        pairs = (n_max + 1) * n_max // 2
        lines.append(f"all {pairs} pairs (m < n <= {n_max}) of cosets g^m E, g^n E are distinct")
    else:
        pairs = 0
        lines.append(f"refused: g^{refused} lies in the image of E; cosets g^0 E and g^{refused} E may coincide")
    return CosetCertificate(n_max, cert, pairs, refused, lines)


def brute_force_members(H_gens: Sequence[CentralExtElement], max_len: int) -> set:
    """All products of at most ``max_len`` letters from ``H_gens`` and inverses (as hashable keys)."""
    letters = [(h, 1) for h in H_gens] + [(h, -1) for h in H_gens]
    start = CentralExtElement(0, H_gens[0].word.alphabet.identity())
    seen = {(0, ())}
    frontier = [start]
    for _ in range(max_len):
        nxt = []
        for e in frontier:
            for h, s in letters:
                f = e * (h if s == 1 else h.inverse())
                key = (f.central, f.word.letters)
                if key not in seen:
                    seen.add(key)
                    nxt.append(f)
        frontier = nxt
    return seen


__all__ = [
    "GroupPresentation", "FreeTarget", "CentralExtElement", "CentralExtGroup", "SemidirectGroup",
    "Homomorphism", "HomCheck", "check_homomorphism", "semidirect_normal_form", "central_ext_ops",
    "central_power_not_in_subgroup", "coset_certificate", "PowerCertificate", "CosetCertificate",
    "UnsupportedTarget", "MissingAction", "BasisPropertyFails", "brute_force_members", "compose_chain",
    "SpellingUnavailable",
]
