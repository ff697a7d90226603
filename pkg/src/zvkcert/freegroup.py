"""Free groups: reduced words, endomorphisms, and Stallings foldings.

Words are read left to right as path composition, so ``conj(u, w)`` is
``w^-1 u w``.  Text form is space-separated generator names with ``^-1`` (or
``^n``) exponents, e.g. ``"s2 c r1 s1 c r2"`` or ``"a^2 b^-1"``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Letter = tuple  # (generator index, +1 | -1)


class AlphabetMismatch(ValueError):
    pass


class SpellingUnavailable(RuntimeError):
    pass


class WordSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    names: tuple

    def __init__(self, names: Iterable[str] | str, allow_empty: bool = False):
        if isinstance(names, str):
            names = [n for n in re.split(r"[\s,]+", names) if n]
        names = tuple(names)
        if not names and not allow_empty:
            raise ValueError("an alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"repeated generator names in {names}")
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", n):
                raise ValueError(f"bad generator name {n!r}")
        object.__setattr__(self, "names", names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetMismatch(f"{name!r} is not a generator of {self}") from None

    def gen(self, name: str) -> "FreeWord":
        return FreeWord(self, [(self.index(name), 1)])

    def gens(self) -> tuple["FreeWord", ...]:
        return tuple(FreeWord(self, [(i, 1)]) for i in range(len(self.names)))

    def identity(self) -> "FreeWord":
        return FreeWord(self, ())

    def word(self, text: str) -> "FreeWord":
        return parse_word(self, text)

    def __str__(self):
        return "{" + ", ".join(self.names) + "}"


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?")


def parse_word(alphabet: Alphabet, text: str) -> "FreeWord":
    """Parse ``"a b^-1 c^3"``; ``""``, ``"1"`` and ``"e"`` (if not a generator) are the identity."""
    text = text.strip()
    if text in ("", "1") or (text in ("e", "eps") and text not in alphabet.names):
        return FreeWord(alphabet, ())
    letters: list = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise WordSyntaxError(f"cannot parse token {tok!r} in {text!r}")
        i = alphabet.index(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if k > 0 else -1
        letters.extend([(i, sign)] * abs(k))
    return FreeWord(alphabet, letters)


def _free_reduce(letters: Iterable[Letter]) -> tuple:
    stack: list = []
    for g, s in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


class FreeWord:
    """A freely reduced word over an :class:`Alphabet`."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()):
        letters = tuple((int(g), int(s)) for g, s in letters)
        n = len(alphabet)
        for g, s in letters:
            if not 0 <= g < n or s not in (1, -1):
                raise ValueError(f"bad letter {(g, s)} for alphabet {alphabet}")
        self.alphabet = alphabet
        self.letters = _free_reduce(letters)

    def _check(self, other: "FreeWord"):
        if not isinstance(other, FreeWord):
            raise TypeError(f"expected a FreeWord, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check(other)
        return FreeWord(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.alphabet, [(g, -s) for g, s in reversed(self.letters)])

    def __invert__(self):
        return self.inverse()

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return FreeWord(self.alphabet, base.letters * abs(n))

    def conj(self, w: "FreeWord") -> "FreeWord":
        """``w^-1 self w``."""
        self._check(w)
        return w.inverse() * self * w

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self.letters == other.letters

    def __hash__(self):
        return hash((self.alphabet, self.letters))

    def exponent_sum(self, gen: str | int) -> int:
        i = self.alphabet.index(gen) if isinstance(gen, str) else gen
        return sum(s for g, s in self.letters if g == i)

    def cyclic_reduce(self) -> "FreeWord":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return FreeWord(self.alphabet, ls)

    def __str__(self):
        if not self.letters:
            return "1"
        out = []
        i = 0
        ls = self.letters
        while i < len(ls):
            j = i
            while j < len(ls) and ls[j] == ls[i]:
                j += 1
            name = self.alphabet.names[ls[i][0]]
            k = (j - i) * ls[i][1]
            out.append(name if k == 1 else f"{name}^{k}")
            i = j
        return " ".join(out)

    def str_letters(self) -> str:
        """One token per letter: ``a a b^-1`` rather than ``a^2 b^-1``."""
        if not self.letters:
            return "1"
        names = self.alphabet.names
        return " ".join(names[g] if s == 1 else f"{names[g]}^-1" for g, s in self.letters)

    def __repr__(self):
        return f"FreeWord({self})"


def reduce(w: FreeWord) -> FreeWord:
    # FreeWord is reduced on construction; kept as an explicit operation.
    return FreeWord(w.alphabet, w.letters)


def word_arith(op: str, *args):
    if op == "mul":
        out = args[0]
        for w in args[1:]:
            out = out * w
        return out
    if op == "inv":
        (w,) = args
        return w.inverse()
    if op == "conj":
        u, w = args
        return u.conj(w)
    if op == "pow":
        w, n = args
        return w ** n
    raise ValueError(f"unknown word operation {op!r}")


def exponent_sum(w: FreeWord, gen: str | int) -> int:
    return w.exponent_sum(gen)


class Endomorphism:
    """Homomorphism between free groups, given by the images of generators."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Alphabet, target: Alphabet, images: Sequence[FreeWord] | Mapping[str, FreeWord]):
        if isinstance(images, Mapping):
            missing = [g for g in source.names if g not in images]
            if missing:
                raise AlphabetMismatch(f"no image for {missing}")
            images = [images[g] for g in source.names]
        images = tuple(images)
        if len(images) != len(source):
            raise AlphabetMismatch(f"{len(images)} images for {len(source)} generators")
        for w in images:
            if w.alphabet != target:
                raise AlphabetMismatch(f"image {w} is not over {target}")
        self.source, self.target, self.images = source, target, images

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Endomorphism":
        return cls(alphabet, alphabet, alphabet.gens())

    @classmethod
    def from_text(cls, source: Alphabet, target: Alphabet, images: Mapping[str, str]) -> "Endomorphism":
        return cls(source, target, {g: parse_word(target, images.get(g, g)) for g in source.names})

    def __call__(self, w: FreeWord) -> FreeWord:
        if w.alphabet != self.source:
            raise AlphabetMismatch(f"word over {w.alphabet}, map defined on {self.source}")
        letters: list = []
        for g, s in w.letters:
            img = self.images[g]
            letters.extend(img.letters if s == 1 else img.inverse().letters)
        return FreeWord(self.target, letters)

    def image(self, name: str) -> FreeWord:
        return self.images[self.source.index(name)]

    def then(self, other: "Endomorphism") -> "Endomorphism":
        """Apply ``self`` first, then ``other``."""
        if other.source != self.target:
            raise AlphabetMismatch("cannot compose: target/source differ")
        return Endomorphism(self.source, other.target, [other(w) for w in self.images])

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return (self.source, self.target, self.images) == (other.source, other.target, other.images)

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def is_identity(self) -> bool:
        return self.source == self.target and self.images == self.source.gens()

    def __str__(self):
        return ", ".join(f"{g} -> {w}" for g, w in zip(self.source.names, self.images))

    def __repr__(self):
        return f"Endomorphism({self})"


def apply_endo(e: Endomorphism, w: FreeWord) -> FreeWord:
    return e(w)


# ---------------------------------------------------------------------------
# Stallings foldings


@dataclass
class _Edge:
    src: int
    dst: int
    gen: int
    tag: tuple  # reduced letters over the subgroup-generator alphabet
    alive: bool = True


def _tag_mul(*tags: tuple) -> tuple:
    out: list = []
    for t in tags:
        out.extend(t)
    return _free_reduce(out)


def _tag_inv(t: tuple) -> tuple:
    return tuple((g, -s) for g, s in reversed(t))


@dataclass(frozen=True)
class StallingsGraph:
    """Folded core graph of a subgroup of a free group.

    Vertices are ``0..n-1`` with basepoint 0.  ``edges`` lists directed
    edges ``(src, generator index, dst)``; each stands for a positive letter
    and is traversed backwards for the inverse letter.  ``tags`` holds, per
    edge, a word in the subgroup generators used for spelling (only
    meaningful when ``is_basis``).
    """

    alphabet: Alphabet
    generators: tuple
    num_vertices: int
    edges: tuple
    tags: tuple
    basis_consistent: bool
    kernel: tuple = ()  # words in the generators (tag letters) that evaluate to 1
    _out: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    def __post_init__(self):
        out: dict = {}
        for k, (u, g, v) in enumerate(self.edges):
            out[(u, g, 1)] = (v, k)
            out[(v, g, -1)] = (u, k)
        object.__setattr__(self, "_out", out)

    @property
    def basepoint(self) -> int:
        return 0

    def step(self, vertex: int, letter: Letter):
        """Follow ``letter`` from ``vertex``; ``None`` if there is no such edge."""
        hit = self._out.get((vertex, letter[0], letter[1]))
        return hit

    def degree(self, v: int) -> int:
        return sum(1 for (u, _, _) in self._out if u == v)

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    @property
    def is_basis(self) -> bool:
        """The given generators form a free basis of the subgroup they generate."""
        nontrivial = [w for w in self.generators if not w.is_identity()]
        return self.basis_consistent and len(nontrivial) == len(self.generators) == self.rank

    def is_complete(self) -> bool:
        n = len(self.alphabet)
        return all(
            (v, g, s) in self._out for v in range(self.num_vertices) for g in range(n) for s in (1, -1)
        )

    def render(self) -> str:
        """Adjacency text: header line, then one ``u -g-> v`` line per edge."""
        lines = [f"stallings-graph vertices={self.num_vertices} edges={len(self.edges)} base=0"]
        for u, g, v in self.edges:
            lines.append(f"  {u} -{self.alphabet.names[g]}-> {v}")
        return "\n".join(lines)


def _generator_alphabet(n: int) -> Alphabet:
    return Alphabet([f"h{i + 1}" for i in range(max(n, 1))])


def stallings_fold(gens: Sequence[FreeWord], alphabet: Alphabet | None = None) -> StallingsGraph:
    """Fold the bouquet of ``gens`` into the Stallings graph of the subgroup.

    Generators are processed in order and clashes in FIFO order, so the
    output is deterministic.  Each edge carries a tag in the free group on
    the generators; merges re-gauge one endpoint so that the product of tags
    along any closed path at the base always evaluates to its label.  A clash
    between two parallel edges with different tags exhibits a nontrivial
    relation among the generators; such relations (and trivial generators)
    are collected in ``kernel`` and normally generate the kernel of the map
    from the free group on the generators onto the subgroup.
    """
    gens = tuple(gens)
    if alphabet is None:
        if not gens:
            raise ValueError("need an alphabet for an empty generating set")
        alphabet = gens[0].alphabet
    for w in gens:
        if w.alphabet != alphabet:
            raise AlphabetMismatch(f"{w} not over {alphabet}")

    edges: list[_Edge] = []
    incident: dict[int, list[int]] = {0: []}
    next_vertex = 1

    def add_edge(u, v, g, tag):
        edges.append(_Edge(u, v, g, tag))
        k = len(edges) - 1
        incident.setdefault(u, []).append(k)
        if v != u:
            incident.setdefault(v, []).append(k)
        return k

    for j, w in enumerate(gens):
        if w.is_identity():
            continue
        cur = 0
        n = len(w.letters)
        for pos, (g, s) in enumerate(w.letters):
            nxt = 0 if pos == n - 1 else next_vertex
            if nxt:
                next_vertex += 1
                incident[nxt] = []
            tag = ((j, 1),) if pos == 0 else ()
            if s == 1:
                add_edge(cur, nxt, g, tag)
            else:
                add_edge(nxt, cur, g, _tag_inv(tag))
            cur = nxt

    consistent = True
    kernel: list = [((j, 1),) for j, w in enumerate(gens) if w.is_identity()]
    queue: deque[int] = deque(sorted(incident))
    queued = set(queue)

    def half_edges(v):
        # (gen, direction, edge index, far endpoint, tag read leaving v)
        out = []
        for k in incident.get(v, []):
            e = edges[k]
            if not e.alive:
                continue
            if e.src == v:
                out.append((e.gen, 1, k, e.dst, e.tag))
            if e.dst == v:
                out.append((e.gen, -1, k, e.src, _tag_inv(e.tag)))
        return out

    def regauge(v, h):
        # Every path entering v picks up h, every path leaving v picks up h^-1.
        for k in incident.get(v, []):
            e = edges[k]
            if not e.alive:
                continue
            if e.dst == v and e.src == v:
                e.tag = _tag_mul(_tag_inv(h), e.tag, h)
            elif e.dst == v:
                e.tag = _tag_mul(e.tag, h)
            else:
                e.tag = _tag_mul(_tag_inv(h), e.tag)

    def enqueue(v):
        if v not in queued:
            queue.append(v)
            queued.add(v)

    while queue:
        v = queue.popleft()
        queued.discard(v)
        seen: dict = {}
        clash = None
        for he in half_edges(v):
            key = (he[0], he[1])
            if key in seen and seen[key][2] != he[2]:
                clash = (seen[key], he)
                break
            seen.setdefault(key, he)
        if clash is None:
            continue
        (g, d, k1, w1, t1), (_, _, k2, w2, t2) = clash
        if w1 != w2:
            # Merge w2 into w1 (never move the basepoint).
            keep, drop, tk, td, kk, kd = (w1, w2, t1, t2, k1, k2) if w2 != 0 else (w2, w1, t2, t1, k2, k1)
            # Gauge so the two half-edges leaving v carry equal tags:
            # td * h == tk  =>  h = td^-1 tk.
            regauge(drop, _tag_mul(_tag_inv(td), tk))
            edges[kd].alive = False
            for k in incident.get(drop, []):
                e = edges[k]
                if not e.alive:
                    continue
                if e.src == drop:
                    e.src = keep
                if e.dst == drop:
                    e.dst = keep
                if k not in incident.setdefault(keep, []):
                    incident[keep].append(k)
            incident.pop(drop, None)
            enqueue(keep)
        else:
            if t1 != t2:
                consistent = False
                kernel.append(_tag_mul(t1, _tag_inv(t2)))
            edges[k2].alive = False
            enqueue(w1)
        enqueue(v)

    # Prune hanging trees (non-base vertices of degree one).
    changed = True
    while changed:
        changed = False
        for v in list(incident):
            if v == 0:
                continue
            live = [k for k in incident[v] if edges[k].alive]
            deg = sum((edges[k].src == v) + (edges[k].dst == v) for k in live)
            if deg <= 1:
                for k in live:
                    edges[k].alive = False
                incident.pop(v)
                changed = True

    # Renumber deterministically by breadth-first search from the base.
    order = {0: 0}
    bfs = deque([0])
    adjacency: dict[int, list] = {}
    for k, e in enumerate(edges):
        if e.alive:
            adjacency.setdefault(e.src, []).append((e.gen, 1, e.dst))
            adjacency.setdefault(e.dst, []).append((e.gen, -1, e.src))
    while bfs:
        v = bfs.popleft()
        for g, s, w in sorted(adjacency.get(v, []), key=lambda t: (t[0], -t[1])):
            if w not in order:
                order[w] = len(order)
                bfs.append(w)
    live_edges = sorted(
        ((order[e.src], e.gen, order[e.dst], e.tag) for e in edges if e.alive),
        key=lambda t: (t[0], t[1], t[2]),
    )
    return StallingsGraph(
        alphabet=alphabet,
        generators=gens,
        num_vertices=len(order),
        edges=tuple((u, g, v) for u, g, v, _ in live_edges),
        tags=tuple(t for *_, t in live_edges),
        basis_consistent=consistent,
        kernel=tuple(kernel),
    )


def read_word(graph: StallingsGraph, w: FreeWord):
    """Follow ``w`` from the base; returns (end vertex, tag product) or None if stuck."""
    if w.alphabet != graph.alphabet:
        raise AlphabetMismatch(f"{w} not over {graph.alphabet}")
    v = 0
    tag: tuple = ()
    for g, s in w.letters:
        hit = graph.step(v, (g, s))
        if hit is None:
            return None
        v, k = hit
        t = graph.tags[k]
        tag = _tag_mul(tag, t if s == 1 else _tag_inv(t))
    return v, tag


def spelling_of(graph: StallingsGraph, w: FreeWord):
    """Some spelling of ``w`` over the generators (unique when ``is_basis``), or None."""
    hit = read_word(graph, w)
    if hit is None or hit[0] != 0:
        return None
    return list(hit[1])


def subgroup_member(graph: StallingsGraph, w: FreeWord, spell: bool = False):
    """Decide ``w`` in the subgroup; returns ``(is_member, spelling)``.

    ``spelling`` is a list of ``(generator index, sign)`` pairs over the
    original generating list, present only when ``spell`` is set and the
    word is a member.  Spelling needs the generators to be a free basis;
    otherwise :class:`SpellingUnavailable` is raised.
    """
    hit = read_word(graph, w)
    member = hit is not None and hit[0] == 0
    if not spell or not member:
        return member, None
    if not graph.is_basis:
        raise SpellingUnavailable(
            f"generators are not a free basis (rank {graph.rank}, {len(graph.generators)} generators)"
        )
    return True, list(hit[1])


def evaluate_spelling(gens: Sequence[FreeWord], spelling: Sequence[Letter], alphabet: Alphabet) -> FreeWord:
    out = FreeWord(alphabet, ())
    for j, s in spelling:
        out = out * (gens[j] if s == 1 else gens[j].inverse())
    return out


def subgroup_rank_index(graph: StallingsGraph):
    """``(rank, index)``; index is ``None`` for infinite index."""
    index = graph.num_vertices if graph.is_complete() else None
    return graph.rank, index


__all__ = [
    "Alphabet", "FreeWord", "Endomorphism", "AlphabetMismatch", "SpellingUnavailable",
    "WordSyntaxError", "parse_word", "reduce", "word_arith", "exponent_sum", "apply_endo",
    "StallingsGraph", "stallings_fold", "subgroup_member", "subgroup_rank_index",
    "evaluate_spelling", "read_word", "spelling_of",
]
