"""Braid words and the Artin action on free groups.

``s_i`` (1-based) is the counter-clockwise half twist exchanging strands
``i`` and ``i+1``, where strands are ordered left to right and the free
generators are loops from a basepoint far up the imaginary axis.  Its action
on ``F<x_1..x_n>`` is

    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,

and a word acts letter by letter from the left (first letter first).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .freegroup import Alphabet, Endomorphism, FreeWord


class RangeError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise RangeError("a braid needs at least one strand")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1 or s not in (1, -1):
                raise RangeError(f"letter s{i}^{s} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad braid token {tok!r}")
            k = int(m.group(2) or 1)
            letters += [(int(m.group(1)), 1 if k > 0 else -1)] * abs(k)
        return cls(strands, tuple(letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise RangeError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def free_reduce(self) -> "BraidWord":
        stack: list = []
        for i, s in self.letters:
            if stack and stack[-1] == (i, -s):
                stack.pop()
            else:
                stack.append((i, s))
        return BraidWord(self.strands, tuple(stack))

    def permutation(self) -> tuple:
        """Where each starting position ends up: ``perm[start] = end`` (0-based)."""
        pos = list(range(self.strands))  # pos[strand] = current position
        at = list(range(self.strands))   # at[position] = strand
        for i, _ in self.letters:
            a, b = at[i - 1], at[i]
            at[i - 1], at[i] = b, a
            pos[a], pos[b] = i, i - 1
        return tuple(pos)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(self.strands))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)


def default_alphabet(n: int) -> Alphabet:
    return Alphabet([f"x{i + 1}" for i in range(n)])


def _generator_action(n: int, i: int, sign: int, alphabet: Alphabet) -> Endomorphism:
    gens = list(alphabet.gens())
    xi, xj = gens[i - 1], gens[i]
    images = list(gens)
    if sign == 1:
        images[i - 1] = xi * xj * xi.inverse()
        images[i] = xi
    else:
        images[i - 1] = xj
        images[i] = xj.inverse() * xi * xj
    return Endomorphism(alphabet, alphabet, images)


def artin_action(b: BraidWord, alphabet: Alphabet | None = None, mirror: bool = False) -> Endomorphism:
    """Automorphism of the free group induced by ``b``.

    ``mirror`` swaps the roles of positive and negative letters (the other
    common convention); it exists for calibration checks only.
    """
    alphabet = alphabet or default_alphabet(b.strands)
    if len(alphabet) != b.strands:
        raise RangeError(f"{len(alphabet)} generators for {b.strands} strands")
    result = Endomorphism.identity(alphabet)
    cache: dict = {}
    for i, s in b.letters:
        s = -s if mirror else s
        key = (i, s)
        if key not in cache:
            cache[key] = _generator_action(b.strands, i, s, alphabet)
        result = result.then(cache[key])
    return result


def half_twist_word(n: int, lo: int, hi: int) -> tuple:
    """Positive half twist on consecutive strands ``lo..hi``: (s_lo..s_{hi-1})(s_lo..s_{hi-2})..(s_lo)."""
    letters = []
    for top in range(hi - 1, lo - 1, -1):
        letters.extend((k, 1) for k in range(lo, top + 1))
    return tuple(letters)


def block_twist(n: int, lo: int, hi: int, kind: str = "full", orientation: str = "ccw") -> BraidWord:
    if not 1 <= lo <= hi <= n:
        raise RangeError(f"block [{lo}..{hi}] not inside 1..{n}")
    if kind not in ("half", "full"):
        raise ValueError(f"kind must be half or full, not {kind!r}")
    if orientation not in ("ccw", "cw"):
        raise ValueError(f"orientation must be ccw or cw, not {orientation!r}")
    word = BraidWord(n, half_twist_word(n, lo, hi))
    if kind == "full":
        word = word * word
    return word if orientation == "ccw" else word.inverse()


def product_of_generators(alphabet: Alphabet) -> FreeWord:
    out = alphabet.identity()
    for g in alphabet.gens():
        out = out * g
    return out


__all__ = [
    "BraidWord", "RangeError", "artin_action", "block_twist", "half_twist_word",
    "default_alphabet", "product_of_generators",
]
