"""Independent brute-force oracles shared by the unit and acceptance tests."""
import itertools
import random

from zvkcert.freegroup import Alphabet, FreeWord

AB = Alphabet(["a", "b"])


def products_up_to(gens, max_len):
    """Reduced letter tuples of all products of at most ``max_len`` generator letters."""
    alphabet = gens[0].alphabet
    steps = [g.letters for g in gens] + [g.inverse().letters for g in gens]
    seen = {()}
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for s in steps:
                v = FreeWord(alphabet, w + s).letters
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def all_words(alphabet, max_len):
    letters = [(g, s) for g in range(len(alphabet)) for s in (1, -1)]
    out = {()}
    for n in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=n):
            out.add(FreeWord(alphabet, combo).letters)
    return [FreeWord(alphabet, w) for w in sorted(out, key=lambda w: (len(w), w))]


def random_subgroups(count, seed=20240601, max_gens=3, max_len=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, max_gens)
        gens = []
        for _ in range(k):
            n = rng.randint(1, max_len)
            w = FreeWord(AB, [(rng.randint(0, 1), rng.choice((1, -1))) for _ in range(n)])
            if not w.is_identity():
                gens.append(w)
        if gens:
            out.append(gens)
    return out
