"""Braid monodromy of real line arrangements and Zariski-van Kampen presentations.

The arrangement lives in C^2 with coordinates (x, y) and is projected to the
x-line.  Lines that are not vertical ("generic" lines) give the punctures of
each fiber; vertical lines are whole fibers.  Loops in the base are closed
polylines with Gaussian-rational vertices.  Over a straight segment each
fiber puncture moves affinely, so every event of the tracking (two punctures
swapping their left-to-right order) is the solution of a linear equation over
Q and is located exactly.

Fiber basepoint.  By default the fiber group is based far up the imaginary
axis of the fiber (the usual choice for braid monodromy), and monodromy is
the plain Artin action.  If a ``section`` line is given, the fiber basepoint
is the point of the section over the current base point; the section is
then tracked as an extra strand and the action is transported back to it.

Strand order ties (equal real part) are broken by the imaginary part; this
is the same as ordering by ``Re(y) + eps*Im(y)`` for an infinitesimal
``eps > 0``, which is how simultaneous events are separated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .braid import BraidWord, artin_action
from .exact import QComplex, Q, fmt_scalar
from .freegroup import Alphabet, Endomorphism, FreeWord


class DegenerateInput(ValueError):
    pass


class OnPuncture(ValueError):
    pass


class PunctureCollision(ValueError):
    pass


class NotMeridian(ValueError):
    pass


class ArrangementSyntaxError(ValueError):
    pass


SECTION_STRAND = "*"


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c``, normalised so the first nonzero of (a, b) is 1."""

    a: Fraction
    b: Fraction
    c: Fraction
    name: str = ""

    def __post_init__(self):
        a, b, c = Q(self.a), Q(self.b), Q(self.c)
        if a == 0 and b == 0:
            raise DegenerateInput(f"line {self.name!r} has a = b = 0")
        lead = a if a != 0 else b
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    @property
    def vertical(self) -> bool:
        return self.b == 0

    def y_at(self, x) -> QComplex:
        if self.vertical:
            raise DegenerateInput(f"{self.name} is vertical")
        x = QComplex.of(x)
        return (QComplex(self.c) - x * self.a) / self.b

    def x_value(self) -> Fraction:
        if not self.vertical:
            raise DegenerateInput(f"{self.name} is not vertical")
        return self.c / self.a

    def same_locus(self, other: "Line") -> bool:
        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def swapped(self) -> "Line":
        return Line(self.b, self.a, self.c, self.name)

    def __str__(self):
        terms = []
        for coef, v in ((self.a, "x"), (self.b, "y")):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else fmt_scalar(abs(coef)) + "*"
            terms.append(("- " if coef < 0 else "+ ") + mag + v)
        lhs = " ".join(terms)
        lhs = lhs[2:] if lhs.startswith("+ ") else "-" + lhs[2:]
        return f"{self.name}: {lhs} = {fmt_scalar(self.c)}"


@dataclass(frozen=True)
class Arrangement:
    """Generic (non-vertical) lines L and vertical fiber lines J."""

    generic: tuple
    fibers: tuple = ()

    def __post_init__(self):
        generic, fibers = tuple(self.generic), tuple(self.fibers)
        if not generic:
            raise DegenerateInput("an arrangement needs at least one non-vertical line")
        for ln in generic:
            if ln.vertical:
                raise DegenerateInput(
                    f"line {ln.name} is a fiber of the projection; the projection must be generic for L"
                )
        for ln in fibers:
            if not ln.vertical:
                raise DegenerateInput(f"fiber line {ln.name} is not vertical")
        allines = generic + fibers
        names = [ln.name for ln in allines]
        if len(set(names)) != len(names):
            raise DegenerateInput(f"repeated line names {names}")
        for p, q in combinations(allines, 2):
            if p.same_locus(q):
                raise DegenerateInput(f"lines {p.name} and {q.name} coincide")
        object.__setattr__(self, "generic", generic)
        object.__setattr__(self, "fibers", fibers)

    @classmethod
    def from_lines(cls, lines: Iterable[Line]) -> "Arrangement":
        lines = list(lines)
        return cls(tuple(ln for ln in lines if not ln.vertical), tuple(ln for ln in lines if ln.vertical))

    def line(self, name: str) -> Line:
        for ln in self.generic + self.fibers:
            if ln.name == name:
                return ln
        raise KeyError(name)


def parse_arrangement(text: str) -> Arrangement:
    """Read ``name a b c`` lines (meaning a*x + b*y = c) and a ``project x|y`` directive.

    With ``project y`` the roles of x and y are exchanged, so the projection
    is always to the first coordinate internally.  ``#`` starts a comment.
    """
    project = "x"
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if parts[0] == "project":
            if len(parts) != 2 or parts[1] not in ("x", "y"):
                raise ArrangementSyntaxError(f"line {lineno}: expected 'project x' or 'project y'")
            project = parts[1]
            continue
        if len(parts) != 4:
            raise ArrangementSyntaxError(f"line {lineno}: expected 'name a b c', got {body!r}")
        try:
            a, b, c = (Q(p) for p in parts[1:])
        except (ValueError, ZeroDivisionError) as exc:
            raise ArrangementSyntaxError(f"line {lineno}: {exc}") from None
        lines.append(Line(a, b, c, parts[0]))
    if project == "y":
        lines = [ln.swapped() for ln in lines]
    return Arrangement.from_lines(lines)


def _sort_key(z: QComplex):
    return (z.re, z.im)


def base_punctures(arr: Arrangement) -> list[QComplex]:
    """Images in the base of the crossings of L and of the fiber lines J, sorted."""
    values: set = set()
    for p, q in combinations(arr.generic, 2):
        det = p.a * q.b - q.a * p.b
        if det == 0:
            continue  # parallel, distinct (coincident lines are rejected earlier)
        values.add((p.c * q.b - q.c * p.b) / det)
    for ln in arr.fibers:
        values.add(ln.x_value())
    return [QComplex(v) for v in sorted(values)]


def strand_values(arr: Arrangement, x, section: Line | None = None) -> list[tuple[str, QComplex]]:
    x = QComplex.of(x)
    out = [(ln.name, ln.y_at(x)) for ln in arr.generic]
    if section is not None:
        out.append((SECTION_STRAND, section.y_at(x)))
    return out


def fiber_punctures(arr: Arrangement, x) -> list[tuple[str, QComplex]]:
    """Named fiber punctures over ``x``, in strand order (real part, then imaginary part)."""
    x = QComplex.of(x)
    if any(p == x for p in base_punctures(arr)):
        raise OnPuncture(f"x = {x} is a base puncture")
    pts = strand_values(arr, x)
    return sorted(pts, key=lambda item: _sort_key(item[1]))


def section_collisions(arr: Arrangement, section: Line) -> list[QComplex]:
    """Base values where the section meets a generic line (the section strand would collide)."""
    out = set()
    for ln in arr.generic:
        det = ln.a * section.b - section.a * ln.b
        if det != 0:
            out.add((ln.c * section.b - section.c * ln.b) / det)
    return [QComplex(v) for v in sorted(out)]


@dataclass(frozen=True)
class BaseLoop:
    """Closed polyline in the base; ``vertices[0]`` is the basepoint."""

    vertices: tuple

    def __post_init__(self):
        vs = tuple(QComplex.of(v) for v in self.vertices)
        if not vs:
            raise ValueError("a loop needs at least its basepoint")
        if vs[0] != vs[-1]:
            vs = vs + (vs[0],)
        object.__setattr__(self, "vertices", vs)

    @property
    def basepoint(self) -> QComplex:
        return self.vertices[0]

    def segments(self):
        return zip(self.vertices[:-1], self.vertices[1:])

    def reversed(self) -> "BaseLoop":
        return BaseLoop(tuple(reversed(self.vertices)))

    def then(self, other: "BaseLoop") -> "BaseLoop":
        if other.basepoint != self.basepoint:
            raise ValueError("loops have different basepoints")
        return BaseLoop(self.vertices + other.vertices[1:])

    def render(self) -> str:
        b = self.basepoint
        lines = [f"basepoint {fmt_scalar(b.re)} {fmt_scalar(b.im)}"]
        for v in self.vertices[1:-1]:
            lines.append(f"{fmt_scalar(v.re)} {fmt_scalar(v.im)}")
        return "\n".join(lines)


def parse_loops(text: str):
    """Parse a loop file.

    Format::

        section a b c            # optional: fiber basepoint on a*x + b*y = c
        loop NAME                # starts a loop (name used as base generator)
        basepoint RE IM
        RE IM                    # polyline vertices (closing vertex optional)
        ...

    A file with no ``loop`` header holds a single loop named ``y1``.
    Returns ``(names, loops, section)``.
    """
    names: list[str] = []
    loops: list[list[QComplex]] = []
    section = None
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        try:
            if parts[0] == "section":
                a, b, c = (Q(p) for p in parts[1:4])
                if len(parts) != 4:
                    raise ValueError("expected 'section a b c'")
                section = Line(a, b, c, SECTION_STRAND)
            elif parts[0] == "loop":
                names.append(parts[1] if len(parts) > 1 else f"y{len(names) + 1}")
                current = []
                loops.append(current)
            elif parts[0] == "basepoint":
                if current is None or current:
                    names.append(f"y{len(names) + 1}")
                    current = []
                    loops.append(current)
                current.append(QComplex(Q(parts[1]), Q(parts[2]) if len(parts) > 2 else Fraction(0)))
            else:
                if current is None:
                    raise ValueError("vertex before any 'loop' or 'basepoint' line")
                current.append(QComplex(Q(parts[0]), Q(parts[1]) if len(parts) > 1 else Fraction(0)))
        except (ValueError, IndexError, ZeroDivisionError) as exc:
            raise ArrangementSyntaxError(f"line {lineno}: {exc}") from None
    if section is not None and section.vertical:
        raise ArrangementSyntaxError("the section line must not be vertical")
    return names, [BaseLoop(tuple(vs)) for vs in loops if vs], section


# ---------------------------------------------------------------------------
# Winding numbers


def _cross(o: QComplex, a: QComplex, b: QComplex) -> Fraction:
    return (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)


def on_polyline(loop: BaseLoop, p: QComplex) -> bool:
    for a, b in loop.segments():
        if _cross(a, b, p) == 0 and min(a.re, b.re) <= p.re <= max(a.re, b.re) \
                and min(a.im, b.im) <= p.im <= max(a.im, b.im):
            return True
    return False


def winding_number(loop: BaseLoop, p) -> int:
    """Exact winding number of ``loop`` around ``p`` (counter-clockwise positive)."""
    p = QComplex.of(p)
    if on_polyline(loop, p):
        raise OnPuncture(f"loop passes through {p}")
    wn = 0
    for a, b in loop.segments():
        if a.im <= p.im:
            if b.im > p.im and _cross(a, b, p) > 0:
                wn += 1
        elif b.im <= p.im and _cross(a, b, p) < 0:
            wn -= 1
    return wn


# ---------------------------------------------------------------------------
# Braid extraction


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass
class BraidTrace:
    braid: BraidWord
    start_order: tuple          # strand names, left to right, at the basepoint
    events: list = field(default_factory=list)  # (segment index, strand moving right, strand moving left, letter)


def _segment_events(start: tuple, vals0: dict, vals1: dict, seg_index: int):
    """Crossing events of one straight segment, exactly, in time order.

    ``vals0``/``vals1`` map strand name to its fiber value at the two ends;
    in between every strand moves affinely.
    """
    events = []
    for i, j in combinations(start, 2):
        A = vals0[i] - vals0[j]
        B = (vals1[i] - vals1[j]) - A
        a, b, c, d = A.re, B.re, A.im, B.im
        # Collision: A + tB = 0 for some t in [0, 1].
        if b != 0:
            t = -a / b
            if 0 <= t <= 1 and c + t * d == 0:
                raise PunctureCollision(f"strands {i} and {j} collide on segment {seg_index}")
        elif a == 0:
            if d != 0:
                t = -c / d
                if 0 <= t <= 1:
                    raise PunctureCollision(f"strands {i} and {j} collide on segment {seg_index}")
            elif c == 0:
                raise PunctureCollision(f"strands {i} and {j} coincide on segment {seg_index}")
        if b == 0:
            continue  # perturbed key difference a + eps*c never changes sign
        # Crossing time of the perturbed key: T(eps) = -(a + eps c)/(b + eps d),
        # expanded to second order in eps.
        n0, n1, d0, d1 = -a, -c, b, d
        r = d1 / d0
        t0 = n0 / d0
        t1 = n1 / d0 - n0 * r / d0
        t2 = -n1 * r / d0 + n0 * r * r / d0
        inside = (0 < t0 < 1) or (t0 == 0 and t1 > 0) or (t0 == 1 and t1 < 0)
        if not inside:
            continue
        right_mover, left_mover = (i, j) if b > 0 else (j, i)
        im_sign = _sign(c * b - d * a) * _sign(b)  # sign of Im(y_i - y_j) at the crossing
        right_is_lower = (im_sign < 0) if right_mover == i else (im_sign > 0)
        events.append(((t0, t1, t2), right_mover, left_mover, 1 if right_is_lower else -1))
    events.sort(key=lambda e: e[0])
    return events


def trace_braid(arr: Arrangement, loop: BaseLoop, section: Line | None = None) -> BraidTrace:
    """Track the fiber punctures (and the section, if any) around ``loop``."""
    if section is not None and section.vertical:
        raise DegenerateInput("section must not be vertical")
    punct = base_punctures(arr)
    for p in punct:
        if on_polyline(loop, p):
            raise PunctureCollision(f"loop passes through base puncture {p}")
    vals = strand_values(arr, loop.basepoint, section)
    order = [name for name, _ in sorted(vals, key=lambda item: _sort_key(item[1]))]
    start = tuple(order)
    n = len(order)
    letters = []
    trace = BraidTrace(BraidWord(n), start)
    for k, (x0, x1) in enumerate(loop.segments()):
        if x0 == x1:
            continue
        v0 = dict(strand_values(arr, x0, section))
        v1 = dict(strand_values(arr, x1, section))
        events = _segment_events(start, v0, v1, k)
        prev_key = None
        prev_positions: set = set()
        for key, right, left, sign in events:
            pr, pl = order.index(right), order.index(left)
            if pl != pr + 1:
                raise DegenerateInput(
                    f"non-adjacent crossing of {right} and {left} on segment {k}; perturb the loop"
                )
            if key == prev_key and prev_positions & {pr, pl}:
                raise DegenerateInput(f"three strands meet in one event on segment {k}; perturb the loop")
            if key != prev_key:
                prev_positions = set()
            prev_key = key
            prev_positions |= {pr, pl}
            order[pr], order[pl] = left, right
            letters.append((pr + 1, sign))
            trace.events.append((k, right, left, (pr + 1, sign)))
        end_order = [name for name, _ in sorted(v1.items(), key=lambda item: _sort_key(item[1]))]
        if end_order != order:
            raise AssertionError(f"strand order drifted on segment {k}: {order} vs {end_order}")
    trace.braid = BraidWord(n, tuple(letters))
    return trace


def braid_along(arr: Arrangement, loop: BaseLoop, section: Line | None = None) -> BraidWord:
    return trace_braid(arr, loop, section).braid


# ---------------------------------------------------------------------------
# Monodromy on the fiber group


def _split_conjugate(w: FreeWord, gen: int) -> FreeWord:
    """Given reduced ``w = W x W^-1`` with ``x`` the generator ``gen``, return ``W``."""
    n = len(w.letters)
    if n % 2 == 0 or w.letters[n // 2] != (gen, 1):
        raise AssertionError(f"{w} is not a conjugate of generator {gen}")
    W = FreeWord(w.alphabet, w.letters[: n // 2])
    if W * FreeWord(w.alphabet, [(gen, 1)]) * W.inverse() != w:
        raise AssertionError(f"{w} is not a conjugate of generator {gen}")
    return W


def monodromy(
    arr: Arrangement,
    loop: BaseLoop,
    section: Line | None = None,
    fiber_names: Sequence[str] | None = None,
    _mirror: bool = False,
) -> tuple[Endomorphism, BraidTrace]:
    """Monodromy automorphism phi of the fiber group along ``loop``.

    Relations read ``y^-1 x y = phi(x)``.  Fiber generators are named after
    the lines (or by ``fiber_names``, in strand order at the basepoint).
    """
    trace = trace_braid(arr, loop, section)
    order = trace.start_order
    full = Alphabet([f"_s{k}" for k in range(len(order))])
    action = artin_action(trace.braid, full, mirror=_mirror)
    fiber_pos = [k for k, name in enumerate(order) if name != SECTION_STRAND]
    if fiber_names is None:
        fiber_names = [order[k] for k in fiber_pos]
    if len(fiber_names) != len(fiber_pos):
        raise ValueError(f"expected {len(fiber_pos)} fiber names")
    fiber = Alphabet(fiber_names)
    relabel = {k: idx for idx, k in enumerate(fiber_pos)}

    def to_fiber(w: FreeWord) -> FreeWord:
        return FreeWord(fiber, [(relabel[g], s) for g, s in w.letters if g in relabel])

    if section is None:
        W = fiber.identity()
    else:
        star = order.index(SECTION_STRAND)
        W = to_fiber(_split_conjugate(action.images[star], star))
    images = [W.inverse() * to_fiber(action.images[k]) * W for k in fiber_pos]
    return Endomorphism(fiber, fiber, images), trace


# ---------------------------------------------------------------------------
# Presentations


@dataclass
class ZvkPresentation:
    fiber_generators: Alphabet
    base_generators: Alphabet
    monodromy: list              # forward actions, one per base generator
    inverse_monodromy: list      # actions of the reversed loops
    killed: tuple                # base generators set to 1
    punctures: list              # base puncture of each loop
    braids: list                 # extracted braid words
    strand_order: tuple
    automorphism_checked: bool = False

    def relation_words(self) -> list[tuple[str, str, FreeWord]]:
        """``(base generator, fiber generator, phi(fiber generator))`` triples."""
        out = []
        for y, phi in zip(self.base_generators.names, self.monodromy):
            for x, img in zip(self.fiber_generators.names, phi.images):
                out.append((y, x, img))
        return out

    def group_presentation(self):
        """All generators and relators ``y^-1 x y phi(x)^-1`` (killed y replaced by 1)."""
        from .grouptheory import GroupPresentation

        names = list(self.fiber_generators.names) + [
            y for y in self.base_generators.names if y not in self.killed
        ]
        alpha = Alphabet(names)
        relators = []
        for y, phi in zip(self.base_generators.names, self.monodromy):
            for x, img in zip(self.fiber_generators.names, phi.images):
                lhs = alpha.gen(x)
                if y not in self.killed:
                    lhs = lhs.conj(alpha.gen(y))
                rhs = FreeWord(alpha, [(alpha.index(self.fiber_generators.names[g]), s) for g, s in img.letters])
                rel = lhs * rhs.inverse()
                if not rel.is_identity():
                    relators.append(rel)
        return GroupPresentation(alpha, tuple(relators))

    def render(self) -> str:
        lines = [
            "fiber-generators: " + " ".join(self.fiber_generators.names),
            "base-generators: " + " ".join(self.base_generators.names),
        ]
        for y, x, img in self.relation_words():
            lines.append(f"rel {y}: {x} -> {img.str_letters()}")
        lines.append("killed: " + (" ".join(self.killed) if self.killed else "(none)"))
        return "\n".join(lines)


def zvk_presentation(
    arr: Arrangement,
    loops: Sequence[BaseLoop],
    labels: Alphabet | Sequence[str] | None = None,
    section: Line | None = None,
    fiber_names: Sequence[str] | None = None,
    _mirror: bool = False,
) -> ZvkPresentation:
    """Zariski-van Kampen presentation from one meridian per base puncture.

    Each loop must wind exactly once around one base puncture and zero times
    around the others (and around section collision points, when a section
    is used).  Base generators of punctures that carry no fiber line are
    killed.
    """
    loops = list(loops)
    if labels is None:
        labels = Alphabet([f"y{k + 1}" for k in range(len(loops))], allow_empty=True)
    elif not isinstance(labels, Alphabet):
        labels = Alphabet(labels, allow_empty=True)
    if len(labels) != len(loops):
        raise ValueError(f"{len(labels)} labels for {len(loops)} loops")
    punct = base_punctures(arr)
    avoid = list(punct)
    if section is not None:
        avoid += [p for p in section_collisions(arr, section) if p not in punct]
    basepoints = {lp.basepoint for lp in loops}
    if len(basepoints) > 1:
        raise ValueError("all loops must share one basepoint")
    fiber_x = {ln.x_value() for ln in arr.fibers}

    targets = []
    for name, lp in zip(labels.names, loops):
        winds = {p: winding_number(lp, p) for p in avoid}
        around = [p for p in punct if winds[p] != 0]
        if len(around) != 1 or winds[around[0]] != 1 or any(winds[p] for p in avoid if p not in punct):
            detail = ", ".join(f"{p}: {w}" for p, w in winds.items())
            raise NotMeridian(f"loop {name} is not a meridian (winding numbers {detail})")
        targets.append(around[0])
    if len(set(targets)) != len(targets):
        raise NotMeridian("two loops encircle the same puncture")

    forward, backward, braids = [], [], []
    order = None
    for lp in loops:
        phi, trace = monodromy(arr, lp, section, fiber_names, _mirror)
        psi, _ = monodromy(arr, lp.reversed(), section, fiber_names, _mirror)
        forward.append(phi)
        backward.append(psi)
        braids.append(trace.braid)
        order = trace.start_order
    checked = all(p.then(q).is_identity() and q.then(p).is_identity() for p, q in zip(forward, backward))
    if not checked:
        raise AssertionError("monodromy is not invertible; this indicates a tracking bug")
    if forward:
        fiber = forward[0].source
    else:
        vals = strand_values(arr, Q(0) if not punct else punct[0].re - 1, section)
        fiber = Alphabet(list(fiber_names) if fiber_names else [n for n, _ in sorted(vals, key=lambda v: _sort_key(v[1])) if n != SECTION_STRAND])
    killed = tuple(y for y, p in zip(labels.names, targets) if not (p.is_real() and p.re in fiber_x))
    return ZvkPresentation(
        fiber_generators=fiber,
        base_generators=labels,
        monodromy=forward,
        inverse_monodromy=backward,
        killed=killed,
        punctures=targets,
        braids=braids,
        strand_order=order or (),
        automorphism_checked=checked,
    )


# ---------------------------------------------------------------------------
# Loop construction


def meridian(basepoint, puncture, avoid: Sequence = (), radius: Fraction | None = None,
             side: str = "upper") -> BaseLoop:
    """Lasso around ``puncture``: a straight tail into one half-plane, then a
    diamond turned counter-clockwise, then back along the tail.

    With ``side="upper"`` the vertices are basepoint, p + i*r, p - r,
    p - i*r, p + r, p + i*r, basepoint (``"lower"`` starts at p - i*r).
    For a real basepoint and real punctures the tail meets the real axis only
    at the basepoint, so it passes above (or below) everything in between.
    ``r`` defaults to half the max-norm distance from ``p`` to the nearest of
    ``avoid`` and the basepoint, so the diamond encloses nothing else.
    """
    b, p = QComplex.of(basepoint), QComplex.of(puncture)
    if side not in ("upper", "lower"):
        raise ValueError(f"side must be 'upper' or 'lower', not {side!r}")
    if radius is None:
        others = [QComplex.of(q) for q in avoid if QComplex.of(q) != p] + [b]
        dist = min(max(abs(q.re - p.re), abs(q.im - p.im)) for q in others)
        radius = dist / 2
    r = Q(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    north, west, south, east = p + QComplex(0, r), p - r, p - QComplex(0, r), p + r
    ring = [north, west, south, east, north] if side == "upper" else [south, east, north, west, south]
    return BaseLoop((b, *ring, b))


def geometric_basis(arr: Arrangement, basepoint, section: Line | None = None,
                    side: str = "upper") -> tuple[list, list[BaseLoop]]:
    """One lasso per base puncture (see :func:`meridian`), ordered by real part."""
    punct = base_punctures(arr)
    avoid = list(punct)
    if section is not None:
        avoid += section_collisions(arr, section)
    loops = [meridian(basepoint, p, avoid, side=side) for p in punct]
    return punct, loops


__all__ = [
    "Line", "Arrangement", "BaseLoop", "ZvkPresentation", "BraidTrace",
    "DegenerateInput", "OnPuncture", "PunctureCollision", "NotMeridian", "ArrangementSyntaxError",
    "parse_arrangement", "parse_loops", "base_punctures", "fiber_punctures", "strand_values",
    "section_collisions", "winding_number", "trace_braid", "braid_along", "monodromy",
    "zvk_presentation", "meridian", "geometric_basis", "SECTION_STRAND",
]
