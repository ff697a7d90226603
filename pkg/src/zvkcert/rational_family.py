"""Quadratic rational maps on the sphere and the two-parameter family F(t; x, y).

Points of P^1 are :class:`~zvkcert.exact.ProjectivePoint`.  Infinity is
always handled in the reciprocal chart ``w = 1/t`` by reversing coefficient
lists, never by limits.

The family is

    F(t) = (x - t)(-t x + y + t + x - 1) / ((x - 1) t^2)

with marked data ``F(0) = oo`` (critical), ``F(oo) = 1``, ``F(1) = y``,
``F(x) = 0`` and second critical value ``z(x, y)``.  At ``x = y = 3/4`` it
is the map ``f(t) = (4t - 3)(t + 2) / (4t^2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import (
    INFINITY,
    DivisionByZero,
    Number,
    Poly,
    ProjectivePoint,
    Q,
    RationalFunction,
    compose_poly,
    fmt_scalar,
    poly_resultant,
    pt,
    rational_sqrt,
    ratfun_equal,
    univariate_rational_roots,
)


class IndeterminateForm(ArithmeticError):
    pass


class NonRationalCritical(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# Dense univariate helpers (coefficient lists over Q, lowest degree first)


def _trim(c: list) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _ueval(c: Sequence[Fraction], a: Fraction) -> Fraction:
    acc = Fraction(0)
    for k in reversed(c):
        acc = acc * a + k
    return acc


def _uderiv(c: Sequence[Fraction]) -> list:
    return [k * c[k] for k in range(1, len(c))]


def _umul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            out[i + j] += p * q
    return _trim(out)


def _usub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _udivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            r[i + k] -= f * c
        r = _trim(r)
    return _trim(q), r


def _ugcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def _reverse(c: Sequence[Fraction], d: int) -> list:
    """Coefficients of ``w^d p(1/w)``."""
    padded = list(c) + [Fraction(0)] * (d + 1 - len(c))
    return _trim(list(reversed(padded)))


def _order_at_zero(c: Sequence[Fraction]) -> int:
    for k, v in enumerate(c):
        if v != 0:
            return k
    raise ValueError("zero polynomial")


def _roots_with_multiplicity(c: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity; NonRationalCritical if some root is not rational."""
    c = _trim(c)
    out = []
    k0 = _order_at_zero(c)
    if k0:
        out.append((Fraction(0), k0))
        c = c[k0:]
    while len(c) > 1:
        if len(c) == 2:
            roots = [-c[0] / c[1]]
        elif len(c) == 3:
            a, b, cc = c[2], c[1], c[0]
            s = rational_sqrt(b * b - 4 * a * cc)
            if s is None:
                raise NonRationalCritical(f"irrational roots of {c}")
            roots = [(-b - s) / (2 * a), (-b + s) / (2 * a)]
        else:
            roots = univariate_rational_roots(c)
            if not roots:
                raise NonRationalCritical(f"no rational root of {c}")
        r = roots[0]
        q, rem = _udivmod(c, [-r, Fraction(1)])
        assert not rem
        c = q
        for i, (root, m) in enumerate(out):
            if root == r:
                out[i] = (root, m + 1)
                break
        else:
            out.append((r, 1))
    return sorted(out)


# ---------------------------------------------------------------------------
# Maps


@dataclass(frozen=True)
class RationalMapOnSphere:
    """``t -> num(t) / den(t)``; coefficients may involve parameters."""

    num: Poly
    den: Poly
    var: str = "t"

    def __post_init__(self):
        num, den = self.num._aligned(self.den)
        if num.is_zero() and den.is_zero():
            raise IndeterminateForm("numerator and denominator are both zero")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_coeffs(cls, num: Sequence[Number], den: Sequence[Number], var: str = "t") -> "RationalMapOnSphere":
        return cls(Poly((var,), {(k,): c for k, c in enumerate(num)}),
                   Poly((var,), {(k,): c for k, c in enumerate(den)}), var)

    @property
    def parameters(self) -> tuple[str, ...]:
        used = set(self.num.used_variables()) | set(self.den.used_variables())
        return tuple(v for v in self.num.variables if v in used and v != self.var)

    @property
    def is_specialized(self) -> bool:
        used = set(self.num.used_variables()) | set(self.den.used_variables())
        return used <= {self.var}

    def specialize(self, values: Mapping[str, Number]) -> "RationalMapOnSphere":
        vals = {k: Q(v) for k, v in values.items()}
        num = self.num.subs(vals).with_variables(_keep(self.num.subs(vals), self.var))
        den = self.den.subs(vals).with_variables(_keep(self.den.subs(vals), self.var))
        return RationalMapOnSphere(num, den, self.var)

    def coefficient_lists(self) -> tuple[list, list]:
        if not self.is_specialized:
            raise ValueError(f"map still depends on {self.parameters}")
        n = [c.constant_value() for c in self.num.with_variables(_keep(self.num, self.var)).coeffs(self.var)]
        d = [c.constant_value() for c in self.den.with_variables(_keep(self.den, self.var)).coeffs(self.var)]
        return _trim(n), _trim(d)

    def reduced(self) -> "RationalMapOnSphere":
        """Cancel the common factor of a specialized map (monic gcd)."""
        n, d = self.coefficient_lists()
        if not d:
            raise IndeterminateForm("denominator vanishes identically")
        g = _ugcd(n, d)
        if len(g) > 1:
            n, d = _udivmod(n, g)[0], _udivmod(d, g)[0]
        return RationalMapOnSphere.from_coeffs(n or [0], d, self.var)

    @property
    def degree(self) -> int:
        n, d = self.reduced().coefficient_lists()
        return max(len(n) - 1, len(d) - 1, 0)

    def ratfun(self) -> RationalFunction:
        return RationalFunction(self.num, self.den)

    def __call__(self, p) -> ProjectivePoint:
        return evaluate_map(self, pt(p))

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def _keep(p: Poly, var: str) -> tuple:
    used = p.used_variables()
    extra = [v for v in used if v != var]
    if extra:
        raise ValueError(f"unspecialized parameters {extra}")
    return (var,)


def evaluate_map(m: RationalMapOnSphere, p: ProjectivePoint) -> ProjectivePoint:
    """Exact value of ``m`` at a point of P^1.

    A common root of numerator and denominator at the point is cancelled
    first; infinity is evaluated as ``w = 0`` in the reciprocal chart.
    """
    n, d = m.coefficient_lists()
    if not d:
        raise IndeterminateForm("denominator vanishes identically (the specialization lies on a degenerate locus)")
    if p.is_infinity:
        deg = max(len(n), len(d)) - 1
        n, d, a = _reverse(n, deg), _reverse(d, deg), Fraction(0)
    else:
        a = p.value
    lin = [-a, Fraction(1)]
    while n and _ueval(n, a) == 0 and _ueval(d, a) == 0:
        n, r1 = _udivmod(n, lin)
        d, r2 = _udivmod(d, lin)
        assert not r1 and not r2
    if not n and not d:
        raise IndeterminateForm(f"0/0 at {p}")
    nv, dv = _ueval(n, a), _ueval(d, a)
    if dv == 0:
        if nv == 0:
            raise IndeterminateForm(f"0/0 at {p}")
        return INFINITY
    return ProjectivePoint(nv / dv)


def orbit(m: RationalMapOnSphere, start, steps: int) -> list[ProjectivePoint]:
    out = [pt(start)]
    for _ in range(steps):
        out.append(evaluate_map(m, out[-1]))
    return out


@dataclass
class CriticalData:
    points: list          # (ProjectivePoint, multiplicity), sorted
    values: list          # ProjectivePoint per critical point, same order
    finite_chart: list    # roots of the Wronskian in t
    reciprocal_chart: list  # roots of the Wronskian in w = 1/t
    charts_agree: bool

    @property
    def point_set(self) -> set:
        return {p for p, _ in self.points}

    @property
    def value_set(self) -> set:
        return set(self.values)


def critical_data(m: RationalMapOnSphere) -> CriticalData:
    """Critical points (with multiplicity) and critical values of a specialized map.

    Finite critical points are the roots of ``N' D - N D'`` for the reduced
    map; the order of ``w = 0`` in the same Wronskian computed in the
    reciprocal chart is the multiplicity at infinity.  Roots in both charts
    are compared on the overlap ``t w = 1``.
    """
    r = m.reduced()
    n, d = r.coefficient_lists()
    deg = max(len(n), len(d)) - 1
    if deg < 1:
        return CriticalData([], [], [], [], True)
    wr = _usub(_umul(_uderiv(n), d), _umul(n, _uderiv(d)))
    finite = _roots_with_multiplicity(wr)
    nr, dr = _reverse(n, deg), _reverse(d, deg)
    wr_inf = _usub(_umul(_uderiv(nr), dr), _umul(nr, _uderiv(dr)))
    recip = _roots_with_multiplicity(wr_inf)

    at_inf = dict(recip).get(Fraction(0), 0)
    total = sum(k for _, k in finite) + at_inf
    if total != 2 * deg - 2:
        raise NonRationalCritical(f"found {total} critical points, expected {2 * deg - 2}")
    agree = sorted((1 / a, k) for a, k in finite if a != 0) == sorted((b, k) for b, k in recip if b != 0)
    agree = agree and dict(finite).get(Fraction(0), 0) == (2 * deg - 2) - sum(k for _, k in recip)

    points = [(ProjectivePoint(a), k) for a, k in finite]
    if at_inf:
        points.append((INFINITY, at_inf))
    points.sort(key=lambda pk: pk[0].sort_key())
    values = [evaluate_map(r, p) for p, _ in points]
    return CriticalData(points, values, finite, recip, agree)


# ---------------------------------------------------------------------------
# The family


X, Y, T, W = Poly.gens("x", "y", "t", "w")


def family_map() -> RationalMapOnSphere:
    num = (X - T) * (-T * X + Y + T + X - 1)
    den = (X - 1) * T ** 2
    return RationalMapOnSphere(num, den, "t")


def basepoint_map() -> RationalMapOnSphere:
    """``f(t) = (4t - 3)(t + 2) / (4 t^2)``."""
    t = Poly.var("t")
    return RationalMapOnSphere((4 * t - 3) * (t + 2), 4 * t ** 2, "t")


BASEPOINT = (Fraction(3, 4), Fraction(3, 4))


def z_formula() -> RationalFunction:
    num = (-X ** 2 + Y + 2 * X - 1) ** 2
    den = 4 * X * (Y - 1 + X) * (1 - X)
    return RationalFunction(num.with_variables(("x", "y")), den.with_variables(("x", "y")))


def z_value(x: Number, y: Number) -> ProjectivePoint:
    """``z(x, y)`` as a point of P^1 (infinity where only the denominator vanishes)."""
    z = z_formula()
    point = {"x": Q(x), "y": Q(y)}
    nv, dv = z.num.eval(point), z.den.eval(point)
    if dv == 0:
        if nv == 0:
            raise IndeterminateForm(f"z is 0/0 at ({fmt_scalar(x)}, {fmt_scalar(y)})")
        return INFINITY
    return ProjectivePoint(nv / dv)


@dataclass
class PortraitSpec:
    """Combinatorial requirements on a map of P^1."""

    mapsto: list = field(default_factory=list)          # (source, image)
    critical: list = field(default_factory=list)        # (point, multiplicity >= 2 local degree)
    critical_values: list | None = None                 # exact set, or None to skip
    distinct: list = field(default_factory=list)        # (label, [points]) groups
    invalid: list = field(default_factory=list)         # reasons the spec itself could not be built


@dataclass
class PortraitReport:
    lines: list  # (description, passed)

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.lines)

    @property
    def failing(self) -> list:
        return [d for d, p in self.lines if not p]


def cycle_portrait(cycle: Sequence, critical: Sequence = (), critical_values: Sequence | None = None) -> PortraitSpec:
    """A periodic cycle ``cycle[0] -> cycle[1] -> ... -> cycle[0]``."""
    pts = [pt(c) for c in cycle]
    spec = PortraitSpec(
        mapsto=[(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))],
        critical=[(pt(c), 2) for c in critical],
        critical_values=None if critical_values is None else [pt(v) for v in critical_values],
        distinct=[("cycle", pts)],
    )
    return spec


def family_portrait(x: Number, y: Number) -> PortraitSpec:
    x, y = Q(x), Q(y)
    spec = PortraitSpec(
        mapsto=[(pt(0), INFINITY), (INFINITY, pt(1)), (pt(1), pt(y)), (pt(x), pt(0))],
        critical=[(pt(0), 2)],
    )
    try:
        z = z_value(x, y)
        spec.critical_values = [INFINITY, z]
        spec.distinct = [("{0,1,oo,x}", [pt(0), pt(1), INFINITY, pt(x)]),
                         ("{0,1,oo,y,z}", [pt(0), pt(1), INFINITY, pt(y), z])]
    except IndeterminateForm as exc:
        spec.invalid.append(str(exc))
        spec.distinct = [("{0,1,oo,x}", [pt(0), pt(1), INFINITY, pt(x)])]
    return spec


def verify_portrait(m: RationalMapOnSphere, spec: PortraitSpec) -> PortraitReport:
    lines = [(f"portrait data: {why}", False) for why in spec.invalid]
    for label, pts in spec.distinct:
        dup = len(set(pts)) != len(pts)
        lines.append((f"points {label} = {[str(p) for p in pts]} pairwise distinct", not dup))
    try:
        r = m.reduced()
    except IndeterminateForm as exc:
        lines.append((f"map is defined: {exc}", False))
        return PortraitReport(lines)
    for src, dst in spec.mapsto:
        try:
            got = evaluate_map(r, src)
            lines.append((f"F({src}) = {dst} (got {got})", got == dst))
        except IndeterminateForm as exc:
            lines.append((f"F({src}) = {dst}: {exc}", False))
    try:
        cd = critical_data(r)
    except NonRationalCritical as exc:
        lines.append((f"critical data: {exc}", False))
        return PortraitReport(lines)
    mult = {p: k for p, k in cd.points}
    for p, k in spec.critical:
        lines.append((f"{p} is critical of multiplicity {k - 1} (local degree {k})", mult.get(p, 0) == k - 1))
    if spec.critical_values is not None:
        want = sorted(set(spec.critical_values), key=ProjectivePoint.sort_key)
        got = sorted(cd.value_set, key=ProjectivePoint.sort_key)
        lines.append((f"critical values = {[str(v) for v in want]} (got {[str(v) for v in got]})", want == got))
    lines.append(("finite and reciprocal charts agree on critical points", cd.charts_agree))
    return PortraitReport(lines)


def portrait_at(x: Number, y: Number) -> PortraitReport:
    x, y = Q(x), Q(y)
    spec = family_portrait(x, y)
    try:
        m = family_map().specialize({"x": x, "y": y})
    except IndeterminateForm as exc:
        return PortraitReport([(f"map is defined: {exc}", False)])
    return verify_portrait(m, spec)


def has_marked_four_cycle(x: Number, y: Number) -> bool:
    """Is ``0 -> oo -> 1 -> x -> 0`` a superattracting cycle of ``F(.; x, y)``?

    The fourth point of the cycle is the marked point ``x`` (the point sent
    to 0), so the cycle closes exactly when ``F(1) = y`` equals ``x``.
    """
    x, y = Q(x), Q(y)
    m = family_map().specialize({"x": x, "y": y}).reduced()
    want = [pt(0), INFINITY, pt(1), pt(x), pt(0)]
    try:
        if orbit(m, 0, 4) != want:
            return False
        mult = {p: k for p, k in critical_data(m).points}
    except (IndeterminateForm, NonRationalCritical):
        return False
    return len(set(want[:4])) == 4 and mult.get(pt(0), 0) >= 1


# ---------------------------------------------------------------------------
# Symbolic z identity


@dataclass
class ZFormulaReport:
    route: str              # "wronskian" or "resultant"
    lines: list             # (description, passed)
    critical_point: RationalFunction | None = None
    critical_value: RationalFunction | None = None
    resultant_cofactor: Poly | None = None

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.lines)


def _wronskian_route(z: RationalFunction, lines: list):
    F = family_map()
    N, D = F.num, F.den
    Wr = N.diff("t") * D - N * D.diff("t")
    if Wr.degree("t") != 2:
        lines.append((f"Wronskian is quadratic in t (degree {Wr.degree('t')})", False))
        return None, None
    c0, c1, c2 = (p.with_variables(("x", "y")) for p in Wr.coeffs("t"))
    disc = c1 * c1 - 4 * c2 * c0
    s = disc.sqrt()
    if s is None:
        lines.append(("Wronskian discriminant is a perfect square", False))
        return None, None
    lines.append(("Wronskian discriminant is a perfect square", True))
    roots = [RationalFunction(-c1 + s, 2 * c2), RationalFunction(-c1 - s, 2 * c2)]
    zero_root = [r for r in roots if r.is_zero()]
    other = [r for r in roots if not r.is_zero()]
    lines.append(("t = 0 is a root of the Wronskian", bool(zero_root)))
    if len(other) != 1:
        lines.append(("exactly one nonzero critical point", False))
        return None, None
    tc = other[0]
    val = compose_poly(N.with_variables(("t", "x", "y")), {"t": tc}) / compose_poly(
        D.with_variables(("t", "x", "y")), {"t": tc})
    val = RationalFunction(val.num.with_variables(_xy(val.num)), val.den.with_variables(_xy(val.den)))
    same = ratfun_equal(val, z)
    lines.append((f"F(t_c) = z as rational functions, t_c = {tc}", same))
    return tc, val


def _xy(p: Poly) -> tuple:
    extra = [v for v in p.used_variables() if v not in ("x", "y")]
    if extra:
        raise AssertionError(f"unexpected variables {extra}")
    return ("x", "y")


def _resultant_route(z: RationalFunction, lines: list):
    """``res_t(N - w D, d/dt (N - w D))`` vanishes at every finite critical value.

    Its zeros in ``w`` are the critical values plus ``w = F(oo) = 1``, where
    the leading coefficient of ``N - w D`` in ``t`` drops.  The check is
    that ``w den(z) - num(z)`` divides the resultant and the cofactor only
    contributes ``w = 1``.
    """
    F = family_map()
    G = (F.num - W * F.den).with_variables(("t", "x", "y", "w"))
    R = poly_resultant(G, G.diff("t"), "t").with_variables(("x", "y", "w"))
    lin = (W * z.den - z.num).with_variables(("x", "y", "w"))
    cof = R.exact_div(lin)
    lines.append(("w*den(z) - num(z) divides res_t(N - w D, (N - w D)')", cof is not None))
    if cof is None:
        return None
    at_one = cof.subs({"w": Poly.const(1, cof.variables)})
    degenerate = cof.degree("w") <= 1 and (cof.degree("w") < 1 or at_one.is_zero())
    lines.append((f"cofactor vanishes only at w = 1 (the value at infinity): {cof}", degenerate))
    return cof


def verify_z_formula() -> ZFormulaReport:
    """Check symbolically that the second critical value of F is z(x, y).

    Two independent routes: the Wronskian with exact square-root extraction
    of its discriminant, and a discriminant resultant in an auxiliary
    variable ``w``.  The report names the primary route (the Wronskian,
    unless its square root fails) and includes both.
    """
    z = z_formula()
    lines: list = []
    tc, val = _wronskian_route(z, lines)
    route = "wronskian" if tc is not None else "resultant"
    cof = _resultant_route(z, lines)
    at_base = z.eval({"x": BASEPOINT[0], "y": BASEPOINT[1]})
    lines.append((f"z(3/4, 3/4) = 121/96 (got {fmt_scalar(at_base)})", at_base == Fraction(121, 96)))
    spec_f = ratfun_equal(
        RationalFunction(family_map().num.subs({"x": BASEPOINT[0], "y": BASEPOINT[1]}),
                         family_map().den.subs({"x": BASEPOINT[0], "y": BASEPOINT[1]})),
        basepoint_map().ratfun(),
    )
    lines.append(("F(t; 3/4, 3/4) = (4t - 3)(t + 2) / (4t^2)", spec_f))
    return ZFormulaReport(route, lines, tc, val, cof)


# ---------------------------------------------------------------------------
# The excluded set


@dataclass(frozen=True)
class DeltaCondition:
    label: str
    poly: Poly


class DeltaSet:
    """The eight polynomial conditions cutting out the excluded set in C^2."""

    def __init__(self):
        x, y = Poly.gens("x", "y")
        self.conditions = (
            DeltaCondition("x = 0", x),
            DeltaCondition("y = 0", y),
            DeltaCondition("y = 1", y - 1),
            DeltaCondition("x = 1", x - 1),
            DeltaCondition("y - 1 + x = 0", y - 1 + x),
            DeltaCondition("x^2 - y - 2x + 1 = 0", x ** 2 - y - 2 * x + 1),
            DeltaCondition("x^2 + y - 1 = 0", x ** 2 + y - 1),
            DeltaCondition("2xy + x^2 - y - 2x + 1 = 0", 2 * x * y + x ** 2 - y - 2 * x + 1),
        )

    def __iter__(self):
        return iter(self.conditions)

    def __len__(self):
        return len(self.conditions)

    def violated(self, x: Number, y: Number) -> list[str]:
        point = {"x": Q(x), "y": Q(y)}
        return [c.label for c in self.conditions if c.poly.eval(point) == 0]


DELTA = DeltaSet()


def delta_contains(x: Number, y: Number) -> tuple[bool, list[str]]:
    hits = DELTA.violated(x, y)
    return bool(hits), hits


def points_on_condition(cond: DeltaCondition, xs: Sequence[Number]) -> list[tuple[Fraction, Fraction]]:
    """Rational points on a condition, one per sample ``x`` (each condition is linear in y).

    For a vertical condition the samples are used as ``y`` values instead.
    """
    a, b = (cond.poly.coeffs("y") + [Poly.const(0, cond.poly.variables)])[:2]
    out = []
    if b.is_zero():
        roots = univariate_rational_roots([c.constant_value() for c in a.with_variables(("x",)).coeffs("x")])
        for k, s in enumerate(xs):
            out.append((roots[k % len(roots)], Q(s)))
        return out
    for s in xs:
        s = Q(s)
        bv = b.eval({"x": s, "y": 0})
        if bv == 0:
            continue
        out.append((s, -a.eval({"x": s, "y": 0}) / bv))
    return out


__all__ = [
    "RationalMapOnSphere", "IndeterminateForm", "NonRationalCritical", "evaluate_map", "orbit",
    "critical_data", "CriticalData", "family_map", "basepoint_map", "z_formula", "z_value",
    "PortraitSpec", "PortraitReport", "cycle_portrait", "family_portrait", "verify_portrait",
    "portrait_at", "has_marked_four_cycle", "verify_z_formula", "ZFormulaReport", "DeltaSet",
    "DeltaCondition", "DELTA", "delta_contains", "points_on_condition", "BASEPOINT",
]
