"""Exact arithmetic: rationals, Gaussian rationals, points of P^1,
multivariate polynomials and rational functions over Q.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with a positive denominator).  Everything else in this module is
built on top of them; there is no floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

ExactScalar = Fraction

Number = Union[int, Fraction]


class DivisionByZero(ZeroDivisionError):
    pass


class MissingAssignment(KeyError):
    pass


def Q(value, den=None) -> Fraction:
    """Coerce ``value`` (int, Fraction or a string like ``"-3/4"``) to a Fraction."""
    if den is not None:
        if den == 0:
            raise DivisionByZero(f"{value}/{den}")
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except ZeroDivisionError as exc:
            raise DivisionByZero(str(value)) from exc
    raise TypeError(f"cannot make an exact scalar from {value!r}")


def scalar_arith(op: str, lhs: Number, rhs: Number) -> Fraction:
    lhs, rhs = Q(lhs), Q(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs == 0:
            raise DivisionByZero(f"{fmt_scalar(lhs)} / 0")
        return lhs / rhs
    raise ValueError(f"unknown scalar operation {op!r}")


def fmt_scalar(q: Number) -> str:
    """Canonical text: ``p/q``, or ``p`` when the denominator is 1."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class QComplex:
    """An exact complex number ``re + im*i`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    @classmethod
    def of(cls, value) -> "QComplex":
        if isinstance(value, QComplex):
            return value
        return cls(Q(value), Fraction(0))

    def __add__(self, other):
        other = QComplex.of(other)
        return QComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-QComplex.of(other))

    def __rsub__(self, other):
        return QComplex.of(other) - self

    def __mul__(self, other):
        o = QComplex.of(other)
        return QComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = QComplex.of(other)
        n = o.norm2()
        if n == 0:
            raise DivisionByZero("division by complex zero")
        p = self * o.conj()
        return QComplex(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return QComplex.of(other) / self

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return fmt_scalar(self.re)
        return f"{fmt_scalar(self.re)}{'+' if self.im > 0 else '-'}{fmt_scalar(abs(self.im))}i"


# ---------------------------------------------------------------------------
# Points of the Riemann sphere


@dataclass(frozen=True)
class ProjectivePoint:
    """A rational point of P^1: either a finite rational or infinity."""

    value: Fraction | None

    @classmethod
    def finite(cls, v: Number) -> "ProjectivePoint":
        return cls(Q(v))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __str__(self):
        return "oo" if self.value is None else fmt_scalar(self.value)

    def sort_key(self):
        return (1, Fraction(0)) if self.value is None else (0, self.value)


INFINITY = ProjectivePoint(None)


def pt(v) -> ProjectivePoint:
    """Shorthand: ``pt(3)``, ``pt("3/4")`` or ``pt("oo")``."""
    if isinstance(v, ProjectivePoint):
        return v
    if v in ("oo", "inf", "infinity"):
        return INFINITY
    return ProjectivePoint.finite(v)


# ---------------------------------------------------------------------------
# Multivariate polynomials

Exponents = tuple


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class Poly:
    """Sparse polynomial over Q in an ordered tuple of named variables.

    ``terms`` maps exponent tuples to nonzero Fractions.  Binary operations
    between polynomials in different variable lists work over the union of
    the variables (left operand's variables first).
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Number] | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {self.variables}")
            c = Q(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Number, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "Poly":
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, *names: str) -> tuple["Poly", ...]:
        return tuple(cls.var(n, names) for n in names)

    # -- structure ----------------------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = set(self.variables) - set(variables)
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e and v in missing:
                    raise ValueError(f"variable {v} is used but not in {variables}")
        pos = {v: i for i, v in enumerate(self.variables)}
        out = {}
        for exps, c in self.terms.items():
            out[tuple(exps[pos[v]] if v in pos else 0 for v in variables)] = c
        return Poly(variables, out)

    def _aligned(self, other: "Poly | Number") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            return self, Poly.const(other, self.variables)
        if other.variables == self.variables:
            return self, other
        union = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(union), other.with_variables(union)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        if var not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms))

    def coeffs(self, var: str) -> list["Poly"]:
        """Coefficients with respect to ``var``, lowest degree first.

        Each coefficient keeps the full variable list (with ``var`` absent).
        """
        if var not in self.variables:
            return [self]
        i = self.variables.index(var)
        deg = self.degree(var)
        buckets: list[dict] = [dict() for _ in range(max(deg, 0) + 1)]
        for exps, c in self.terms.items():
            k = exps[i]
            buckets[k][exps[:i] + (0,) + exps[i + 1:]] = c
        return [Poly(self.variables, b) for b in buckets]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence["Poly"], var: str) -> "Poly":
        x = None
        acc = None
        for k, c in enumerate(coeffs):
            if x is None:
                x = Poly.var(var, c.variables if var in c.variables else c.variables + (var,))
                acc = Poly.const(0, x.variables)
            acc = acc + c * x ** k
        return acc if acc is not None else Poly.const(0, (var,))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._aligned(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._aligned(other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Number) -> "Poly":
        return Poly(self.variables, {e: v * Q(c) for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            used = self.used_variables()
            p = self.with_variables(used)
            self._hash = hash((used, frozenset(p.terms.items())))
        return self._hash

    def diff(self, var: str) -> "Poly":
        if var not in self.variables:
            return Poly.const(0, self.variables)
        i = self.variables.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly(self.variables, out)

    def leading_term(self) -> tuple[tuple, Fraction]:
        """Largest term in graded-lex order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- evaluation ---------------------------------------------------------
    def eval(self, point: Mapping[str, Number]) -> Fraction:
        """Evaluate at a full assignment of the variables that actually occur."""
        for v in self.used_variables():
            if v not in point:
                raise MissingAssignment(v)
        vals = [Q(point[v]) if v in point else Fraction(0) for v in self.variables]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for val, k in zip(vals, e):
                if k:
                    t *= val ** k
            total += t
        return total

    def eval_complex(self, point: Mapping[str, QComplex]) -> QComplex:
        for v in self.used_variables():
            if v not in point:
                raise MissingAssignment(v)
        total = QComplex(0)
        for e, c in self.terms.items():
            t = QComplex(c)
            for v, k in zip(self.variables, e):
                for _ in range(k):
                    t = t * QComplex.of(point[v])
            total = total + t
        return total

    def subs(self, assignment: Mapping[str, "Poly | Number"]) -> "Poly":
        """Substitute polynomials (or scalars) for some variables."""
        result = Poly.const(0, self.variables)
        cache: dict = {}
        for e, c in self.terms.items():
            term = Poly.const(c, self.variables)
            for v, k in zip(self.variables, e):
                if not k:
                    continue
                if v in assignment:
                    key = (v, k)
                    if key not in cache:
                        val = assignment[v]
                        val = val if isinstance(val, Poly) else Poly.const(val, self.variables)
                        cache[key] = val ** k
                    term = term * cache[key]
                else:
                    term = term * Poly.var(v, self.variables) ** k
            result = result + term
        return result

    def exact_div(self, other: "Poly") -> "Poly | None":
        """Return ``self / other`` if ``other`` divides exactly, else None."""
        a, b = self._aligned(other)
        if b.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        quotient = Poly.const(0, a.variables)
        rem = a
        be, bc = b.leading_term()
        while not rem.is_zero():
            re_, rc = rem.leading_term()
            if any(x < y for x, y in zip(re_, be)):
                return None
            t = Poly(a.variables, {tuple(x - y for x, y in zip(re_, be)): rc / bc})
            quotient = quotient + t
            rem = rem - t * b
        return quotient

    def sqrt(self) -> "Poly | None":
        """Exact square root (up to sign) or None if not a perfect square."""
        if self.is_zero():
            return self
        e, c = self.leading_term()
        if any(k % 2 for k in e) or c < 0:
            return None
        rc = _rational_sqrt(c)
        if rc is None:
            return None
        root = Poly(self.variables, {tuple(k // 2 for k in e): rc})
        lead = root
        rem = self - root * root
        while not rem.is_zero():
            re_, rcoef = rem.leading_term()
            le, lc = lead.leading_term()
            if any(x < y for x, y in zip(re_, le)):
                return None
            t = Poly(self.variables, {tuple(x - y for x, y in zip(re_, le)): rcoef / (2 * lc)})
            if _grlex_key(t.leading_term()[0]) >= _grlex_key(le):
                return None
            root = root + t
            rem = self - root * root
        return root

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{fmt_scalar(mag)}*{mono}"
            else:
                body = fmt_scalar(mag)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Poly({self.variables}, {self})"


def _rational_sqrt(c: Fraction) -> Fraction | None:
    from math import isqrt

    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


rational_sqrt = _rational_sqrt


def poly_eval(p: Poly, point: Mapping[str, Number]) -> Fraction:
    return p.eval(point)


# ---------------------------------------------------------------------------
# Rational functions


class RationalFunction:
    """Quotient ``num/den`` of polynomials; never reduced to lowest terms.

    Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Number, den: Poly | Number = 1):
        if not isinstance(num, Poly):
            num = Poly.const(num, den.variables if isinstance(den, Poly) else ())
        if not isinstance(den, Poly):
            den = Poly.const(den, num.variables)
        num, den = num._aligned(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        self.num, self.den = num, den

    @property
    def variables(self):
        return self.num.variables

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other if isinstance(other, Poly) else Poly.const(other, self.variables))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFunction(self.num ** n, self.den ** n)
        return RationalFunction(self.den ** -n, self.num ** -n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        return ratfun_equal(self, self._coerce(other))

    __hash__ = None

    def eval(self, point: Mapping[str, Number]) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {dict(point)}")
        return self.num.eval(point) / d

    def subs(self, assignment: Mapping[str, "RationalFunction | Poly | Number"]) -> "RationalFunction":
        """Substitute rational functions for variables."""
        return compose_poly(self.num, assignment) / compose_poly(self.den, assignment)

    def reduce_constant(self) -> "RationalFunction":
        """Divide out a common polynomial factor when one side divides the other."""
        q = self.num.exact_div(self.den)
        if q is not None:
            return RationalFunction(q)
        return self

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def compose_poly(p: Poly, assignment: Mapping[str, "RationalFunction | Poly | Number"]) -> RationalFunction:
    """Substitute rational functions into a polynomial, returning num/den.

    Uses a common denominator per substituted variable: for ``v -> a/b`` of
    degree ``d`` in ``p``, each term picks up ``a^k b^(d-k)``.
    """
    vals: dict[str, RationalFunction] = {}
    for v, val in assignment.items():
        if isinstance(val, RationalFunction):
            vals[v] = val
        elif isinstance(val, Poly):
            vals[v] = RationalFunction(val)
        else:
            vals[v] = RationalFunction(Poly.const(val, p.variables))
    degs = {v: p.degree(v) for v in vals if v in p.variables}
    degs = {v: d for v, d in degs.items() if d > 0}
    num = None
    den = None
    for e, c in p.terms.items():
        term = None
        for v, k in zip(p.variables, e):
            if v in degs:
                f = vals[v]
                piece = f.num ** k * f.den ** (degs[v] - k)
            elif k:
                piece = Poly.var(v, p.variables) ** k
            else:
                continue
            term = piece if term is None else term * piece
        term = Poly.const(c, p.variables) * (term if term is not None else 1)
        num = term if num is None else num + term
    if num is None:
        num = Poly.const(0, p.variables)
    for v, d in degs.items():
        piece = vals[v].den ** d
        den = piece if den is None else den * piece
    if den is None:
        den = Poly.const(1, num.variables)
    return RationalFunction(num, den)


def ratfun_equal(f: RationalFunction, g: RationalFunction) -> bool:
    return (f.num * g.den - g.num * f.den).is_zero()


# ---------------------------------------------------------------------------
# Resultants


def _det(matrix: Sequence[Sequence[Poly]], zero: Poly) -> Poly:
    """Determinant by Laplace expansion along rows, memoised on column sets.

    O(n 2^n) polynomial products; intended for Sylvester matrices of small
    size (n <= ~14).
    """
    n = len(matrix)
    if n == 0:
        return zero + 1

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Poly:
        if row == n:
            return zero + 1
        total = zero
        ordered = sorted(cols)
        for pos, col in enumerate(ordered):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols - {col})
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, frozenset(range(n)))


def sylvester_matrix(p: Poly, q: Poly, var: str) -> list[list[Poly]]:
    """Sylvester matrix, p-block (deg q rows) above q-block (deg p rows)."""
    p, q = p._aligned(q)
    pc, qc = p.coeffs(var), q.coeffs(var)
    m, n = len(pc) - 1, len(qc) - 1
    zero = Poly.const(0, p.variables).with_variables(tuple(v for v in p.variables))
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(pc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(qc)):
            row[i + k] = c
        rows.append(row)
    return rows


def poly_resultant(p: Poly, q: Poly, var: str) -> Poly:
    """Resultant of ``p`` and ``q`` with respect to ``var``.

    Sign convention: determinant of the Sylvester matrix whose first
    ``deg_var(q)`` rows carry the coefficients of ``p`` (leading coefficient
    first) and whose remaining rows carry those of ``q``.  Degrees are the
    actual degrees in ``var``.  The result no longer involves ``var``.
    """
    p, q = p._aligned(q)
    if p.degree(var) < 0 or q.degree(var) < 0:
        return Poly.const(0, p.variables)
    if p.degree(var) == 0 and q.degree(var) == 0:
        return Poly.const(1, p.variables)
    mat = sylvester_matrix(p, q, var)
    res = _det(mat, Poly.const(0, p.variables))
    keep = tuple(v for v in p.variables if v != var)
    return res.with_variables(keep)


def univariate_rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial (lowest degree first)."""
    from math import lcm

    cs = [Q(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = []
    while cs and cs[0] == 0:
        cs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(cs) <= 1:
        return roots
    den = lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if sum(c * cand ** k for k, c in enumerate(cs)) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k * k != n:
                out.append(n // k)
        k += 1
    return out


def resultant_scalars(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """Resultant of two univariate polynomials given by coefficient lists."""
    P = Poly(("t",), {(k,): c for k, c in enumerate(p)})
    Qp = Poly(("t",), {(k,): c for k, c in enumerate(q)})
    r = poly_resultant(P, Qp, "t")
    return r.constant_value() if not r.is_zero() else Fraction(0)


__all__ = [
    "ExactScalar", "Q", "DivisionByZero", "MissingAssignment", "scalar_arith", "fmt_scalar",
    "QComplex", "ProjectivePoint", "INFINITY", "pt", "Poly", "poly_eval",
    "RationalFunction", "compose_poly", "ratfun_equal", "poly_resultant", "sylvester_matrix",
    "univariate_rational_roots", "rational_sqrt", "resultant_scalars",
]
