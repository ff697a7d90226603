"""SVG picture of the real locus of the excluded set and the diagonal.

Display only: curves are sampled in floating point.  Nothing certified
depends on this module.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from xml.sax.saxutils import escape

from .exact import Poly, Q, univariate_rational_roots
from .rational_family import BASEPOINT, DELTA

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#000000"]
SIZE = 480
SAMPLES = 600


def _curves():
    x, y = Poly.gens("x", "y")
    out = [(c.label, c.poly) for c in DELTA]
    out.append(("V: y = x", y - x))
    return out


def _polylines(poly: Poly, window) -> list[list[tuple[float, float]]]:
    """Sampled pieces of ``a(x) + b(x) y = 0`` inside the window."""
    x0, x1, y0, y1 = (float(v) for v in window)
    zero = Poly.const(0, poly.variables)
    a, b = (poly.coeffs("y") + [zero])[:2]
    a = a.with_variables(("x",)) if not a.is_zero() else Poly.const(0, ("x",))
    if b.is_zero():
        roots = univariate_rational_roots([c.constant_value() for c in a.coeffs("x")])
        return [[(float(r), y0), (float(r), y1)] for r in roots if x0 <= r <= x1]
    b = b.with_variables(("x",))
    pieces, cur = [], []
    margin = (y1 - y0)
    for k in range(SAMPLES + 1):
        xv = x0 + (x1 - x0) * k / SAMPLES
        bv = float(b.eval({"x": Fraction(xv)}))
        yv = None if bv == 0 else -float(a.eval({"x": Fraction(xv)})) / bv
        if yv is None or not (y0 - margin <= yv <= y1 + margin):
            if len(cur) > 1:
                pieces.append(cur)
            cur = []
            continue
        cur.append((xv, yv))
    if len(cur) > 1:
        pieces.append(cur)
    return pieces


def render_delta_svg(window) -> str:
    x0, x1, y0, y1 = (Q(v) for v in window)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">')
    if not (x0 < x1 and y0 < y1):
        return head + "\n<!-- empty window -->\n</svg>\n"
    fx0, fx1, fy0, fy1 = float(x0), float(x1), float(y0), float(y1)

    def sx(v):
        return (v - fx0) / (fx1 - fx0) * SIZE

    def sy(v):
        return SIZE - (v - fy0) / (fy1 - fy0) * SIZE

    body = [head,
            '<defs><clipPath id="win"><rect x="0" y="0" width="%d" height="%d"/></clipPath></defs>' % (SIZE, SIZE),
            '<rect x="0" y="0" width="%d" height="%d" fill="white" stroke="black"/>' % (SIZE, SIZE)]
    legend_y = 14
    for k, (label, poly) in enumerate(_curves()):
        pieces = _polylines(poly, (x0, x1, y0, y1))
        if not pieces:
            continue
        color = PALETTE[k % len(PALETTE)]
        d = " ".join("M " + " L ".join(f"{sx(px):.2f} {sy(py):.2f}" for px, py in piece) for piece in pieces)
        body.append(f'<path class="curve" data-label="{escape(label)}" d="{d}" fill="none" '
                    f'stroke="{color}" stroke-width="1.5" clip-path="url(#win)"/>')
        body.append(f'<text class="label" x="6" y="{legend_y}" font-size="11" fill="{color}">{escape(label)}</text>')
        legend_y += 13
    bx, by = BASEPOINT
    if x0 <= bx <= x1 and y0 <= by <= y1:
        body.append(f'<circle class="basepoint" cx="{sx(float(bx)):.2f}" cy="{sy(float(by)):.2f}" r="4" '
                    'fill="black"/>')
    body.append("</svg>")
    return "\n".join(body) + "\n"


def plot_delta(window, out: str | Path) -> str:
    svg = render_delta_svg(window)
    Path(out).write_text(svg)
    return svg


__all__ = ["plot_delta", "render_delta_svg"]
