import re
import xml.etree.ElementTree as ET

from zvkcert.plot import plot_delta, render_delta_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def test_default_window_has_nine_labelled_curves():
    svg = render_delta_svg((-2, 3, -2, 3))
    root = ET.fromstring(svg)
    curves = root.findall("svg:path[@class='curve']", NS)
    labels = [c.get("data-label") for c in curves]
    assert len(curves) == 9
    assert "V: y = x" in labels and "2xy + x^2 - y - 2x + 1 = 0" in labels
    assert root.find("svg:circle[@class='basepoint']", NS) is not None


def test_empty_window():
    svg = render_delta_svg((1, 1, 0, 2))
    assert "empty window" in svg and "<path" not in svg
    ET.fromstring(svg)


def test_basepoint_only_when_inside():
    assert 'class="basepoint"' not in render_delta_svg((2, 3, 2, 3))
    assert 'class="basepoint"' in render_delta_svg(("1/2", 1, "1/2", 1))


def test_vertical_lines_are_vertical(tmp_path):
    out = tmp_path / "d.svg"
    svg = plot_delta((-2, 3, -2, 3), out)
    assert out.read_text() == svg
    d = re.search(r'data-label="x = 1" d="M ([\d.]+) [\d.]+ L ([\d.]+) ', svg)
    assert d and d.group(1) == d.group(2)
