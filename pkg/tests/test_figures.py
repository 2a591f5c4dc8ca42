"""Band-model figure: curve catalog and SVG determinism."""

import hashlib
import math
import xml.etree.ElementTree as ET

from funkdisc.figures import (
    CHORD_CATALOG,
    VERTICAL_CATALOG,
    band_figure_curves,
    render_band_svg,
)
from funkdisc.geodesics import band_branch_residuals

VERTEX_TOL = 1e-8


def test_catalog_size_and_kinds():
    curves = band_figure_curves()
    assert len(curves) == len(CHORD_CATALOG) + len(VERTICAL_CATALOG)
    slanted = [c for c in curves if c["branch"] == "minus"]
    assert len(slanted) == len(CHORD_CATALOG)


def test_vertices_satisfy_implicit_equation():
    for curve in band_figure_curves():
        assert curve["max_residual"] < VERTEX_TOL
        for x1, x2 in curve["vertices"]:
            assert abs(x2) < math.pi / 2.0
        if curve["branch"] == "minus":
            m, c = curve["params"]
            for vtx in curve["vertices"]:
                minus, _ = band_branch_residuals(m, c, vtx)
                assert minus < VERTEX_TOL


def test_vertical_curves_have_constant_first_coordinate():
    for curve in band_figure_curves():
        if curve["branch"] is None:
            (want,) = curve["params"]
            assert all(abs(x1 - want) == 0.0 for x1, _ in curve["vertices"])


def test_svg_renders_and_is_deterministic(tmp_path):
    a = render_band_svg(None)
    b = render_band_svg(None)
    assert hashlib.sha256(a.encode()).hexdigest() == hashlib.sha256(b.encode()).hexdigest()
    root = ET.fromstring(a)
    assert root.tag.endswith("svg")
    polylines = [e for e in root.iter() if e.tag.endswith("polyline")]
    assert len(polylines) == len(CHORD_CATALOG) + len(VERTICAL_CATALOG)
    path = tmp_path / "band.svg"
    text = render_band_svg(str(path))
    assert path.read_text() == text == a
