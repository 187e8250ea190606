import json
import re

import pytest

from polarix import io
from polarix.alexander import alexander_dual_from_family
from polarix.degree_two import enumerate_trees
from polarix.isotone import enumerate_families, family_from_qs_pattern, qs_edges
from polarix.monomials import parse_monomial
from polarix.polarization import generators_from_family, standard_family
from polarix.simplicial import complex_from_ideal


def test_family_round_trip(ex_family):
    doc = io.family_to_json(ex_family)
    assert set(doc) == {"m", "n", "X"} and len(doc["X"]) == 30
    assert io.family_from_json(json.dumps(doc)) == ex_family
    for f in enumerate_families(3, 2, valid_only=True):
        assert io.family_from_json(io.family_to_json(f)) == f


@pytest.mark.parametrize(
    "mutate, where",
    [
        (lambda d: d.pop("X"), "X"),
        (lambda d: d["X"].pop(4), "X"),
        (lambda d: d["X"][3].update(point=[9, 9, 9]), "X[3]"),
        (lambda d: d["X"][0].update(set=[1, 2]), "X[color=1, point=[3, 0, 0]]"),
        (lambda d: d["X"][0].pop("set"), "X[0]"),
        (lambda d: d.update(m="three"), "m/n"),
    ],
)
def test_family_parse_diagnostics(ex_family, mutate, where):
    doc = io.family_to_json(ex_family)
    mutate(doc)
    with pytest.raises(io.FormatError) as err:
        io.family_from_json(doc)
    assert err.value.where == where


def test_family_parse_bad_json():
    with pytest.raises(io.FormatError) as err:
        io.family_from_json('{"m": 3,\n "n": }')
    assert err.value.where.startswith("line 2")


def test_qs_pattern_round_trip():
    q = [(1, 1, 2), (2, 1, 1)]
    doc = io.qs_pattern_to_json(q)
    assert doc == [[2, 1, 1], [1, 1, 2]]
    assert family_from_qs_pattern(3, io.qs_pattern_from_json(json.dumps(doc))) == family_from_qs_pattern(3, q)


def test_ideal_formats(ex_ideal):
    assert io.ideal_from_json(json.loads(json.dumps(io.ideal_to_json(ex_ideal)))) == ex_ideal
    text = io.ideal_to_text(ex_ideal)
    assert len(text.splitlines()) == 10
    assert all(re.fullmatch(r"x_\(\d,\d\)(\*x_\(\d,\d\))*", line) for line in text.splitlines())
    assert io.ideal_from_text(text) == ex_ideal
    with pytest.raises(io.FormatError) as err:
        io.ideal_from_text("x_(1,1)\nbogus\n")
    assert err.value.where == "line 2"


def test_m2_export(ex_family):
    dual = alexander_dual_from_family(ex_family)
    text = io.ideal_to_m2(dual, name="D")
    assert text.startswith("R = QQ[x_(1,1), ")
    body = text.split("ideal(")[1].split(")\n);")[0] + ")"
    assert {parse_monomial(t.strip().rstrip(",")) for t in body.split(",\n")} == set(dual.gens)


def test_tree_round_trip():
    for t in enumerate_trees(4):
        doc = io.tree_to_json(t)
        assert io.tree_from_json(json.dumps(doc)) == t
    with pytest.raises(io.FormatError):
        io.tree_from_json({"vertices": 3})


def test_complex_round_trip(ex_ideal):
    c = complex_from_ideal(ex_ideal)
    assert io.complex_from_json(json.dumps(io.complex_to_json(c))) == c


def test_svg_marks_qs_edges(ex_family):
    svg = io.render_svg(ex_family)
    assert svg.count('stroke-dasharray="4 2"') == len(qs_edges(ex_family)) == 3
    assert svg.count("<line") == 18
    assert svg.count("<text") == 10 and 'font-size="12pt"' in svg
    assert ">x1x2x3<" in svg and ">z1z2z3<" in svg


def test_svg_apex_on_top():
    svg = io.render_svg(standard_family(3, 2))
    coords = {}
    for x, y, label in re.findall(r'<text x="([\d.]+)" y="([\d.]+)">(\w+)<', svg):
        coords[label] = (float(x), float(y))
    top, left, right = coords["x1x2"], coords["y1y2"], coords["z1z2"]
    assert top[1] < left[1] == right[1] and left[0] < top[0] < right[0]


def test_svg_needs_three_colors():
    with pytest.raises(ValueError):
        io.render_svg(standard_family(4, 2))
