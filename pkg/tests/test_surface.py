import json
from dataclasses import replace
from itertools import product

import pytest

from ellquartic.surface import (
    ContractionError,
    InconsistentDataError,
    SchemaError,
    arithmetic_genus_reduced,
    check_minimal,
    classify_fibre,
    contract_curve,
    graphs_from_json,
    load_data,
    load_graphs,
    solve_self_intersections,
    validate_cover_map,
)
from ellquartic.suites import PRINTED_SELF_INTERSECTIONS, intersection_report


def _graphs(name):
    return graphs_from_json(load_data(name))


def test_intersection_report_all_pass():
    for name, (ok, detail) in intersection_report().items():
        assert ok, (name, detail)


def test_solved_values():
    got = {c.name: c.self_intersection for g in _graphs("pencil_S_resolved.json")
           for c in solve_self_intersections(g).components}
    assert got == PRINTED_SELF_INTERSECTIONS


def test_contraction_of_Z():
    g = solve_self_intersections(_graphs("pencil_S_resolved.json")[0])
    h = contract_curve(g, "Z")
    assert h.component("A3").self_intersection == -2
    assert check_minimal(h)
    assert classify_fibre(h) == "unclassified"


def test_contraction_needs_minus_one_curve():
    g = solve_self_intersections(_graphs("pencil_S_resolved.json")[0])
    with pytest.raises(ContractionError):
        contract_curve(g, "A1")


def test_classification_of_Sprime():
    graphs = [solve_self_intersections(g) for g in _graphs("pencil_Sprime.json")]
    assert [classify_fibre(g) for g in graphs] == ["Ẽ7", "Ã1"]


def test_genus_of_bunches():
    a, b = (solve_self_intersections(g) for g in _graphs("pencil_S_resolved.json"))
    assert arithmetic_genus_reduced(a, ["A1", "A2", "A3", "A4"]) == 1
    assert arithmetic_genus_reduced(b, [f"B{i}" for i in range(1, 9)]) == 1


def test_non_integral_solve_is_an_error():
    d = load_data("pencil_S_resolved.json")["fibres"][0]
    d = json.loads(json.dumps(d))
    d["components"][0]["multiplicity"] = 3
    with pytest.raises(InconsistentDataError):
        solve_self_intersections(graphs_from_json(d)[0])


def test_schema_violation(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"name": "x", "components": [{"name": "A"}]}))
    with pytest.raises(SchemaError):
        load_graphs(p)


def test_cover_map_and_mutations():
    src, tgt = _graphs("pencil_S_resolved.json"), _graphs("pencil_Sprime.json")
    cover = load_data("cover_correspondence.json")
    rep = validate_cover_map(cover, src, tgt)
    assert rep.passed
    assert any("A5" in n for n in rep.notes)
    bad = dict(cover, uncovered=[c for c in cover["uncovered"] if c != "Z'"])
    assert not validate_cover_map(bad, src, tgt).passed
    bad = dict(cover, sections=[dict(s, map_degree=1) if s["source"] == "p" else s for s in cover["sections"]])
    rep = validate_cover_map(bad, src, tgt)
    assert any("section p" in v for v in rep.violations)


def test_attachment_of_X_and_Y_on_the_B_cycle():
    # only X on B1 and Y on B5 reproduces the printed self-intersections
    g = _graphs("pencil_S_resolved.json")[1]
    cycle = [n for n in g.names if n.startswith("B")]
    base = {k: v for k, v in g.intersections.items() if not k & {"X", "Y"}}
    want = {n: PRINTED_SELF_INTERSECTIONS[n] for n in g.names}
    bare = replace(g, components=tuple(replace(c, self_intersection=None) for c in g.components))
    hits = []
    for bx, by in product(cycle, repeat=2):
        inter = dict(base)
        inter[frozenset(("X", bx))] = 1
        inter[frozenset(("Y", by))] = 1
        try:
            h = solve_self_intersections(replace(bare, intersections=inter))
        except InconsistentDataError:
            continue
        if {c.name: c.self_intersection for c in h.components} == want:
            hits.append((bx, by))
    assert hits == [("B1", "B5")]
