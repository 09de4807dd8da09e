"""Intersection theory on fibres of a fibred surface, driven by dual-graph data."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

import jsonschema

__all__ = [
    "FibreGraph", "Component", "Section", "SchemaError", "InconsistentDataError",
    "ContractionError", "load_graphs", "graphs_from_json", "load_data", "solve_self_intersections",
    "arithmetic_genus_reduced", "contract_curve", "check_minimal", "classify_fibre",
    "fibre_relations_hold", "section_degree", "validate_cover_map", "CoverReport",
]

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["name", "components", "intersections"],
    "properties": {
        "name": {"type": "string"},
        "components": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "multiplicity", "genus"],
                "properties": {
                    "name": {"type": "string"},
                    "multiplicity": {"type": "integer", "minimum": 1},
                    "genus": {"type": "integer", "minimum": 0},
                    "self_intersection": {"type": ["integer", "null"]},
                },
            },
        },
        "intersections": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "string"}, {"type": "string"}, {"type": "integer", "minimum": 0}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
        "sections": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "degree", "meets"],
                "properties": {
                    "name": {"type": "string"},
                    "degree": {"type": "integer", "minimum": 1},
                    "meets": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
                },
            },
        },
        "labels": {"type": "object"},
    },
}

FILE_SCHEMA = {
    "type": "object",
    "required": ["name", "fibres"],
    "properties": {"name": {"type": "string"}, "fibres": {"type": "array", "items": GRAPH_SCHEMA}},
}


class SchemaError(ValueError):
    """Input data does not match the fibre-graph schema."""


class InconsistentDataError(ValueError):
    """The intersection data admits no integral solution."""


class ContractionError(ValueError):
    """Only smooth rational (-1)-curves can be contracted."""


@dataclass(frozen=True)
class Component:
    name: str
    multiplicity: int
    genus: int = 0
    self_intersection: int | None = None


@dataclass(frozen=True)
class Section:
    name: str
    degree: int
    meets: tuple  # ((component, intersection number), ...)


@dataclass(frozen=True)
class FibreGraph:
    name: str
    components: tuple
    intersections: dict = field(hash=False)  # frozenset({C, D}) -> number, C != D
    sections: tuple = ()
    labels: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise SchemaError(f"{self.name}: duplicate component names")
        known = set(names)
        for pair, n in self.intersections.items():
            if len(pair) != 2:
                raise SchemaError(f"{self.name}: self-intersections belong on the components")
            if not pair <= known:
                raise SchemaError(f"{self.name}: unknown component in {sorted(pair)}")
            if n < 0:
                raise SchemaError(f"{self.name}: negative intersection number")
        for s in self.sections:
            for comp, _ in s.meets:
                if comp not in known:
                    raise SchemaError(f"{self.name}: section {s.name} meets unknown {comp}")

    # access ---------------------------------------------------------------------

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.components]

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(name)

    def dot(self, a: str, b: str) -> int:
        if a == b:
            s = self.component(a).self_intersection
            if s is None:
                raise ValueError(f"self-intersection of {a} is unknown")
            return s
        return self.intersections.get(frozenset((a, b)), 0)

    def neighbours(self, name: str) -> list[str]:
        return [n for n in self.names if n != name and self.dot(name, n)]

    def is_connected(self, subset) -> bool:
        subset = list(subset)
        if not subset:
            return False
        seen, todo = {subset[0]}, [subset[0]]
        while todo:
            c = todo.pop()
            for n in self.neighbours(c):
                if n in subset and n not in seen:
                    seen.add(n)
                    todo.append(n)
        return len(seen) == len(subset)

    # serialization ------------------------------------------------------------------

    @classmethod
    def from_dict(cls, d: dict) -> "FibreGraph":
        try:
            jsonschema.validate(d, GRAPH_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise SchemaError(exc.message) from exc
        comps = tuple(
            Component(c["name"], c["multiplicity"], c["genus"], c.get("self_intersection"))
            for c in d["components"]
        )
        inter: dict = {}
        for a, b, n in d["intersections"]:
            key = frozenset((a, b))
            if a == b or key in inter:
                raise SchemaError(f"bad or repeated intersection entry {a}, {b}")
            if n:
                inter[key] = n
        secs = tuple(
            Section(s["name"], s["degree"], tuple((m[0], m[1]) for m in s["meets"]))
            for s in d.get("sections", [])
        )
        return cls(d["name"], comps, inter, secs, dict(d.get("labels", {})))

    def to_dict(self) -> dict:
        order = {n: i for i, n in enumerate(self.names)}
        pairs = sorted((sorted(p, key=order.get), n) for p, n in self.intersections.items())
        out = {
            "name": self.name,
            "components": [
                {"name": c.name, "multiplicity": c.multiplicity, "genus": c.genus,
                 "self_intersection": c.self_intersection}
                for c in self.components
            ],
            "intersections": [[a, b, n] for (a, b), n in pairs],
            "sections": [
                {"name": s.name, "degree": s.degree, "meets": [list(m) for m in s.meets]}
                for s in self.sections
            ],
        }
        if self.labels:
            out["labels"] = dict(self.labels)
        return out


def load_graphs(path) -> list[FibreGraph]:
    """Read a data file; it holds either one graph or {"name", "fibres": [...]}."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return graphs_from_json(data)


def graphs_from_json(data) -> list[FibreGraph]:
    if isinstance(data, dict) and "fibres" in data:
        try:
            jsonschema.validate(data, FILE_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise SchemaError(exc.message) from exc
        return [FibreGraph.from_dict(g) for g in data["fibres"]]
    if not isinstance(data, dict):
        raise SchemaError("expected a JSON object")
    return [FibreGraph.from_dict(data)]


def load_data(name: str):
    """Parsed JSON of a shipped data file, e.g. ``load_data("pencil_Sprime.json")``."""
    return json.loads(resources.files("ellquartic").joinpath("data", name).read_text())


# intersection numbers -------------------------------------------------------------------


def solve_self_intersections(g: FibreGraph) -> FibreGraph:
    """Fill in C^2 from F.C = 0, where F is the multiplicity-weighted fibre."""
    comps = []
    for c in g.components:
        s = sum(d.multiplicity * g.dot(c.name, d.name) for d in g.components if d.name != c.name)
        if s % c.multiplicity:
            raise InconsistentDataError(f"{g.name}: {c.name}^2 = -{s}/{c.multiplicity} is not an integer")
        value = -s // c.multiplicity
        if c.self_intersection is not None and c.self_intersection != value:
            raise InconsistentDataError(f"{g.name}: {c.name}^2 given as {c.self_intersection}, forced {value}")
        comps.append(replace(c, self_intersection=value))
    return replace(g, components=tuple(comps))


def fibre_relations_hold(g: FibreGraph) -> bool:
    return all(
        sum(d.multiplicity * g.dot(c.name, d.name) for d in g.components) == 0
        for c in g.components
    )


def section_degree(g: FibreGraph, s: Section) -> int:
    """Degree over the base read off the fibre: sum of multiplicity times incidence."""
    return sum(g.component(c).multiplicity * n for c, n in s.meets)


def arithmetic_genus_reduced(g: FibreGraph, subset) -> int:
    """p_a of the reduced curve sum C_i: 2 p_a - 2 = 2 sum_{i<j} C_i C_j + sum (2 g_i - 2)."""
    subset = list(subset)
    if not g.is_connected(subset):
        raise ValueError(f"{subset} is not connected")
    pairs = sum(g.dot(a, b) for i, a in enumerate(subset) for b in subset[i + 1:])
    total = 2 * pairs + sum(2 * g.component(c).genus - 2 for c in subset)
    return total // 2 + 1


def contract_curve(g: FibreGraph, name: str) -> FibreGraph:
    """Blow down a (-1)-curve E: C.D becomes C.D + (C.E)(D.E), including C = D."""
    E = g.component(name)
    if E.genus != 0 or E.self_intersection != -1:
        raise ContractionError(f"{name} is not a smooth rational (-1)-curve")
    rest = [c for c in g.components if c.name != name]
    comps = tuple(
        replace(c, self_intersection=c.self_intersection + g.dot(c.name, name) ** 2) for c in rest
    )
    inter = {}
    for i, a in enumerate(rest):
        for b in rest[i + 1:]:
            n = g.dot(a.name, b.name) + g.dot(a.name, name) * g.dot(b.name, name)
            if n:
                inter[frozenset((a.name, b.name))] = n
    secs = []
    for s in g.sections:
        through = sum(n for c, n in s.meets if c == name)
        meets = Counter()
        for c, n in s.meets:
            if c != name:
                meets[c] += n
        for c in rest:
            if through and g.dot(c.name, name):
                meets[c.name] += through * g.dot(c.name, name)
        secs.append(Section(s.name, s.degree, tuple(sorted(meets.items()))))
    out = FibreGraph(g.name, comps, inter, tuple(secs), dict(g.labels))
    if not fibre_relations_hold(out):  # pragma: no cover - arithmetic identity
        raise InconsistentDataError("fibre relations broken by contraction")
    return out


def check_minimal(g: FibreGraph) -> bool:
    return not any(c.genus == 0 and c.self_intersection == -1 for c in g.components)


# Kodaira types ----------------------------------------------------------------------


def _arms(g: FibreGraph, centre: str) -> list[int]:
    lengths = []
    for start in g.neighbours(centre):
        prev, cur, n = centre, start, 1
        while True:
            nxt = [x for x in g.neighbours(cur) if x != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return []
            prev, cur, n = cur, nxt[0], n + 1
        lengths.append(n)
    return sorted(lengths)


def classify_fibre(g: FibreGraph) -> str:
    """Extended Dynkin type of a fibre made of smooth rational (-2)-curves, else "unclassified"."""
    if any(c.genus != 0 or c.self_intersection != -2 for c in g.components):
        return "unclassified"
    if not fibre_relations_hold(g):
        return "unclassified"
    n = len(g.components)
    edges = {p: k for p, k in g.intersections.items()}
    if n == 1:
        return "unclassified"
    if n == 2:
        (k,) = edges.values() if len(edges) == 1 else (0,)
        return "Ã1" if k == 2 else "unclassified"
    if any(k != 1 for k in edges.values()):
        return "unclassified"
    degrees = {c: len(g.neighbours(c)) for c in g.names}
    if len(edges) == n and all(d == 2 for d in degrees.values()) and g.is_connected(g.names):
        return f"Ã{n - 1}"
    if len(edges) != n - 1 or not g.is_connected(g.names):
        return "unclassified"
    branch = [c for c, d in degrees.items() if d >= 3]
    if len(branch) == 1:
        arms = _arms(g, branch[0])
        if arms == [1, 1, 1, 1]:
            return "D̃4"
        if arms == [1, 2, 2]:
            return "Ẽ6"
        if arms == [1, 3, 3]:
            return "Ẽ7"
        if arms == [1, 2, 5]:
            return "Ẽ8"
    if len(branch) == 2 and all(degrees[b] == 3 for b in branch):
        leaves = [c for c, d in degrees.items() if d == 1]
        if len(leaves) == 4 and all(any(x in branch for x in g.neighbours(l)) for l in leaves):
            return f"D̃{n - 1}"
    return "unclassified"


# covering data ----------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverReport:
    violations: tuple
    notes: tuple

    @property
    def passed(self) -> bool:
        return not self.violations


def validate_cover_map(data: dict, source: list[FibreGraph], target: list[FibreGraph]) -> CoverReport:
    """Structural checks on a declared correspondence between two resolved pencils."""
    src = {c: g for g in source for c in g.names}
    tgt = {c: g for g in target for c in g.names}
    flagged = set(data.get("unresolved_source_names", []))
    violations, notes = [], []
    images = []
    for entry in data["components"]:
        s, t = entry["source"], entry["target"]
        if s not in src:
            (notes if s in flagged else violations).append(f"source {s} is not a component of the source fibres")
        if t not in tgt:
            violations.append(f"target {t} is not a component of the target fibres")
        images.append(t)
    dup = sorted(t for t, k in Counter(images).items() if k > 1)
    if dup:
        violations.append(f"correspondence not injective at {dup}")
    uncovered = sorted(set(tgt) - set(images))
    declared = sorted(data["uncovered"])
    if uncovered != declared:
        violations.append(f"uncovered set is {uncovered}, declared {declared}")
    for bunch in data["contracted"]:
        g = src.get(bunch[0])
        if g is None or any(src.get(c) is not g for c in bunch) or not g.is_connected(bunch):
            violations.append(f"contracted bunch {bunch} is not connected in one fibre")
    sdeg = {s.name: section_degree(g, s) for g in source for s in g.sections}
    tdeg = {s.name: section_degree(g, s) for g in target for s in g.sections}
    for g in source + target:
        for s in g.sections:
            if section_degree(g, s) != s.degree:
                violations.append(f"{g.name}: section {s.name} meets the fibre with degree "
                                  f"{section_degree(g, s)}, declared {s.degree}")
    for m in data["sections"]:
        s, t, k = m["source"], m["target"], m["map_degree"]
        if s not in sdeg or t not in tdeg:
            violations.append(f"unknown section in {s} -> {t}")
        elif sdeg[s] != k * tdeg[t]:
            violations.append(f"section {s} has degree {sdeg[s]}, but {k} x deg {t} = {k * tdeg[t]}")
    return CoverReport(tuple(violations), tuple(notes))
