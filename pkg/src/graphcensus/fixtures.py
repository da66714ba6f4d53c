"""Published table values bundled with the package, and a diff harness over them."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Optional

from .census import count_cell
from .graph import Graph
from .mset import graph_base, k_component_table, multiset_transform
from .polya import connected_multigraph_gf, edge_cycle_index, polya_substitute

SCOPES = ("census", "gf", "mset")

# underlying graphs of the single-shape generating functions, all on 4 vertices
# except the two-edge path
SHAPES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "c2": (3, ((0, 1), (1, 2))),
    "chain": (4, ((0, 1), (1, 2), (2, 3))),
    "star": (4, ((0, 1), (0, 2), (0, 3))),
    "triangle": (4, ((0, 1), (1, 2), (0, 2), (2, 3))),
    "square": (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "square_diag": (4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2))),
    "k4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
}


def shape_graph(name: str) -> Graph:
    n, edges = SHAPES[name]
    return Graph.from_edges(False, n, edges)


@dataclass(frozen=True)
class Fixture:
    id: str
    kind: str  # census | components | gf | mset_triangle
    cells: tuple[tuple[int, ...], ...] = ()
    pattern: str = ""
    labeled: bool = False
    directed: bool = False
    extra: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> Fixture:
        d = dict(d)
        cells = tuple(tuple(c) for c in d.pop("cells", ()))
        for c in cells:
            if c[-1] < 0:
                raise ValueError(f"negative count in fixture {d['id']}")
        return cls(
            id=d.pop("id"),
            kind=d.pop("kind"),
            cells=cells,
            pattern=d.pop("pattern", ""),
            labeled=d.pop("labeled", False),
            directed=d.pop("directed", False),
            extra=d,
        )


def load_fixtures(path: Optional[str | Path] = None) -> list[Fixture]:
    if path is None:
        text = resources.files("graphcensus").joinpath("data/fixtures.json").read_text()
    else:
        text = Path(path).read_text()
    out = [Fixture.from_json(d) for d in json.loads(text)["fixtures"]]
    ids = [f.id for f in out]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate fixture ids")
    return out


@dataclass(frozen=True)
class Erratum:
    """A printed cell known to be wrong, with the value it should have."""

    table: str
    edges: int
    vertices: int
    printed: int
    corrected: int
    reason: str = ""


def load_errata(path: Optional[str | Path] = None) -> list[Erratum]:
    if path is None:
        text = resources.files("graphcensus").joinpath("data/fixtures.json").read_text()
    else:
        text = Path(path).read_text()
    return [
        Erratum(d["id"], d["cell"][0], d["cell"][1], d["printed"], d["corrected"], d.get("reason", ""))
        for d in json.loads(text).get("errata", [])
    ]


def fixture(fid: str) -> Fixture:
    for f in load_fixtures():
        if f.id == fid:
            return f
    raise KeyError(fid)


@dataclass(frozen=True)
class Mismatch:
    table: str
    edges: int
    vertices: int
    expected: int
    got: Optional[int]

    def __str__(self) -> str:
        return f"{self.table} E={self.edges} V={self.vertices} expected={self.expected} got={self.got}"


@dataclass
class Report:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    skipped: int = 0
    errata: list[Mismatch] = field(default_factory=list)  # printed value wrong, computed value as corrected

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, table: str, e: int, v: int, expected: int, got: Optional[int]) -> None:
        self.checked += 1
        if got != expected:
            self.mismatches.append(Mismatch(table, e, v, expected, got))

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.mismatches.extend(other.mismatches)
        self.errata.extend(other.errata)

    def apply_errata(self, errata: Iterable[Erratum]) -> None:
        known = {(x.table, x.edges, x.vertices): x for x in errata}
        keep = []
        for m in self.mismatches:
            x = known.get((m.table, m.edges, m.vertices))
            if x is not None and m.expected == x.printed and m.got == x.corrected:
                self.errata.append(m)
            else:
                keep.append(m)
        self.mismatches = keep


@dataclass(frozen=True)
class Bounds:
    directed_edges: int = 6
    directed_vertices: int = 6
    undirected_edges: int = 8
    undirected_vertices: int = 8

    def covers(self, directed: bool, e: int, v: int) -> bool:
        if directed:
            return e <= self.directed_edges and v <= self.directed_vertices
        return e <= self.undirected_edges and v <= self.undirected_vertices


def verify_census(fixtures: Iterable[Fixture], bounds: Bounds = Bounds(), *, budget=None, jobs: int = 1) -> Report:
    rep = Report()
    for f in fixtures:
        if f.kind != "census":
            continue
        for e, v, c in f.cells:
            if bounds.covers(f.directed, e, v):
                rep.check(f.id, e, v, c, count_cell(f.pattern, f.labeled, e, v, budget=budget, jobs=jobs))
            else:
                rep.skipped += 1
    return rep


def gf_for(f: Fixture):
    if "vertices" in f.extra:
        return connected_multigraph_gf(f.extra["vertices"])
    return polya_substitute(edge_cycle_index(shape_graph(f.extra["shape"])))


def verify_gf(fixtures: Iterable[Fixture]) -> Report:
    rep = Report()
    for f in fixtures:
        if f.kind != "gf":
            continue
        want = f.extra["coefficients"]
        got = gf_for(f).series(len(want))
        for e, (a, b) in enumerate(zip(want, got)):
            rep.check(f.id, e, f.extra.get("vertices", 0), a, b)
    return rep


def verify_mset(fixtures: Iterable[Fixture]) -> Report:
    rep = Report()
    fixtures = list(fixtures)
    comps = [f for f in fixtures if f.kind == "components"]
    bases = {}
    if comps:
        max_e = max(c[0] for f in comps for c in f.cells)
        max_v = max(c[1] for f in comps for c in f.cells)
        for kind in {f.extra["base"] for f in comps}:
            bases[kind] = graph_base(kind, max_e, max_v)
    for f in comps:
        max_e = max(c[0] for c in f.cells)
        max_v = max(c[1] for c in f.cells)
        table = k_component_table(bases[f.extra["base"]], f.extra["k"], max_e, max_v)
        for e, v, c in f.cells:
            rep.check(f.id, e, v, c, table.get(e, v))
    for f in fixtures:
        if f.kind != "mset_triangle":
            continue
        seq = f.extra["sequence"]
        n_max = max(c[0] for c in f.cells)
        tri = multiset_transform(seq + [0] * n_max, n_max, n_max)
        for n, k, c in f.cells:
            rep.check(f.id, n, k, c, tri.get((n, k)))
        for n, s in enumerate(f.extra.get("row_sums", []), start=1):
            rep.check(f.id + ".rowsum", n, 0, s, sum(tri[(n, k)] for k in range(1, n + 1)))
    return rep


def verify(
    scope: str = "all",
    fixtures: Optional[list[Fixture]] = None,
    bounds: Bounds = Bounds(),
    *,
    errata: Optional[list[Erratum]] = None,
    budget=None,
    jobs: int = 1,
) -> Report:
    """Recompute every fixture cell in scope; known errata are reported apart from mismatches."""
    if scope not in SCOPES + ("all",):
        raise ValueError(f"unknown scope {scope!r}")
    fixtures = load_fixtures() if fixtures is None else fixtures
    errata = load_errata() if errata is None else errata
    rep = Report()
    if scope in ("all", "census"):
        rep.merge(verify_census(fixtures, bounds, budget=budget, jobs=jobs))
    if scope in ("all", "gf"):
        rep.merge(verify_gf(fixtures))
    if scope in ("all", "mset"):
        rep.merge(verify_mset(fixtures))
    rep.apply_errata(errata)
    return rep
