"""Exhaustive census of small graphs by edge count, vertex count and tags.

Isomorphism classes with ``E`` edges on ``V`` vertices are grown from the
classes with ``E - 1`` edges: every graph arises from some smaller one by
adding a single edge, so adding one edge to each representative in every
slot (one slot per orbit of its automorphism group) and deduplicating by
canonical key yields every class exactly once.

Counts for each full tag set are tallied once per ``(directed, E, V)`` and
cached; any tag pattern is then a sum over the full tag sets it matches.
"""
from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .classify import TagPattern, TagSet, classify_matrix, is_impossible, parse_pattern
from .graph import (
    AutomorphismInfo,
    Graph,
    Matrix,
    all_slots,
    canonical_search,
    matrix_relabel,
    orbit_weight,
    slot_orbit_representatives,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 50_000_000
MAX_EDGES = 10
MAX_VERTICES = 10


class BudgetExceeded(RuntimeError):
    """Raised when enumeration would generate more candidates than allowed."""

    def __init__(self, edges: int, vertices: int, budget: int):
        super().__init__(f"candidate budget {budget} exceeded at cell E={edges}, V={vertices}")
        self.cell = (edges, vertices)
        self.budget = budget


def default_budget() -> int:
    env = os.environ.get("GRAPHCENSUS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class _Class:
    matrix: Matrix  # canonical labelling
    aut_order: int
    generators: tuple[tuple[int, ...], ...]
    tags: TagSet


def _augment(
    entries: list[tuple[Matrix, tuple[tuple[int, ...], ...]]],
    directed: bool,
    loops: bool,
    multiedges: bool,
) -> tuple[dict[bytes, _Class], int]:
    found: dict[bytes, _Class] = {}
    n = len(entries[0][0]) if entries else 0
    slots = all_slots(n, directed, loops)
    candidates = 0
    for mat, gens in entries:
        avail = slots if multiedges else [(u, v) for u, v in slots if not mat[u][v]]
        for u, v in slot_orbit_representatives(n, directed, gens, avail):
            rows = [list(r) for r in mat]
            rows[u][v] += 1
            if not directed and u != v:
                rows[v][u] += 1
            new = tuple(tuple(r) for r in rows)
            candidates += 1
            res = canonical_search(new, directed)
            if res.key in found:
                continue
            order = res.order
            pos = [0] * n
            for i, x in enumerate(order):
                pos[x] = i
            canon_gens = tuple(tuple(pos[g[order[i]]] for i in range(n)) for g in res.generators)
            cm = matrix_relabel(new, order)
            found[res.key] = _Class(cm, res.aut_order, canon_gens, classify_matrix(cm, directed))
    return found, candidates


class Enumerator:
    """Level-by-level class lists for one graph family on a fixed vertex count."""

    def __init__(self, directed: bool, vertices: int, *, loops: bool = True, multiedges: bool = True):
        if vertices < 1:
            raise ValueError("vertex count must be at least 1")
        self.directed = directed
        self.vertices = vertices
        self.loops = loops
        self.multiedges = multiedges
        empty = tuple((0,) * vertices for _ in range(vertices))
        res = canonical_search(empty, directed)
        gens = tuple(tuple(g) for g in res.generators)
        self.levels: list[dict[bytes, _Class]] = [
            {res.key: _Class(empty, res.aut_order, gens, classify_matrix(empty, directed))}
        ]
        self.candidates = 0

    def level(self, edges: int, *, budget: Optional[int] = None, jobs: int = 1) -> dict[bytes, _Class]:
        budget = default_budget() if budget is None else budget
        while len(self.levels) <= edges:
            e = len(self.levels)
            prev = self.levels[-1]
            entries = [(c.matrix, c.generators) for _, c in sorted(prev.items())]
            slots = len(all_slots(self.vertices, self.directed, self.loops))
            if self.candidates + len(entries) * slots > budget:
                raise BudgetExceeded(e, self.vertices, budget)
            if not entries:
                self.levels.append({})
                continue
            if jobs > 1 and len(entries) >= 4 * jobs:
                size = -(-len(entries) // jobs)
                chunks = [entries[i:i + size] for i in range(0, len(entries), size)]
                found: dict[bytes, _Class] = {}
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    parts = list(pool.map(
                        _augment, chunks,
                        [self.directed] * len(chunks), [self.loops] * len(chunks), [self.multiedges] * len(chunks),
                    ))
                cand = 0
                for part, c in parts:
                    cand += c
                    for k, v in part.items():
                        found.setdefault(k, v)
            else:
                found, cand = _augment(entries, self.directed, self.loops, self.multiedges)
            self.candidates += cand
            log.debug("directed=%s V=%d E=%d: %d classes from %d candidates",
                      self.directed, self.vertices, e, len(found), cand)
            self.levels.append(dict(sorted(found.items())))
        return self.levels[edges]


_ENUMERATORS: dict[tuple[bool, int, bool, bool], Enumerator] = {}


def _enumerator(directed: bool, vertices: int, loops: bool = True, multiedges: bool = True) -> Enumerator:
    k = (directed, vertices, loops, multiedges)
    if k not in _ENUMERATORS:
        _ENUMERATORS[k] = Enumerator(directed, vertices, loops=loops, multiedges=multiedges)
    return _ENUMERATORS[k]


def clear_cache() -> None:
    _ENUMERATORS.clear()
    _TALLIES.clear()


def enumerate_classes(
    directed: bool,
    edges: int,
    vertices: int,
    *,
    loops: bool = True,
    multiedges: bool = True,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> Iterator[tuple[Graph, AutomorphismInfo, TagSet]]:
    """One representative per isomorphism class, in canonical-key order.

    ``loops=False`` / ``multiedges=False`` restrict the family (the simple
    graphs used by the generating-function code).
    """
    if edges < 0:
        raise ValueError("edge count must be non-negative")
    level = _enumerator(directed, vertices, loops, multiedges).level(edges, budget=budget, jobs=jobs)
    for _, c in level.items():
        yield (
            Graph.from_matrix(directed, c.matrix),
            AutomorphismInfo(c.aut_order, orbit_weight(c.aut_order, vertices)),
            c.tags,
        )


_TALLIES: dict[tuple[bool, int, int], dict[TagSet, tuple[int, int]]] = {}


def tally(
    directed: bool, edges: int, vertices: int, *, budget: Optional[int] = None, jobs: int = 1
) -> dict[TagSet, tuple[int, int]]:
    """Map each full tag set to (unlabeled count, labeled count) for one cell."""
    k = (directed, edges, vertices)
    if k not in _TALLIES:
        out: dict[TagSet, list[int]] = {}
        level = _enumerator(directed, vertices).level(edges, budget=budget, jobs=jobs)
        for c in level.values():
            acc = out.setdefault(c.tags, [0, 0])
            acc[0] += 1
            acc[1] += orbit_weight(c.aut_order, vertices)
        _TALLIES[k] = {t: (u, l) for t, (u, l) in out.items()}
    return _TALLIES[k]


# ---------------------------------------------------------------------------
# count tables


@dataclass(frozen=True)
class CensusQuery:
    pattern: TagPattern
    labeled: bool
    max_edges: int
    max_vertices: int

    def __post_init__(self):
        if not 0 <= self.max_edges <= MAX_EDGES:
            raise ValueError(f"max_edges must lie in 0..{MAX_EDGES}")
        if not 1 <= self.max_vertices <= MAX_VERTICES:
            raise ValueError(f"max_vertices must lie in 1..{MAX_VERTICES}")


@dataclass
class CountTable:
    """Exact counts by (E, V). Cells that were not computed are simply absent."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    pattern: str = ""
    labeled: bool = False
    max_edges: int = 0
    max_vertices: int = 0

    def get(self, edges: int, vertices: int) -> Optional[int]:
        return self.entries.get((edges, vertices))

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.entries[cell]

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self.entries

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for (e, v), c in sorted(self.entries.items()):
            yield e, v, c

    @property
    def kind(self) -> str:
        return "labeled" if self.labeled else "unlabeled"

    # -- rendering ---------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["E\\V"] + list(range(1, self.max_vertices + 1)))
        for e in range(self.max_edges + 1):
            row = [e]
            for v in range(1, self.max_vertices + 1):
                c = self.entries.get((e, v))
                row.append("" if c is None else c)
            w.writerow(row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, pattern: str = "", labeled: bool = False) -> CountTable:
        rows = list(csv.reader(io.StringIO(text)))
        header = [int(x) for x in rows[0][1:]]
        entries = {}
        max_e = 0
        for row in rows[1:]:
            if not row:
                continue
            e = int(row[0])
            max_e = max(max_e, e)
            for v, cell in zip(header, row[1:]):
                if cell.strip():
                    entries[(e, v)] = int(cell)
        return cls(entries, pattern, labeled, max_e, max(header, default=0))

    def to_latex(self) -> str:
        cols = list(range(1, self.max_vertices + 1))
        lines = [
            "\\begin{tabular}{r|" + "r" * len(cols) + "}",
            "$E\\backslash V$ & " + " & ".join(str(v) for v in cols) + "\\\\",
            "\\hline",
        ]
        for e in range(self.max_edges + 1):
            cells = []
            for v in cols:
                c = self.entries.get((e, v))
                cells.append("" if c is None else str(c))
            lines.append(f"{e}& " + "& ".join(cells) + "\\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"

    def to_fixture(self) -> str:
        return "".join(f"{self.pattern};{self.kind};{e};{v};{c}\n" for e, v, c in self.cells())

    @classmethod
    def from_fixture(cls, text: str) -> CountTable:
        entries = {}
        pattern, labeled = "", False
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            pattern, kind, e, v, c = line.split(";")
            if kind not in ("labeled", "unlabeled"):
                raise ValueError(f"bad labeled flag {kind!r}")
            labeled = kind == "labeled"
            entries[(int(e), int(v))] = int(c)
        max_e = max((e for e, _ in entries), default=0)
        max_v = max((v for _, v in entries), default=0)
        return cls(entries, pattern, labeled, max_e, max_v)

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "latex":
            return self.to_latex()
        if fmt == "fixture":
            return self.to_fixture()
        raise ValueError(f"unknown format {fmt!r}")


def count_cell(
    pattern: TagPattern | str,
    labeled: bool,
    edges: int,
    vertices: int,
    *,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> int:
    p = parse_pattern(pattern)
    total = 0
    for directed in (True, False):
        if p.directed is not None and p.directed != directed:
            continue
        for tags, (unl, lab) in tally(directed, edges, vertices, budget=budget, jobs=jobs).items():
            if p.matches(tags):
                total += lab if labeled else unl
    return total


def count(query: CensusQuery, *, budget: Optional[int] = None, jobs: int = 1) -> CountTable:
    """Count the classes (or labeled graphs) matching the query in every cell."""
    entries = {}
    for v in range(1, query.max_vertices + 1):
        for e in range(query.max_edges + 1):
            entries[(e, v)] = count_cell(query.pattern, query.labeled, e, v, budget=budget, jobs=jobs)
    return CountTable(entries, str(query.pattern), query.labeled, query.max_edges, query.max_vertices)


def census_table(
    pattern: TagPattern | str,
    labeled: bool,
    max_edges: int,
    max_vertices: int,
    *,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> CountTable:
    return count(CensusQuery(parse_pattern(pattern), labeled, max_edges, max_vertices), budget=budget, jobs=jobs)


def marginal(tables: Iterable[CountTable]) -> CountTable:
    """Cell-wise sum of tables that share bounds and labeled flag."""
    tables = list(tables)
    if not tables:
        raise ValueError("marginal of an empty list of tables")
    first = tables[0]
    for t in tables[1:]:
        if (t.labeled, t.max_edges, t.max_vertices) != (first.labeled, first.max_edges, first.max_vertices):
            raise ValueError("tables differ in bounds or labeled flag")
        if set(t.entries) != set(first.entries):
            raise ValueError("tables do not cover the same cells")
    entries = {cell: sum(t.entries[cell] for t in tables) for cell in first.entries}
    name = " + ".join(t.pattern for t in tables)
    return CountTable(entries, name, first.labeled, first.max_edges, first.max_vertices)


def connected_census(
    directed: bool,
    labeled: bool,
    max_edges: int = 6,
    max_vertices: int = 6,
    *,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> CountTable:
    """Connected graphs without loops or multiedges (weak connectivity for digraphs).

    The single-vertex empty graph counts as connected, giving the 1 at E=0, V=1.
    """
    pattern = "d.*Cc.*-m-l" if directed else "-dc.*-m-l"
    return census_table(pattern, labeled, max_edges, max_vertices, budget=budget, jobs=jobs)


def impossible_warning(pattern: TagPattern | str) -> Optional[str]:
    p = parse_pattern(pattern)
    if is_impossible(p):
        return f"impossible tag combination {p}: no graph can match"
    return None
