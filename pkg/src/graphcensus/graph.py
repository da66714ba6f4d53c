"""Small multigraphs as exact values, with canonical forms and automorphism data.

A graph is stored as a vertex count plus a map from endpoint pairs to
multiplicities. Internally most work happens on the ``V x V`` multiplicity
matrix: entry ``(u, v)`` counts arcs ``u -> v`` for digraphs, and for
undirected graphs the matrix is symmetric with the loop multiplicity (not
twice it) on the diagonal.

Canonical forms use individualization/refinement: an equitable ordered
partition is refined from the unit partition, non-singleton cells are split
by individualizing one vertex at a time, and the canonical key is the
smallest row-major matrix over all leaves of that search tree. Automorphisms
found along the way (two leaves with equal matrices) prune branches that are
known to be images of explored ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Matrix = tuple[tuple[int, ...], ...]
Pair = tuple[int, int]

#: Canonical keys are plain bytes: ``[directed, V] + row-major matrix``.
CanonicalKey = bytes


@dataclass(frozen=True)
class Graph:
    """Immutable multigraph (optionally with loops) on vertices ``0..V-1``."""

    directed: bool
    vertex_count: int
    edges: tuple[tuple[Pair, int], ...] = ()
    _matrix: Matrix | None = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        merged: dict[Pair, int] = {}
        for (u, v), m in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"endpoint out of range in {(u, v)} for V={n}")
            if m < 1:
                raise ValueError(f"multiplicity must be positive, got {m} for {(u, v)}")
            if not self.directed and u > v:
                u, v = v, u
            merged[(u, v)] = merged.get((u, v), 0) + m
        object.__setattr__(self, "edges", tuple(sorted(merged.items())))
        mat = [[0] * n for _ in range(n)]
        for (u, v), m in self.edges:
            mat[u][v] = m
            if not self.directed:
                mat[v][u] = m
        object.__setattr__(self, "_matrix", tuple(tuple(r) for r in mat))

    @classmethod
    def from_edges(cls, directed: bool, vertex_count: int, pairs: Iterable[Pair]) -> Graph:
        """Build from a list of endpoint pairs; repeated pairs become multiedges."""
        return cls(directed, vertex_count, tuple(((u, v), 1) for u, v in pairs))

    @classmethod
    def from_matrix(cls, directed: bool, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        items = []
        for u in range(n):
            if len(matrix[u]) != n:
                raise ValueError("adjacency matrix must be square")
            for v in range(n):
                m = matrix[u][v]
                if m < 0:
                    raise ValueError("negative multiplicity")
                if not directed:
                    if matrix[v][u] != m:
                        raise ValueError("undirected adjacency matrix must be symmetric")
                    if v < u:
                        continue
                if m:
                    items.append(((u, v), m))
        return cls(directed, n, tuple(items))

    @property
    def matrix(self) -> Matrix:
        return self._matrix  # type: ignore[return-value]

    def multiplicity(self, u: int, v: int) -> int:
        return self.matrix[u][v]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph(
            self.directed,
            self.vertex_count,
            tuple(((perm[u], perm[v]), m) for (u, v), m in self.edges),
        )

    def to_text(self) -> str:
        """Adjacency matrix as ``V`` lines of space-separated integers."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.matrix)

    @classmethod
    def from_text(cls, text: str, directed: bool = False) -> Graph:
        rows = [[int(t) for t in line.split()] for line in text.strip().splitlines() if line.strip()]
        return cls.from_matrix(directed, rows)


@dataclass(frozen=True)
class AutomorphismInfo:
    aut_order: int
    orbit_weight: int


def edge_count(g: Graph) -> int:
    """Number of edges; a loop counts once, a multiedge counts its multiplicity."""
    return sum(m for _, m in g.edges)


# ---------------------------------------------------------------------------
# partition refinement and the canonical search


def _refine(mat: Matrix, tmat: Matrix, n: int, cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to the coarsest equitable one below it.

    Cells are split in place, so each cell keeps its position range; sub-cells
    are ordered by an isomorphism-invariant vertex signature.
    """
    while True:
        cell_of = [0] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = mat[v]
                col = tmat[v]
                sig = sorted(
                    (cell_of[u], row[u], col[u])
                    for u in range(n)
                    if u != v and (row[u] or col[u])
                )
                groups.setdefault((row[v], tuple(sig)), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _twin_transpositions(mat: Matrix, tmat: Matrix, n: int) -> list[list[int]]:
    """Transpositions (u v) that are automorphisms: vertices with identical neighbourhoods."""
    gens = []
    for u in range(n):
        ru, cu = mat[u], tmat[u]
        for v in range(u + 1, n):
            rv, cv = mat[v], tmat[v]
            if ru[u] != rv[v] or ru[v] != rv[u]:
                continue
            if all(ru[x] == rv[x] and cu[x] == cv[x] for x in range(n) if x != u and x != v):
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(p)
    return gens


class _Search:
    __slots__ = ("mat", "tmat", "n", "header", "leaves", "gens", "best_key", "best_order")

    def __init__(self, mat: Matrix, directed: bool):
        n = len(mat)
        self.mat = mat
        self.tmat = tuple(zip(*mat)) if directed else mat
        self.n = n
        self.header = bytes((int(directed), n))
        self.leaves: dict[bytes, list[int]] = {}
        self.gens: list[list[int]] = _twin_transpositions(mat, self.tmat, n)
        self.best_key: bytes | None = None
        self.best_order: list[int] | None = None

    def run(self) -> tuple[bytes, int]:
        cells = _refine(self.mat, self.tmat, self.n, [list(range(self.n))]) if self.n else []
        return self._node(cells, ())

    def _leaf(self, cells: list[list[int]]) -> bytes:
        order = [c[0] for c in cells]
        mat = self.mat
        key = bytes(mat[a][b] for a in order for b in order)
        seen = self.leaves.get(key)
        if seen is None:
            self.leaves[key] = order
            if self.best_key is None or key < self.best_key:
                self.best_key, self.best_order = key, order
        else:
            perm = [0] * self.n
            for a, b in zip(seen, order):
                perm[a] = b
            self.gens.append(perm)
        return key

    def _same_orbit(self, w: int, explored: list[int], prefix: tuple[int, ...]) -> int | None:
        if not explored:
            return None
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[p] != p for p in prefix):
                continue
            for a, b in enumerate(g):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        rw = find(w)
        for x in explored:
            if find(x) == rw:
                return x
        return None

    def _node(self, cells: list[list[int]], prefix: tuple[int, ...]) -> tuple[bytes, int]:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self._leaf(cells), 1
        cell = cells[target]
        vals: dict[int, bytes] = {}
        explored: list[int] = []
        first_aut = 0
        for w in cell:
            rep = self._same_orbit(w, explored, prefix)
            if rep is not None:
                vals[w] = vals[rep]
                continue
            rest = [x for x in cell if x != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            key, aut = self._node(_refine(self.mat, self.tmat, self.n, child), prefix + (w,))
            vals[w] = key
            if not explored:
                first_aut = aut
            explored.append(w)
        first_val = vals[cell[0]]
        orbit = sum(1 for w in cell if vals[w] == first_val)
        return min(vals.values()), orbit * first_aut


@dataclass(frozen=True)
class CanonicalResult:
    """Everything the canonical search learns about one matrix."""

    key: CanonicalKey
    aut_order: int
    order: tuple[int, ...]  # canonical position i holds input vertex order[i]
    generators: tuple[tuple[int, ...], ...]  # automorphisms, in input labels


def canonical_search(mat: Matrix, directed: bool) -> CanonicalResult:
    s = _Search(mat, directed)
    body, aut = s.run()
    order = tuple(s.best_order) if s.best_order is not None else ()
    return CanonicalResult(s.header + body, aut, order, tuple(tuple(g) for g in s.gens))


def canonical_form(g: Graph) -> CanonicalKey:
    """Canonical key: equal for two graphs iff they are isomorphic."""
    return canonical_search(g.matrix, g.directed).key


def automorphism_info(g: Graph) -> AutomorphismInfo:
    if g.vertex_count < 1:
        raise ValueError("automorphism_info needs at least one vertex")
    aut = canonical_search(g.matrix, g.directed).aut_order
    return AutomorphismInfo(aut, math.factorial(g.vertex_count) // aut)


def graph_from_key(key: CanonicalKey) -> Graph:
    directed, n = bool(key[0]), key[1]
    body = key[2:]
    if len(body) != n * n:
        raise ValueError("malformed canonical key")
    return Graph.from_matrix(directed, [list(body[i * n:(i + 1) * n]) for i in range(n)])


def canonical_graph(g: Graph) -> Graph:
    """The representative whose matrix is the canonical key body."""
    return graph_from_key(canonical_form(g))


def automorphisms(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every automorphism as a vertex map, by backtracking.

    Independent of the canonical search: vertices are mapped one at a time,
    checking loop counts, degrees and all multiplicities to already-mapped
    vertices.
    """
    mat = g.matrix
    n = g.vertex_count
    tmat = tuple(zip(*mat)) if n else ()
    sig = [
        (mat[v][v], sorted(mat[v][u] for u in range(n) if u != v), sorted(tmat[v][u] for u in range(n) if u != v))
        for v in range(n)
    ]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        for w in range(n):
            if used[w] or sig[w] != sig[v]:
                continue
            if any(mat[v][u] != mat[w][image[u]] or mat[u][v] != mat[image[u]][w] for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False
        image[v] = -1

    yield from extend(0)


def is_connected_undirected(mat: Matrix) -> bool:
    """Weak connectivity of a multiplicity matrix; loops never connect."""
    n = len(mat)
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        row = mat[u]
        for v in range(n):
            if not seen[v] and (row[v] or mat[v][u]):
                seen[v] = True
                stack.append(v)
    return all(seen)


def slot_orbit_representatives(
    n: int,
    directed: bool,
    generators: Iterable[Sequence[int]],
    slots: Sequence[Pair],
) -> list[Pair]:
    """One endpoint pair per orbit of the group generated by ``generators``."""
    index = {s: i for i, s in enumerate(slots)}
    parent = list(range(len(slots)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for i, (u, v) in enumerate(slots):
            a, b = g[u], g[v]
            if not directed and a > b:
                a, b = b, a
            j = index.get((a, b))
            if j is None:
                continue
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [s for i, s in enumerate(slots) if find(i) == i]


def all_slots(n: int, directed: bool, loops: bool = True) -> list[Pair]:
    if directed:
        return [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    return [(u, v) for u in range(n) for v in range(u, n) if loops or u != v]


def matrix_relabel(mat: Matrix, order: Sequence[int]) -> Matrix:
    """Matrix whose position ``i`` is input vertex ``order[i]``."""
    return tuple(tuple(mat[a][b] for b in order) for a in order)


def orbit_weight(aut_order: int, n: int) -> int:
    return math.factorial(n) // aut_order
