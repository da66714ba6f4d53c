"""Cycle indices on edge sets and Polya generating functions.

A connected loopless multigraph is a connected simple graph (its underlying
graph) with every edge given a multiplicity of at least one. Counting those
up to isomorphism is a Polya problem: the automorphism group of the
underlying graph permutes its edges, and substituting ``t_i -> x^i/(1-x^i)``
in the cycle index of that action gives the generating function by total
edge count.

The ancillary text format written here holds one record per underlying
graph::

    V E
    <V rows of the canonical 0/1 adjacency matrix>
    <tag string> <multiplicity>
    <cycle index>

with the cycle index written as ``(c1*t1^a*t2^b+...)/N`` where ``N`` is the
group order, the ``c`` are integer counts of group elements and terms are
sorted by descending exponent vector. The identity-only index of an edgeless
graph is ``(1*1)/1``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm
from typing import Iterable, Literal, Optional

from .census import enumerate_classes
from .classify import classify
from .gf import CyclotomicSum, RationalGF, monomial
from .graph import Graph, automorphism_info, automorphisms, canonical_graph, is_connected_undirected

Monomial = tuple  # tuple[tuple[int, int], ...]: sorted (cycle length, exponent) pairs
Weight = Literal["at-least-one-edge", "count-underlying"]


@dataclass(frozen=True)
class CycleIndex:
    terms: tuple[tuple[Monomial, Fraction], ...]
    order: int = 1  # group order, used as the printed denominator

    def __post_init__(self):
        if sum(c for _, c in self.terms) != 1:
            raise ValueError("cycle index coefficients must sum to 1")
        degrees = {sum(l * e for l, e in m) for m, _ in self.terms}
        if len(degrees) > 1:
            raise ValueError("terms act on different numbers of objects")

    @classmethod
    def from_counts(cls, counts: dict[Monomial, int]) -> CycleIndex:
        order = sum(counts.values())
        terms = tuple(sorted(((m, Fraction(c, order)) for m, c in counts.items()), key=lambda t: _sort_key(t[0])))
        return cls(terms, order)

    @property
    def degree(self) -> int:
        """Number of objects permuted (edge slots)."""
        return sum(l * e for l, e in self.terms[0][0]) if self.terms else 0

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def evaluate(self, values: dict[int, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            prod = Fraction(c)
            for length, e in m:
                prod *= Fraction(values[length]) ** e
            total += prod
        return total

    def to_text(self) -> str:
        denom = lcm(self.order, *(c.denominator for _, c in self.terms))
        parts = []
        for m, c in self.terms:
            mono = "*".join(f"t{l}^{e}" for l, e in m) or "1"
            parts.append(f"{int(c * denom)}*{mono}")
        return "(" + "+".join(parts) + f")/{denom}"

    @classmethod
    def from_text(cls, text: str) -> CycleIndex:
        m = re.fullmatch(r"\((.*)\)/(\d+)", text.strip())
        if not m:
            raise ValueError(f"bad cycle index {text!r}")
        denom = int(m.group(2))
        counts: dict[Monomial, int] = {}
        for term in m.group(1).split("+"):
            coeff, *factors = term.split("*")
            mono: list[tuple[int, int]] = []
            for f in factors:
                if f == "1":
                    continue
                fm = re.fullmatch(r"t(\d+)\^(\d+)", f)
                if not fm:
                    raise ValueError(f"bad factor {f!r} in {text!r}")
                mono.append((int(fm.group(1)), int(fm.group(2))))
            key = tuple(sorted(mono))
            counts[key] = counts.get(key, 0) + int(coeff)
        terms = tuple(sorted(((k, Fraction(c, denom)) for k, c in counts.items()), key=lambda t: _sort_key(t[0])))
        return cls(terms, denom)

    def __str__(self) -> str:
        return self.to_text()


def _sort_key(m: Monomial) -> tuple[int, ...]:
    top = max((l for l, _ in m), default=0)
    vec = [0] * top
    for l, e in m:
        vec[l - 1] = e
    # descending exponent vector: t1^3 before t1*t2 before t3
    return tuple(-x for x in vec)


def _cycle_type(perm: list[int]) -> Monomial:
    seen = [False] * len(perm)
    lengths: Counter[int] = Counter()
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths[n] += 1
    return tuple(sorted(lengths.items()))


def edge_cycle_index(g: Graph) -> CycleIndex:
    """Cycle index of Aut(g) acting on the edges of a connected simple graph."""
    if g.directed:
        raise ValueError("edge cycle index needs an undirected graph")
    mat = g.matrix
    n = g.vertex_count
    if any(mat[v][v] for v in range(n)) or any(x > 1 for row in mat for x in row):
        raise ValueError("edge cycle index needs a simple graph (no loops or multiedges)")
    if n == 0 or not is_connected_undirected(mat):
        raise ValueError("edge cycle index needs a connected graph")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if mat[u][v]]
    index = {e: i for i, e in enumerate(edges)}
    counts: Counter[Monomial] = Counter()
    for p in automorphisms(g):
        perm = []
        for u, v in edges:
            a, b = p[u], p[v]
            perm.append(index[(a, b) if a < b else (b, a)])
        counts[_cycle_type(perm)] += 1
    return CycleIndex.from_counts(dict(counts))


def polya_substitute(z: CycleIndex, weight: Weight = "at-least-one-edge") -> RationalGF:
    """Substitute ``t_i -> w(x^i)`` with ``w(x) = x/(1-x)`` or ``w(x) = x``."""
    if weight == "count-underlying":
        return RationalGF(monomial(z.degree), (1,))
    if weight != "at-least-one-edge":
        raise ValueError(f"unknown weight {weight!r}")
    acc = CyclotomicSum()
    _accumulate(acc, z)
    return acc.result()


def _accumulate(acc: CyclotomicSum, z: CycleIndex) -> None:
    for m, c in z.terms:
        lengths = [l for l, e in m for _ in range(e)]
        acc.add(c, monomial(z.degree), lengths)


@dataclass(frozen=True)
class UnderlyingGraphRecord:
    graph: Graph
    label: str
    multiplicity: int
    edge_cycle_index: CycleIndex

    def __post_init__(self):
        if self.multiplicity * self.edge_cycle_index.order != factorial(self.graph.vertex_count):
            raise ValueError("multiplicity times group order must equal V!")
        if self.edge_cycle_index.degree != sum(m for _, m in self.graph.edges):
            raise ValueError("cycle index does not act on the graph's edges")


def underlying_records(vertices: int, edges: int) -> list[UnderlyingGraphRecord]:
    """All connected simple graphs with the given size, in canonical-key order."""
    out = []
    for g, info, tags in enumerate_classes(False, edges, vertices, loops=False, multiedges=False):
        if not tags.weakly_connected:
            continue
        out.append(UnderlyingGraphRecord(g, str(tags), info.orbit_weight, edge_cycle_index(g)))
    return out


def write_underlying_records(vertices: int, edges: int, records: Iterable[UnderlyingGraphRecord]) -> str:
    lines = [f"{vertices} {edges}"]
    for r in records:
        g = r.graph
        if g.vertex_count != vertices or sum(m for _, m in g.edges) != edges:
            raise ValueError(f"record does not have V={vertices}, E={edges}")
        lines.extend(" ".join(str(x) for x in row) for row in g.matrix)
        lines.append(f"{r.label} {r.multiplicity}")
        lines.append(r.edge_cycle_index.to_text())
    return "\n".join(lines) + "\n"


def read_underlying_records(text: str) -> tuple[int, int, list[UnderlyingGraphRecord]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty record file")
    vertices, edges = (int(x) for x in lines[0].split())
    body = lines[1:]
    step = vertices + 2
    if len(body) % step:
        raise ValueError("truncated record")
    records = []
    for i in range(0, len(body), step):
        g = Graph.from_text("\n".join(body[i:i + vertices]))
        label, mult = body[i + vertices].split()
        z = CycleIndex.from_text(body[i + vertices + 1])
        records.append(UnderlyingGraphRecord(g, label, int(mult), z))
    return vertices, edges, records


def connected_multigraph_gf(vertices: int, weight: Weight = "at-least-one-edge") -> RationalGF:
    """Generating function by edge count of connected loopless multigraphs on V vertices."""
    if not 2 <= vertices <= 7:
        raise ValueError("vertex count must lie in 2..7")
    if weight == "count-underlying":
        coeffs = [0] * (comb(vertices, 2) + 1)
        for e in range(vertices - 1, comb(vertices, 2) + 1):
            coeffs[e] = len(underlying_records(vertices, e))
        return RationalGF.of(coeffs)
    acc = CyclotomicSum()
    for e in range(vertices - 1, comb(vertices, 2) + 1):
        for r in underlying_records(vertices, e):
            _accumulate(acc, r.edge_cycle_index)
    return acc.result()


# ---------------------------------------------------------------------------
# all graphs on V vertices via the pair action of the symmetric group


def _partitions(n: int, largest: Optional[int] = None) -> Iterable[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield [p] + rest


def pair_cycle_index(vertices: int) -> dict[Monomial, Fraction]:
    """Cycle index of S_V acting on unordered pairs of distinct vertices."""
    out: dict[Monomial, Fraction] = {}
    for part in _partitions(vertices):
        mult = Counter(part)
        size = factorial(vertices)
        for r, j in mult.items():
            size //= r ** j * factorial(j)
        cyc: Counter[int] = Counter()
        for r, j in mult.items():
            # pairs inside one r-cycle
            if r % 2:
                cyc[r] += j * (r - 1) // 2
            else:
                cyc[r] += j * (r - 2) // 2
                cyc[r // 2] += j
            # pairs across two distinct r-cycles
            cyc[r] += r * j * (j - 1) // 2
        lengths = sorted(mult)
        for a in range(len(lengths)):
            for b in range(a + 1, len(lengths)):
                r, s = lengths[a], lengths[b]
                cyc[lcm(r, s)] += gcd(r, s) * mult[r] * mult[s]
        key = tuple(sorted((l, e) for l, e in cyc.items() if e))
        out[key] = out.get(key, Fraction(0)) + Fraction(size, factorial(vertices))
    return out


def all_graph_counts(vertices: int, max_edges: int, *, multiedges: bool) -> list[int]:
    """Unlabeled loopless graphs on V vertices by edge count, E = 0..max_edges.

    Substitutes ``t_m -> 1 + x^m`` (simple) or ``1/(1 - x^m)`` (multigraphs)
    into the pair cycle index, truncating the power series.
    """
    n = max_edges + 1
    total = [Fraction(0)] * n
    for mono, c in pair_cycle_index(vertices).items():
        series = [Fraction(0)] * n
        series[0] = c
        for m, e in mono:
            for _ in range(e):
                if multiedges:
                    for i in range(m, n):
                        series[i] += series[i - m]
                else:
                    for i in range(n - 1, m - 1, -1):
                        series[i] += series[i - m]
        total = [a + b for a, b in zip(total, series)]
    if any(x.denominator != 1 for x in total):
        raise ArithmeticError("non-integral graph count")
    return [int(x) for x in total]


def representative_record(g: Graph) -> UnderlyingGraphRecord:
    """Record for an arbitrary connected simple graph, relabelled canonically."""
    c = canonical_graph(g)
    return UnderlyingGraphRecord(c, str(classify(c)), automorphism_info(c).orbit_weight, edge_cycle_index(c))
