"""Multiset transforms: from connected counts to counts with k components.

A graph with k components is a multiset of k connected graphs, and both
edges and vertices add up over the components. Counting the multisets of
(edges, vertices) pairs and choosing, for a pair used f times, a multiset of
f connected graphs of that size gives the k-component counts.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Optional, Sequence

Pair = tuple[int, int]
PairMultiset = tuple[tuple[Pair, int], ...]


def multiset_coefficient(n: int, m: int) -> int:
    """Number of multisets of size m drawn from n kinds of objects."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    if m == 0:
        return 1
    if n == 0:
        return 0
    return comb(n + m - 1, m)


def partitions_into(n: int, k: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly k positive parts, parts non-increasing."""
    largest = n if largest is None else largest
    if k == 0:
        if n == 0:
            yield ()
        return
    for p in range(min(n - (k - 1), largest), 0, -1):
        if p * k < n:
            break
        for rest in partitions_into(n - p, k - 1, p):
            yield (p,) + rest


def multiset_transform(t: Sequence[int] | Mapping[int, int], n_max: int, k_max: int) -> dict[tuple[int, int], int]:
    """``T[n, k]`` for 1 <= n <= n_max, 1 <= k <= k_max from ``t[n] = T[n, 1]``."""
    out = {}
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            total = 0
            for parts in partitions_into(n, k):
                prod = 1
                for part, f in Counter(parts).items():
                    prod *= multiset_coefficient(t[part], f)
                    if not prod:
                        break
                total += prod
            out[(n, k)] = total
    return out


def pair_multisets(edges: int, vertices: int, k: int) -> list[PairMultiset]:
    """Multisets of k pairs (e, v), v >= 1, summing to (edges, vertices).

    Pairs are listed in descending order (e first, then v); the result is
    sorted the same way.
    """
    if edges < 0 or k < 1:
        raise ValueError("need edges >= 0 and k >= 1")
    out: list[PairMultiset] = []

    def walk(e_left: int, v_left: int, slots: int, bound: Pair, acc: list[Pair]) -> None:
        if slots == 0:
            if e_left == 0 and v_left == 0:
                out.append(tuple(sorted(Counter(acc).items(), reverse=True)))
            return
        for e in range(min(e_left, bound[0]), -1, -1):
            top_v = v_left - (slots - 1)
            if e == bound[0]:
                top_v = min(top_v, bound[1])
            for v in range(top_v, 0, -1):
                acc.append((e, v))
                walk(e_left - e, v_left - v, slots - 1, (e, v), acc)
                acc.pop()

    if vertices >= k:
        walk(edges, vertices, k, (edges, vertices), [])
    return out


class MissingCell(KeyError):
    def __init__(self, cell: Pair, name: str = ""):
        super().__init__(f"base table {name or '?'} has no value at E={cell[0]}, V={cell[1]}")
        self.cell = cell


@dataclass
class PairTable:
    """Counts by (E, V); absent cells are unknown, not zero."""

    values: dict[Pair, int] = field(default_factory=dict)
    name: str = ""
    k: int = 1
    labeled: bool = False

    def __getitem__(self, cell: Pair) -> int:
        try:
            return self.values[cell]
        except KeyError:
            raise MissingCell(cell, self.name) from None

    def get(self, edges: int, vertices: int) -> Optional[int]:
        return self.values.get((edges, vertices))

    def __contains__(self, cell: Pair) -> bool:
        return cell in self.values

    @property
    def max_edges(self) -> int:
        return max((e for e, _ in self.values), default=0)

    @property
    def max_vertices(self) -> int:
        return max((v for _, v in self.values), default=0)

    def to_text(self) -> str:
        lines = [f"# base={self.name} k={self.k} labeled={str(self.labeled).lower()}"]
        lines += [f"{e},{v},{c}" for (e, v), c in sorted(self.values.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PairTable:
        lines = text.splitlines()
        if not lines or not lines[0].startswith("#"):
            raise ValueError("missing header line")
        meta = dict(item.split("=", 1) for item in lines[0][1:].split())
        values = {}
        for line in lines[1:]:
            if not line.strip():
                continue
            e, v, c = (int(x) for x in line.split(","))
            if v < 1 or c < 0:
                raise ValueError(f"bad row {line!r}")
            values[(e, v)] = c
        return cls(values, meta.get("base", ""), int(meta.get("k", 1)), meta.get("labeled", "false") == "true")

    def to_csv(self, max_edges: Optional[int] = None, max_vertices: Optional[int] = None) -> str:
        """Grid layout, E down and V across, blanks for absent cells."""
        me = self.max_edges if max_edges is None else max_edges
        mv = self.max_vertices if max_vertices is None else max_vertices
        lines = ["E\\V," + ",".join(str(v) for v in range(1, mv + 1))]
        for e in range(me + 1):
            row = [str(e)]
            for v in range(1, mv + 1):
                c = self.values.get((e, v))
                row.append("" if c is None else str(c))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def _cell(base: PairTable, edges: int, vertices: int, k: int) -> int:
    total = 0
    for ms in pair_multisets(edges, vertices, k):
        prod = 1
        for (e, v), f in ms:
            prod *= multiset_coefficient(base[(e, v)], f)
            if not prod:
                break
        total += prod
    return total


def k_component_table(base: PairTable, k: int, max_edges: int, max_vertices: int) -> PairTable:
    """G(E, V, k) for 0 <= E <= max_edges, 1 <= V <= max_vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    values = {}
    for v in range(1, max_vertices + 1):
        for e in range(max_edges + 1):
            values[(e, v)] = _cell(base, e, v, k) if v >= k else 0
    return PairTable(values, base.name, k, base.labeled)


def total_over_components(base: PairTable, max_edges: int, max_vertices: int) -> PairTable:
    """Sum of G(E, V, k) over k = 1..V."""
    values = {}
    for v in range(1, max_vertices + 1):
        for e in range(max_edges + 1):
            values[(e, v)] = sum(_cell(base, e, v, k) for k in range(1, v + 1))
    return PairTable(values, base.name, 0, base.labeled)


def connected_from_totals(totals: Mapping[Pair, int], max_edges: int, max_vertices: int, name: str = "") -> PairTable:
    """Invert the transform: connected counts from counts of all graphs.

    With ``A(x, y) = sum totals[e, v] x^e y^v`` and ``c`` the connected
    counts, ``log A = sum_{e,v} c[e, v] sum_j x^(e j) y^(v j) / j``. The
    logarithm is taken degree by degree in y; the inner sum is peeled off
    by Moebius-style subtraction of the j > 1 terms.
    """
    n = max_edges + 1
    rows = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    for v in range(1, max_vertices + 1):
        rows.append([Fraction(totals[(e, v)]) for e in range(n)])
    logs: list[list[Fraction]] = [[Fraction(0)] * n]
    for v in range(1, max_vertices + 1):
        acc = [v * a for a in rows[v]]
        for m in range(1, v):
            lm, am = logs[m], rows[v - m]
            for i, x in enumerate(lm):
                if x:
                    for j in range(n - i):
                        acc[i + j] -= m * x * am[j]
        logs.append([a / v for a in acc])
    base = PairTable({}, name, 1)
    for v in range(1, max_vertices + 1):
        for e in range(n):
            c = logs[v][e]
            for j in range(2, v + 1):
                if v % j == 0 and e % j == 0:
                    c -= Fraction(base.values[(e // j, v // j)], j)
            if c.denominator != 1 or c < 0:
                raise ArithmeticError(f"totals are not a multiset transform at E={e}, V={v}")
            base.values[(e, v)] = int(c)
    return base


def graph_base(kind: str, max_edges: int, max_vertices: int) -> PairTable:
    """Connected unlabeled loopless graphs by (E, V): ``simple`` or ``multigraph``."""
    from .polya import all_graph_counts

    if kind not in ("simple", "multigraph"):
        raise ValueError(f"unknown base {kind!r}")
    totals = {}
    for v in range(1, max_vertices + 1):
        for e, c in enumerate(all_graph_counts(v, max_edges, multiedges=kind == "multigraph")):
            totals[(e, v)] = c
    return connected_from_totals(totals, max_edges, max_vertices, kind)
