"""Six-flag classification of graphs and the tag-pattern language.

Tags are written in the fixed order ``d C c i m l``; a leading ``-`` negates a
flag. Undirected graphs never carry a ``C``/``-C`` flag. Patterns use the same
tokens, omit flags that do not matter, and may contain the filler ``.*``.

The filler behaves like the regular expression it looks like when matched
against full tag strings: ``.*`` can swallow the ``-`` of the next token, so
``d.*Cc-i`` accepts both ``dCc-i...`` and ``d-Cc-i...``. A positive token
directly after ``.*`` therefore leaves that flag free, while a negative token
after ``.*`` still requires the flag to be absent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .graph import Graph, Matrix, is_connected_undirected

FLAG_ORDER = ("directed", "strongly_connected", "weakly_connected", "has_isolated", "has_multiedge", "has_loop")
FLAG_LETTERS = ("d", "C", "c", "i", "m", "l")


@dataclass(frozen=True)
class TagSet:
    directed: bool
    has_loop: bool
    has_multiedge: bool
    weakly_connected: bool
    strongly_connected: Optional[bool]
    has_isolated: bool

    def __post_init__(self):
        if not self.directed and self.strongly_connected is not None:
            raise ValueError("undirected graphs carry no strong-connectivity flag")
        if self.directed and self.strongly_connected is None:
            raise ValueError("directed graphs need a strong-connectivity flag")

    def flags(self) -> tuple[Optional[bool], ...]:
        return tuple(getattr(self, name) for name in FLAG_ORDER)

    def __str__(self) -> str:
        out = []
        for letter, value in zip(FLAG_LETTERS, self.flags()):
            if value is None:
                continue
            out.append(letter if value else "-" + letter)
        return "".join(out)

    @property
    def possible(self) -> bool:
        """False for the tag combinations no graph can have."""
        return not any(p.matches(self) for p in impossible_patterns())


def all_tagsets(directed: bool) -> Iterator[TagSet]:
    """Every syntactically valid full tag set, impossible ones included."""
    strong = (True, False) if directed else (None,)
    for s, c, i, m, l in product(strong, (True, False), (True, False), (True, False), (True, False)):
        yield TagSet(directed, l, m, c, s, i)


def _strongly_connected(mat: Matrix) -> bool:
    n = len(mat)
    reach = [[bool(mat[u][v]) or u == v for v in range(n)] for u in range(n)]
    for k in range(n):
        rk = reach[k]
        for u in range(n):
            if reach[u][k]:
                ru = reach[u]
                for v in range(n):
                    if rk[v]:
                        ru[v] = True
    return all(all(r) for r in reach)


def classify_matrix(mat: Matrix, directed: bool) -> TagSet:
    n = len(mat)
    if n < 1:
        raise ValueError("classification needs at least one vertex")
    has_loop = any(mat[v][v] for v in range(n))
    has_multi = any(x >= 2 for row in mat for x in row)
    weak = is_connected_undirected(mat)
    isolated = n == 1 or any(
        not any(mat[v][u] or mat[u][v] for u in range(n) if u != v) for v in range(n)
    )
    strong = _strongly_connected(mat) if directed else None
    return TagSet(directed, has_loop, has_multi, weak, strong, isolated)


def classify(g: Graph) -> TagSet:
    """Compute the tag set of ``g`` (which must have at least one vertex)."""
    return classify_matrix(g.matrix, g.directed)


_TOKEN = re.compile(r"(\.\*)|(-?)([dCciml])")


@dataclass(frozen=True)
class TagPattern:
    """Per-flag requirement: True (present), False (absent) or None (either)."""

    directed: Optional[bool] = None
    strongly_connected: Optional[bool] = None
    weakly_connected: Optional[bool] = None
    has_isolated: Optional[bool] = None
    has_multiedge: Optional[bool] = None
    has_loop: Optional[bool] = None
    text: str = field(default="", compare=False)

    @classmethod
    def parse(cls, text: str) -> TagPattern:
        src = text.strip()
        if src.startswith("(") and src.endswith(")"):
            src = src[1:-1].strip()
        pos = 0
        last = -1
        filler = False
        req: dict[str, Optional[bool]] = {}
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if m is None:
                raise ValueError(f"bad tag pattern {text!r} at offset {pos}")
            pos = m.end()
            if m.group(1):
                filler = True
                continue
            neg, letter = m.group(2), m.group(3)
            idx = FLAG_LETTERS.index(letter)
            if idx <= last:
                raise ValueError(f"tag {neg + letter!r} out of order in {text!r}")
            last = idx
            if neg:
                req[FLAG_ORDER[idx]] = False
            elif filler:
                # ".*X" also matches "-X": the flag is left free
                req[FLAG_ORDER[idx]] = None
            else:
                req[FLAG_ORDER[idx]] = True
            filler = False
        return cls(**req, text=src)

    @classmethod
    def from_flags(cls, **flags: Optional[bool]) -> TagPattern:
        p = cls(**flags)
        return cls(**flags, text=p._render())

    def _render(self) -> str:
        out = []
        for name, letter in zip(FLAG_ORDER, FLAG_LETTERS):
            v = getattr(self, name)
            if v is None:
                continue
            out.append(letter if v else "-" + letter)
        return "".join(out)

    def __str__(self) -> str:
        return self.text or self._render()

    def requirements(self) -> tuple[Optional[bool], ...]:
        return tuple(getattr(self, name) for name in FLAG_ORDER)

    def matches(self, t: TagSet) -> bool:
        return pattern_matches(t, self)


def pattern_matches(t: TagSet, p: TagPattern) -> bool:
    """True iff ``t`` agrees with every flag ``p`` does not leave free."""
    for want, have in zip(p.requirements(), t.flags()):
        if want is None:
            continue
        if have is None or want != have:
            return False
    return True


def parse_pattern(text: str | TagPattern) -> TagPattern:
    return text if isinstance(text, TagPattern) else TagPattern.parse(text)


_IMPOSSIBLE = ("d-Cci", "dC-c")


def impossible_patterns() -> list[TagPattern]:
    """The two tag combinations that no graph can carry."""
    return [TagPattern.parse(s) for s in _IMPOSSIBLE]


def is_impossible(p: TagPattern) -> bool:
    """True if every tag set matching ``p`` is one of the impossible combinations."""
    return not any(
        p.matches(t) and not any(q.matches(t) for q in impossible_patterns())
        for d in (True, False)
        for t in all_tagsets(d)
    )
