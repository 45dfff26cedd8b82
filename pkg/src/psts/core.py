"""Validated partial Steiner triple systems and their basic parameters.

A configuration is a finite set of labelled points plus a set of 3-element
lines in which two distinct points lie on at most one common line.  All
constructions and transforms in this package route their output through
:func:`validate_configuration`, so downstream code may assume the axioms.

Points carry opaque string labels externally and dense integer indices
internally; a configuration normalises itself so that dense index order is
ascending label order, which makes serialisation canonical for free.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    DuplicateLine,
    DuplicatePoint,
    InvalidLabel,
    LineNotTriple,
    PointsNotSubset,
    TwoPointsOnTwoLines,
    UnknownPointInLine,
)

Line = tuple[int, int, int]


class Configuration:
    """Immutable incidence structure with 3-point lines.

    Use :func:`validate_configuration` to build one from raw data; the
    constructor trusts its input.  Instances are safe to share across
    threads: every operation in this package is a pure function of them.
    """

    __slots__ = ("labels", "lines", "_index", "_lines_at", "_pair_line",
                 "_canonical", "free_counts")

    def __init__(self, labels: tuple[str, ...], lines: tuple[Line, ...]):
        self.labels = labels
        self.lines = lines
        self._index = {lab: i for i, lab in enumerate(labels)}
        lines_at: list[list[Line]] = [[] for _ in labels]
        pair_line: dict[tuple[int, int], Line] = {}
        for ln in lines:
            a, b, c = ln
            lines_at[a].append(ln)
            lines_at[b].append(ln)
            lines_at[c].append(ln)
            pair_line[a, b] = ln
            pair_line[a, c] = ln
            pair_line[b, c] = ln
        self._lines_at = tuple(tuple(ls) for ls in lines_at)
        self._pair_line = pair_line
        self._canonical = None   # cache used by the isomorphism module
        self.free_counts: dict[int, int] = {}  # size -> enumeration count

    # -- accessors ------------------------------------------------------------

    @property
    def v(self) -> int:
        return len(self.labels)

    @property
    def b(self) -> int:
        return len(self.lines)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PointsNotSubset(f"point {label!r} is not in the configuration") from None

    def has_point(self, label: str) -> bool:
        return label in self._index

    def line_labels(self, line: Line) -> tuple[str, str, str]:
        a, b, c = line
        return (self.labels[a], self.labels[b], self.labels[c])

    def lines_as_labels(self) -> list[tuple[str, str, str]]:
        return [self.line_labels(ln) for ln in self.lines]

    def lines_at(self, point: int) -> tuple[Line, ...]:
        return self._lines_at[point]

    def rank(self, point: int) -> int:
        return len(self._lines_at[point])

    def line_through(self, p: int, q: int) -> Line | None:
        """The unique line containing both points, if any."""
        if p > q:
            p, q = q, p
        return self._pair_line.get((p, q))

    def third_point(self, line: Line, p: int, q: int) -> int:
        for x in line:
            if x != p and x != q:
                return x
        raise ValueError("degenerate line")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Configuration)
                and self.labels == other.labels and self.lines == other.lines)

    def __hash__(self) -> int:
        return hash((self.labels, self.lines))

    def __repr__(self) -> str:
        return f"Configuration(v={self.v}, b={self.b})"


@dataclass(frozen=True)
class ConfigParams:
    """Counting profile of a configuration: v points, b lines, point ranks."""
    v: int
    b: int
    rank_profile: tuple[int, ...]   # sorted multiset of point ranks
    line_size: int = 3


@dataclass
class CollinearityGraph:
    """Simple graph on the points; each edge knows its unique line."""
    point_count: int
    edge_lines: dict[tuple[int, int], Line]      # (i, j) with i < j
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edge_lines)


def validate_configuration(points, triples) -> Configuration:
    """Check the configuration axioms on raw data and build the value.

    ``points`` is an iterable of labels; ``triples`` an iterable of
    3-element label collections.  Labels must be unique, non-empty and free
    of whitespace (they round-trip through whitespace-delimited files).
    """
    seen: set[str] = set()
    ordered: list[str] = []
    for lab in points:
        if not isinstance(lab, str) or not lab or any(ch.isspace() for ch in lab):
            raise InvalidLabel(f"bad point label {lab!r}")
        if lab in seen:
            raise DuplicatePoint(f"point {lab!r} declared twice")
        seen.add(lab)
        ordered.append(lab)
    labels = tuple(sorted(ordered))
    index = {lab: i for i, lab in enumerate(labels)}

    lines: list[Line] = []
    line_set: set[Line] = set()
    pair_seen: dict[tuple[int, int], Line] = {}
    for raw in triples:
        members = tuple(raw)
        if len(members) != 3 or len(set(members)) != 3:
            raise LineNotTriple(f"line {members!r} does not have 3 distinct points")
        try:
            ln = tuple(sorted(index[m] for m in members))
        except KeyError:
            bad = next(m for m in members if m not in index)
            raise UnknownPointInLine(f"line {members!r} uses unknown point {bad!r}") from None
        if ln in line_set:
            raise DuplicateLine(f"line {members!r} declared twice")
        for pair in combinations(ln, 2):
            other = pair_seen.get(pair)
            if other is not None:
                raise TwoPointsOnTwoLines(
                    f"points {labels[pair[0]]!r}, {labels[pair[1]]!r} lie on two lines "
                    f"{tuple(labels[x] for x in other)} and {members!r}")
            pair_seen[pair] = ln
        line_set.add(ln)
        lines.append(ln)
    return Configuration(labels, tuple(sorted(lines)))


def parameters(config: Configuration) -> ConfigParams:
    """Exact point/line counts and the multiset of point ranks."""
    profile = tuple(sorted(config.rank(p) for p in range(config.v)))
    return ConfigParams(v=config.v, b=config.b, rank_profile=profile)


def binomial_index(config: Configuration) -> int | None:
    """The index m with v = C(m,2), b = C(m,3) and constant rank m-2.

    Returns None when the parameters do not match for any m.  The
    degenerate single point (m = 2: one point of rank 0, no lines) is
    accepted; it serves as the one-point axis of perspective systems.
    """
    v = config.v
    if v == 0:
        return None
    m = 2
    while comb(m, 2) < v:
        m += 1
    if comb(m, 2) != v or comb(m, 3) != config.b:
        return None
    want = m - 2
    if any(config.rank(p) != want for p in range(v)):
        return None
    return m


def collinearity_graph(config: Configuration) -> CollinearityGraph:
    """Edge {p,q} iff some line contains both; the line annotates the edge."""
    edge_lines: dict[tuple[int, int], Line] = {}
    adjacency: list[set[int]] = [set() for _ in range(config.v)]
    for ln in config.lines:
        for p, q in combinations(ln, 2):
            edge_lines[p, q] = ln
            adjacency[p].add(q)
            adjacency[q].add(p)
    return CollinearityGraph(
        point_count=config.v,
        edge_lines=edge_lines,
        adjacency=tuple(tuple(sorted(s)) for s in adjacency),
    )


def is_regular_subconfiguration(whole: Configuration, part: Configuration) -> bool:
    """True iff ``part`` is an l-closed (subspace) substructure of ``whole``.

    Every line of ``part`` must be a line of ``whole``, and every line of
    ``whole`` meeting the part's points in at least 2 points must belong to
    the part.
    """
    try:
        point_map = {p: whole.index_of(lab) for p, lab in enumerate(part.labels)}
    except PointsNotSubset:
        raise
    part_points = set(point_map.values())
    whole_lines = set(whole.lines)
    part_lines = {tuple(sorted(point_map[x] for x in ln)) for ln in part.lines}
    if not part_lines <= whole_lines:
        return False
    for ln in whole.lines:
        inside = sum(1 for x in ln if x in part_points)
        if inside >= 2 and ln not in part_lines:
            return False
    return True


def fresh_labels(existing, count: int, stem: str = "new") -> list[str]:
    """Deterministic labels ``<stem>:1`` .. ``<stem>:count`` avoiding clashes."""
    taken = set(existing)
    prefix = f"{stem}:"
    while any(f"{prefix}{i}" in taken for i in range(1, count + 1)):
        prefix = f"{stem}:{prefix}"
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def worker_count() -> int:
    """Search parallelism cap: PSTS_THREADS, defaulting to the CPU count."""
    raw = os.environ.get("PSTS_THREADS", "")
    if raw.strip():
        try:
            n = int(raw)
        except ValueError:
            n = 1
        return max(1, n)
    return max(1, os.cpu_count() or 1)
