"""Constructive transforms on binomial configurations.

``extend_one_more`` grows a configuration of index n with exactly m maximal
complete subgraphs (m <= n-2) into one of index n+1 with exactly m+1.
``swap_kill`` takes a configuration with exactly two maximal complete
subgraphs and exchanges one crossing pair of sides, destroying both (and
producing no new one); together with the Grassmannian these realise every
admissible subgraph count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .analysis import FreeSubgraph, enumerate_free_complete, intersection_structure
from .core import Configuration, binomial_index, fresh_labels, validate_configuration
from .errors import (
    AxiomViolation,
    AxisTooSmall,
    CertificateStale,
    EnumerationNotComplete,
    NoAdmissiblePair,
    NotBinomial,
    NotExactlyTwo,
    PSTSError,
    SharedVertexNotUnique,
    TooManySubgraphs,
)

LabelTriple = tuple[str, str, str]


@dataclass(frozen=True)
class SwapCertificate:
    """One admissible line swap between two maximal complete subgraphs.

    ``edge1`` lies in the first subgraph, ``edge2`` in the second, both
    missing the common vertex ``center``; their sides cross at ``crossing``.
    The orientation of ``edge2`` satisfies the admissibility condition: its
    second vertex is off the line through ``center`` and edge1's first
    vertex, and its first vertex is off the line through ``center`` and
    edge1's second vertex.
    """
    center: str
    crossing: str
    edge1: tuple[str, str]
    edge2: tuple[str, str]

    @property
    def removed(self) -> tuple[LabelTriple, LabelTriple]:
        q = self.crossing
        return (tuple(sorted((q,) + self.edge1)), tuple(sorted((q,) + self.edge2)))

    @property
    def inserted(self) -> tuple[LabelTriple, LabelTriple]:
        q = self.crossing
        a1, b1 = self.edge1
        a2, b2 = self.edge2
        return (tuple(sorted((q, a1, b2))), tuple(sorted((q, b1, a2))))

    def sort_key(self):
        return (self.center, self.crossing, self.edge1, self.edge2)


def extend_one_more(config: Configuration,
                    subgraphs: list[FreeSubgraph]) -> Configuration:
    """Add one maximal complete subgraph while raising the index by one.

    ``subgraphs`` must be the complete enumeration of the maximal complete
    subgraphs (order n-1 for index n); it is re-checked.  A fresh n-vertex
    set is attached: one new vertex per existing subgraph, joined through
    the pairwise centers; the remaining new vertices are matched to each
    subgraph's private part and labelled into the axis.  All free choices
    are resolved by ascending label/index order, so the output is
    deterministic.
    """
    n = binomial_index(config)
    if n is None:
        raise NotBinomial("extension input is not a binomial configuration")
    order = n - 1
    found = enumerate_free_complete(config, order)
    if sorted(w.vertices for w in subgraphs) != [w.vertices for w in found]:
        raise EnumerationNotComplete(
            f"given {len(subgraphs)} subgraphs, enumeration finds {len(found)}")
    m = len(found)
    if m > n - 2:
        raise TooManySubgraphs(f"{m} subgraphs exceeds the limit n-2 = {n - 2}")

    labs = config.labels
    centers: dict[tuple[int, int], int] = {}
    if m >= 2:
        centers = intersection_structure(config, found).centers
    center_points = set(centers.values())
    private = [tuple(x for x in w.vertices if x not in center_points) for w in found]
    covered = {x for w in found for x in w.vertices}
    axis_points = sorted(set(range(config.v)) - covered)
    edges_needed = comb(n - m, 2)
    if len(axis_points) != edges_needed:
        raise AxisTooSmall(
            f"axis has {len(axis_points)} points, need {edges_needed}")

    new = fresh_labels(labs, n)
    anchors, body = new[:m], new[m:]
    triples = config.lines_as_labels()
    for (i, j), q in centers.items():
        triples.append((anchors[i], anchors[j], labs[q]))
    for i in range(m):
        for x, y in zip(private[i], body):
            triples.append((anchors[i], labs[x], y))
    for (x, y), z in zip(combinations(body, 2), axis_points):
        triples.append((x, y, labs[z]))
    return validate_configuration(list(labs) + new, triples)


def find_swap_candidates(config: Configuration, first: FreeSubgraph,
                         second: FreeSubgraph) -> list[SwapCertificate]:
    """All admissible (edge1, edge2, crossing) swaps for the exactly-two case.

    Every side of the first subgraph missing the common vertex crosses
    exactly one side of the second at their shared third point; each such
    pair is emitted once per admissible orientation of edge2.
    """
    n = first.order
    if second.order != n or \
            len(enumerate_free_complete(config, n)) != 2:
        raise NotExactlyTwo(
            "swap candidates are defined for exactly two maximal subgraphs")
    common = set(first.vertices) & set(second.vertices)
    if len(common) != 1:
        raise SharedVertexNotUnique(f"subgraphs share {len(common)} vertices")
    p = common.pop()
    labs = config.labels

    def off_center_thirds(w: FreeSubgraph) -> dict[int, tuple[int, int]]:
        return {config.third_point(ln, *e): e
                for e, ln in w.sides.items() if p not in e}

    sigma = {}   # center-perspectivity: vertex of first -> vertex of second
    for x in first.vertices:
        if x == p:
            continue
        ln = config.line_through(p, x)
        sigma[x] = config.third_point(ln, p, x)

    thirds2 = off_center_thirds(second)
    out: list[SwapCertificate] = []
    for e1, ln1 in sorted(first.sides.items()):
        if p in e1:
            continue
        q = config.third_point(ln1, *e1)
        e2 = thirds2.get(q)
        if e2 is None:
            continue
        a1, b1 = e1
        u, v = e2
        for a2, b2 in ((u, v), (v, u)):
            if b2 != sigma[a1] and a2 != sigma[b1]:
                out.append(SwapCertificate(
                    center=labs[p], crossing=labs[q],
                    edge1=(labs[a1], labs[b1]), edge2=(labs[a2], labs[b2])))
    if not out:
        raise NoAdmissiblePair("no admissible crossing pair found")
    out.sort(key=SwapCertificate.sort_key)
    return out


def swap_kill(config: Configuration, certificate: SwapCertificate) -> Configuration:
    """Replace the two crossed sides by their re-paired triples.

    Point set, counts and rank profile are unchanged; on a configuration
    with exactly two maximal complete subgraphs the result has none.
    """
    current = {tuple(ln) for ln in config.lines_as_labels()}
    removed = certificate.removed
    for ln in removed:
        if ln not in current:
            raise CertificateStale(f"line {ln} is not present")
    triples = [ln for ln in config.lines_as_labels() if ln not in set(removed)]
    triples.extend(certificate.inserted)
    try:
        return validate_configuration(list(config.labels), triples)
    except PSTSError as exc:
        raise AxiomViolation(f"inserted lines break the axioms: {exc}") from exc


def first_swap(config: Configuration) -> tuple[Configuration, SwapCertificate]:
    """Apply the first admissible swap of a two-subgraph configuration."""
    n = binomial_index(config)
    if n is None:
        raise NotBinomial("swap input is not a binomial configuration")
    subs = enumerate_free_complete(config, n - 1)
    if len(subs) != 2:
        raise NotExactlyTwo(f"need exactly 2 maximal subgraphs, found {len(subs)}")
    cert = find_swap_candidates(config, subs[0], subs[1])[0]
    return swap_kill(config, cert), cert
