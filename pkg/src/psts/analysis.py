"""Complete graphs freely contained in a configuration.

A vertex set X is freely contained when every pair of its points is
collinear, distinct pairs lie on distinct lines (the sides), and sides meet
one another only inside X.  This module decides that predicate, enumerates
all such sets of a given order, and computes the derived structure: the
complement of a contained graph, the pairwise-intersection embedding, the
axis decomposition, and the reverse engineering of a perspective system.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .constructions import Labelling, PerspectiveData, labelling_from_sequence
from .core import (
    Configuration,
    Line,
    binomial_index,
    collinearity_graph,
    is_regular_subconfiguration,
    validate_configuration,
    worker_count,
)
from .errors import (
    NotDistinct,
    NotFreelyContained,
    OutOfRange,
    SharedVertexNotUnique,
    SizeMismatch,
    StructureViolation,
)


@dataclass
class FreeSubgraph:
    """Witness of free containment: the vertex set and its side map."""
    configuration: Configuration
    vertices: tuple[int, ...]                    # ascending dense indices
    sides: dict[tuple[int, int], Line]           # edge (i < j) -> line

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        labs = self.configuration.labels
        return tuple(labs[x] for x in self.vertices)

    def side_lines(self) -> set[Line]:
        return set(self.sides.values())

    def third_points(self) -> dict[tuple[int, int], int]:
        cfg = self.configuration
        return {e: cfg.third_point(ln, *e) for e, ln in self.sides.items()}

    def __repr__(self) -> str:
        return f"FreeSubgraph({' '.join(self.vertex_labels)})"


def _free_witness(config: Configuration, vertices: tuple[int, ...]) -> FreeSubgraph | None:
    """Literal check of the definition; also the building block of the
    naive oracle, so it stays independent of the pruned search below."""
    sides: dict[tuple[int, int], Line] = {}
    for e in combinations(vertices, 2):
        ln = config.line_through(*e)
        if ln is None:
            return None
        sides[e] = ln
    if len(set(sides.values())) != len(sides):
        return None
    inside = set(vertices)
    side_list = list(sides.values())
    for ln1, ln2 in combinations(side_list, 2):
        for p in set(ln1) & set(ln2):
            if p not in inside:
                return None
    return FreeSubgraph(config, tuple(vertices), sides)


def is_freely_contained(config: Configuration, points) -> FreeSubgraph | None:
    """Witness for the given point labels, or None."""
    idx = tuple(sorted(config.index_of(p) for p in points))
    if len(set(idx)) != len(idx):
        raise NotDistinct(f"repeated points in {tuple(points)}")
    return _free_witness(config, idx)


def naive_enumerate_free_complete(config: Configuration, size: int) -> list[FreeSubgraph]:
    """Reference oracle: test every size-subset of the points by definition."""
    out = []
    for vs in combinations(range(config.v), size):
        w = _free_witness(config, vs)
        if w is not None:
            out.append(w)
    return out


def _search_block(config, graph, size, roots):
    """Grow free subgraphs depth-first from each root vertex in ``roots``.

    A partial vertex set is extended only by points that keep every new
    side fresh and every new third point unused, so each leaf is already a
    free subgraph: no post-filter is needed.
    """
    adjacency = [set(nb) for nb in graph.adjacency]
    found: list[FreeSubgraph] = []

    def grow(chosen: list[int], cands: tuple[int, ...],
             used_lines: set[Line], thirds: dict[int, tuple[int, int]]):
        if len(chosen) == size:
            sides = {e: config.line_through(*e) for e in combinations(chosen, 2)}
            found.append(FreeSubgraph(config, tuple(chosen), sides))
            return
        need = size - len(chosen)
        for pos, u in enumerate(cands):
            if len(cands) - pos < need:
                break
            if u in thirds:
                continue
            new_lines = []
            new_thirds = []
            ok = True
            for w in chosen:
                ln = config.line_through(w, u)
                if ln in used_lines:
                    ok = False
                    break
                t = config.third_point(ln, w, u)
                if t in thirds or any(t == s for s, _ in new_thirds):
                    ok = False
                    break
                new_lines.append(ln)
                new_thirds.append((t, (w, u)))
            if not ok:
                continue
            used_lines.update(new_lines)
            for t, e in new_thirds:
                thirds[t] = e
            grow(chosen + [u],
                 tuple(x for x in cands[pos + 1:] if x in adjacency[u]),
                 used_lines, thirds)
            used_lines.difference_update(new_lines)
            for t, _ in new_thirds:
                del thirds[t]

    for r in roots:
        grow([r], tuple(x for x in graph.adjacency[r] if x > r), set(), {})
    return found


def enumerate_free_complete(config: Configuration, size: int | None = None) -> list[FreeSubgraph]:
    """All freely contained complete graphs of the given order, sorted.

    When ``size`` is omitted and the configuration has binomial index n+1,
    the maximal order n is used.  The search space is partitioned by the
    smallest vertex; PSTS_THREADS caps how many partitions run at once.
    """
    if size is None:
        idx = binomial_index(config)
        if idx is None or idx < 3:
            raise OutOfRange("size not given and no usable binomial index")
        size = idx - 1
    if size < 2:
        raise OutOfRange(f"subgraph order must be >= 2, got {size}")
    graph = collinearity_graph(config)
    roots = list(range(config.v))
    threads = min(worker_count(), max(1, len(roots)))
    if threads <= 1 or config.v < 4:
        found = _search_block(config, graph, size, roots)
    else:
        blocks = [roots[k::threads] for k in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda rs: _search_block(config, graph, size, rs), blocks))
        found = [w for part in parts for w in part]
    found.sort(key=lambda w: w.vertices)
    config.free_counts[size] = len(found)
    return found


def complement(config: Configuration, witness: FreeSubgraph) -> Configuration:
    """Remove a freely contained graph and its sides.

    For a configuration of binomial index n+1 and a witness of order n this
    yields a binomial configuration of index n, regularly contained in the
    input.
    """
    idx = binomial_index(config)
    if idx is None or witness.order != idx - 1:
        raise SizeMismatch(
            f"complement needs a maximal witness (order {idx and idx - 1}), "
            f"got order {witness.order}")
    drop_points = set(witness.vertices)
    drop_lines = witness.side_lines()
    points = [lab for i, lab in enumerate(config.labels) if i not in drop_points]
    triples = [config.line_labels(ln) for ln in config.lines if ln not in drop_lines]
    return validate_configuration(points, triples)


@dataclass
class IntersectionStructure:
    """Pairwise common vertices of a family of freely contained graphs.

    ``centers`` maps each index pair (i < j, 0-based positions into the
    family) to the unique shared vertex; the family embeds a combinatorial
    Grassmannian when the centers are distinct and every center triple is a
    line.
    """
    subgraphs: list[FreeSubgraph]
    centers: dict[tuple[int, int], int]
    embedding_ok: bool


def intersection_structure(config: Configuration,
                           subgraphs: list[FreeSubgraph]) -> IntersectionStructure:
    if len(subgraphs) < 2:
        raise SizeMismatch("need at least 2 subgraphs")
    seen = set()
    for w in subgraphs:
        if w.vertices in seen:
            raise NotDistinct(f"subgraph {w.vertex_labels} listed twice")
        seen.add(w.vertices)
    centers: dict[tuple[int, int], int] = {}
    for i, j in combinations(range(len(subgraphs)), 2):
        common = set(subgraphs[i].vertices) & set(subgraphs[j].vertices)
        if len(common) != 1:
            raise SharedVertexNotUnique(
                f"subgraphs {subgraphs[i].vertex_labels} and "
                f"{subgraphs[j].vertex_labels} share {len(common)} vertices")
        centers[i, j] = common.pop()
    ok = len(set(centers.values())) == len(centers)
    if ok:
        line_set = set(config.lines)
        for i, j, k in combinations(range(len(subgraphs)), 3):
            triple = tuple(sorted((centers[i, j], centers[i, k], centers[j, k])))
            if triple not in line_set:
                ok = False
                break
    return IntersectionStructure(list(subgraphs), centers, ok)


@dataclass
class StructureReport:
    """Decomposition of a configuration induced by m contained graphs.

    For m order-n graphs in an index-(n+1) configuration: every vertex is
    either a pairwise center, private to one graph, or on the axis; every
    line is either a side or an axis line.  All cardinalities are forced.
    """
    subgraph_order: int                       # n
    family_size: int                          # m
    centers: dict[tuple[int, int], int]
    private_vertices: list[tuple[int, ...]]   # per subgraph
    axis_points: tuple[int, ...]
    axis_lines: tuple[Line, ...]
    private_sides: list[tuple[Line, ...]]     # per subgraph
    axis: Configuration


def structure_report(config: Configuration,
                     subgraphs: list[FreeSubgraph]) -> StructureReport:
    """Compute the induced decomposition and assert its eleven laws.

    Raises StructureViolation naming the failing item; on valid input every
    item holds, so a raise signals corrupted data or an implementation bug.
    """
    m = len(subgraphs)
    n = subgraphs[0].order
    if any(w.order != n for w in subgraphs):
        raise SizeMismatch("subgraphs must all have the same order")
    if binomial_index(config) != n + 1:
        raise SizeMismatch(
            f"configuration must have binomial index {n + 1} for order-{n} subgraphs")
    inter = intersection_structure(config, subgraphs)
    centers = inter.centers
    vertex_sets = [set(w.vertices) for w in subgraphs]
    side_sets = [w.side_lines() for w in subgraphs]
    all_vertices = set().union(*vertex_sets)
    all_sides = set().union(*side_sets)
    axis_points = tuple(sorted(set(range(config.v)) - all_vertices))
    axis_lines = tuple(sorted(set(config.lines) - all_sides))
    private_vertices = [
        tuple(sorted(vertex_sets[i] - set().union(*(vertex_sets[:i] + vertex_sets[i + 1:]))
                     if m > 1 else vertex_sets[i]))
        for i in range(m)]
    private_sides = [
        tuple(sorted(side_sets[i] - set().union(*(side_sets[:i] + side_sets[i + 1:]))
                     if m > 1 else side_sets[i]))
        for i in range(m)]

    t = n + 1 - m
    axis_set = set(axis_points)

    for ln in axis_lines:
        if not set(ln) <= axis_set:
            raise StructureViolation(1, f"non-side line {config.line_labels(ln)} "
                                        "leaves the axis point set")
    for ln in config.lines:
        if len(set(ln) & axis_set) >= 2 and ln not in set(axis_lines):
            raise StructureViolation(2, f"side {config.line_labels(ln)} meets the "
                                        "axis twice")
    for i, zs in enumerate(private_vertices):
        if len(zs) != t:
            raise StructureViolation(3, f"subgraph {i} has {len(zs)} private "
                                        f"vertices, expected {t}")
    for (i, j), q in centers.items():
        for zs_a, zs_b in ((private_vertices[i], private_vertices[j]),
                           (private_vertices[j], private_vertices[i])):
            w = is_freely_contained(config, [config.labels[x] for x in zs_a + (q,)])
            if w is None:
                raise StructureViolation(4, f"private part of a pair plus its center "
                                            f"is not freely contained (pair {i},{j})")
        through_i = {config.line_through(q, z) for z in private_vertices[i]}
        through_j = {config.line_through(q, z) for z in private_vertices[j]}
        if through_i != through_j:
            raise StructureViolation(4, f"center {config.labels[q]} sides differ "
                                        f"between subgraphs {i} and {j}")
    if len(axis_points) != comb(t, 2):
        raise StructureViolation(5, f"axis has {len(axis_points)} points, "
                                    f"expected C({t},2) = {comb(t, 2)}")
    if len(axis_lines) != comb(t, 3):
        raise StructureViolation(6, f"axis has {len(axis_lines)} lines, "
                                    f"expected C({t},3) = {comb(t, 3)}")
    for i in range(m):
        for ln in private_sides[i]:
            cut = set(ln) & vertex_sets[i]
            if len(cut) != 2 or not cut <= set(private_vertices[i]) \
                    or len(set(ln) & axis_set) != 1:
                raise StructureViolation(7, f"private side {config.line_labels(ln)} "
                                            f"of subgraph {i} has the wrong shape")
    for i in range(m):
        own = set(private_sides[i])
        for e in combinations(private_vertices[i], 2):
            if subgraphs[i].sides[e] not in own:
                raise StructureViolation(8, f"side of private edge {e} of subgraph "
                                            f"{i} is shared")
    for i in range(m):
        if len(private_sides[i]) != comb(t, 2):
            raise StructureViolation(9, f"subgraph {i} has {len(private_sides[i])} "
                                        f"private sides, expected C({t},2)")
    for i in range(m):
        count_at = {p: 0 for p in axis_points}
        for ln in private_sides[i]:
            for p in ln:
                if p in axis_set:
                    count_at[p] += 1
        if any(c != 1 for c in count_at.values()):
            raise StructureViolation(10, f"private sides of subgraph {i} do not hit "
                                         "each axis point exactly once")
    axis = validate_configuration(
        [config.labels[p] for p in axis_points],
        [config.line_labels(ln) for ln in axis_lines])
    if t >= 2:
        if binomial_index(axis) != t:
            raise StructureViolation(11, f"axis is not binomial of index {t}")
    elif axis.v or axis.b:
        raise StructureViolation(11, "axis should be empty")
    if axis.v and not is_regular_subconfiguration(config, axis):
        raise StructureViolation(11, "axis is not regularly contained")
    return StructureReport(
        subgraph_order=n, family_size=m, centers=centers,
        private_vertices=private_vertices, axis_points=axis_points,
        axis_lines=axis_lines, private_sides=private_sides, axis=axis)


def decompose(config: Configuration, subgraphs: list[FreeSubgraph]) -> PerspectiveData:
    """Recover perspective-system data from a family of contained graphs.

    With m subgraphs of order n, 2 <= m <= n-1, the axis of the structure
    report together with the read-off edge labellings and cross matchings
    reconstructs the configuration: feeding the result to
    ``perspective_system`` yields a configuration isomorphic to the input.
    Vertex bijections are fixed by ascending dense index.
    """
    m = len(subgraphs)
    n = subgraphs[0].order if subgraphs else 0
    if not 2 <= m <= n - 1:
        raise OutOfRange(f"decompose needs 2 <= m <= n-1, got m={m}, n={n}")
    report = structure_report(config, subgraphs)
    t = n - m + 1
    simplex = tuple(f"x{k}" for k in range(1, t + 1))
    to_token = []   # per subgraph: dense index -> simplex token
    for i in range(m):
        to_token.append({z: simplex[k] for k, z in enumerate(report.private_vertices[i])})
    from_token = [{tok: z for z, tok in d.items()} for d in to_token]

    mu: dict[int, Labelling] = {}
    for i in range(m):
        values = []
        for a, b in combinations(sorted(simplex), 2):
            ln = config.line_through(from_token[i][a], from_token[i][b])
            third = config.third_point(ln, from_token[i][a], from_token[i][b])
            values.append(config.labels[third])
        mu[i + 1] = labelling_from_sequence(simplex, values)

    xi: dict[tuple[int, int], dict[str, str]] = {}
    for i, j in combinations(range(m), 2):
        q = report.centers[i, j]
        perm = {}
        for a in simplex:
            ln = config.line_through(q, from_token[i][a])
            w = config.third_point(ln, q, from_token[i][a])
            perm[a] = to_token[j][w]
        xi[i + 1, j + 1] = perm
    return PerspectiveData(m=m, n=n, simplex=simplex, axis=report.axis, mu=mu, xi=xi)


def side_crossings(config: Configuration, first: FreeSubgraph,
                   second: FreeSubgraph) -> dict[tuple[int, int], tuple[int, int]]:
    """Pair each side of ``first`` missing the shared vertex with the unique
    side of ``second`` it crosses; keys/values are edges, crossing at the
    common third point.  Raises when the pairing fails (it cannot, for two
    maximal graphs in a binomial configuration)."""
    common = set(first.vertices) & set(second.vertices)
    if len(common) != 1:
        raise SharedVertexNotUnique(f"graphs share {len(common)} vertices")
    p = common.pop()
    thirds2: dict[int, tuple[int, int]] = {}
    for e, ln in second.sides.items():
        if p not in e:
            thirds2[config.third_point(ln, *e)] = e
    out: dict[tuple[int, int], tuple[int, int]] = {}
    for e, ln in first.sides.items():
        if p in e:
            continue
        t = config.third_point(ln, *e)
        mate = thirds2.get(t)
        if mate is None:
            raise NotFreelyContained(
                f"side {config.line_labels(ln)} crosses no side of the other graph")
        out[e] = mate
    return out


def attach_data_from_witness(config: Configuration, witness: FreeSubgraph):
    """Read back the attachment labelling of a contained graph.

    Returns (vertex labels, labelling onto the complement's points); the
    complement plus this labelling reproduces the configuration exactly.
    """
    verts = witness.vertex_labels
    values = []
    for a, b in combinations(sorted(verts), 2):
        ia, ib = config.index_of(a), config.index_of(b)
        ln = config.line_through(ia, ib)
        values.append(config.labels[config.third_point(ln, ia, ib)])
    return verts, labelling_from_sequence(sorted(verts), values)
