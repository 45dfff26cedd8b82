"""Configuration families: Grassmannians, labelled attachments, perspective
systems, Veronesians, and the two-clique apex example.

Point label conventions (chosen so the three tagged families of a
perspective system are disjoint and certificates stay human-readable):

* Grassmannian points print as ``i.j`` with i < j;
* perspective-system points as ``z:<axis label>``, ``s:<vertex>:<i>`` and
  ``q:<i>.<j>``;
* Veronesian points as sorted letter words (the multiset ``{a,a,b}`` is
  ``aab``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb
from random import Random

from .core import Configuration, binomial_index, validate_configuration
from .errors import (
    AxisIndexMismatch,
    NotBijective,
    NotBinomial,
    NotDisjoint,
    SizeMismatch,
    SizeTooSmall,
    XiDiagonalNotIdentity,
    XiNotInvolutivePair,
)


def grassmannian(n: int) -> Configuration:
    """Points are the 2-subsets of {1..n}; every 3-subset contributes the
    line of its three 2-subsets.  The result has binomial index n."""
    if n < 3:
        raise SizeTooSmall(f"grassmannian needs n >= 3, got {n}")
    label = {frozenset(p): f"{min(p)}.{max(p)}" for p in combinations(range(1, n + 1), 2)}
    points = list(label.values())
    triples = [
        tuple(label[frozenset(p)] for p in combinations(t, 2))
        for t in combinations(range(1, n + 1), 3)
    ]
    return validate_configuration(points, triples)


@dataclass
class Labelling:
    """A bijection from the 2-subsets of a vertex set onto configuration points.

    ``assignment`` maps each unordered pair (as a frozenset of two vertex
    tokens) to a point label of the target configuration.
    """
    domain: tuple[str, ...]
    assignment: dict[frozenset[str], str]

    def __call__(self, a: str, b: str) -> str:
        return self.assignment[frozenset((a, b))]

    def check_against(self, target: Configuration) -> None:
        pairs = {frozenset(e) for e in combinations(self.domain, 2)}
        if set(self.assignment) != pairs:
            raise NotBijective(
                f"labelling domain is not exactly the 2-subsets of {self.domain}")
        values = list(self.assignment.values())
        if len(set(values)) != len(values) or set(values) != set(target.labels):
            raise NotBijective(
                "labelling is not a bijection onto the target's points")

    def as_pairs(self) -> list[tuple[str, str, str]]:
        """Deterministic (a, b, value) list, pairs in lexicographic order."""
        out = []
        for a, b in combinations(sorted(self.domain), 2):
            out.append((a, b, self.assignment[frozenset((a, b))]))
        return out


def labelling_from_sequence(domain, values) -> Labelling:
    """Build a labelling by pairing lexicographic 2-subsets with ``values``."""
    domain = tuple(domain)
    pairs = list(combinations(sorted(domain), 2))
    values = list(values)
    if len(values) != len(pairs):
        raise NotBijective(
            f"need {len(pairs)} values for |X| = {len(domain)}, got {len(values)}")
    return Labelling(domain, {frozenset(p): v for p, v in zip(pairs, values)})


def random_labelling(domain, target: Configuration, rng: Random) -> Labelling:
    values = list(target.labels)
    rng.shuffle(values)
    return labelling_from_sequence(domain, values)


def attach_complete(vertices, mu: Labelling, base: Configuration) -> Configuration:
    """Glue a complete graph onto ``base`` through the labelling ``mu``.

    ``base`` must have binomial index n = |vertices|; the result has index
    n+1, freely contains the complete graph on ``vertices``, and keeps the
    base as the complement of that graph.
    """
    vertices = tuple(vertices)
    n = binomial_index(base)
    if n is None:
        raise NotBinomial("attachment base is not a binomial configuration")
    if len(vertices) != n or len(set(vertices)) != len(vertices):
        raise SizeMismatch(
            f"need {n} distinct new vertices for a base of index {n}, got {vertices}")
    clash = set(vertices) & set(base.labels)
    if clash:
        raise NotDisjoint(f"vertices {sorted(clash)} already occur in the base")
    mu.check_against(base)
    points = list(base.labels) + list(vertices)
    triples = base.lines_as_labels()
    for a, b in combinations(vertices, 2):
        triples.append((a, b, mu(a, b)))
    return validate_configuration(points, triples)


@dataclass
class PerspectiveData:
    """Full parameter pack of a system of perspective simplices.

    ``m`` simplices on the vertex set ``simplex`` (size n-m+1) share the
    axis configuration ``axis`` (binomial index n-m+1).  ``mu[i]`` labels
    the i-th simplex's edges by axis points; ``xi[(i, j)]`` matches vertex
    copies across simplices i and j, subject only to ``xi[(i, i)] = id``
    and ``xi[(j, i)]`` inverse to ``xi[(i, j)]``.
    """
    m: int
    n: int
    simplex: tuple[str, ...]
    axis: Configuration
    mu: dict[int, Labelling]
    xi: dict[tuple[int, int], dict[str, str]] = field(default_factory=dict)

    @property
    def indices(self) -> range:
        return range(1, self.m + 1)

    def xi_map(self, i: int, j: int) -> dict[str, str]:
        if i == j:
            return {x: x for x in self.simplex}
        if (i, j) in self.xi:
            return self.xi[i, j]
        inv = self.xi[j, i]
        return {b: a for a, b in inv.items()}

    def check(self) -> None:
        if self.m < 1:
            raise SizeTooSmall(f"need m >= 1, got {self.m}")
        if self.n <= self.m:
            raise SizeMismatch(f"need n > m, got n={self.n}, m={self.m}")
        t = self.n - self.m + 1
        if len(self.simplex) != t or len(set(self.simplex)) != t:
            raise SizeMismatch(
                f"simplex vertex set must have {t} distinct tokens, got {self.simplex}")
        if binomial_index(self.axis) != t:
            raise AxisIndexMismatch(
                f"axis must have binomial index {t}, got {binomial_index(self.axis)}")
        for i in self.indices:
            if i not in self.mu:
                raise NotBijective(f"missing labelling mu[{i}]")
            if tuple(self.mu[i].domain) != self.simplex:
                raise NotBijective(f"mu[{i}] is not defined on the simplex vertices")
            self.mu[i].check_against(self.axis)
        for (i, j), perm in self.xi.items():
            if not (1 <= i <= self.m and 1 <= j <= self.m):
                raise SizeMismatch(f"xi index ({i},{j}) outside 1..{self.m}")
            if set(perm) != set(self.simplex) or set(perm.values()) != set(self.simplex):
                raise XiNotInvolutivePair(f"xi[{i}][{j}] is not a permutation of the simplex")
            if i == j:
                if any(perm[x] != x for x in self.simplex):
                    raise XiDiagonalNotIdentity(f"xi[{i}][{i}] must be the identity")
            elif (j, i) in self.xi:
                back = self.xi[j, i]
                if any(back[perm[x]] != x for x in self.simplex):
                    raise XiNotInvolutivePair(f"xi[{j}][{i}] is not inverse to xi[{i}][{j}]")
        for i in self.indices:
            for j in self.indices:
                if i != j and (i, j) not in self.xi and (j, i) not in self.xi:
                    raise XiNotInvolutivePair(f"missing xi for pair ({i},{j})")


def axis_point_label(label: str) -> str:
    return f"z:{label}"


def simplex_point_label(x: str, i: int) -> str:
    return f"s:{x}:{i}"


def center_point_label(i: int, j: int) -> str:
    return f"q:{min(i, j)}.{max(i, j)}"


def perspective_system(data: PerspectiveData) -> Configuration:
    """Glue m simplices to a common axis through pair-indexed centers.

    Points: tagged axis points, m tagged copies of the simplex vertex set,
    and one center per index pair.  Lines: the axis lines, the Grassmannian
    lines on the index set, the matching lines through each center, and
    each simplex's labelled edge lines.  The result has binomial index n+1
    and freely contains the m designated complete graphs of order n.
    """
    data.check()
    idx = list(data.indices)
    points = [axis_point_label(z) for z in data.axis.labels]
    points += [simplex_point_label(x, i) for i in idx for x in data.simplex]
    points += [center_point_label(i, j) for i, j in combinations(idx, 2)]

    triples: list[tuple[str, str, str]] = [
        tuple(axis_point_label(x) for x in ln) for ln in data.axis.lines_as_labels()]
    for i, j, k in combinations(idx, 3):
        triples.append((center_point_label(i, j), center_point_label(i, k),
                        center_point_label(j, k)))
    for i, j in combinations(idx, 2):
        xi = data.xi_map(i, j)
        for x in data.simplex:
            triples.append((center_point_label(i, j), simplex_point_label(x, i),
                            simplex_point_label(xi[x], j)))
    for i in idx:
        mu = data.mu[i]
        for a, b in combinations(data.simplex, 2):
            triples.append((simplex_point_label(a, i), simplex_point_label(b, i),
                            axis_point_label(mu(a, b))))
    return validate_configuration(points, triples)


def perspective_designated_cliques(data: PerspectiveData) -> list[tuple[str, ...]]:
    """The m complete graphs the construction freely contains, as labels."""
    out = []
    for i in data.indices:
        verts = [simplex_point_label(x, i) for x in data.simplex]
        verts += [center_point_label(i, j) for j in data.indices if j != i]
        out.append(tuple(sorted(verts)))
    return out


def single_point_axis(label: str = "o") -> Configuration:
    """The degenerate index-2 axis used by systems of perspective segments."""
    return validate_configuration([label], [])


def single_line_axis(labels=("u", "v", "w")) -> Configuration:
    """The index-3 axis (one 3-point line) of triangle-perspective systems."""
    return validate_configuration(list(labels), [tuple(labels)])


def standard_axis(index: int) -> Configuration:
    """A stock binomial configuration of the requested index."""
    if index < 2:
        raise SizeTooSmall(f"no axis of binomial index {index}")
    if index == 2:
        return single_point_axis()
    return grassmannian(index)


def random_perspective_data(n: int, m: int, rng: Random,
                            axis: Configuration | None = None) -> PerspectiveData:
    """Admissible (mu, xi) drawn uniformly for the given shape."""
    if not 1 <= m < n:
        raise SizeMismatch(f"need 1 <= m < n, got m={m}, n={n}")
    t = n - m + 1
    if axis is None:
        axis = standard_axis(t)
    simplex = tuple(f"x{k}" for k in range(1, t + 1))
    mu = {i: random_labelling(simplex, axis, rng) for i in range(1, m + 1)}
    xi: dict[tuple[int, int], dict[str, str]] = {}
    for i, j in combinations(range(1, m + 1), 2):
        image = list(simplex)
        rng.shuffle(image)
        xi[i, j] = dict(zip(simplex, image))
    return PerspectiveData(m=m, n=n, simplex=simplex, axis=axis, mu=mu, xi=xi)


def veronesian(k: int) -> Configuration:
    """Points are the k-multisets over {a,b,c}; for every exponent r and
    every (k-r)-multiset e there is the line {e+r*a, e+r*b, e+r*c}.

    The line count must come out as C(k+2,3) exactly; duplicate triples
    from different (e, r) presentations would break that and are rejected.
    """
    if k < 2:
        raise SizeTooSmall(f"veronesian needs k >= 2, got {k}")
    letters = "abc"

    def word(multi) -> str:
        return "".join(sorted(multi))

    points = [word(m) for m in combinations_with_replacement(letters, k)]
    triples: list[tuple[str, str, str]] = []
    seen: set[frozenset[str]] = set()
    for r in range(1, k + 1):
        for e in combinations_with_replacement(letters, k - r):
            line = tuple(word(tuple(e) + (x,) * r) for x in letters)
            key = frozenset(line)
            if key in seen:
                continue
            seen.add(key)
            triples.append(line)
    if len(triples) != comb(k + 2, 3):
        raise NotBinomial(
            f"veronesian({k}) produced {len(triples)} lines, expected {comb(k + 2, 3)}")
    return validate_configuration(points, triples)


def veronesian_designated_cliques(k: int) -> list[tuple[str, ...]]:
    """The three complete graphs supported on the 2-subsets of {a,b,c}."""
    out = []
    for pair in ("ab", "bc", "ac"):
        verts = ["".join(sorted(m)) for m in combinations_with_replacement(pair, k)]
        out.append(tuple(sorted(verts)))
    return out


def two_graph_example(base: Configuration, vertices, mu1: Labelling,
                      mu2: Labelling, apex: str = "p") -> Configuration:
    """Two labelled copies of a complete graph sharing one apex point.

    ``base`` must have binomial index n-1 with |vertices| = n-1.  The output
    has binomial index n+1 and freely contains the two complete graphs
    {apex} plus each level; the complement of level i's graph is isomorphic
    to the attachment of the other level's labelling onto the base.
    """
    vertices = tuple(vertices)
    idx = binomial_index(base)
    if idx is None:
        raise NotBinomial("base of the two-graph example is not binomial")
    if len(vertices) != idx or len(set(vertices)) != len(vertices):
        raise SizeMismatch(
            f"need {idx} distinct vertices for a base of index {idx}, got {vertices}")
    mu1.check_against(base)
    mu2.check_against(base)
    points = [apex]
    points += [axis_point_label(z) for z in base.labels]
    points += [simplex_point_label(x, i) for i in (1, 2) for x in vertices]
    triples: list[tuple[str, str, str]] = [
        tuple(axis_point_label(x) for x in ln) for ln in base.lines_as_labels()]
    for x in vertices:
        triples.append((apex, simplex_point_label(x, 1), simplex_point_label(x, 2)))
    for i, mu in ((1, mu1), (2, mu2)):
        for a, b in combinations(vertices, 2):
            triples.append((simplex_point_label(a, i), simplex_point_label(b, i),
                            axis_point_label(mu(a, b))))
    return validate_configuration(points, triples)


def two_graph_designated_cliques(vertices, apex: str = "p") -> list[tuple[str, ...]]:
    return [
        tuple(sorted([apex] + [simplex_point_label(x, i) for x in vertices]))
        for i in (1, 2)
    ]
