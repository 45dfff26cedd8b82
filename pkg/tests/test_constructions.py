from itertools import combinations
from math import comb
from random import Random

import pytest

from psts import (
    Labelling,
    PerspectiveData,
    are_isomorphic,
    attach_complete,
    binomial_index,
    complement,
    enumerate_free_complete,
    grassmannian,
    is_freely_contained,
    labelling_from_sequence,
    parameters,
    perspective_system,
    two_graph_example,
    veronesian,
)
from psts.constructions import (
    perspective_designated_cliques,
    random_labelling,
    random_perspective_data,
    single_line_axis,
    single_point_axis,
    two_graph_designated_cliques,
    veronesian_designated_cliques,
)
from psts.errors import (
    AxisIndexMismatch,
    NotBijective,
    NotBinomial,
    NotDisjoint,
    SizeMismatch,
    SizeTooSmall,
    XiDiagonalNotIdentity,
    XiNotInvolutivePair,
)

VEBLEN_NATURAL = ("1.2", "1.3", "1.4", "2.3", "2.4", "3.4")


def natural_mu():
    return labelling_from_sequence(("1", "2", "3", "4"), VEBLEN_NATURAL)


def test_grassmannian_shapes():
    for n, v, b, r in ((3, 3, 1, 1), (4, 6, 4, 2), (5, 10, 10, 3)):
        p = parameters(grassmannian(n))
        assert (p.v, p.b) == (v, b)
        assert set(p.rank_profile) == {r}
        assert binomial_index(grassmannian(n)) == n
    with pytest.raises(SizeTooSmall):
        grassmannian(2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_grassmannian_free_subgraph_count(n):
    assert len(enumerate_free_complete(grassmannian(n + 1), n)) == n + 1


def test_attach_natural_labelling_is_desargues():
    cfg = attach_complete(("1", "2", "3", "4"), natural_mu(), grassmannian(4))
    p = parameters(cfg)
    assert (p.v, p.b) == (10, 10)
    assert binomial_index(cfg) == 5
    assert are_isomorphic(cfg, grassmannian(5))


def test_attach_always_contains_the_clique():
    rng = Random(3)
    for n in (4, 5):
        base = grassmannian(n)
        verts = tuple(f"y{k}" for k in range(n))
        cfg = attach_complete(verts, random_labelling(verts, base, rng), base)
        assert binomial_index(cfg) == n + 1
        assert is_freely_contained(cfg, verts) is not None


def test_attach_errors():
    veblen = grassmannian(4)
    with pytest.raises(NotBinomial):
        attach_complete(("1", "2", "3"), natural_mu(),
                        # a non-binomial structure: one line plus a stray point
                        __import__("psts").validate_configuration(
                            ["a", "b", "c", "d"], [("a", "b", "c")]))
    with pytest.raises(SizeMismatch):
        attach_complete(("1", "2", "3"), natural_mu(), veblen)
    with pytest.raises(NotDisjoint):
        attach_complete(("1.2", "2", "3", "4"), natural_mu(), veblen)
    with pytest.raises(NotBijective):
        bad = labelling_from_sequence(("1", "2", "3", "4"),
                                      ("1.2",) * 6)
        attach_complete(("1", "2", "3", "4"), bad, veblen)


def kantor_multiveblen():
    """m=3 system of perspective segments with an odd twist: the Kantor class."""
    axis = single_point_axis()
    simplex = ("x1", "x2")
    mu = {i: labelling_from_sequence(simplex, ["o"]) for i in (1, 2, 3)}
    ident = {"x1": "x1", "x2": "x2"}
    swap = {"x1": "x2", "x2": "x1"}
    xi = {(1, 2): ident, (1, 3): ident, (2, 3): swap}
    return perspective_system(PerspectiveData(
        m=3, n=4, simplex=simplex, axis=axis, mu=mu, xi=xi))


def test_multiveblen_family():
    cfg = kantor_multiveblen()
    assert parameters(cfg).v == 10
    assert binomial_index(cfg) == 5
    count = len(enumerate_free_complete(cfg, 4))
    assert count >= 3
    assert count == 3   # the odd twist avoids the Desargues case
    # all-identity matchings give the Desargues configuration instead
    axis = single_point_axis()
    simplex = ("x1", "x2")
    mu = {i: labelling_from_sequence(simplex, ["o"]) for i in (1, 2, 3)}
    ident = {"x1": "x1", "x2": "x2"}
    xi = {(1, 2): ident, (1, 3): ident, (2, 3): ident}
    des = perspective_system(PerspectiveData(
        m=3, n=4, simplex=simplex, axis=axis, mu=mu, xi=xi))
    assert are_isomorphic(des, grassmannian(5))


def test_triangle_perspective_family():
    rng = Random(11)
    data = random_perspective_data(4, 2, rng, axis=single_line_axis())
    cfg = perspective_system(data)
    assert parameters(cfg).v == 10
    assert len(enumerate_free_complete(cfg, 4)) >= 2


def test_perspective_point_count_identity():
    rng = Random(5)
    for n in range(2, 9):
        for m in range(1, n):
            cfg = perspective_system(random_perspective_data(n, m, rng))
            assert cfg.v == comb(n + 1, 2)
            assert binomial_index(cfg) == n + 1


def test_perspective_designated_cliques_are_free():
    rng = Random(19)
    for n, m in ((4, 3), (5, 2), (5, 4), (6, 3)):
        data = random_perspective_data(n, m, rng)
        cfg = perspective_system(data)
        for verts in perspective_designated_cliques(data):
            assert is_freely_contained(cfg, verts) is not None


def test_perspective_center_relation():
    # the line through a center joins matched simplex copies
    rng = Random(23)
    data = random_perspective_data(5, 3, rng)
    cfg = perspective_system(data)
    lines = {tuple(sorted(t)) for t in cfg.lines_as_labels()}
    for i, j in combinations(data.indices, 2):
        xi = data.xi_map(i, j)
        for x in data.simplex:
            assert tuple(sorted((f"q:{i}.{j}", f"s:{x}:{i}", f"s:{xi[x]}:{j}"))) in lines


def test_perspective_degenerate_m1_is_attachment():
    rng = Random(2)
    data = random_perspective_data(5, 1, rng)
    cfg = perspective_system(data)
    assert binomial_index(cfg) == 6
    assert len(enumerate_free_complete(cfg, 5)) >= 1


def test_perspective_validation_errors():
    simplex = ("x1", "x2")
    mu = {i: labelling_from_sequence(simplex, ["o"]) for i in (1, 2, 3)}
    ident = {"x1": "x1", "x2": "x2"}
    swap = {"x1": "x2", "x2": "x1"}
    with pytest.raises(AxisIndexMismatch):
        PerspectiveData(m=3, n=4, simplex=simplex, axis=single_line_axis(),
                        mu=mu, xi={(1, 2): ident, (1, 3): ident, (2, 3): ident}).check()
    with pytest.raises(XiDiagonalNotIdentity):
        PerspectiveData(m=3, n=4, simplex=simplex, axis=single_point_axis(),
                        mu=mu, xi={(1, 1): swap, (1, 2): ident, (1, 3): ident,
                                   (2, 3): ident}).check()
    bad_inverse = {(1, 2): swap, (2, 1): ident, (1, 3): ident, (2, 3): ident}
    with pytest.raises(XiNotInvolutivePair):
        PerspectiveData(m=3, n=4, simplex=simplex, axis=single_point_axis(),
                        mu=mu, xi=bad_inverse).check()


def test_veronesian_shapes():
    assert are_isomorphic(veronesian(2), grassmannian(4))
    for k in range(2, 7):
        cfg = veronesian(k)
        assert binomial_index(cfg) == k + 2
        assert cfg.b == comb(k + 2, 3)
    with pytest.raises(SizeTooSmall):
        veronesian(1)


def test_veronesian_designated_families():
    for k in (3, 4):
        cfg = veronesian(k)
        found = {w.vertex_labels for w in enumerate_free_complete(cfg, k + 1)}
        assert found == {tuple(sorted(v)) for v in veronesian_designated_cliques(k)}


def test_veronesian_axis_is_full_support():
    # points outside all three families are the full-support monomials
    k = 4
    cfg = veronesian(k)
    outside = set(cfg.labels)
    for fam in veronesian_designated_cliques(k):
        outside -= set(fam)
    assert len(outside) == comb(k - 1, 2)
    assert all(set(word) == {"a", "b", "c"} for word in outside)


def test_two_graph_small_base():
    base = grassmannian(3)   # a single line
    verts = ("u1", "u2", "u3")
    rng = Random(7)
    mu1 = random_labelling(verts, base, rng)
    mu2 = random_labelling(verts, base, rng)
    cfg = two_graph_example(base, verts, mu1, mu2)
    assert binomial_index(cfg) == 5
    assert len(enumerate_free_complete(cfg, 4)) >= 2
    for verts_i in two_graph_designated_cliques(verts):
        assert is_freely_contained(cfg, verts_i) is not None


def test_two_graph_equal_labellings_symmetric_complements():
    base = grassmannian(4)
    verts = ("1", "2", "3", "4")
    mu = natural_mu()
    cfg = two_graph_example(base, verts, mu, mu)
    w1, w2 = (is_freely_contained(cfg, v)
              for v in two_graph_designated_cliques(verts))
    assert are_isomorphic(complement(cfg, w1), complement(cfg, w2))


def test_two_graph_nonisomorphic_complements(census):
    # labellings from two census classes attach to non-isomorphic results
    base = grassmannian(4)
    verts = ("1", "2", "3", "4")
    mu1 = labelling_from_sequence(verts, census.by_count(5)[0].labelling_values)
    mu2 = labelling_from_sequence(verts, census.by_count(2)[0].labelling_values)
    a1 = attach_complete(verts, mu1, base)
    a2 = attach_complete(verts, mu2, base)
    assert not are_isomorphic(a1, a2)
    cfg = two_graph_example(base, verts, mu1, mu2)
    w1, w2 = (is_freely_contained(cfg, v)
              for v in two_graph_designated_cliques(verts))
    c1, c2 = complement(cfg, w1), complement(cfg, w2)
    assert not are_isomorphic(c1, c2)
    assert are_isomorphic(c1, a2)
    assert are_isomorphic(c2, a1)


def test_two_graph_errors():
    base = grassmannian(4)
    mu = natural_mu()
    with pytest.raises(SizeMismatch):
        two_graph_example(base, ("1", "2", "3"), mu, mu)
    with pytest.raises(NotBijective):
        bad = Labelling(("1", "2", "3", "4"),
                        {frozenset(p): "1.2" for p in
                         combinations(("1", "2", "3", "4"), 2)})
        two_graph_example(base, ("1", "2", "3", "4"), mu, bad)
