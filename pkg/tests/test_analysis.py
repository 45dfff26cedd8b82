from itertools import combinations
from math import comb
from random import Random

import pytest
from hypothesis import given, settings

from psts import (
    are_isomorphic,
    attach_complete,
    binomial_index,
    complement,
    decompose,
    enumerate_free_complete,
    grassmannian,
    intersection_structure,
    is_freely_contained,
    is_regular_subconfiguration,
    naive_enumerate_free_complete,
    perspective_system,
    structure_report,
    validate_configuration,
    veronesian,
)
from psts.analysis import attach_data_from_witness, side_crossings
from psts.constructions import (
    random_perspective_data,
    single_line_axis,
    two_graph_designated_cliques,
)
from psts.errors import (
    NotDistinct,
    OutOfRange,
    SharedVertexNotUnique,
    SizeMismatch,
)
from psts.transforms import first_swap

from conftest import small_psts

FANO = validate_configuration(
    [str(i) for i in range(1, 8)],
    [("1", "2", "3"), ("1", "4", "5"), ("1", "6", "7"), ("2", "4", "6"),
     ("2", "5", "7"), ("3", "4", "7"), ("3", "5", "6")])


def test_star_is_freely_contained_in_desargues():
    g5 = grassmannian(5)
    star = [lab for lab in g5.labels if "1" in lab.split(".")]
    w = is_freely_contained(g5, star)
    assert w is not None
    assert len(w.sides) == 6
    assert len(w.side_lines()) == 6


def test_three_collinear_points_are_not_free():
    g5 = grassmannian(5)
    line = g5.line_labels(g5.lines[0])
    assert is_freely_contained(g5, line) is None


def test_projective_quadrangle_fails_p_closure():
    # a complete quadrangle of the 7-point plane: pairwise collinear with
    # six distinct sides, but the sides cross in the diagonal points
    quad = ("1", "2", "4", "7")
    sides = {}
    for a, b in combinations(sorted(quad), 2):
        ia, ib = FANO.index_of(a), FANO.index_of(b)
        sides[(a, b)] = FANO.line_through(ia, ib)
    assert len(set(sides.values())) == 6
    assert is_freely_contained(FANO, quad) is None


def test_repeated_points_rejected():
    with pytest.raises(NotDistinct):
        is_freely_contained(grassmannian(4), ["1.2", "1.2", "3.4"])


@pytest.mark.parametrize("build,size,expected", [
    (lambda: grassmannian(5), 4, 5),
    (lambda: grassmannian(4), 3, 4),
    (lambda: veronesian(4), 5, 3),
])
def test_enumeration_counts(build, size, expected):
    assert len(enumerate_free_complete(build(), size)) == expected


def test_enumeration_on_single_line():
    line = validate_configuration(["1", "2", "3"], [("1", "2", "3")])
    assert len(enumerate_free_complete(line, 2)) == 3


def test_enumeration_default_size():
    assert len(enumerate_free_complete(grassmannian(5))) == 5


def test_enumeration_respects_thread_cap(monkeypatch):
    g6 = grassmannian(6)
    base = [w.vertices for w in enumerate_free_complete(g6, 5)]
    monkeypatch.setenv("PSTS_THREADS", "3")
    assert [w.vertices for w in enumerate_free_complete(g6, 5)] == base
    monkeypatch.setenv("PSTS_THREADS", "1")
    assert [w.vertices for w in enumerate_free_complete(g6, 5)] == base


def test_enumeration_equals_oracle_on_fano():
    # triangles abound (every non-collinear triple), quadrangles never close
    triangles = naive_enumerate_free_complete(FANO, 3)
    assert len(triangles) == 28
    assert [w.vertices for w in enumerate_free_complete(FANO, 3)] \
        == [w.vertices for w in triangles]
    assert naive_enumerate_free_complete(FANO, 4) == []
    assert enumerate_free_complete(FANO, 4) == []


@settings(max_examples=40, deadline=None)
@given(small_psts(max_points=9, max_lines=10))
def test_enumeration_equals_oracle_random(cfg):
    for size in (3, 4):
        pruned = [w.vertices for w in enumerate_free_complete(cfg, size)]
        naive = [w.vertices for w in naive_enumerate_free_complete(cfg, size)]
        assert pruned == naive


def test_complement_of_star_is_veblen():
    g5 = grassmannian(5)
    star = [lab for lab in g5.labels if "1" in lab.split(".")]
    w = is_freely_contained(g5, star)
    comp = complement(g5, w)
    assert binomial_index(comp) == 4
    assert are_isomorphic(comp, grassmannian(4))
    assert is_regular_subconfiguration(g5, comp)


def test_complement_reattach_is_identity():
    g6 = grassmannian(6)
    w = enumerate_free_complete(g6, 5)[0]
    comp = complement(g6, w)
    verts, mu = attach_data_from_witness(g6, w)
    assert attach_complete(sorted(verts), mu, comp) == g6


def test_complement_size_mismatch():
    g5 = grassmannian(5)
    w = enumerate_free_complete(g5, 3)[0] if enumerate_free_complete(g5, 3) else None
    triangle = is_freely_contained(g5, ["1.2", "1.3", "1.4"])
    assert triangle is not None
    with pytest.raises(SizeMismatch):
        complement(g5, triangle)


def test_intersection_structure_of_grassmannian():
    g6 = grassmannian(6)
    subs = enumerate_free_complete(g6, 5)
    inter = intersection_structure(g6, subs)
    assert inter.embedding_ok
    assert len(set(inter.centers.values())) == 15   # bijection onto the points


def test_intersection_structure_apex(census):
    from psts import labelling_from_sequence, two_graph_example
    base = grassmannian(4)
    verts = ("1", "2", "3", "4")
    mu = labelling_from_sequence(verts, census.by_count(2)[0].labelling_values)
    cfg = two_graph_example(base, verts, mu, mu)
    ws = [is_freely_contained(cfg, v) for v in two_graph_designated_cliques(verts)]
    inter = intersection_structure(cfg, ws)
    assert [cfg.labels[q] for q in inter.centers.values()] == ["p"]


def test_intersection_structure_errors():
    g6 = grassmannian(6)
    subs = enumerate_free_complete(g6, 5)
    with pytest.raises(NotDistinct):
        intersection_structure(g6, [subs[0], subs[0]])
    two_lines = validate_configuration(
        ["1", "2", "3", "4", "5", "6"], [("1", "2", "3"), ("4", "5", "6")])
    w1 = is_freely_contained(two_lines, ["1", "2"])
    w2 = is_freely_contained(two_lines, ["4", "5"])
    with pytest.raises(SharedVertexNotUnique):
        intersection_structure(two_lines, [w1, w2])


def test_structure_report_grassmannian_degenerate_axis():
    g6 = grassmannian(6)
    subs = enumerate_free_complete(g6, 5)
    report = structure_report(g6, subs)
    assert report.axis_points == ()
    assert report.axis_lines == ()
    assert all(len(z) == 0 for z in report.private_vertices)


def test_structure_report_triangle_perspective_axis():
    rng = Random(13)
    data = random_perspective_data(4, 2, rng, axis=single_line_axis())
    cfg = perspective_system(data)
    subs = enumerate_free_complete(cfg, 4)
    designated = [w for w in subs
                  if all(lab.startswith(("s:", "q:")) for lab in w.vertex_labels)]
    report = structure_report(cfg, designated[:2])
    assert len(report.axis_points) == comb(3, 2)
    assert len(report.axis_lines) == comb(3, 3)
    assert {cfg.labels[p] for p in report.axis_points} == {"z:u", "z:v", "z:w"}


def test_structure_report_on_full_enumerations(census):
    for count in (2, 3):
        cfg = census.by_count(count)[0].representative
        subs = enumerate_free_complete(cfg, 4)
        report = structure_report(cfg, subs)
        t = 4 + 1 - count
        assert len(report.axis_points) == comb(t, 2)
        assert all(len(g) == comb(t, 2) for g in report.private_sides)


def test_decompose_named_classes(census):
    fez = census.by_count(2)[0].representative
    data = decompose(fez, enumerate_free_complete(fez, 4))
    assert data.m == 2
    assert (data.axis.v, data.axis.b) == (3, 1)     # triangle perspective
    kantor = census.by_count(3)[0].representative
    data = decompose(kantor, enumerate_free_complete(kantor, 4))
    assert data.m == 3
    assert (data.axis.v, data.axis.b) == (1, 0)     # multiveblen center


def test_decompose_roundtrip_named(census):
    for count in (2, 3):
        cfg = census.by_count(count)[0].representative
        data = decompose(cfg, enumerate_free_complete(cfg, 4))
        assert are_isomorphic(perspective_system(data), cfg)


def test_decompose_out_of_range():
    g5 = grassmannian(5)
    subs = enumerate_free_complete(g5, 4)
    with pytest.raises(OutOfRange):
        decompose(g5, subs)    # m = n+1 is the Grassmannian case


def test_side_crossings_cover_outside():
    rng = Random(5)
    data = random_perspective_data(5, 2, rng)
    cfg = perspective_system(data)
    subs = enumerate_free_complete(cfg, 5)
    w1, w2 = subs[0], subs[1]
    pairing = side_crossings(cfg, w1, w2)
    assert len(pairing) == comb(4, 2)
    outside = set(range(cfg.v)) - set(w1.vertices) - set(w2.vertices)
    crossing = {cfg.third_point(w1.sides[e], *e) for e in pairing}
    assert crossing == outside


def test_swap_output_enumerates_empty(census):
    fez = census.by_count(2)[0].representative
    killed, _ = first_swap(fez)
    assert enumerate_free_complete(killed, 4) == []
    assert naive_enumerate_free_complete(killed, 4) == []
