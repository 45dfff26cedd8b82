"""Acceptance suite: one test per criterion, exact expectations throughout.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion.
"""

from random import Random

import pytest

from psts import (
    are_isomorphic,
    decompose,
    enumerate_free_complete,
    grassmannian,
    naive_enumerate_free_complete,
    parameters,
    parse_config,
    perspective_system,
    veronesian,
)
from psts.cli import main
from psts.constructions import random_perspective_data
from psts.verify import build_existence_corpus

from test_constructions import kantor_multiveblen


def note(number: int, text: str) -> None:
    print(f"ACCEPTANCE {number:02d}: PASS - {text}")


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


@pytest.fixture(scope="module")
def witnesses4(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("wit4")
    code = main(["verify", "existence", "--n", "4", "--out-dir", str(out_dir)])
    assert code == 0
    return out_dir


def test_criterion_1_grassmannian_counts(capsys, tmp_path):
    for n in (3, 4, 5, 6):
        path = tmp_path / f"g{n + 1}.cfg"
        code, _ = run_cli(capsys, "construct", "grassmannian", str(n + 1),
                          "--out", str(path))
        assert code == 0
        code, out = run_cli(capsys, "analyze", "subgraphs", "--in", str(path),
                            "--order", str(n))
        assert code == 0
        heads = [ln for ln in out.splitlines() if ln.startswith(f"K {n}:")]
        assert len(heads) == n + 1, f"order {n}: found {len(heads)}"
    note(1, "grassmannian(n+1) has exactly n+1 free complete subgraphs, n=3..6")


def test_criterion_2_census(capsys, census):
    code, out = run_cli(capsys, "classify", "veblen-labellings")
    assert code == 0
    assert "achievable counts: 1 2 3 5" in out
    assert census.achievable_counts() == {1, 2, 3, 5}
    assert not census.by_count(4)
    five = census.by_count(5)
    assert len(five) == 1
    assert are_isomorphic(five[0].representative, grassmannian(5))
    note(2, "census counts are exactly {1,2,3,5}; count-5 class is the "
            "Desargues configuration; no class has count 4")


def test_criterion_3_existence(capsys):
    for n, expected in ((5, {0, 1, 2, 3, 4, 6}), (6, {0, 1, 2, 3, 4, 5, 7})):
        witnesses = build_existence_corpus(n)   # oracle-confirmed internally
        assert {w.m for w in witnesses} == expected
        for w in witnesses:
            assert len(naive_enumerate_free_complete(
                w.entry.configuration, n)) == w.m
        code, out = run_cli(capsys, "verify", "existence", "--n", str(n))
        assert code == 0
        assert "counts: " + " ".join(str(m) for m in sorted(expected)) in out
    note(3, "existence witnesses carry exact counts {0..4,6} at n=5 and "
            "{0..5,7} at n=6, confirmed by the naive oracle")


def test_criterion_4_swap_kill(capsys, witnesses4, tmp_path):
    fez = witnesses4 / "witness-n4-m2.cfg"
    killed = tmp_path / "killed.cfg"
    code, _ = run_cli(capsys, "transform", "swap", "--in", str(fez),
                      "--out", str(killed))
    assert code == 0
    before = parse_config(fez.read_text())
    after = parse_config(killed.read_text())
    assert parameters(after) == parameters(before)
    assert enumerate_free_complete(after, 4) == []
    code, out = run_cli(capsys, "analyze", "subgraphs", "--in", str(killed),
                        "--order", "4")
    assert code == 0 and out == ""
    note(4, "line swap on the two-subgraph class yields zero free complete "
            "subgraphs with identical parameters")


def test_criterion_5_extension(capsys, witnesses4, tmp_path):
    from psts import binomial_index
    for m in (0, 1, 2):
        src = witnesses4 / f"witness-n4-m{m}.cfg"
        grown = tmp_path / f"grown-{m}.cfg"
        code, _ = run_cli(capsys, "transform", "extend", "--in", str(src),
                          "--out", str(grown))
        assert code == 0
        cfg = parse_config(grown.read_text())
        assert binomial_index(cfg) == 6
        assert len(enumerate_free_complete(cfg, 5)) == m + 1
    note(5, "extension lifts witnesses with m in {0,1,2} subgraphs to "
            "index 6 with exactly m+1")


def test_criterion_6_structure_sweep(battery_report):
    record = next(r for r in battery_report.records
                  if r.property == "structure-report-all-items")
    assert record.entries >= 10
    assert record.failures == 0
    note(6, f"all 11 structure assertions hold on {record.entries} corpus "
            "entries with at least 2 subgraphs")


def test_criterion_7_decompose_roundtrip():
    rng = Random(20240411)
    done = attempts = 0
    while done < 20:
        attempts += 1
        assert attempts < 120, "too many degenerate samples"
        n = rng.randint(3, 6)
        m = rng.randint(2, n - 1)
        data = random_perspective_data(n, m, rng)
        cfg = perspective_system(data)
        subs = enumerate_free_complete(cfg, n)
        if not 2 <= len(subs) <= n - 1:
            continue    # accidental extra subgraphs push m out of range
        rebuilt = perspective_system(decompose(cfg, subs))
        assert are_isomorphic(rebuilt, cfg), (n, m)
        done += 1
    note(7, f"20 randomized decompose round trips are isomorphic "
            f"({attempts} samples)")


def test_criterion_8_veronesian():
    from psts import binomial_index
    for k in (3, 4, 5):
        cfg = veronesian(k)
        assert binomial_index(cfg) == k + 2
        assert len(enumerate_free_complete(cfg, k + 1)) == 3
    assert are_isomorphic(veronesian(3), kantor_multiveblen())
    note(8, "veronesian(k) has index k+2 with exactly 3 maximal subgraphs, "
            "k=3..5; veronesian(3) is the 3-simplex perspective system")


def test_criterion_9_pairwise_laws(battery_report):
    for name in ("pairwise-single-common-vertex", "pairwise-common-side-count",
                 "triple-centers-collinear"):
        record = next(r for r in battery_report.records if r.property == name)
        assert record.failures == 0, name
        assert record.entries > 0
    note(9, "exactly one common vertex, n-1 common sides, and collinear "
            "centers across all corpus subgraph pairs and triples")


def test_criterion_10_oracle_equivalence(battery_report):
    record = next(r for r in battery_report.records
                  if r.property == "oracle-equivalence")
    assert record.failures == 0
    assert record.entries >= 25
    note(10, f"pruned enumeration equals the naive oracle on all "
             f"{record.entries} corpus members with at most 21 points")
