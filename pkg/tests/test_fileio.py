import pytest
from hypothesis import given, settings

from psts import emit_config, grassmannian, parse_config, veronesian
from psts.constructions import random_perspective_data
from psts.errors import ConfigSyntaxError, LineNotTriple, TwoPointsOnTwoLines
from psts.fileio import (
    emit_labelling,
    emit_perspective,
    emit_swap_certificate,
    parse_labelling,
    parse_perspective,
    parse_swap_certificate,
)
from psts.transforms import SwapCertificate

from conftest import small_psts
from random import Random


def test_parse_single_line_document():
    cfg = parse_config("points 3 a b c\nline a b c\n")
    assert cfg.v == 3 and cfg.b == 1


def test_comments_and_blanks_ignored():
    text = "# header\n\npoints 3 a b c\n# middle\nline a b c\n\n"
    assert parse_config(text).b == 1


def test_round_trip_families():
    for cfg in (grassmannian(5), grassmannian(6), veronesian(3)):
        text = emit_config(cfg)
        again = parse_config(text)
        assert again == cfg
        assert emit_config(again) == text          # byte-level idempotence


@settings(max_examples=50, deadline=None)
@given(small_psts())
def test_round_trip_random(cfg):
    text = emit_config(cfg)
    assert parse_config(text) == cfg
    assert emit_config(parse_config(text)) == text


def test_emit_shape():
    line = parse_config("points 3 c a b\nline c a b\n")
    assert emit_config(line) == "points 3 a b c\nline a b c\n"


@pytest.mark.parametrize("text,error", [
    ("", ConfigSyntaxError),
    ("points x a\n", ConfigSyntaxError),
    ("points 2 a\n", ConfigSyntaxError),
    ("lines 3 a b c\n", ConfigSyntaxError),
    ("points 3 a b c\nline a b\n", ConfigSyntaxError),
    ("points 3 a b c\nline a a b\n", LineNotTriple),
    ("points 4 a b c d\nline a b c\nline a b d\n", TwoPointsOnTwoLines),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_config(text)


def test_labelling_round_trip():
    text = "{1,2}->z1 {1,3}->z2 {2,3}->z3\n"
    lab = parse_labelling(text)
    assert lab.domain == ("1", "2", "3")
    assert emit_labelling(lab) == text
    with pytest.raises(ConfigSyntaxError):
        parse_labelling("{1,2}=>z1")
    with pytest.raises(ConfigSyntaxError):
        parse_labelling("{1,2}->z1 {2,1}->z2")


def test_perspective_round_trip(tmp_path):
    data = random_perspective_data(5, 3, Random(4))
    axis_path = tmp_path / "axis.cfg"
    axis_path.write_text(emit_config(data.axis))
    text = emit_perspective(data, "axis.cfg")

    def load_axis(rel):
        return parse_config((tmp_path / rel).read_text())

    again = parse_perspective(text, load_axis)
    assert again.m == data.m and again.n == data.n
    assert again.simplex == data.simplex
    assert again.axis == data.axis
    for i in data.indices:
        assert again.mu[i].assignment == data.mu[i].assignment
    for i in data.indices:
        for j in data.indices:
            assert again.xi_map(i, j) == data.xi_map(i, j)
    assert emit_perspective(again, "axis.cfg") == text


def test_perspective_parse_errors():
    with pytest.raises(ConfigSyntaxError):
        parse_perspective("m=1\nn=2\n", lambda rel: None)      # missing sections
    with pytest.raises(ConfigSyntaxError):
        parse_perspective("m=1\nn=2\naxis=x\nxi[1][2]: a\n", lambda rel: None)


def test_swap_certificate_round_trip():
    cert = SwapCertificate(center="p", crossing="q",
                           edge1=("a1", "b1"), edge2=("a2", "b2"))
    text = emit_swap_certificate(cert)
    assert parse_swap_certificate(text) == cert
    assert cert.removed == (("a1", "b1", "q"), ("a2", "b2", "q"))
    assert cert.inserted == (("a1", "b2", "q"), ("a2", "b1", "q"))
    with pytest.raises(ConfigSyntaxError):
        parse_swap_certificate("center p\n")
