from itertools import combinations
from random import Random

import pytest
from hypothesis import strategies as st

from psts import validate_configuration


@st.composite
def small_psts(draw, min_points=3, max_points=10, max_lines=14):
    """Random valid partial Steiner triple system, built greedily."""
    v = draw(st.integers(min_value=min_points, max_value=max_points))
    cap = draw(st.integers(min_value=0, max_value=max_lines))
    rng = Random(draw(st.integers(min_value=0, max_value=2**32 - 1)))
    labels = [f"p{i}" for i in range(v)]
    triples = list(combinations(range(v), 3))
    rng.shuffle(triples)
    chosen = []
    used_pairs = set()
    for t in triples:
        if len(chosen) >= cap:
            break
        pairs = list(combinations(t, 2))
        if any(p in used_pairs for p in pairs):
            continue
        chosen.append(t)
        used_pairs.update(pairs)
    return validate_configuration(
        labels, [tuple(labels[i] for i in t) for t in chosen])


@pytest.fixture(scope="session")
def census():
    from psts import classify_veblen_labellings
    return classify_veblen_labellings()


@pytest.fixture(scope="session")
def battery_report():
    from psts import run_property_battery
    return run_property_battery(5)
