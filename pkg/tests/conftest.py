import os
import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.constructions.generators import complete, complete_bipartite, cycle, path, star  # noqa: E402
from src.graphs.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n=1, max_n=7):
    """Random labelled graph, one coin per vertex pair"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def named():
    return {
        "K4": complete(4),
        "K5": complete(5),
        "C5": cycle(5),
        "C6": cycle(6),
        "P3": path(3),
        "P4": path(4),
        "P5": path(5),
        "K33": complete_bipartite(3, 3),
        "K14": star(4),
        "claw": star(3),
    }
