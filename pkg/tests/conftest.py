from __future__ import annotations

import pytest
from hypothesis import strategies as st

from domratio import Graph

import helpers


@pytest.fixture
def petersen() -> Graph:
    return helpers.make_petersen()


@pytest.fixture
def prism() -> Graph:
    return helpers.make_prism()


@st.composite
def arbitrary_graphs(draw, min_n: int = 1, max_n: int = 8):
    """Uniform-ish random graph: order, then the upper-triangle bits."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    cells = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << cells) - 1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (bits >> idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)
