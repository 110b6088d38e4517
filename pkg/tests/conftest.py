from __future__ import annotations

import pytest
from hypothesis import strategies as st

from qsym import (
    Graph,
    build,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    edgeless,
    path,
    star,
)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    """Arbitrary simple graph with n in [min_n, max_n]."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, k in zip(pairs, keep) if k])


def small_corpus() -> list[Graph]:
    """A fixed, deterministic spread of small graphs used by several
    suites: families, complements, unions, the odd irregular case."""
    out = [
        edgeless(1),
        edgeless(4),
        complete(2),
        complete(3),
        complete(4),
        complete(5),
        cycle(3),
        cycle(4),
        cycle(5),
        cycle(6),
        path(1),
        path(2),
        path(3),
        path(5),
        star(3),
        star(4),
        star(5),
        complete_bipartite(2, 2),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        complete_bipartite(1, 4),
        disjoint_union([complete(2), complete(2)]),
        disjoint_union([cycle(4), complete(2)]),
        disjoint_union([complete(3), complete(3)]),
        disjoint_union([path(2), edgeless(2)]),
        build(6, [(0, 1), (2, 3), (0, 4), (1, 4), (2, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5)]),
        build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    ]
    out.extend([complement(cycle(5)), complement(complete_bipartite(3, 3))])
    return out


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return small_corpus()
