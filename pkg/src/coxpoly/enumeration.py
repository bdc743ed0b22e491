"""Exhaustive generators: labelled bipartite quivers, labelled trees, all simple graphs."""

from __future__ import annotations

import heapq
from itertools import combinations, product
from math import comb
from typing import Iterator

from .errors import BoundExceeded
from .graphs import Graph
from .quivers import Quiver

__all__ = [
    "MAX_QUIVER_N",
    "MAX_TREE_N",
    "MAX_GRAPH_N",
    "bipartite_count",
    "enumerate_bipartite_configs",
    "enumerate_bipartite_quivers",
    "prufer_decode",
    "enumerate_trees",
    "enumerate_graphs",
]

MAX_QUIVER_N = 7
MAX_TREE_N = 8
MAX_GRAPH_N = 6


def bipartite_count(n: int, sources_first: bool = False) -> int:
    """Number of configurations :func:`enumerate_bipartite_configs` yields."""
    if sources_first:
        return sum(2 ** (m * (n - m)) for m in range(n + 1))
    return sum(comb(n, m) * 2 ** (m * (n - m)) for m in range(n + 1))


def enumerate_bipartite_configs(
    n: int, sources_first: bool = False
) -> Iterator[tuple[tuple[int, ...], Quiver]]:
    """Yield ``(sources, quiver)`` for every choice of source set and out-neighbourhoods.

    A source set ``S`` of size ``m`` is chosen, then for each ``i`` in ``S`` a
    subset ``B_i`` of the complement; the quiver has an arrow ``i -> j`` iff
    ``j`` is in ``B_i``.  With ``sources_first`` only ``S = {1..m}`` is used.

    Distinct configurations can produce the same quiver (a source with empty
    ``B_i`` is indistinguishable from a sink), so the stream is duplicate-free
    as configurations, not as quivers.
    """
    if not 1 <= n <= MAX_QUIVER_N:
        raise BoundExceeded(
            f"n={n} outside 1..{MAX_QUIVER_N}; would enumerate {bipartite_count(n, sources_first)} quivers"
        )
    vertices = range(1, n + 1)
    for m in range(n + 1):
        source_sets = [tuple(range(1, m + 1))] if sources_first else combinations(vertices, m)
        for sources in source_sets:
            sinks = [v for v in vertices if v not in sources]
            subsets = range(2 ** len(sinks))
            for masks in product(subsets, repeat=m):
                arrows = tuple(
                    (i, j)
                    for i, mask in zip(sources, masks)
                    for bit, j in enumerate(sinks)
                    if mask >> bit & 1
                )
                yield sources, Quiver(n, arrows)


def enumerate_bipartite_quivers(n: int, sources_first: bool = False) -> Iterator[Quiver]:
    for _, q in enumerate_bipartite_configs(n, sources_first):
        yield q


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Labelled tree on ``1..n`` with Prüfer sequence ``seq`` (length ``n - 2``)."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labelled trees on ``1..n``, in lexicographic Prüfer order."""
    if not 2 <= n <= MAX_TREE_N:
        raise BoundExceeded(f"n={n} outside 2..{MAX_TREE_N}; would enumerate {n ** max(n - 2, 0)} trees")
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n,2)`` simple graphs on ``1..n``."""
    if not 1 <= n <= MAX_GRAPH_N:
        raise BoundExceeded(f"n={n} outside 1..{MAX_GRAPH_N}; would enumerate {2 ** comb(n, 2)} graphs")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph(n, tuple(p for bit, p in enumerate(pairs) if mask >> bit & 1))
