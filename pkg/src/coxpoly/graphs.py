"""Simple undirected graphs and the low coefficients of their characteristic polynomials.

For a simple graph with ``e`` edges, degrees ``d_i`` and ``q`` four-cycles,
writing ``p_G(x) = x^n + c_1 x^{n-1} + c_2 x^{n-2} + ...``:

    tr A   = 0                          c_1 = 0
    tr A^2 = 2e                         c_2 = -e
    tr A^4 = 2e + 4 sum C(d_i, 2) + 8q  c_4 = C(e, 2) - sum C(d_i, 2) - 2q
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError
from .intmat import IntMatrix
from .polyalg import binom

__all__ = [
    "Graph",
    "adjacency",
    "closed_walks",
    "count_closed_walks_brute",
    "count_4cycles",
    "count_4cycles_brute",
    "trace_a4_closed_form",
    "coeffs_c2_c4",
    "is_tree",
    "parse_graph",
    "format_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..n``; edges are stored as sorted pairs ``(i, j)``, ``i < j``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {i} -- {j} leaves the vertex range 1..{self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key[0]} -- {key[1]}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def e(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[set[int]]:
        """``nbrs[v]`` for ``v`` in ``1..n``; index 0 is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for i, j in self.edges:
            d[i - 1] += 1
            d[j - 1] += 1
        return d

    def is_connected(self) -> bool:
        nbrs = self.neighbors()
        seen = {1}
        todo = deque([1])
        while todo:
            v = todo.popleft()
            for w in nbrs[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == self.n


def adjacency(g: Graph) -> IntMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = 1
    return IntMatrix.of(a)


def closed_walks(g: Graph, k: int) -> int:
    """Number of closed walks of length ``k``, i.e. ``tr A^k``."""
    return (adjacency(g) ** k).trace()


def count_closed_walks_brute(g: Graph, k: int) -> int:
    """Closed ``k``-walks counted by explicit depth-first enumeration (no matrix algebra)."""
    nbrs = g.neighbors()

    def extend(start, here, left):
        if left == 0:
            return int(here == start)
        return sum(extend(start, w, left - 1) for w in nbrs[here])

    return sum(extend(v, v, k) for v in range(1, g.n + 1))


def count_4cycles_brute(g: Graph) -> int:
    """4-cycles counted by checking the three cyclic orders of every 4-subset."""
    edges = set(g.edges)

    def adj(u, w):
        return (min(u, w), max(u, w)) in edges

    total = 0
    for a, b, c, d in combinations(range(1, g.n + 1), 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            total += adj(w, x) and adj(x, y) and adj(y, z) and adj(z, w)
    return total


def count_4cycles(g: Graph) -> int:
    """Number of 4-cycles as subgraphs.

    Every 4-cycle has exactly two diagonal pairs ``{u, w}``, and each pair of
    common neighbours of ``{u, w}`` closes one cycle with that diagonal, so
    the sum of ``C(|N(u) & N(w)|, 2)`` over all pairs counts each cycle twice.
    """
    nbrs = g.neighbors()
    total = sum(binom(len(nbrs[u] & nbrs[w]), 2) for u, w in combinations(range(1, g.n + 1), 2))
    assert total % 2 == 0
    return total // 2


def trace_a4_closed_form(g: Graph) -> int:
    """``2e + 4 sum C(d_i, 2) + 8q``, the number of closed 4-walks."""
    return 2 * g.e + 4 * sum(binom(d, 2) for d in g.degrees()) + 8 * count_4cycles(g)


def coeffs_c2_c4(g: Graph) -> tuple[int, int]:
    """Closed forms for the coefficients of ``x^(n-2)`` and ``x^(n-4)`` in ``p_G``.

    For ``n < 4`` the second value is what the formula gives; callers should
    ignore it since ``x^(n-4)`` is not a monomial of ``p_G``.
    """
    e = g.e
    c4 = binom(e, 2) - sum(binom(d, 2) for d in g.degrees()) - 2 * count_4cycles(g)
    return -e, c4


def is_tree(g: Graph) -> bool:
    return g.e == g.n - 1 and g.is_connected()


def format_graph(g: Graph) -> str:
    return "".join([f"graph {g.n}\n"] + [f"{i} -- {j}\n" for i, j in g.edges])


def parse_graph(text: str) -> Graph:
    """Read ``graph n`` followed by lines ``i -- j``.  Blank lines and ``#`` comments are skipped."""
    n = None
    edges: dict[tuple[int, int], int] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            toks = line.split()
            if len(toks) != 2 or toks[0] != "graph":
                raise ParseError("expected header 'graph n'", no)
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(f"bad vertex count {toks[1]!r}", no) from None
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", no)
            continue
        left, sep, right = line.partition("--")
        if not sep:
            raise ParseError(f"expected 'i -- j', got {line!r}", no)
        try:
            i, j = int(left), int(right)
        except ValueError:
            raise ParseError(f"bad vertex in {line!r}", no) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex out of range 1..{n} in {line!r}", no)
        if i == j:
            raise ParseError(f"loop at vertex {i}", no)
        key = (min(i, j), max(i, j))
        if key in edges:
            raise ParseError(f"duplicate edge {key[0]} -- {key[1]} (first on line {edges[key]})", no)
        edges[key] = no
    if n is None:
        raise ParseError("missing 'graph n' header")
    return Graph(n, tuple(edges))
