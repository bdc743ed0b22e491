"""Finite quivers, their Euler and Cartan matrices, and Coxeter polynomials.

A :class:`Quiver` may carry loops and parallel arrows so that any input file
can be loaded; each operation checks the hypotheses it actually needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    HasParallelArrows,
    NotAcyclic,
    NotBipartite,
    NotSimple,
    NotSinkOrSource,
    ParseError,
)
from .graphs import Graph, adjacency
from .intmat import IntMatrix, char_poly_newton, coxeter_poly_of_matrix
from .polyalg import AmbientPolynomial, binom, s_transform, t_transform

__all__ = [
    "Quiver",
    "quiver_adjacency",
    "is_acyclic",
    "bipartition",
    "euler_matrix",
    "cartan_matrix",
    "coxeter_poly",
    "reflect",
    "underlying_graph",
    "check_bipartite",
    "count_a22",
    "verify_acampo",
    "parse_quiver",
    "format_quiver",
    "quiver_to_json",
]


@dataclass(frozen=True)
class Quiver:
    """Quiver on vertices ``1..n``; ``arrows`` is a sorted multiset of ``(source, target)``."""

    n: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"quiver needs at least one vertex, got n={self.n}")
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        for s, t in arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ValueError(f"arrow {s} -> {t} leaves the vertex range 1..{self.n}")
        object.__setattr__(self, "arrows", arrows)

    @property
    def e(self) -> int:
        return len(self.arrows)

    def out_neighbors(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in range(self.n + 1)]
        for s, t in self.arrows:
            out[s].add(t)
        return out

    def degrees(self) -> list[int]:
        """Number of arrow ends at each vertex (a loop counts twice)."""
        d = [0] * self.n
        for s, t in self.arrows:
            d[s - 1] += 1
            d[t - 1] += 1
        return d

    def sinks(self) -> set[int]:
        has_out = {s for s, _ in self.arrows}
        return set(range(1, self.n + 1)) - has_out

    def sources(self) -> set[int]:
        has_in = {t for _, t in self.arrows}
        return set(range(1, self.n + 1)) - has_in

    def has_parallel_arrows(self) -> bool:
        return len(set(self.arrows)) != len(self.arrows)

    def has_loops(self) -> bool:
        return any(s == t for s, t in self.arrows)


def quiver_adjacency(q: Quiver) -> IntMatrix:
    """``N_Q``: entry ``(i, j)`` counts arrows ``i -> j``."""
    m = [[0] * q.n for _ in range(q.n)]
    for s, t in q.arrows:
        m[s - 1][t - 1] += 1
    return IntMatrix.of(m)


def is_acyclic(q: Quiver) -> bool:
    """No oriented cycle of positive length (loops included), by Kahn's algorithm."""
    indeg = [0] * (q.n + 1)
    out: list[list[int]] = [[] for _ in range(q.n + 1)]
    for s, t in q.arrows:
        out[s].append(t)
        indeg[t] += 1
    ready = [v for v in range(1, q.n + 1) if indeg[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return removed == q.n


def bipartition(q: Quiver) -> tuple[frozenset[int], frozenset[int]] | None:
    """``(V', V'')`` with every arrow going from ``V'`` to ``V''``, or ``None``.

    ``V'`` is the set of vertices with outgoing arrows; isolated vertices go
    to the sink side ``V''``.
    """
    tails = {s for s, _ in q.arrows}
    heads = {t for _, t in q.arrows}
    if tails & heads:
        return None
    return frozenset(tails), frozenset(range(1, q.n + 1)) - tails


def euler_matrix(q: Quiver) -> IntMatrix:
    """``C_Q = I - N_Q``."""
    return IntMatrix.identity(q.n) - quiver_adjacency(q)


def _require_acyclic(q: Quiver):
    if not is_acyclic(q):
        raise NotAcyclic("quiver has an oriented cycle")


def cartan_matrix(q: Quiver) -> IntMatrix:
    """``I + N + ... + N^(n-1)``; entry ``(i, j)`` counts paths from ``i`` to ``j``."""
    _require_acyclic(q)
    nq = quiver_adjacency(q)
    total = IntMatrix.identity(q.n)
    power = total
    for _ in range(q.n - 1):
        power = power @ nq
        total = total + power
    return total


def coxeter_poly(q: Quiver) -> AmbientPolynomial:
    """``det(x C_Q + C_Q^T)``, the Coxeter polynomial of an acyclic quiver."""
    _require_acyclic(q)
    return coxeter_poly_of_matrix(euler_matrix(q))


def reflect(q: Quiver, s: int) -> Quiver:
    """Reverse every arrow at ``s``, which must be a sink or a source."""
    if not 1 <= s <= q.n:
        raise NotSinkOrSource(f"vertex {s} out of range 1..{q.n}")
    if s not in q.sinks() and s not in q.sources():
        raise NotSinkOrSource(f"vertex {s} has both incoming and outgoing arrows")
    return Quiver(q.n, tuple((b, a) if s in (a, b) else (a, b) for a, b in q.arrows))


def underlying_graph(q: Quiver) -> Graph:
    """Forget orientations.  Loops or two arrows on one vertex pair raise :class:`NotSimple`."""
    seen: set[tuple[int, int]] = set()
    for s, t in q.arrows:
        if s == t:
            raise NotSimple(f"loop at vertex {s}")
        key = (min(s, t), max(s, t))
        if key in seen:
            raise NotSimple(f"more than one arrow between {key[0]} and {key[1]}")
        seen.add(key)
    return Graph(q.n, tuple(seen))


def check_bipartite(q: Quiver) -> tuple[frozenset[int], frozenset[int]]:
    """Bipartition of ``q``; raises unless ``q`` is bipartite without parallel arrows."""
    parts = bipartition(q)
    if parts is None:
        raise NotBipartite("some vertex is neither a sink nor a source")
    if q.has_parallel_arrows():
        raise HasParallelArrows("quiver has parallel arrows")
    return parts


def count_a22(q: Quiver) -> int:
    """Occurrences of the bipartite K_{2,2} quiver as a full subquiver.

    With ``B_i`` the out-neighbourhood of source ``i``, this is the sum of
    ``C(|B_i & B_j|, 2)`` over pairs of sources.
    """
    sources, _ = check_bipartite(q)
    out = q.out_neighbors()
    return sum(binom(len(out[i] & out[j]), 2) for i, j in combinations(sorted(sources), 2))


def verify_acampo(q: Quiver) -> bool:
    """Check ``phi_Q(x^2) == x^n p_G(x + 1/x)`` for a bipartite quiver without multiple edges."""
    check_bipartite(q)
    g = underlying_graph(q)
    return s_transform(coxeter_poly(q)) == t_transform(char_poly_newton(adjacency(g)))


def format_quiver(q: Quiver) -> str:
    return "".join([f"quiver {q.n}\n"] + [f"{s} -> {t}\n" for s, t in q.arrows])


def quiver_to_json(q: Quiver) -> dict:
    return {"n": q.n, "arrows": [list(a) for a in q.arrows]}


def _parse_quiver_json(text: str) -> Quiver:
    try:
        data = json.loads(text)
        n = data["n"]
        arrows = [tuple(a) for a in data["arrows"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad quiver JSON: {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    for a in arrows:
        if len(a) != 2 or not all(isinstance(v, int) and 1 <= v <= n for v in a):
            raise ParseError(f"bad arrow {list(a)!r}")
    return Quiver(n, tuple(arrows))


def parse_quiver(text: str) -> Quiver:
    """Read the ``quiver n`` / ``i -> j`` text format, or its JSON equivalent."""
    if text.lstrip().startswith("{"):
        return _parse_quiver_json(text)
    n = None
    arrows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            toks = line.split()
            if len(toks) != 2 or toks[0] != "quiver":
                raise ParseError("expected header 'quiver n'", no)
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(f"bad vertex count {toks[1]!r}", no) from None
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", no)
            continue
        left, sep, right = line.partition("->")
        if not sep:
            raise ParseError(f"expected 'i -> j', got {line!r}", no)
        try:
            s, t = int(left), int(right)
        except ValueError:
            raise ParseError(f"bad vertex in {line!r}", no) from None
        if not (1 <= s <= n and 1 <= t <= n):
            raise ParseError(f"vertex out of range 1..{n} in {line!r}", no)
        arrows.append((s, t))
    if n is None:
        raise ParseError("missing 'quiver n' header")
    return Quiver(n, tuple(arrows))
