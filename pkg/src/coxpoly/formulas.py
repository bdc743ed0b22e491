"""Closed forms for the first two Coxeter coefficients of bipartite quivers and trees.

Write ``phi_Q(x) = x^n + a_1 x^(n-1) + a_2 x^(n-2) + ...``.  For a bipartite
quiver without parallel arrows, with ``e`` arrows, degrees ``d_i``, ``v``
isolated vertices and ``q`` copies of the bipartite K_{2,2} quiver:

    a_1 = n - e
    a_2 = (n-e)(n-1-e)/2 + e - 2q - sum_i C(d_i, 2)
        = (n-e)(n+1-e)/2 - v - 2q - sum_{d_i > 0} C(d_i - 1, 2)

For a tree this collapses to ``a_1 = 1`` and ``a_2 = 1 - sum_i C(d_i - 1, 2)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass

from .errors import NotATree, NotBipartiteGraph, TooSmall
from .graphs import Graph, coeffs_c2_c4, is_tree
from .polyalg import binom
from .quivers import Quiver, check_bipartite, count_a22, coxeter_poly, underlying_graph

__all__ = [
    "CoefficientReport",
    "theorem1_coefficients",
    "theorem1_coefficients_alt",
    "tree_a2",
    "bipartite_orientation",
    "verify_theorem1",
]


def _half(x: int) -> int:
    q, r = divmod(x, 2)
    assert r == 0, f"{x} is odd"
    return q


def _check(q: Quiver):
    check_bipartite(q)
    if q.n < 2:
        raise TooSmall(f"need n >= 2, got {q.n}")


def theorem1_coefficients(q: Quiver) -> tuple[int, int]:
    """``(a_1, a_2)`` from the arrow count, degrees and K_{2,2} count."""
    _check(q)
    n, e = q.n, q.e
    a2 = _half((n - e) * (n - 1 - e)) + e - 2 * count_a22(q) - sum(binom(d, 2) for d in q.degrees())
    return n - e, a2


def theorem1_coefficients_alt(q: Quiver) -> tuple[int, int]:
    """Same as :func:`theorem1_coefficients`, via the isolated-vertex form of ``a_2``."""
    _check(q)
    n, e = q.n, q.e
    degrees = q.degrees()
    v = degrees.count(0)
    a2 = (
        _half((n - e) * (n + 1 - e))
        - v
        - 2 * count_a22(q)
        - sum(binom(d - 1, 2) for d in degrees if d > 0)
    )
    return n - e, a2


def tree_a2(t: Graph) -> int:
    """``1 - sum C(d_i - 1, 2)``, the second Coxeter coefficient of a tree."""
    if t.n < 2 or not is_tree(t):
        raise NotATree("input is not a tree on at least 2 vertices")
    return 1 - sum(binom(d - 1, 2) for d in t.degrees())


def bipartite_orientation(g: Graph) -> Quiver:
    """Orient every edge from the colour class of vertex 1 to the other class.

    In a disconnected graph each component's smallest vertex joins the class
    of vertex 1.
    """
    nbrs = g.neighbors()
    colour = [None] * (g.n + 1)
    for root in range(1, g.n + 1):
        if colour[root] is not None:
            continue
        colour[root] = 0
        todo = deque([root])
        while todo:
            u = todo.popleft()
            for w in nbrs[u]:
                if colour[w] is None:
                    colour[w] = 1 - colour[u]
                    todo.append(w)
                elif colour[w] == colour[u]:
                    raise NotBipartiteGraph(f"odd cycle through edge {u} -- {w}")
    return Quiver(g.n, tuple((i, j) if colour[i] == 0 else (j, i) for i, j in g.edges))


@dataclass(frozen=True)
class CoefficientReport:
    """Closed-form versus determinant values of ``a_1`` and ``a_2`` for one quiver.

    ``a1_proof``/``a2_proof`` come from the graph coefficients ``c_2, c_4``
    through ``a_1 = n c_0 + c_2`` and ``a_2 = C(n,2) c_0 + (n-2) c_2 + c_4``.
    """

    n: int
    e: int
    q: int
    degrees: tuple[int, ...]
    isolated_count: int
    a1_closed: int
    a2_closed: int
    a2_closed_alt: int
    a1_det: int
    a2_det: int
    a1_proof: int
    a2_proof: int
    verdict: bool
    coxeter_coeffs: tuple[int, ...]

    @property
    def routes_agree(self) -> bool:
        """All four routes give the same ``(a_1, a_2)``."""
        return (
            self.verdict
            and self.a2_closed_alt == self.a2_closed
            and (self.a1_proof, self.a2_proof) == (self.a1_det, self.a2_det)
        )

    def to_json(self) -> dict:
        d = asdict(self)
        d["degrees"] = list(self.degrees)
        d["coxeter_coeffs"] = list(self.coxeter_coeffs)
        d["routes_agree"] = self.routes_agree
        return d


def verify_theorem1(q: Quiver) -> CoefficientReport:
    """Compute ``a_1, a_2`` by both closed forms, the determinant and the graph route."""
    a1, a2 = theorem1_coefficients(q)
    a1_alt, a2_alt = theorem1_coefficients_alt(q)
    assert a1_alt == a1
    phi = coxeter_poly(q)
    n = q.n
    a1_det, a2_det = phi.coeffs[1], phi.coeffs[2]

    # c_4 only exists as a coefficient when n >= 4
    c2, c4 = coeffs_c2_c4(underlying_graph(q))
    if n < 4:
        c4 = 0
    a1_proof = n + c2
    a2_proof = binom(n, 2) + (n - 2) * c2 + c4

    degrees = tuple(q.degrees())
    return CoefficientReport(
        n=n,
        e=q.e,
        q=count_a22(q),
        degrees=degrees,
        isolated_count=degrees.count(0),
        a1_closed=a1,
        a2_closed=a2,
        a2_closed_alt=a2_alt,
        a1_det=a1_det,
        a2_det=a2_det,
        a1_proof=a1_proof,
        a2_proof=a2_proof,
        verdict=(a1 == a1_det and a2 == a2_det),
        coxeter_coeffs=phi.coeffs,
    )
