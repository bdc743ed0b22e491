"""Random instances for the randomized checks.  Every function takes a ``random.Random``."""

from __future__ import annotations

import random

from .graphs import Graph
from .intmat import IntMatrix, inverse
from .polyalg import AmbientPolynomial
from .quivers import Quiver


def random_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    return IntMatrix.of([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_unimodular(rng: random.Random, n: int, steps: int | None = None) -> IntMatrix:
    """Product of random elementary integer operations (row additions, swaps, sign flips)."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(2 * n if steps is None else steps):
        kind = rng.random()
        i = rng.randrange(n)
        if n > 1 and kind < 0.7:
            j = rng.choice([k for k in range(n) if k != i])
            c = rng.choice([-2, -1, 1, 2])
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif n > 1 and kind < 0.85:
            j = rng.randrange(n)
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return IntMatrix.of(m)


def random_bounded_unimodular(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    """Unimodular matrix with entries in ``[lo, hi]``: a permuted signed unitriangular matrix."""
    upper = rng.random() < 0.5
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                m[i][j] = rng.choice([-1, 1])
            elif (j > i) == upper:
                m[i][j] = rng.randint(lo, hi)
    perm = list(range(n))
    rng.shuffle(perm)
    return IntMatrix.of([m[p] for p in perm])


def random_square_zero(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> IntMatrix:
    """``P [[0, B], [0, 0]] P^{-1}`` with random block split, ``B`` and unimodular ``P``."""
    k = rng.randint(0, n)
    block = [[0] * n for _ in range(n)]
    for i in range(k):
        for j in range(k, n):
            block[i][j] = rng.randint(lo, hi)
    p = random_unimodular(rng, n, steps=n)
    return p @ IntMatrix.of(block) @ inverse(p)


def random_palindromic(rng: random.Random, n: int, bound: int) -> AmbientPolynomial:
    half = [rng.randint(-bound, bound) for _ in range(n // 2 + 1)]
    coeffs = half + half[: (n + 1) // 2][::-1]
    return AmbientPolynomial(n, tuple(coeffs))


def random_acyclic_quiver(rng: random.Random, n: int, density: float = 0.4, multi: float = 0.1) -> Quiver:
    """Arrows follow a random vertex order; occasionally doubled into parallel arrows."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    arrows = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                arrows.append((order[a], order[b]))
                if rng.random() < multi:
                    arrows.append((order[a], order[b]))
    return Quiver(n, tuple(arrows))


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    p = rng.random() if density is None else density
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return Graph(n, tuple(edges))
