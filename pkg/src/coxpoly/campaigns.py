"""Verification campaigns: exhaustive or seeded random sweeps with exact checks.

Each campaign turns its parameters into a deterministic stream of instances
and a module-level check function.  A check returns ``(failure, note)``:
``failure`` is ``None`` or an ``(expected, actual)`` pair, and ``note`` feeds
the campaign's optional aggregate test (used by the tree sweep to count the
equality cases).  Results are consumed in instance order whatever the worker
count, so output does not depend on ``workers``.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from math import comb, factorial
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator

from . import randgen
from .enumeration import (
    MAX_QUIVER_N,
    MAX_TREE_N,
    bipartite_count,
    enumerate_bipartite_quivers,
    enumerate_graphs,
    enumerate_trees,
)
from .errors import BoundExceeded, UnknownCampaign
from .formulas import bipartite_orientation, tree_a2, verify_theorem1
from .graphs import (
    Graph,
    adjacency,
    closed_walks,
    coeffs_c2_c4,
    count_closed_walks_brute,
    trace_a4_closed_form,
)
from .intmat import (
    IntMatrix,
    bareiss_det,
    char_poly_det,
    char_poly_newton,
    congruence,
    coxeter_poly_of_matrix,
    coxeter_transformation,
    inverse,
    n1n2_sides,
)
from .polyalg import AmbientPolynomial, format_polynomial, is_even_space, represent, s_transform, t_transform
from .quivers import Quiver, coxeter_poly, is_acyclic, quiver_to_json, reflect, underlying_graph

__all__ = ["CAMPAIGNS", "VerificationSummary", "run_campaign"]

MAX_CASES = 200_000
MAX_EXHAUSTIVE_GRAPH_N = 5


@dataclass
class VerificationSummary:
    campaign: str
    instances_checked: int
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        d = {
            "campaign": self.campaign,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "failures": self.failures,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


# ---------------------------------------------------------------- describing instances


def _describe(obj: Any) -> Any:
    if isinstance(obj, Quiver):
        return quiver_to_json(obj)
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, IntMatrix):
        return obj.tolist()
    if isinstance(obj, AmbientPolynomial):
        return format_polynomial(obj)
    if isinstance(obj, tuple):
        return [_describe(o) for o in obj]
    return obj


def _poly(p: AmbientPolynomial) -> str:
    return format_polynomial(p)


# ---------------------------------------------------------------- checks


def check_theorem1(q: Quiver):
    r = verify_theorem1(q)
    if r.routes_agree:
        return None, None
    expected = {"a1": r.a1_closed, "a2": r.a2_closed, "a2_alt": r.a2_closed_alt,
                "a1_proof": r.a1_proof, "a2_proof": r.a2_proof}
    return (expected, {"a1": r.a1_det, "a2": r.a2_det}), None


def check_acampo(q: Quiver):
    lhs = s_transform(coxeter_poly(q))
    rhs = t_transform(char_poly_newton(adjacency(underlying_graph(q))))
    return (None if lhs == rhs else (_poly(lhs), _poly(rhs))), None


def check_tree(t: Graph):
    q = bipartite_orientation(t)
    phi = coxeter_poly(q)
    a1, a2 = phi.coeffs[1], phi.coeffs[2]
    closed = tree_a2(t)
    is_path = max(t.degrees()) <= 2
    ok = a1 == 1 and a2 == closed and a2 <= 1 and (a2 == 1) == is_path
    failure = None if ok else ({"a1": 1, "a2": closed, "path": is_path}, {"a1": a1, "a2": a2})
    return failure, (t.n, a2 == 1)


def check_reflection(case: tuple[Quiver, int]):
    q, s = case
    r = reflect(q, s)
    before, after = coxeter_poly(q), coxeter_poly(r)
    if before == after and is_acyclic(r):
        return None, None
    return (_poly(before), _poly(after) if is_acyclic(r) else "cyclic"), None


def check_newton_vs_det(m: IntMatrix):
    a, b = char_poly_newton(m), char_poly_det(m)
    return (None if a == b else (_poly(b), _poly(a))), None


def check_n1n2(case: tuple[IntMatrix, IntMatrix]):
    lhs, rhs = n1n2_sides(*case)
    return (None if lhs == rhs else (_poly(lhs), _poly(rhs))), None


def check_represent(p: AmbientPolynomial):
    q = represent(p)
    ok = is_even_space(q) and q.ambient_degree == p.ambient_degree and t_transform(q) == s_transform(p)
    return (None if ok else (_poly(s_transform(p)), _poly(t_transform(q)))), None


def check_congruence(case: tuple[IntMatrix, IntMatrix, IntMatrix]):
    c, p, cu = case
    mismatches = {}
    phi_c = coxeter_poly_of_matrix(c)
    cp = congruence(c, p)
    phi_cp = coxeter_poly_of_matrix(cp)
    if phi_cp != phi_c:
        mismatches["phi(PCP^T)"] = (_poly(phi_c), _poly(phi_cp))
    if bareiss_det(cp) != bareiss_det(p) ** 2 * bareiss_det(c):
        mismatches["det(PCP^T)"] = (bareiss_det(p) ** 2 * bareiss_det(c), bareiss_det(cp))
    unimodular = [cu] + ([c] if bareiss_det(c) in (1, -1) else [])
    for k, u in enumerate(unimodular):
        phi_u = coxeter_poly_of_matrix(u)
        for label, other in (("inv", inverse(u)), ("T", u.T)):
            phi_o = coxeter_poly_of_matrix(other)
            if phi_o != phi_u:
                mismatches[f"phi({label}) #{k}"] = (_poly(phi_u), _poly(phi_o))
        s1 = char_poly_newton(coxeter_transformation(u))
        s2 = char_poly_newton(coxeter_transformation(congruence(u, p)))
        if s1 != s2:
            mismatches[f"p_S congruent #{k}"] = (_poly(s1), _poly(s2))
    if not mismatches:
        return None, None
    return ({k: v[0] for k, v in mismatches.items()}, {k: v[1] for k, v in mismatches.items()}), None


def check_walks(g: Graph):
    brute = count_closed_walks_brute(g, 4)
    trace = closed_walks(g, 4)
    closed = trace_a4_closed_form(g)
    p = char_poly_newton(adjacency(g)).coeffs
    c2, c4 = coeffs_c2_c4(g)
    expected = {"walks4": brute, "c1": 0, "c2": c2}
    actual = {"walks4_trace": trace, "walks4_closed": closed,
              "c1": p[1] if g.n >= 1 else 0, "c2": p[2] if g.n >= 2 else c2}
    ok = brute == trace == closed and actual["c1"] == 0 and actual["c2"] == c2
    if g.n >= 4:
        expected["c4"] = c4
        actual["c4"] = p[4]
        ok = ok and p[4] == c4
    return (None if ok else (expected, actual)), None


# ---------------------------------------------------------------- instance streams


def _range_n(params, default_max, lo, hard_max, cost):
    if params.get("n") is not None:
        ns = [params["n"]]
    else:
        ns = list(range(lo, (params.get("n_max") or default_max) + 1))
    for n in ns:
        if n < lo or n > hard_max:
            raise BoundExceeded(
                f"n={n} outside {lo}..{hard_max} (cost estimate: {cost(n)} instances at n={n})"
            )
    return ns


def _cases(params):
    cases = params.get("cases") or 500
    if cases > MAX_CASES:
        raise BoundExceeded(f"--cases {cases} exceeds {MAX_CASES} (cost estimate: {cases} checks)")
    return cases


def _quiver_stream(ns):
    for n in ns:
        yield from enumerate_bipartite_quivers(n)


def _theorem1(params):
    ns = _range_n(params, 6, 2, MAX_QUIVER_N, bipartite_count)
    return _quiver_stream(ns), check_theorem1, None


def _acampo(params):
    ns = _range_n(params, 6, 1, MAX_QUIVER_N, bipartite_count)
    return _quiver_stream(ns), check_acampo, None


def _trees(params):
    ns = _range_n(params, MAX_TREE_N, 2, MAX_TREE_N, lambda n: n ** max(n - 2, 0))

    def stream():
        for n in ns:
            yield from enumerate_trees(n)

    def finalize(notes):
        equal = Counter(n for n, is_one in notes if is_one)
        return [
            {"instance": f"paths on {n} vertices", "expected": factorial(n) // 2, "actual": equal[n]}
            for n in ns
            if equal[n] != factorial(n) // 2
        ]

    return stream(), check_tree, finalize


def _random_stream(params, make):
    rng = random.Random(params.get("seed") or 0)
    return (make(rng) for _ in range(_cases(params)))


def _reflections(params):
    def make(rng):
        n = rng.randint(1, 7)
        q = randgen.random_acyclic_quiver(rng, n)
        choices = sorted(q.sinks() | q.sources())
        return q, rng.choice(choices)

    return _random_stream(params, make), check_reflection, None


def _newton_vs_det(params):
    return _random_stream(params, lambda rng: randgen.random_matrix(rng, rng.randint(1, 8))), \
        check_newton_vs_det, None


def _n1n2(params):
    def make(rng):
        n = rng.randint(1, 6)
        return randgen.random_square_zero(rng, n), randgen.random_square_zero(rng, n)

    return _random_stream(params, make), check_n1n2, None


def _represent(params):
    def make(rng):
        return randgen.random_palindromic(rng, rng.randint(0, 24), 10**6)

    return _random_stream(params, make), check_represent, None


def _congruence(params):
    def make(rng):
        n = rng.randint(1, 6)
        return (
            randgen.random_matrix(rng, n),
            randgen.random_unimodular(rng, n),
            randgen.random_bounded_unimodular(rng, n),
        )

    return _random_stream(params, make), check_congruence, None


def _walks(params):
    n_max = params.get("n_max") or MAX_EXHAUSTIVE_GRAPH_N
    if n_max > MAX_EXHAUSTIVE_GRAPH_N:
        raise BoundExceeded(
            f"exhaustive graph sweep limited to n <= {MAX_EXHAUSTIVE_GRAPH_N} "
            f"(cost estimate: {2 ** comb(n_max, 2)} graphs at n={n_max})"
        )

    def stream():
        for n in range(1, n_max + 1):
            yield from enumerate_graphs(n)
        rng = random.Random(params.get("seed") or 0)
        for _ in range(_cases(params)):
            yield randgen.random_graph(rng, rng.randint(1, 7))

    return stream(), check_walks, None


CAMPAIGNS: dict[str, Callable] = {
    "acampo": _acampo,
    "theorem1": _theorem1,
    "corollary-trees": _trees,
    "reflections": _reflections,
    "newton-vs-det": _newton_vs_det,
    "n1n2": _n1n2,
    "represent-roundtrip": _represent,
    "congruence": _congruence,
    "walks": _walks,
}


def _guarded(check, payload):
    try:
        return check(payload)
    except Exception as exc:  # a crash inside a check is a failed instance, not a dead sweep
        return ("no exception", f"{type(exc).__name__}: {exc}"), None


def _results(check, payloads: Iterable, workers: int) -> Iterator:
    if workers <= 1:
        for p in payloads:
            yield p, _guarded(check, p)
        return
    # payloads are materialised so that each result can be paired with its instance
    payloads = list(payloads)
    with Pool(workers) as pool:
        yield from zip(payloads, pool.imap(partial(_guarded, check), payloads, chunksize=64))


def run_campaign(
    name: str,
    *,
    n_max: int | None = None,
    n: int | None = None,
    seed: int = 0,
    cases: int | None = None,
    workers: int = 1,
    on_failure: Callable[[dict], None] | None = None,
) -> VerificationSummary:
    """Run one campaign and return its summary.

    ``on_failure`` is called with each failure record as it is found.
    """
    if name not in CAMPAIGNS:
        raise UnknownCampaign(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    params = {"n_max": n_max, "n": n, "seed": seed, "cases": cases}
    stream, check, finalize = CAMPAIGNS[name](params)
    start = time.perf_counter()
    summary = VerificationSummary(name, 0, params={k: v for k, v in params.items() if v is not None})
    notes = []
    for payload, (failure, note) in _results(check, stream, workers):
        summary.instances_checked += 1
        notes.append(note)
        if failure is not None:
            record = {"instance": _describe(payload), "expected": failure[0], "actual": failure[1]}
            summary.failures.append(record)
            if on_failure:
                on_failure(record)
    if finalize is not None:
        for record in finalize(notes):
            summary.failures.append(record)
            if on_failure:
                on_failure(record)
    summary.elapsed = time.perf_counter() - start
    return summary
