"""Acceptance criteria, one test each.

Every test records its verdict in ``ACCEPTANCE_RESULTS``; the terminal
summary hook in conftest prints one PASS/FAIL line per criterion at the end
of the run, and each test also prints its own line (visible with ``-s``).
"""

from math import factorial

import sympy

from coxpoly.campaigns import run_campaign
from coxpoly.enumeration import bipartite_count
from coxpoly.intmat import bareiss_det, char_poly_det, char_poly_newton, coxeter_transformation
from coxpoly.polyalg import AmbientPolynomial
from coxpoly.quivers import coxeter_poly, euler_matrix, parse_quiver

from conftest import ACCEPTANCE_RESULTS, FIXTURES


def record(key, ok, detail):
    ACCEPTANCE_RESULTS[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    return ok


def campaign_ok(key, summary, expected_count=None, time_limit=None):
    ok = summary.passed
    detail = f"{summary.instances_checked} instances, {len(summary.failures)} failures, {summary.elapsed:.1f}s"
    if expected_count is not None and summary.instances_checked != expected_count:
        ok = False
        detail += f" (expected {expected_count} instances)"
    if time_limit is not None and summary.elapsed >= time_limit:
        ok = False
        detail += f" (limit {time_limit}s)"
    assert record(key, ok, detail), summary.failures[:3]


def test_1_theorem1_exhaustive():
    s = run_campaign("theorem1", n_max=6)
    campaign_ok("1 theorem1 closed forms, 2<=n<=6", s, sum(bipartite_count(n) for n in range(2, 7)), 120)


def test_2_tree_coefficients_exhaustive():
    s = run_campaign("corollary-trees", n_max=8)
    # the campaign itself checks that the a2 = 1 count equals n!/2 for each n
    expected = sum(n ** (n - 2) for n in range(2, 9))
    assert sum(factorial(n) // 2 for n in range(2, 9)) < expected
    campaign_ok("2 tree coefficients, 2<=n<=8", s, expected, 300)


def test_3_acampo_exhaustive():
    s = run_campaign("acampo", n_max=6)
    campaign_ok("3 A'Campo identity, n<=6", s, sum(bipartite_count(n) for n in range(1, 7)))


def test_4_represent_roundtrip():
    campaign_ok("4 representation round-trip", run_campaign("represent-roundtrip", cases=1000, seed=0), 1000)


def test_5_newton_vs_det():
    campaign_ok("5 Newton vs determinant char poly", run_campaign("newton-vs-det", cases=500, seed=0), 500)


def test_6_n1n2():
    campaign_ok("6 square-zero pair identity", run_campaign("n1n2", cases=500, seed=0), 500)


def test_7_reflections():
    campaign_ok("7 reflection invariance", run_campaign("reflections", cases=500, seed=0), 500)


def test_8_congruence():
    campaign_ok("8 congruence invariance", run_campaign("congruence", cases=500, seed=0), 500)


def test_9_walks():
    exhaustive = sum(2 ** (n * (n - 1) // 2) for n in range(1, 6))
    s = run_campaign("walks", n_max=5, cases=200, seed=0)
    campaign_ok("9 closed 4-walk formula", s, exhaustive + 200)


def sympy_coxeter(c):
    x = sympy.Symbol("x")
    m = sympy.Matrix(c.tolist())
    return tuple(int(v) for v in sympy.Poly((x * m + m.T).det(), x).all_coeffs())


def test_10_golden_fixtures():
    golden = {
        "a2.quiver": (1, 1, 1),
        "a22.quiver": (1, 0, -2, 0, 1),
        "d4_star.quiver": (1, 1, 0, 1, 1),
    }
    problems = []
    for name, coeffs in golden.items():
        q = parse_quiver((FIXTURES / name).read_text())
        c = euler_matrix(q)
        expected = AmbientPolynomial(q.n, coeffs)
        assert bareiss_det(c) == 1
        s = coxeter_transformation(c)
        routes = {
            "det(xC+C^T)": coxeter_poly(q),
            "charpoly(S) Newton": char_poly_newton(s),
            "charpoly(S) det": char_poly_det(s),
            "sympy": AmbientPolynomial(q.n, sympy_coxeter(c)),
        }
        problems += [f"{name} via {r}" for r, p in routes.items() if p != expected]
    detail = "3 fixtures, 4 routes each" if not problems else "; ".join(problems)
    assert record("10 golden fixtures", not problems, detail)
