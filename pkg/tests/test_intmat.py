import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxpoly import randgen
from coxpoly.errors import NotSquareZero, NotUnimodular, ParseError, SizeMismatch
from coxpoly.intmat import (
    IntMatrix,
    acampo_matrix_identity,
    bareiss_det,
    char_poly_det,
    char_poly_newton,
    congruence,
    coxeter_poly_of_matrix,
    coxeter_transformation,
    format_matrix,
    interpolate,
    inverse,
    is_nilpotent,
    is_square_zero,
    n1n2_sides,
    parse_matrix,
    poly_det,
)
from coxpoly.polyalg import AmbientPolynomial, is_palindromic

from conftest import matrices

M = IntMatrix.of
A2_EULER = M([[1, -1], [0, 1]])
C4 = M([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])


def P(*coeffs):
    return AmbientPolynomial.from_coeffs(list(coeffs))


def sympy_charpoly(m: IntMatrix):
    x = sympy.Symbol("x")
    return tuple(int(c) for c in sympy.Matrix(m.tolist()).charpoly(x).all_coeffs())


def sympy_coxeter(c: IntMatrix):
    x = sympy.Symbol("x")
    mat = sympy.Matrix(c.tolist())
    poly = sympy.Poly((x * mat + mat.T).det(), x)
    coeffs = [int(v) for v in poly.all_coeffs()]
    return tuple([0] * (c.size + 1 - len(coeffs)) + coeffs)


@pytest.mark.parametrize(
    "m, det",
    [(IntMatrix.identity(3), 1), (M([[1, 2], [3, 4]]), -2), (M([[1, 1], [2, 2]]), 0),
     (M([[0, 1], [1, 0]]), -1), (M([[0, 0, 1], [0, 1, 0], [1, 0, 0]]), -1)],
)
def test_bareiss_examples(m, det):
    assert bareiss_det(m) == det


@given(matrices(max_size=7, lo=-9, hi=9))
def test_bareiss_matches_sympy(m):
    assert bareiss_det(m) == sympy.Matrix(m.tolist()).det()


def test_bareiss_exact_on_large_entries():
    m = M([[10**30, 1], [1, 10**30]])
    assert bareiss_det(m) == 10**60 - 1


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=12))
def test_interpolate_recovers_integer_polynomials(coeffs):
    p = AmbientPolynomial(len(coeffs) - 1, tuple(coeffs))
    assert interpolate([p(t) for t in range(p.n + 1)]) == p


def test_interpolate_rejects_non_integer_polynomials():
    # x(x-1)/2 takes integer values but has rational coefficients
    with pytest.raises(AssertionError):
        interpolate([0, 0, 1])


@pytest.mark.parametrize("charpoly", [char_poly_newton, char_poly_det])
def test_char_poly_examples(charpoly):
    assert charpoly(IntMatrix.zeros(2)) == P(1, 0, 0)
    assert charpoly(M([[0, 1], [1, 0]])) == P(1, 0, -1)
    assert charpoly(C4) == P(1, 0, -4, 0, 0)
    assert charpoly(M([[2, 0], [0, 3]])) == P(1, -5, 6)
    assert charpoly(M([[7]])) == P(1, -7)


@given(matrices(max_size=8))
@settings(max_examples=150)
def test_newton_agrees_with_det(m):
    assert char_poly_newton(m) == char_poly_det(m)


@given(matrices(max_size=6))
def test_char_poly_matches_sympy(m):
    assert char_poly_newton(m).coeffs == sympy_charpoly(m)


def test_coxeter_poly_examples():
    assert coxeter_poly_of_matrix(IntMatrix.identity(2)) == P(1, 2, 1)
    assert coxeter_poly_of_matrix(A2_EULER) == P(1, 1, 1)


@given(matrices(max_size=6))
def test_coxeter_poly_matches_sympy_and_is_palindromic(c):
    phi = coxeter_poly_of_matrix(c)
    assert phi.coeffs == sympy_coxeter(c)
    assert is_palindromic(phi)
    assert coxeter_poly_of_matrix(c.T) == phi


def test_coxeter_transformation_examples():
    assert coxeter_transformation(IntMatrix.identity(2)) == -IntMatrix.identity(2)
    s = coxeter_transformation(A2_EULER)
    assert s == M([[0, -1], [1, -1]])
    assert char_poly_newton(s) == P(1, 1, 1) == coxeter_poly_of_matrix(A2_EULER)


def test_coxeter_transformation_needs_unimodular():
    with pytest.raises(NotUnimodular):
        coxeter_transformation(M([[2, 0], [0, 1]]))


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_coxeter_transformation_relation(n, rng):
    c = randgen.random_bounded_unimodular(rng, n)
    s = coxeter_transformation(c)
    assert c.T == -(c @ s)
    # phi_C = det(C) p_S
    assert coxeter_poly_of_matrix(c) == bareiss_det(c) * char_poly_newton(s)


def test_congruence_examples():
    c = M([[1, 2], [0, 3]])
    assert congruence(c, IntMatrix.identity(2)) == c
    p = M([[1, 1], [0, 2]])
    assert bareiss_det(congruence(c, p)) == bareiss_det(p) ** 2 * bareiss_det(c)
    with pytest.raises(SizeMismatch):
        congruence(c, IntMatrix.identity(3))


@given(matrices(max_size=5), matrices(max_size=5))
def test_congruence_scales_by_det_squared(c, p):
    if c.size != p.size:
        return
    phi = coxeter_poly_of_matrix(c)
    assert coxeter_poly_of_matrix(congruence(c, p)) == bareiss_det(p) ** 2 * phi


@given(matrices(max_size=6), st.randoms(use_true_random=False))
def test_unimodular_congruence_preserves_coxeter_poly(c, rng):
    p = randgen.random_unimodular(rng, c.size)
    assert coxeter_poly_of_matrix(congruence(c, p)) == coxeter_poly_of_matrix(c)


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_inverse_and_transpose_have_same_coxeter_poly(n, rng):
    c = randgen.random_bounded_unimodular(rng, n)
    phi = coxeter_poly_of_matrix(c)
    assert coxeter_poly_of_matrix(inverse(c)) == coxeter_poly_of_matrix(c.T) == phi
    p = randgen.random_unimodular(rng, n)
    s1 = coxeter_transformation(c)
    s2 = coxeter_transformation(congruence(c, p))
    assert char_poly_newton(s1) == char_poly_newton(s2)


def test_inverse():
    u = M([[2, 1], [1, 1]])
    assert inverse(u) @ u == IntMatrix.identity(2)
    with pytest.raises(NotUnimodular):
        inverse(M([[2, 0], [0, 2]]))


@pytest.mark.parametrize(
    "m, expected",
    [(IntMatrix.zeros(3), True), (M([[0, 1], [0, 0]]), True), (IntMatrix.identity(2), False)],
)
def test_is_square_zero(m, expected):
    assert is_square_zero(m) is expected


@given(st.integers(1, 6), st.randoms(use_true_random=False), st.integers(-10, 10))
def test_nilpotent_det_identity(n, rng, a):
    nmat = randgen.random_square_zero(rng, n)
    assert is_square_zero(nmat) and is_nilpotent(nmat)
    assert bareiss_det(IntMatrix.identity(n) - a * nmat) == 1


def test_strictly_upper_is_nilpotent():
    n = M([[0, 1, 5], [0, 0, 2], [0, 0, 0]])
    assert is_nilpotent(n) and not is_square_zero(n)
    assert bareiss_det(IntMatrix.identity(3) - 7 * n) == 1


def test_acampo_matrix_identity_examples():
    lhs, rhs = acampo_matrix_identity(IntMatrix.zeros(2))
    assert lhs == rhs == P(1, 0, 2, 0, 1)
    lhs, rhs = acampo_matrix_identity(M([[0, 1], [0, 0]]))
    assert lhs == rhs == P(1, 0, 1, 0, 1)
    with pytest.raises(NotSquareZero):
        acampo_matrix_identity(M([[0, 1], [1, 0]]))


@given(st.integers(1, 4), st.integers(0, 4), st.randoms(use_true_random=False))
def test_acampo_matrix_identity_on_blocks(k, l, rng):
    n = k + l
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        for j in range(k, n):
            rows[i][j] = rng.randint(-3, 3)
    lhs, rhs = acampo_matrix_identity(M(rows))
    assert lhs == rhs


@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_acampo_matrix_identity_on_conjugated_blocks(n, rng):
    lhs, rhs = acampo_matrix_identity(randgen.random_square_zero(rng, n))
    assert lhs == rhs


@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_n1n2_identity(n, rng):
    n1, n2 = randgen.random_square_zero(rng, n), randgen.random_square_zero(rng, n)
    lhs, rhs = n1n2_sides(n1, n2)
    assert lhs.ambient_degree == 2 * n
    assert lhs == rhs


def test_n1n2_with_sympy_oracle():
    rng = random.Random(5)
    x = sympy.Symbol("x")
    for n in range(1, 5):
        n1, n2 = randgen.random_square_zero(rng, n), randgen.random_square_zero(rng, n)
        a, b = sympy.Matrix(n1.tolist()), sympy.Matrix(n2.tolist())
        left = ((x**2 + 1) * sympy.eye(n) - x * a - x * b).det()
        lhs, rhs = n1n2_sides(n1, n2)
        for t in range(-3, 4):
            assert left.subs(x, t) == lhs(t) == rhs(t)


def test_n1n2_requires_square_zero():
    with pytest.raises(NotSquareZero):
        n1n2_sides(IntMatrix.identity(2), IntMatrix.zeros(2))


def test_two_sides_differ_without_square_zero():
    # N1 = [[0,1],[1,0]], N2 = 0: (x^2+1)^2 - x^2 versus (x^2+1)^2 - x^4
    n1 = [[0, 1], [1, 0]]
    lhs = poly_det(lambda t: [[(t * t + 1) * (i == j) - t * n1[i][j] for j in range(2)] for i in range(2)], 4)
    rhs = poly_det(lambda t: [[(t * t + 1) * (i == j) - t * t * n1[i][j] for j in range(2)] for i in range(2)], 4)
    assert lhs == P(1, 0, 1, 0, 1)
    assert rhs == P(0, 0, 2, 0, 1)


def test_matrix_text_format():
    m = M([[1, -2], [3, 4]])
    assert format_matrix(m) == "2\n1 -2\n3 4\n"
    assert parse_matrix(format_matrix(m)) == m
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix("2\n1 2\n3\n")
    with pytest.raises(ParseError):
        parse_matrix("2\n1 2\n")
