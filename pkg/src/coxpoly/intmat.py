"""Exact linear algebra over the integers.

There is a single determinant kernel, :func:`bareiss_det`.  Determinants of
matrices with polynomial entries (``x*C + C.T``, ``x*I - M`` and friends) are
obtained by evaluating at the integer nodes ``0, 1, ..., d`` and
interpolating back, where ``d`` bounds the degree.

Rows and columns are 0-based here; vertex ``i`` of a graph or quiver lives
in row/column ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .errors import NotSquareZero, NotUnimodular, ParseError, SizeMismatch
from .polyalg import AmbientPolynomial, is_palindromic, s_transform, t_transform

__all__ = [
    "IntMatrix",
    "bareiss_det",
    "interpolate",
    "poly_det",
    "char_poly_newton",
    "char_poly_det",
    "coxeter_poly_of_matrix",
    "coxeter_transformation",
    "congruence",
    "inverse",
    "is_square_zero",
    "is_nilpotent",
    "acampo_matrix_identity",
    "n1n2_sides",
    "parse_matrix",
    "format_matrix",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense square integer matrix, stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrix must have size >= 1")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(((0,) * n,) * n)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def _check(self, other):
        if other.size != self.size:
            raise SizeMismatch(f"sizes {self.size} and {other.size} differ")

    def __add__(self, other):
        self._check(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        self._check(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix(tuple(tuple(scalar * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows
            )
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = IntMatrix.identity(self.size)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.size))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __str__(self):
        return format_matrix(self)


def _bareiss(a: list[list[int]]) -> int:
    """Fraction-free elimination; destroys ``a``."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            # exact division is the Bareiss (Sylvester) identity
            if aik:
                rowi[k + 1 :] = [
                    (akk * x - aik * y) // prev for x, y in zip(rowi[k + 1 :], rowk[k + 1 :])
                ]
            elif akk != prev:
                rowi[k + 1 :] = [akk * x // prev for x in rowi[k + 1 :]]
        prev = akk
    return sign * a[n - 1][n - 1]


def bareiss_det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    rows = m.rows if isinstance(m, IntMatrix) else m
    return _bareiss([list(r) for r in rows])


@lru_cache(maxsize=None)
def _falling_to_monomial(d: int) -> tuple[tuple[int, ...], ...]:
    """Row ``k``: ascending monomial coefficients of ``x (x-1) ... (x-k+1)``."""
    rows = [(1,)]
    for k in range(1, d + 1):
        prev = rows[-1]
        cur = [0] * (k + 1)
        for i, c in enumerate(prev):
            cur[i + 1] += c
            cur[i] -= (k - 1) * c
        rows.append(tuple(cur))
    return tuple(rows)


def interpolate(values: Sequence[int]) -> AmbientPolynomial:
    """Integer polynomial of degree ``<= d`` through ``(t, values[t])``, ``t = 0..d``.

    Uses Newton's forward-difference form: ``f = sum_k (D^k f(0) / k!) x(x-1)...(x-k+1)``.
    The falling-factorial basis is related to monomials by an integer
    unitriangular change of basis, so ``f`` has integer coefficients exactly
    when every ``D^k f(0)`` is divisible by ``k!``.  That is asserted.
    """
    d = len(values) - 1
    diffs = list(values)
    newton = [diffs[0]]
    for k in range(1, d + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        q, r = divmod(diffs[0], factorial(k))
        assert r == 0, "interpolated coefficients are not integers"
        newton.append(q)
    basis = _falling_to_monomial(d)
    asc = [0] * (d + 1)
    for coef, row in zip(newton, basis):
        if coef:
            for i, b in enumerate(row):
                asc[i] += coef * b
    return AmbientPolynomial(d, tuple(reversed(asc)))


def poly_det(build: Callable[[int], Sequence[Sequence[int]]], degree: int) -> AmbientPolynomial:
    """Determinant of an integer-polynomial matrix via evaluation at ``0..degree``.

    ``build(t)`` returns the matrix evaluated at ``x = t``.
    """
    return interpolate([_bareiss([list(r) for r in build(t)]) for t in range(degree + 1)])


def char_poly_newton(m: IntMatrix) -> AmbientPolynomial:
    """``det(x I - M)`` from the power sums ``tr M**k`` via Newton's identities."""
    n = m.size
    traces = []
    power = m
    for k in range(1, n + 1):
        traces.append(power.trace())
        if k < n:
            power = power @ m
    c = [1]
    for k in range(1, n + 1):
        s = -sum(c[k - i] * traces[i - 1] for i in range(1, k + 1))
        q, r = divmod(s, k)
        assert r == 0, f"Newton recurrence not divisible at step {k}"
        c.append(q)
    return AmbientPolynomial(n, tuple(c))


def char_poly_det(m: IntMatrix) -> AmbientPolynomial:
    """``det(x I - M)`` by evaluation at ``0..n`` and interpolation."""
    n = m.size
    rows = m.rows

    def at(t):
        return [[(t if i == j else 0) - v for j, v in enumerate(r)] for i, r in enumerate(rows)]

    return poly_det(at, n)


def coxeter_poly_of_matrix(c: IntMatrix) -> AmbientPolynomial:
    """``det(x C + C^T)``; always palindromic in V_n."""
    n = c.size
    rows = c.rows
    cols = list(zip(*rows))

    def at(t):
        return [[t * a + b for a, b in zip(r, s)] for r, s in zip(rows, cols)]

    phi = poly_det(at, n)
    assert is_palindromic(phi), "Coxeter polynomial failed to be palindromic"
    return phi


def inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, exactly."""
    det = bareiss_det(m)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant is {det}, expected +1 or -1")
    n = m.size
    aug = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    out = [r[n:] for r in aug]
    assert all(v.denominator == 1 for r in out for v in r)
    return IntMatrix(tuple(tuple(int(v) for v in r) for r in out))


def coxeter_transformation(c: IntMatrix) -> IntMatrix:
    """``-C^{-1} C^T`` for unimodular ``C``; raises :class:`NotUnimodular` otherwise."""
    s = -(inverse(c) @ c.T)
    assert c.T == -(c @ s)
    return s


def congruence(c: IntMatrix, p: IntMatrix) -> IntMatrix:
    """``P C P^T``."""
    if c.size != p.size:
        raise SizeMismatch(f"C has size {c.size} but P has size {p.size}")
    return p @ c @ p.T


def is_square_zero(m: IntMatrix) -> bool:
    return (m @ m).is_zero()


def is_nilpotent(m: IntMatrix) -> bool:
    return (m ** m.size).is_zero()


def acampo_matrix_identity(n_mat: IntMatrix) -> tuple[AmbientPolynomial, AmbientPolynomial]:
    """``(S(phi_{I-N}), T(p_{N+N^T}))`` for a square-zero ``N``; the two agree."""
    if not is_square_zero(n_mat):
        raise NotSquareZero("N @ N is not the zero matrix")
    phi = coxeter_poly_of_matrix(IntMatrix.identity(n_mat.size) - n_mat)
    p_a = char_poly_newton(n_mat + n_mat.T)
    return s_transform(phi), t_transform(p_a)


def n1n2_sides(n1: IntMatrix, n2: IntMatrix) -> tuple[AmbientPolynomial, AmbientPolynomial]:
    """Both determinants of the two-nilpotent identity, as polynomials in V_2n.

    Left: ``det((x^2+1) I - x N1 - x N2)``.
    Right: ``det((x^2+1) I - x^2 N1 - N2)``.
    Each is sampled at ``2n + 1`` nodes and interpolated.
    """
    if n1.size != n2.size:
        raise SizeMismatch(f"sizes {n1.size} and {n2.size} differ")
    if not (is_square_zero(n1) and is_square_zero(n2)):
        raise NotSquareZero("both matrices must square to zero")
    n = n1.size
    a, b = n1.rows, n2.rows

    def lhs(t):
        d = t * t + 1
        return [[(d if i == j else 0) - t * u - t * v for j, (u, v) in enumerate(zip(r, s))]
                for i, (r, s) in enumerate(zip(a, b))]

    def rhs(t):
        d = t * t + 1
        return [[(d if i == j else 0) - t * t * u - v for j, (u, v) in enumerate(zip(r, s))]
                for i, (r, s) in enumerate(zip(a, b))]

    return poly_det(lhs, 2 * n), poly_det(rhs, 2 * n)


def format_matrix(m: IntMatrix) -> str:
    lines = [str(m.size)] + [" ".join(str(v) for v in r) for r in m.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``n`` on the first line followed by ``n`` rows of ``n`` integers."""
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, toks) for no, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise ParseError("empty matrix input")
    no, toks = lines[0]
    if len(toks) != 1:
        raise ParseError("first line must hold the size only", no)
    try:
        n = int(toks[0])
    except ValueError:
        raise ParseError(f"bad size {toks[0]!r}", no) from None
    if n < 1:
        raise ParseError(f"size must be >= 1, got {n}", no)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, got {len(body)}", body[-1][0] if body else no)
    rows = []
    for no, toks in body:
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, got {len(toks)}", no)
        try:
            rows.append(tuple(int(t) for t in toks))
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
    return IntMatrix(tuple(rows))
