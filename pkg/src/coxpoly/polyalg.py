"""Integer polynomials living in a fixed ambient space V_n.

A polynomial is stored together with the degree ``n`` of the space it is
considered in, because palindromicity depends on that choice: ``x`` is
palindromic in V_2 but not in V_1.  Coefficients are listed from the
highest power down, so ``coeffs[k]`` multiplies ``x**(n - k)``.

The two transforms

    S(p)(x) = p(x**2)
    T(p)(x) = x**n * p(x + 1/x)

both map V_n into V_2n.  A palindromic ``p`` is *represented* by the unique
``q`` in the even subspace U_n with ``S(p) == T(q)``; :func:`represent`
finds it by forward substitution on :func:`transfer_matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import NotPalindromic, ParseError

__all__ = [
    "AmbientPolynomial",
    "binom",
    "is_palindromic",
    "is_even_space",
    "s_transform",
    "t_transform",
    "transfer_matrix",
    "represent",
    "basis_dims",
    "parse_polynomial",
    "format_polynomial",
]


def binom(m: int, r: int) -> int:
    """Binomial coefficient, zero outside ``0 <= r <= m``."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


@dataclass(frozen=True)
class AmbientPolynomial:
    """An element of V_n with integer coefficients, highest power first."""

    ambient_degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.ambient_degree < 0:
            raise ValueError(f"ambient degree must be >= 0, got {self.ambient_degree}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.ambient_degree + 1:
            raise ValueError(
                f"V_{self.ambient_degree} needs {self.ambient_degree + 1} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], ambient_degree: int | None = None):
        """Build from a highest-first list, optionally padding to a larger space."""
        coeffs = list(coeffs)
        if ambient_degree is None:
            ambient_degree = len(coeffs) - 1
        pad = ambient_degree + 1 - len(coeffs)
        if pad < 0:
            if any(coeffs[:-pad]):
                raise ValueError(f"polynomial does not fit in V_{ambient_degree}")
            coeffs = coeffs[-pad:]
        return cls(ambient_degree, tuple([0] * max(pad, 0) + coeffs))

    @classmethod
    def from_powers(cls, powers: dict[int, int], ambient_degree: int):
        """Build from a mapping ``exponent -> coefficient``."""
        coeffs = [0] * (ambient_degree + 1)
        for e, c in powers.items():
            if not 0 <= e <= ambient_degree:
                raise ValueError(f"x^{e} does not lie in V_{ambient_degree}")
            coeffs[ambient_degree - e] += c
        return cls(ambient_degree, tuple(coeffs))

    @classmethod
    def zero(cls, ambient_degree: int):
        return cls(ambient_degree, (0,) * (ambient_degree + 1))

    @property
    def n(self) -> int:
        return self.ambient_degree

    def coefficient(self, power: int) -> int:
        """Coefficient of ``x**power`` (zero outside the ambient range)."""
        if 0 <= power <= self.ambient_degree:
            return self.coeffs[self.ambient_degree - power]
        return 0

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def _check_same_space(self, other):
        if not isinstance(other, AmbientPolynomial):
            return NotImplemented
        if other.ambient_degree != self.ambient_degree:
            raise ValueError(
                f"cannot combine V_{self.ambient_degree} with V_{other.ambient_degree}"
            )
        return None

    def __add__(self, other):
        if (bad := self._check_same_space(other)) is not None:
            return bad
        return AmbientPolynomial(
            self.ambient_degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if (bad := self._check_same_space(other)) is not None:
            return bad
        return AmbientPolynomial(
            self.ambient_degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return AmbientPolynomial(self.ambient_degree, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return AmbientPolynomial(self.ambient_degree, tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        return format_polynomial(self)


def is_palindromic(p: AmbientPolynomial) -> bool:
    """True iff ``p`` lies in W_n, i.e. its coefficients read the same both ways."""
    c = p.coeffs
    return c == c[::-1]


def is_even_space(p: AmbientPolynomial) -> bool:
    """True iff ``p`` lies in U_n: every odd-indexed coefficient vanishes."""
    return not any(p.coeffs[1::2])


def s_transform(p: AmbientPolynomial) -> AmbientPolynomial:
    """``p(x**2)`` as an element of V_2n."""
    out = [0] * (2 * p.ambient_degree + 1)
    out[::2] = p.coeffs
    return AmbientPolynomial(2 * p.ambient_degree, tuple(out))


def t_transform(p: AmbientPolynomial) -> AmbientPolynomial:
    """``x**n * p(x + 1/x)`` as an element of V_2n.

    ``p(x + 1/x)`` is expanded as a Laurent polynomial first; multiplying by
    ``x**n`` must clear every negative exponent.
    """
    n = p.ambient_degree
    laurent: dict[int, int] = {}
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        m = n - k
        # (x + 1/x)**m = sum_i binom(m, i) x**(m - 2i)
        for i in range(m + 1):
            e = m - 2 * i
            laurent[e] = laurent.get(e, 0) + c * comb(m, i)
    shifted = {e + n: c for e, c in laurent.items() if c}
    assert all(e >= 0 for e in shifted), "negative power left after multiplying by x^n"
    return AmbientPolynomial.from_powers(shifted, 2 * n)


def transfer_matrix(n: int) -> list[list[int]]:
    """Rows ``k``, columns ``j`` in ``0..n//2`` with entry ``binom(n - 2j, k - j)``.

    Row ``k`` expresses coefficient ``a_k`` of a palindromic polynomial in terms
    of the even coefficients ``c_0, c_2, ...`` of its representative.
    """
    h = n // 2
    return [[binom(n - 2 * j, k - j) for j in range(h + 1)] for k in range(h + 1)]


def represent(p: AmbientPolynomial) -> AmbientPolynomial:
    """The unique ``q`` in U_n with ``s_transform(p) == t_transform(q)``.

    Raises :class:`NotPalindromic` when ``p`` is outside W_n.
    """
    if not is_palindromic(p):
        raise NotPalindromic(f"{format_polynomial(p)} is not palindromic in V_{p.ambient_degree}")
    n = p.ambient_degree
    t = transfer_matrix(n)
    even: list[int] = []
    for k, row in enumerate(t):
        # unit diagonal: no division needed
        even.append(p.coeffs[k] - sum(row[j] * even[j] for j in range(k)))
    coeffs = [0] * (n + 1)
    coeffs[::2] = even
    q = AmbientPolynomial(n, tuple(coeffs))
    assert t_transform(q) == s_transform(p)
    return q


def _rank(rows: Iterable[Sequence[int]]) -> int:
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _constraint_dim(size: int, constraints: list[list[int]]) -> int:
    """Dimension of the solution space of ``constraints`` inside F^size."""
    if not constraints:
        return size
    return size - _rank(constraints)


def _unit(size, i):
    v = [0] * size
    v[i] = 1
    return v


def basis_dims(n: int) -> tuple[int, int, int]:
    """``(dim W_n, dim U_n, dim W_2n ∩ U_2n)`` computed from defining equations."""

    def palindrome_eqs(size):
        d = size - 1
        return [
            [a - b for a, b in zip(_unit(size, i), _unit(size, d - i))]
            for i in range(size)
            if i != d - i
        ]

    def even_eqs(size):
        return [_unit(size, i) for i in range(1, size, 2)]

    dim_w = _constraint_dim(n + 1, palindrome_eqs(n + 1))
    dim_u = _constraint_dim(n + 1, even_eqs(n + 1))
    dim_wu = _constraint_dim(2 * n + 1, palindrome_eqs(2 * n + 1) + even_eqs(2 * n + 1))
    return dim_w, dim_u, dim_wu


def format_polynomial(p: AmbientPolynomial) -> str:
    """Text form ``"n | c_0 c_1 ... c_n"``."""
    return f"{p.ambient_degree} | " + " ".join(str(c) for c in p.coeffs)


def parse_polynomial(text: str) -> AmbientPolynomial:
    """Inverse of :func:`format_polynomial`."""
    head, sep, body = text.strip().partition("|")
    if not sep:
        raise ParseError(f"expected 'n | coefficients', got {text.strip()!r}")
    try:
        n = int(head)
        coeffs = [int(tok) for tok in body.split()]
    except ValueError as exc:
        raise ParseError(f"bad integer in polynomial: {exc}") from None
    if n < 0 or len(coeffs) != n + 1:
        raise ParseError(f"V_{n} needs {n + 1} coefficients, got {len(coeffs)}")
    return AmbientPolynomial(n, tuple(coeffs))
