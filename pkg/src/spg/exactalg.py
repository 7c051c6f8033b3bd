"""Exact integer linear algebra: matrices, dense polynomials, characteristic
polynomials, and the closed-form polynomials they are checked against.

Everything here is exact: matrices and polynomials hold Python integers, and
every division performed by an algorithm is asserted to leave no remainder.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .groups import is_composite, is_prime, totient

__all__ = [
    "IntMatrix",
    "IntPolynomial",
    "PrimeOrTrivialN",
    "UnsupportedN",
    "NotPrime",
    "InexactDivision",
    "poly_mul",
    "poly_eval",
    "binom_power",
    "poly_div_exact",
    "charpoly",
    "bareiss_det",
    "permuted",
    "distance_charpoly_formula",
    "adjacency_charpoly_formula",
    "prime_adjacency_charpoly",
]

Scalar = Union[int, Fraction]


class PrimeOrTrivialN(ValueError):
    """The distance closed form needs a composite order of at least 4."""


class UnsupportedN(ValueError):
    """The adjacency closed form does not cover order 1."""


class NotPrime(ValueError):
    """The prime-order closed form needs a prime argument."""


class InexactDivision(ArithmeticError):
    """A polynomial division expected to be exact was not."""


class IntMatrix:
    """Immutable square matrix over arbitrary-precision integers."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError(f"entry ({i}, {j}) is {v!r}, expected an integer")
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def max_row_abs_sum(self) -> int:
        return max(sum(abs(v) for v in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix(n={self.n})"


class IntPolynomial:
    """Dense univariate polynomial over the integers, coefficients ascending.

    The zero polynomial is stored with an empty coefficient tuple; all other
    polynomials carry a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficient {c!r} is not an integer")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_coeff_strings(self) -> list[str]:
        """Decimal coefficient strings, ascending degree (exact at any size)."""
        if not self.coeffs:
            return ["0"]
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, items: Sequence[str]) -> "IntPolynomial":
        return cls([int(s) for s in items])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact polynomial product."""
    if not a.coeffs or not b.coeffs:
        return IntPolynomial([])
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return IntPolynomial(out)


def poly_eval(p: IntPolynomial, x: Scalar) -> Scalar:
    """Evaluate exactly at an integer or Fraction by Horner's rule."""
    result: Scalar = 0
    for c in reversed(p.coeffs):
        result = result * x + c
    return result


def binom_power(k: int) -> IntPolynomial:
    """(x + 1)^k via the Pascal row."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPolynomial([math.comb(k, i) for i in range(k + 1)])


def poly_div_exact(
    num: IntPolynomial, den: IntPolynomial
) -> tuple[Optional[IntPolynomial], bool]:
    """Long division over the rationals.

    Returns (quotient, True) when the remainder is zero and the quotient has
    integer coefficients, else (None, False).
    """
    if not den.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in num.coeffs]
    dlead = Fraction(den.coeffs[-1])
    ddeg = den.degree
    qdeg = len(rem) - 1 - ddeg
    if qdeg < 0:
        if not num.coeffs:
            return IntPolynomial([]), True
        return None, False
    quotient = [Fraction(0)] * (qdeg + 1)
    for shift in range(qdeg, -1, -1):
        factor = rem[shift + ddeg] / dlead
        quotient[shift] = factor
        if factor:
            for i, dc in enumerate(den.coeffs):
                rem[shift + i] -= factor * dc
    if any(rem) or any(q.denominator != 1 for q in quotient):
        return None, False
    return IntPolynomial([int(q) for q in quotient]), True


# --- characteristic polynomial ------------------------------------------------

_FLOAT_EXACT = 1 << 53  # dot products must stay below this for exact float math


def _prime_basis(n: int, bound: int) -> tuple[list[int], int]:
    """Descending primes p with n*(p-1)^2 < 2^53 whose product exceeds bound."""
    limit = math.isqrt((_FLOAT_EXACT - 1) // max(n, 1)) + 1
    primes: list[int] = []
    product = 1
    candidate = limit
    while product <= bound:
        candidate -= 1
        if candidate < 2:
            raise AssertionError("prime basis exhausted; matrix too large")
        if n * (candidate - 1) ** 2 >= _FLOAT_EXACT:
            continue
        if is_prime(candidate):
            primes.append(candidate)
            product *= candidate
    return primes, product


def _crt_signed(residues: Sequence[int], primes: Sequence[int], modulus: int) -> int:
    """Garner reconstruction into the symmetric range (-modulus/2, modulus/2]."""
    x, m = 0, 1
    for r, p in zip(residues, primes):
        t = ((r - x) * pow(m, -1, p)) % p
        x += t * m
        m *= p
    if 2 * x > modulus:
        x -= modulus
    return x


def _residue_stack(matrix: IntMatrix, primes: Sequence[int]) -> np.ndarray:
    """Matrix reduced modulo each prime, stacked along axis 0 as int64."""
    n = matrix.n
    flat_max = max((abs(v) for row in matrix.rows for v in row), default=0)
    pcol = np.array(primes, dtype=np.int64).reshape(-1, 1, 1)
    if flat_max < (1 << 62):
        base = np.array(matrix.rows, dtype=np.int64).reshape(1, n, n)
        return base % pcol
    # entries beyond int64: reduce in Python integers, prime by prime
    stack = np.empty((len(primes), n, n), dtype=np.int64)
    for k, p in enumerate(primes):
        stack[k] = [[v % p for v in row] for row in matrix.rows]
    return stack


def _trace_residues(x: np.ndarray, y: Optional[np.ndarray], pcol: np.ndarray) -> np.ndarray:
    """Residues of tr(X) or tr(X @ Y) without forming the product matrix.

    Row-wise dot products stay below n * p^2 < 2^53 < 2^63, so the int64
    accumulation is exact.
    """
    if y is None:
        diag = np.einsum("pii->p", x)
    else:
        row_dots = np.einsum("pik,pki->pi", x, y) % pcol[:, :, 0]
        diag = row_dots.sum(axis=1)
    return diag % pcol[:, 0, 0]


def charpoly(matrix: IntMatrix) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - M), monic of degree n.

    Runs the Faddeev-LeVerrier trace recurrence: with power sums
    s_j = tr(M^j), the coefficients follow from k * c_k = -(s_k +
    c_1 s_{k-1} + ... + c_{k-1} s_1), and every division by the step index
    k is exact over the integers (asserted at each step).

    The matrix powers that feed the traces are carried modulo a basis of
    word-size primes whose product provably exceeds 2 * n * norm^n, the
    largest possible |s_j|; each trace is reconstructed exactly by CRT
    before the division.  Products use float64 matrix multiplication, which
    is exact because every accumulated dot product stays below 2^53.
    """
    n = matrix.n
    norm = matrix.max_row_abs_sum()
    bound = 2 * n * max(1, norm) ** n
    primes, modulus = _prime_basis(n, bound)
    pcol = np.array(primes, dtype=np.int64).reshape(-1, 1, 1)

    base = _residue_stack(matrix, primes)
    base_f = base.astype(np.float64)
    trace_res: list[Optional[np.ndarray]] = [None] * (n + 1)
    trace_res[1] = _trace_residues(base, None, pcol)
    if n >= 2:
        trace_res[2] = _trace_residues(base, base, pcol)
    current, current_f = base, base_f
    j = 1
    while 2 * j + 1 <= n:
        nxt_f = np.matmul(current_f, base_f)
        nxt = nxt_f.astype(np.int64) % pcol
        trace_res[2 * j + 1] = _trace_residues(current, nxt, pcol)
        if 2 * (j + 1) <= n:
            trace_res[2 * (j + 1)] = _trace_residues(nxt, nxt, pcol)
        current = nxt
        current_f = nxt.astype(np.float64)
        j += 1

    power_sums = [0] * (n + 1)
    for k in range(1, n + 1):
        power_sums[k] = _crt_signed([int(r) for r in trace_res[k]], primes, modulus)

    coeffs = [1] + [0] * n  # coeffs[k] multiplies x^(n-k)
    for k in range(1, n + 1):
        s = power_sums[k] + sum(coeffs[i] * power_sums[k - i] for i in range(1, k))
        assert s % k == 0, f"inexact division by {k} in the trace recurrence"
        coeffs[k] = -(s // k)
    return IntPolynomial(list(reversed(coeffs)))


def bareiss_det(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Independent of charpoly; used to cross-check its constant coefficient.
    Every interior division is exact and asserted.
    """
    n = matrix.n
    a = [list(row) for row in matrix.rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                assert value % previous == 0, "inexact division in Bareiss elimination"
                a[i][j] = value // previous
            a[i][k] = 0
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def permuted(matrix: IntMatrix, order: Sequence[int]) -> IntMatrix:
    """Simultaneous row/column permutation: entry (i, j) of the result is
    matrix[order[i]][order[j]]."""
    if sorted(order) != list(range(matrix.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    return IntMatrix([[matrix.rows[i][j] for j in order] for i in order])


# --- closed-form polynomials ---------------------------------------------------


def distance_charpoly_formula(n: int) -> IntPolynomial:
    """Closed form of the distance characteristic polynomial of the strong
    power graph of Z_n, valid for composite n >= 4:
    (x+1)^(n-3) * (x^3 + (3-n)x^2 + (3-2n-3*phi)x - phi^2 - phi*(4-n) - n + 1).
    """
    if not is_composite(n):
        raise PrimeOrTrivialN(f"closed form needs a composite order >= 4, got {n}")
    phi = totient(n)
    cubic = IntPolynomial(
        [-(phi * phi) - phi * (4 - n) - n + 1, 3 - 2 * n - 3 * phi, 3 - n, 1]
    )
    return poly_mul(binom_power(n - 3), cubic)


def adjacency_charpoly_formula(n: int) -> IntPolynomial:
    """Closed form of the adjacency characteristic polynomial of the strong
    power graph of Z_n, for any order n >= 2:
    (x+1)^(n-3) * (x^3 + (3-n)x^2 + (3-2n+phi)x + (n-phi-1)(phi-1)).

    At n = 2 the exponent is negative; the cubic is divided exactly by
    (x+1), which yields x^2 and matches the edgeless two-vertex graph.
    Order 1 is rejected: the formula does not reduce to the true
    single-vertex characteristic polynomial x.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n == 1:
        raise UnsupportedN("the adjacency closed form does not cover order 1")
    phi = totient(n)
    cubic = IntPolynomial(
        [(n - phi - 1) * (phi - 1), 3 - 2 * n + phi, 3 - n, 1]
    )
    if n >= 3:
        return poly_mul(binom_power(n - 3), cubic)
    quotient, exact = poly_div_exact(cubic, IntPolynomial([1, 1]))
    if not exact:
        raise InexactDivision(f"(x+1) does not divide the n=2 cubic {cubic}")
    return quotient


def prime_adjacency_charpoly(p: int) -> IntPolynomial:
    """Adjacency characteristic polynomial for prime order: x(x+1)^(p-2)(x+2-p)."""
    if not is_prime(p):
        raise NotPrime(f"expected a prime order, got {p}")
    x = IntPolynomial([0, 1])
    return poly_mul(poly_mul(x, binom_power(p - 2)), IntPolynomial([2 - p, 1]))
