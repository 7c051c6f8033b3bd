"""Closed-form eigenvalue spectra of strong power graphs, a trigonometric
cubic solver, and an independent Jacobi eigenvalue oracle to compare against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .exactalg import IntMatrix, UnsupportedN
from .groups import CyclicGroup, GroupSpec, is_composite, is_prime, totient

__all__ = [
    "ClosedFormSpectrum",
    "SpectrumComparison",
    "ComplexRoots",
    "PrimeOrder",
    "NotComposite",
    "NonSymmetric",
    "NoConvergence",
    "CountMismatch",
    "solve_cubic_trig",
    "distance_spectrum_closed",
    "adjacency_spectrum_closed",
    "spectral_radius_distance",
    "spectral_radius_adjacency",
    "symmetric_eigenvalues",
    "compare_spectra",
    "spectrum_document",
]

MatrixLike = Union[IntMatrix, np.ndarray, Sequence[Sequence[float]]]

# arccos arguments are clamped only inside this band around [-1, 1]; larger
# excursions indicate a formula bug or genuinely complex roots, not noise
_ARCCOS_SLACK = 1e-12


class ComplexRoots(ArithmeticError):
    """The cubic does not have three real roots."""


class PrimeOrder(ValueError):
    """The distance spectrum closed form needs a connected graph, so a
    noncyclic group or a cyclic group of composite order."""


class NotComposite(ValueError):
    """Spectral-radius closed forms are stated for composite cyclic order."""


class NonSymmetric(ValueError):
    """The Jacobi oracle only accepts exactly symmetric input."""


class NoConvergence(RuntimeError):
    """Jacobi sweeps exhausted before the off-diagonal mass fell below tolerance."""


class CountMismatch(ValueError):
    """Closed-form and numeric spectra hold different numbers of eigenvalues."""


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Eigenvalues with multiplicities, sorted descending by value.

    theta is the arccos angle used by the cyclic composite formulas and is
    None for the complete-graph and prime cases.
    """

    entries: tuple[tuple[float, int], ...]
    theta: Optional[float]
    source: str

    def __post_init__(self):
        values = [v for v, _ in self.entries]
        assert all(a > b for a, b in zip(values, values[1:])), (
            f"spectrum values must be strictly descending, got {values}"
        )
        assert all(m >= 1 for _, m in self.entries), "multiplicities must be positive"

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[float]:
        """All eigenvalues expanded by multiplicity, descending."""
        out: list[float] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    def max_value(self) -> float:
        return self.entries[0][0]


@dataclass(frozen=True)
class SpectrumComparison:
    max_abs_deviation: float
    multiplicity_match: bool
    theta_in_range: bool


def _safe_arccos(value: float) -> float:
    if value > 1.0:
        if value > 1.0 + _ARCCOS_SLACK:
            raise ComplexRoots(f"cosine argument {value} exceeds 1 beyond tolerance")
        value = 1.0
    elif value < -1.0:
        if value < -1.0 - _ARCCOS_SLACK:
            raise ComplexRoots(f"cosine argument {value} is below -1 beyond tolerance")
        value = -1.0
    return math.acos(value)


def solve_cubic_trig(a2: float, a1: float, a0: float) -> tuple[float, float, float]:
    """All three real roots of x^3 + a2 x^2 + a1 x + a0, descending.

    Uses the depressed-cubic substitution x = y - a2/3 and the cosine
    triple-angle identity, then one Newton step per root.  Raises
    ComplexRoots when the depressed cubic has negative discriminant, i.e.
    fewer than three real roots.  Each returned root r satisfies
    |r^3 + a2 r^2 + a1 r + a0| <= 1e-9 * max(1, |a0|).
    """
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2**3 / 27.0 - a2 * a1 / 3.0 + a0
    if p >= 0.0:
        if p == 0.0 and q == 0.0:
            roots = [-a2 / 3.0] * 3
            return (roots[0], roots[1], roots[2])
        raise ComplexRoots(f"cubic ({a2}, {a1}, {a0}) has fewer than three real roots")
    magnitude = 2.0 * math.sqrt(-p / 3.0)
    theta = _safe_arccos(-4.0 * q / magnitude**3)
    shift = -a2 / 3.0
    roots = sorted(
        (magnitude * math.cos((theta - 2.0 * math.pi * k) / 3.0) + shift for k in range(3)),
        reverse=True,
    )

    def f(x: float) -> float:
        return ((x + a2) * x + a1) * x + a0

    polished = []
    for r in roots:
        derivative = (3.0 * r + 2.0 * a2) * r + a1
        if derivative != 0.0:
            r -= f(r) / derivative
        polished.append(r)
    budget = 1e-9 * max(1.0, abs(a0))
    assert all(abs(f(r)) <= budget for r in polished), (
        f"cubic residuals exceed {budget} for roots {polished}"
    )
    return (polished[0], polished[1], polished[2])


def _merge_entries(pairs: Sequence[tuple[float, int]]) -> tuple[tuple[float, int], ...]:
    merged: dict[float, int] = {}
    for value, mult in pairs:
        if mult > 0:
            merged[value] = merged.get(value, 0) + mult
    return tuple(sorted(merged.items(), key=lambda item: -item[0]))


def _complete_graph_entries(n: int) -> tuple[tuple[float, int], ...]:
    return ((float(n - 1), 1), (-1.0, n - 1))


def _cyclic_composite_roots(n: int, delta: int, cos_numerator: int) -> tuple[list[float], float]:
    """The three simple eigenvalues (n-3+2cos((theta+2k*pi)/3)*sqrt(delta))/3
    for k in {0, +1, -1}, together with theta = arccos(cos_numerator /
    (2*delta^(3/2)))."""
    theta = _safe_arccos(cos_numerator / (2.0 * math.sqrt(float(delta)) ** 3))
    root_term = math.sqrt(float(delta))
    roots = [
        (n - 3 + 2.0 * math.cos((theta + 2.0 * math.pi * k) / 3.0) * root_term) / 3.0
        for k in (0, 1, -1)
    ]
    return roots, theta


def distance_spectrum_closed(g: GroupSpec) -> ClosedFormSpectrum:
    """Closed-form distance spectrum of the strong power graph of g.

    Noncyclic groups give {n-1 once, -1 with multiplicity n-1}.  A cyclic
    group of composite order n gives -1 with multiplicity n-3 plus the three
    simple roots built from theta = arccos((2n^3 + 27 phi^2 + 27 phi) /
    (2 sqrt((n^2 + 9 phi)^3))).  Prime (and order < 4) cyclic groups are
    rejected: their strong power graphs are disconnected or too small.
    """
    n = g.order
    if not g.is_cyclic():
        return ClosedFormSpectrum(_complete_graph_entries(n), None, "distance-complete")
    if not is_composite(n):
        raise PrimeOrder(
            f"distance spectrum needs composite cyclic order, got {n}"
        )
    phi = totient(n)
    delta = n * n + 9 * phi
    roots, theta = _cyclic_composite_roots(n, delta, 2 * n**3 + 27 * phi * phi + 27 * phi)
    entries = _merge_entries([(r, 1) for r in roots] + [(-1.0, n - 3)])
    return ClosedFormSpectrum(entries, theta, "distance-cyclic-composite")


def adjacency_spectrum_closed(g: GroupSpec) -> ClosedFormSpectrum:
    """Closed-form adjacency spectrum of the strong power graph of g.

    Noncyclic groups give {n-1 once, -1 with multiplicity n-1}; cyclic prime
    order p gives {p-2 once, 0 once, -1 with multiplicity p-2}, which at
    p = 2 collapses to {0 twice}; cyclic composite order n gives -1 with
    multiplicity n-3 plus three simple roots with theta built from
    (2n^3 + 27 phi^2 + 27 phi - 36 n phi) / (2 sqrt((n^2 - 3 phi)^3)).
    """
    n = g.order
    if not g.is_cyclic():
        return ClosedFormSpectrum(_complete_graph_entries(n), None, "adjacency-complete")
    if n == 1:
        raise UnsupportedN("the adjacency closed form does not cover order 1")
    if is_prime(n):
        entries = _merge_entries([(float(n - 2), 1), (0.0, 1), (-1.0, n - 2)])
        return ClosedFormSpectrum(entries, None, "adjacency-prime")
    phi = totient(n)
    delta = n * n - 3 * phi
    roots, theta = _cyclic_composite_roots(
        n, delta, 2 * n**3 + 27 * phi * phi + 27 * phi - 36 * n * phi
    )
    entries = _merge_entries([(r, 1) for r in roots] + [(-1.0, n - 3)])
    return ClosedFormSpectrum(entries, theta, "adjacency-cyclic-composite")


def spectral_radius_distance(n: int) -> float:
    """Largest distance eigenvalue of the strong power graph of Z_n
    (composite n): the k = 0 cosine branch of the closed form."""
    if not is_composite(n):
        raise NotComposite(f"spectral radius closed form needs composite n, got {n}")
    return distance_spectrum_closed(CyclicGroup(n)).max_value()


def spectral_radius_adjacency(n: int) -> float:
    """Largest adjacency eigenvalue of the strong power graph of Z_n
    (composite n): the k = 0 cosine branch of the closed form."""
    if not is_composite(n):
        raise NotComposite(f"spectral radius closed form needs composite n, got {n}")
    return adjacency_spectrum_closed(CyclicGroup(n)).max_value()


def _as_array(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, IntMatrix):
        return np.array(matrix.rows, dtype=np.float64)
    arr = np.array(matrix, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {arr.shape}")
    return arr


def symmetric_eigenvalues(
    matrix: MatrixLike, tol: float = 1e-12, max_sweeps: int = 50
) -> list[float]:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    sorted descending.

    Input must be exactly symmetric (these matrices come from integers).
    Sweeps run until the off-diagonal Frobenius mass drops below
    tol * max(1, ||A||_F); the scaling keeps the stopping rule meaningful
    across matrix magnitudes, since absolute 1e-12 sits below float noise
    for the larger inputs.  Raises NoConvergence after max_sweeps sweeps.
    """
    a = _as_array(matrix)
    if not np.array_equal(a, a.T):
        raise NonSymmetric("matrix is not exactly symmetric")
    n = a.shape[0]
    if n == 1:
        return [float(a[0, 0])]
    scale = max(1.0, float(np.linalg.norm(a)))
    threshold = tol * scale
    skip = threshold / (10.0 * n)
    for _ in range(max_sweeps):
        if math.sqrt(2.0) * np.linalg.norm(np.triu(a, 1)) < threshold:
            return sorted((float(v) for v in a.diagonal()), reverse=True)
        for k in range(n - 1):
            for l in range(k + 1, n):
                akl = a[k, l]
                if abs(akl) <= skip:
                    continue
                tau = (a[l, l] - a[k, k]) / (2.0 * akl)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                row_k, row_l = a[k, :].copy(), a[l, :].copy()
                a[k, :] = c * row_k - s * row_l
                a[l, :] = s * row_k + c * row_l
                col_k, col_l = a[:, k].copy(), a[:, l].copy()
                a[:, k] = c * col_k - s * col_l
                a[:, l] = s * col_k + c * col_l
                a[k, l] = 0.0
                a[l, k] = 0.0
    if math.sqrt(2.0) * np.linalg.norm(np.triu(a, 1)) < threshold:
        return sorted((float(v) for v in a.diagonal()), reverse=True)
    raise NoConvergence(f"off-diagonal mass still above tolerance after {max_sweeps} sweeps")


def _cluster_sizes(values: Sequence[float], rel_tol: float) -> list[int]:
    if not values:
        return []
    sizes = [1]
    for previous, value in zip(values, values[1:]):
        if abs(previous - value) <= rel_tol * max(1.0, abs(previous)):
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sizes


def compare_spectra(
    closed: ClosedFormSpectrum, numeric: Sequence[float], cluster_tol: float = 1e-6
) -> SpectrumComparison:
    """Compare a closed-form spectrum against numeric eigenvalues.

    Both sides are paired greedily in descending order for the deviation;
    multiplicities match when clustering the numeric values at relative
    tolerance cluster_tol reproduces the closed-form multiplicities.  The
    theta flag checks 0 < theta < pi/2 and is True when theta is absent.
    """
    expanded = closed.values()
    if len(expanded) != len(numeric):
        raise CountMismatch(
            f"closed form has {len(expanded)} eigenvalues, numeric side has {len(numeric)}"
        )
    numeric_sorted = sorted((float(v) for v in numeric), reverse=True)
    deviation = max(
        (abs(c - v) for c, v in zip(expanded, numeric_sorted)), default=0.0
    )
    mult_match = _cluster_sizes(numeric_sorted, cluster_tol) == [m for _, m in closed.entries]
    theta_ok = closed.theta is None or 0.0 < closed.theta < math.pi / 2.0
    return SpectrumComparison(deviation, mult_match, theta_ok)


def spectrum_document(spectrum: ClosedFormSpectrum, n: int, matrix_kind: str) -> dict:
    """JSON-ready document for a closed-form spectrum."""
    return {
        "n": n,
        "matrix": matrix_kind,
        "theta_radians": spectrum.theta,
        "eigenvalues": [
            {"value": value, "multiplicity": mult} for value, mult in spectrum.entries
        ],
        "source": spectrum.source,
    }
