"""Exact algebra of the 4x4 field matrices and the flat-space solution generator.

The complex 3-vector form of the vacuum Maxwell equations is a single matrix
equation (-i d_0 + alpha^j d_j) Psi = 0 for the column Psi = (0, psi^1, psi^2,
psi^3) with psi = E + icB.  This module owns the alpha matrices, the so(3)
spin generators used by the curved-space extension, the symbol of the flat
operator, and the generator that turns one scalar wave-equation solution into
four matrix-Maxwell solutions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import WaveEquationViolated

Point = tuple[float, float, float, float]

# Finite-difference conventions used by every derivative check in this module.
FD_STEP = 1e-5
FD_RTOL = 1e-6

ALPHA0 = np.eye(4, dtype=complex)

ALPHA1 = np.array(
    [[0, 1, 0, 0],
     [-1, 0, 0, 0],
     [0, 0, 0, -1],
     [0, 0, 1, 0]], dtype=complex)

ALPHA2 = np.array(
    [[0, 0, 1, 0],
     [0, 0, 0, 1],
     [-1, 0, 0, 0],
     [0, -1, 0, 0]], dtype=complex)

ALPHA3 = np.array(
    [[0, 0, 0, 1],
     [0, 0, -1, 0],
     [0, 1, 0, 0],
     [-1, 0, 0, 0]], dtype=complex)

S1 = np.array(
    [[0, 0, 0, 0],
     [0, 0, 0, 0],
     [0, 0, 0, -1],
     [0, 0, 1, 0]], dtype=complex)

S2 = np.array(
    [[0, 0, 0, 0],
     [0, 0, 0, 1],
     [0, 0, 0, 0],
     [0, -1, 0, 0]], dtype=complex)

S3 = np.array(
    [[0, 0, 0, 0],
     [0, 0, -1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 0]], dtype=complex)


def alpha_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return fresh copies of (alpha^0, alpha^1, alpha^2, alpha^3)."""
    return ALPHA0.copy(), ALPHA1.copy(), ALPHA2.copy(), ALPHA3.copy()


def spin_generators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return fresh copies of the so(3) generators (s1, s2, s3)."""
    return S1.copy(), S2.copy(), S3.copy()


def flat_operator(weights: Sequence[complex]) -> np.ndarray:
    """Symbol of -i d_0 + alpha^j d_j with each d_a replaced by weights[a]."""
    w0, w1, w2, w3 = weights
    return -1j * w0 * ALPHA0 + w1 * ALPHA1 + w2 * ALPHA2 + w3 * ALPHA3


def flat_operator_conjugate(weights: Sequence[complex]) -> np.ndarray:
    """Symbol of the factor with flipped spatial signs, -i d_0 - alpha^j d_j."""
    w0, w1, w2, w3 = weights
    return flat_operator((w0, -w1, -w2, -w3))


# ---------------------------------------------------------------------------
# Re-derivation of the matrices from their defining constraints.  The spatial
# matrices are fixed templates with one free column; requiring the squares
# (alpha^i)^2 = -I over integer entries {-1, 0, 1} pins that column uniquely.
# ---------------------------------------------------------------------------

def _template(which: int, params: Sequence[int]) -> np.ndarray:
    p0, p1, p2, p3 = params
    if which == 0:
        m = [[p0, 0, 0, 0], [p1, 1, 0, 0], [p2, 0, 1, 0], [p3, 0, 0, 1]]
    elif which == 1:
        m = [[p0, 1, 0, 0], [p1, 0, 0, 0], [p2, 0, 0, -1], [p3, 0, 1, 0]]
    elif which == 2:
        m = [[p0, 0, 1, 0], [p1, 0, 0, 1], [p2, 0, 0, 0], [p3, -1, 0, 0]]
    elif which == 3:
        m = [[p0, 0, 0, 1], [p1, 0, -1, 0], [p2, 1, 0, 0], [p3, 0, 0, 0]]
    else:
        raise ValueError(which)
    return np.array(m, dtype=complex)


def derive_alpha_candidates() -> dict[int, list[np.ndarray]]:
    """Solve the square constraints by enumeration over {-1, 0, 1}^4.

    alpha^0 must square to +I and commute through every spatial matrix as
    the identity does; alpha^1..alpha^3 must square to -I.  Returns, per
    matrix index, every free-parameter choice that survives.
    """
    spatial_printed = (ALPHA1, ALPHA2, ALPHA3)
    found: dict[int, list[np.ndarray]] = {i: [] for i in range(4)}
    eye = np.eye(4)
    for params in itertools.product((-1, 0, 1), repeat=4):
        cand0 = _template(0, params)
        if np.array_equal(cand0 @ cand0, eye):
            if all(np.array_equal(cand0 @ a, a) and np.array_equal(a @ cand0, a)
                   for a in spatial_printed):
                found[0].append(cand0)
        for which in (1, 2, 3):
            cand = _template(which, params)
            if np.array_equal(cand @ cand, -eye):
                found[which].append(cand)
    return found


# ---------------------------------------------------------------------------
# Scalar seeds and the flat-space solution generator (four columns built from
# the first partials F_a of one wave-equation solution).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScalarSolution:
    """A scalar field Phi(t, x, y, z) together with its four first partials."""

    phi: Callable[[float, float, float, float], complex]
    grad: Callable[[float, float, float, float], np.ndarray]

    def gradient_fd_error(self, point: Point, h: float = FD_STEP) -> float:
        """Max relative deviation of grad from centered differences of phi."""
        analytic = np.asarray(self.grad(*point), dtype=complex)
        fd = np.empty(4, dtype=complex)
        for a in range(4):
            lo, hi = list(point), list(point)
            lo[a] -= h
            hi[a] += h
            fd[a] = (self.phi(*hi) - self.phi(*lo)) / (2 * h)
        scale = max(1.0, float(np.max(np.abs(analytic))))
        return float(np.max(np.abs(analytic - fd)) / scale)

    def wave_residual(self, point: Point, h: float = FD_STEP) -> float:
        """|box Phi| via centered differences of the partials (c = 1 units)."""
        box = 0.0 + 0.0j
        for a, sign in enumerate((1.0, -1.0, -1.0, -1.0)):
            lo, hi = list(point), list(point)
            lo[a] -= h
            hi[a] += h
            box += sign * (self.grad(*hi)[a] - self.grad(*lo)[a]) / (2 * h)
        return abs(box)


@dataclass(frozen=True)
class FieldColumn:
    """One state column: a scalar slot c0 and the complex 3-vector psi."""

    c0: complex
    psi: np.ndarray

    @classmethod
    def from_array(cls, column: np.ndarray) -> "FieldColumn":
        column = np.asarray(column, dtype=complex)
        return cls(complex(column[0]), column[1:].copy())

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.c0], self.psi))

    def is_physical(self, tol: float = 1e-9) -> bool:
        """Physical electromagnetic states carry nothing in the scalar slot."""
        scale = max(1.0, float(np.max(np.abs(self.psi))))
        return abs(self.c0) <= tol * scale


def scalar_to_maxwell(
    solution: ScalarSolution,
    check_points: Sequence[Point] | None = None,
    tol: float = FD_RTOL,
) -> tuple[Callable[[float, float, float, float], np.ndarray], ...]:
    """Build the four generated columns Psi^0..Psi^3 from a scalar seed.

    With F_a the partials of Phi, column a of the generated matrix is

        Psi^0 = ( iF0, -F1, -F2, -F3)
        Psi^1 = (  F1, iF0,  F3, -F2)
        Psi^2 = (  F2, -F3, iF0,  F1)
        Psi^3 = (  F3,  F2, -F1, iF0)

    Raises WaveEquationViolated unless box Phi vanishes (finite differences)
    at the supplied check points.  The raw columns generally have a nonzero
    scalar slot; combine them subject to the admissibility constraint and use
    FieldColumn.is_physical to test the result.
    """
    if check_points is None:
        rng = np.random.default_rng(20240901)
        check_points = [tuple(rng.uniform(-1.0, 1.0, size=4)) for _ in range(8)]
    for point in check_points:
        res = solution.wave_residual(point)
        if res > tol:
            raise WaveEquationViolated(
                f"box Phi residual {res:.3e} exceeds {tol:.1e} at {point}")

    def column(a: int) -> Callable[[float, float, float, float], np.ndarray]:
        def col(t: float, x: float, y: float, z: float) -> np.ndarray:
            f = np.asarray(solution.grad(t, x, y, z), dtype=complex)
            matrix = 1j * f[0] * ALPHA0 + f[1] * ALPHA1 + f[2] * ALPHA2 + f[3] * ALPHA3
            return matrix[:, a]
        return col

    return tuple(column(a) for a in range(4))


def maxwell_residual(
    column: Callable[[float, float, float, float], np.ndarray],
    point: Point,
    h: float = FD_STEP,
) -> float:
    """|(-i d_0 + alpha^j d_j) Psi| at a point, derivatives by central FD."""
    derivs = []
    for a in range(4):
        lo, hi = list(point), list(point)
        lo[a] -= h
        hi[a] += h
        derivs.append((np.asarray(column(*hi)) - np.asarray(column(*lo))) / (2 * h))
    res = -1j * derivs[0] + ALPHA1 @ derivs[1] + ALPHA2 @ derivs[2] + ALPHA3 @ derivs[3]
    return float(np.max(np.abs(res)))


def combination_residual(
    columns: Sequence[Callable[[float, float, float, float], np.ndarray]],
    lambdas: Sequence[complex],
    point: Point,
    h: float = FD_STEP,
) -> float:
    """Maxwell residual of the lambda-weighted combination of columns."""
    def combo(t, x, y, z):
        return sum(lam * np.asarray(col(t, x, y, z), dtype=complex)
                   for lam, col in zip(lambdas, columns))
    return maxwell_residual(combo, point, h)


def admissibility_residual(
    solution: ScalarSolution,
    lambdas: Sequence[complex],
    point: Point,
    h: float = FD_STEP,
) -> float:
    """|[-lambda_0 d_0 + i lambda_j d_j] F_c| maximised over c.

    Combinations whose weights annihilate every partial this way keep the
    scalar slot of the combined column identically zero.
    """
    worst = 0.0
    for c in range(4):
        acc = 0.0 + 0.0j
        for a, lam in enumerate(lambdas):
            coeff = -lam if a == 0 else 1j * lam
            lo, hi = list(point), list(point)
            lo[a] -= h
            hi[a] += h
            acc += coeff * (solution.grad(*hi)[c] - solution.grad(*lo)[c]) / (2 * h)
        worst = max(worst, abs(acc))
    return worst
