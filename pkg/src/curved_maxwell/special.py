"""Gauss hypergeometric 2F1 evaluation for the two regimes the modes need.

Terminating series (first parameter a nonpositive integer) are summed as
exact finite polynomials and are valid for any argument; everything else is
summed as a truncated power series on |y| < 1.  Arguments on the negative
real axis, which is where the hyperbolic chart lives (y = -sinh^2 r), are
reached through the standard argument mapping y -> y/(y-1), keeping the
series argument inside [0, 1).  No continuation past the |y| >= 1 cut is
attempted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import kernels
from .errors import ParameterPole, SeriesDiverged

INTEGER_TOL = 1e-12
MAX_TERMS = 100_000
SERIES_RTOL = 1e-16


def _nonpositive_integer_order(x: complex) -> int | None:
    """n >= 0 such that x is within INTEGER_TOL of -n, else None."""
    x = complex(x)
    if abs(x.imag) > INTEGER_TOL:
        return None
    n = round(x.real)
    if n > 0 or abs(x.real - n) > INTEGER_TOL:
        return None
    return -n


@dataclass(frozen=True)
class Hyp2F1Params:
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        if _nonpositive_integer_order(self.c) is not None:
            raise ParameterPole(f"c={self.c} is a nonpositive integer")

    @property
    def termination_order(self) -> int | None:
        """Smallest n with a or b equal to -n, if any (polynomial degree)."""
        orders = [o for o in (_nonpositive_integer_order(self.a),
                              _nonpositive_integer_order(self.b)) if o is not None]
        return min(orders) if orders else None

    @property
    def terminating(self) -> bool:
        return self.termination_order is not None

    def shifted(self, da: int, db: int, dc: int) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a + da, self.b + db, self.c + dc)


def _as_array(y):
    arr = np.atleast_1d(np.asarray(y, dtype=complex))
    scalar = np.isscalar(y) or getattr(y, "ndim", 1) == 0
    return arr, scalar


def _unpack(value, scalar):
    return complex(value[0]) if scalar else value


def hyp2f1_with_error(p: Hyp2F1Params, y):
    """(value, relative error estimate); error is 0 for terminating series."""
    arr, scalar = _as_array(y)
    n = p.termination_order
    if n is not None:
        vals = kernels.hyp2f1_poly(p.a, p.b, p.c, arr, n + 1)
        errs = np.zeros(arr.shape, dtype=float)
    else:
        if np.any(np.abs(arr) >= 1.0):
            raise SeriesDiverged(
                f"non-terminating series at |y| >= 1 (max |y| = {np.max(np.abs(arr)):.6g})")
        vals, errs, _, ok = kernels.hyp2f1_series(p.a, p.b, p.c, arr, MAX_TERMS, SERIES_RTOL)
        if not ok:
            raise SeriesDiverged(f"series did not converge within {MAX_TERMS} terms")
    return _unpack(vals, scalar), (float(errs[0]) if scalar else errs)


def hyp2f1(p: Hyp2F1Params, y):
    return hyp2f1_with_error(p, y)[0]


def hyp2f1_derivative(p: Hyp2F1Params, y):
    """d/dy F(a,b,c;y) = (ab/c) F(a+1, b+1, c+1; y)."""
    factor = p.a * p.b / p.c
    if factor == 0:
        arr, scalar = _as_array(y)
        return _unpack(np.zeros(arr.shape, dtype=complex), scalar)
    return factor * hyp2f1(p.shifted(1, 1, 1), y)


def hyp2f1_second_derivative(p: Hyp2F1Params, y):
    factor = p.a * p.b * (p.a + 1) * (p.b + 1) / (p.c * (p.c + 1))
    if factor == 0:
        arr, scalar = _as_array(y)
        return _unpack(np.zeros(arr.shape, dtype=complex), scalar)
    return factor * hyp2f1(p.shifted(2, 2, 2), y)


# ---------------------------------------------------------------------------
# Negative real arguments (hyperbolic chart).  F(a,b,c;y) =
# (1-y)^(-a) F(a, c-b, c; y/(y-1)); for y <= 0 the mapped argument lies in
# [0, 1) for every radius, so the plain series applies.
# ---------------------------------------------------------------------------

def hyp2f1_neg(p: Hyp2F1Params, y):
    arr, scalar = _as_array(y)
    if np.any(arr.real > 0) or np.any(np.abs(arr.imag) > 0):
        raise SeriesDiverged("negative-argument path requires y on (-inf, 0]")
    if p.terminating:
        return hyp2f1(p, y)
    mapped = Hyp2F1Params(p.a, p.c - p.b, p.c)
    u = arr / (arr - 1.0)
    vals = (1.0 - arr) ** (-p.a) * hyp2f1(mapped, u)
    return _unpack(vals, scalar)


def hyp2f1_neg_derivative(p: Hyp2F1Params, y):
    factor = p.a * p.b / p.c
    if factor == 0:
        arr, scalar = _as_array(y)
        return _unpack(np.zeros(arr.shape, dtype=complex), scalar)
    return factor * hyp2f1_neg(p.shifted(1, 1, 1), y)


def hyp2f1_neg_second_derivative(p: Hyp2F1Params, y):
    factor = p.a * p.b * (p.a + 1) * (p.b + 1) / (p.c * (p.c + 1))
    if factor == 0:
        arr, scalar = _as_array(y)
        return _unpack(np.zeros(arr.shape, dtype=complex), scalar)
    return factor * hyp2f1_neg(p.shifted(2, 2, 2), y)


def ode_residual(p: Hyp2F1Params, y) -> float:
    """Normalized residual of y(1-y)F'' + [c-(a+b+1)y]F' - abF at y."""
    f0 = hyp2f1(p, y)
    f1 = hyp2f1_derivative(p, y)
    f2 = hyp2f1_second_derivative(p, y)
    terms = np.array([y * (1 - y) * f2, (p.c - (p.a + p.b + 1) * y) * f1, -p.a * p.b * f0])
    scale = max(1.0, float(np.max(np.abs(terms))))
    return float(abs(terms.sum()) / scale)


def series_coefficients(p: Hyp2F1Params, nterms: int) -> np.ndarray:
    """First nterms Taylor coefficients of F(a,b,c;y) about y = 0."""
    coeffs = np.empty(nterms, dtype=complex)
    coeffs[0] = 1.0
    for j in range(nterms - 1):
        coeffs[j + 1] = coeffs[j] * (p.a + j) * (p.b + j) / ((p.c + j) * (1.0 + j))
    return coeffs
