"""Separated radial systems and the G-pair decoupling transformation.

After the substitution Psi = exp(-i omega t + i m phi + i k z) (0, f1, f2,
f3), the matrix Maxwell equation separates into a four-row radial system in
which the second row is algebraic in f1, the last two rows propagate f2 and
f3, and the first (divergence) row is implied by the other three -- the
consistency identity.  With F2 = s f2, F3 = c f3 and the chart variable
y = s^2 (sign-flipped for the hyperbolic chart), a constant rotation of
(F2, F3) decouples the pair into single hypergeometric equations for G2 and
G3.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import geometry
from .errors import DegenerateElimination, InvalidQuantumNumbers, ZeroFrequency
from .geometry import GeometryContext, SpaceKind

SQRT2 = math.sqrt(2.0)
_K_INT_TOL = 1e-12


class Branch(enum.Enum):
    GENERAL = "general"
    M_ZERO = "m_zero"
    K_ZERO = "k_zero"
    SPECIAL = "special"


@dataclass(frozen=True)
class ModeSpec:
    """Quantum numbers of one electromagnetic mode."""

    space: SpaceKind
    omega: float
    m: int
    k: float | complex
    n: int | None = None
    branch: Branch = Branch.GENERAL

    def __post_init__(self):
        if not self.omega > 0:
            raise ZeroFrequency(f"omega={self.omega} must be positive")
        if self.m != int(self.m):
            raise InvalidQuantumNumbers(f"m={self.m} must be an integer")
        object.__setattr__(self, "m", int(self.m))
        if isinstance(self.k, complex) and self.k.imag != 0:
            if not (self.space is SpaceKind.HYPERBOLIC and self.branch is Branch.SPECIAL):
                raise InvalidQuantumNumbers(
                    "complex k is only admitted by the hyperbolic special branch")
        elif self.space in (SpaceKind.SPHERICAL, SpaceKind.ELLIPTIC):
            k_real = float(np.real(self.k))
            if abs(k_real - round(k_real)) > _K_INT_TOL:
                raise InvalidQuantumNumbers(
                    f"k={self.k} must be an integer on the compact charts")
            object.__setattr__(self, "k", int(round(k_real)))
            if self.space is SpaceKind.ELLIPTIC and (self.m - self.k) % 2 != 0:
                raise InvalidQuantumNumbers(
                    f"elliptic model needs m and k of equal parity, got ({self.m}, {self.k})")
        else:
            object.__setattr__(self, "k", float(np.real(self.k)))
        if self.n is not None and self.n < 0:
            raise InvalidQuantumNumbers(f"n={self.n} must be nonnegative")

    @property
    def context(self) -> GeometryContext:
        return geometry.context_for(self.space)


@dataclass(frozen=True)
class RadialState:
    r: float
    f: np.ndarray  # complex (f1, f2, f3)


@dataclass(frozen=True)
class GPair:
    y: float
    G2: complex
    G3: complex


def _chart(mode: ModeSpec, r):
    s, c = geometry.scale_factors(mode.context, r)
    g122, g313 = geometry.rotation_scalars(mode.context, r)
    return s, c, g122, g313


def f1_algebraic(mode: ModeSpec, r, f2, f3):
    """f1 from the algebraic row: -omega f1 = ik f2/c - im f3/s."""
    if mode.omega == 0:
        raise ZeroFrequency("algebraic f1 relation undefined at omega=0")
    s, c, _, _ = _chart(mode, r)
    return -(1j / mode.omega) * (mode.k * f2 / c - mode.m * f3 / s)


def f1_algebraic_derivative(mode: ModeSpec, r, f2, f3, df2, df3):
    """d/dr of the algebraic f1, given the f2/f3 samples and derivatives."""
    s, c, _, _ = _chart(mode, r)
    ds, dc = geometry.scale_factor_derivatives(mode.context, r)
    term_k = mode.k * (df2 / c - f2 * dc / c**2)
    term_m = mode.m * (df3 / s - f3 * ds / s**2)
    return -(1j / mode.omega) * (term_k - term_m)


def radial_rhs(mode: ModeSpec, r, f2, f3):
    """Explicit first-order form: (df2/dr, df3/dr, f1).

    Rows three and four of the separated system solved for the derivatives,
    with f1 taken from the algebraic row.
    """
    s, c, g122, g313 = _chart(mode, r)
    f1 = f1_algebraic(mode, r, f2, f3)
    df3 = g313 * f3 - mode.omega * f2 + 1j * mode.k * f1 / c
    df2 = -g122 * f2 + mode.omega * f3 + 1j * mode.m * f1 / s
    return df2, df3, f1


def rhs_state(mode: ModeSpec, state: RadialState):
    df2, df3, f1 = radial_rhs(mode, state.r, state.f[1], state.f[2])
    return df2, df3, f1


def system_residuals(mode: ModeSpec, r, f2, f3, df2, df3) -> np.ndarray:
    """Normalized residuals of all four separated rows, shape (4, N).

    Each row is |sum of terms| / max(1, |term|_max); f1 and its derivative
    come from the algebraic relation.
    """
    r = np.asarray(r, dtype=float)
    s, c, g122, g313 = _chart(mode, r)
    f1 = f1_algebraic(mode, r, f2, f3)
    df1 = f1_algebraic_derivative(mode, r, f2, f3, df2, df3)
    m, k, w = mode.m, mode.k, mode.omega

    rows = [
        (df1, (g122 - g313) * f1, 1j * m * f2 / s, 1j * k * f3 / c),
        (-w * f1, -1j * k * f2 / c, 1j * m * f3 / s),
        (-w * f2, -df3, g313 * f3, 1j * k * f1 / c),
        (-w * f3, df2, g122 * f2, -1j * m * f1 / s),
    ]
    out = np.empty((4,) + np.broadcast(r, f2).shape, dtype=float)
    for i, terms in enumerate(rows):
        terms = [np.broadcast_to(np.asarray(t, dtype=complex), out.shape[1:]) for t in terms]
        total = sum(terms)
        scale = np.maximum(1.0, np.max(np.abs(np.stack(terms)), axis=0))
        out[i] = np.abs(total) / scale
    return out


def consistency_residual(mode: ModeSpec, r, f2, f3, df2=None, df3=None):
    """Residual of the divergence row.

    With df2/df3 supplied this checks a candidate solution; without them the
    derivatives are substituted from the explicit first-order form, which
    turns the row into the pointwise identity 0 = 0 for arbitrary (f2, f3).
    """
    if df2 is None or df3 is None:
        df2, df3, _ = radial_rhs(mode, r, f2, f3)
    return system_residuals(mode, r, f2, f3, df2, df3)[0]


# ---------------------------------------------------------------------------
# G-pair decoupling.  Spherical chart: an orthogonal rotation by A = pi/4;
# hyperbolic chart: the unitary mixing with the same angle.
# ---------------------------------------------------------------------------

def to_gpair(mode: ModeSpec, F2, F3):
    """(G2, G3) from (F2, F3); inverse of from_gpair."""
    if mode.space is SpaceKind.HYPERBOLIC:
        return (F2 - 1j * F3) / SQRT2, (-1j * F2 + F3) / SQRT2
    return (F2 - F3) / SQRT2, (F2 + F3) / SQRT2


def from_gpair(mode: ModeSpec, G2, G3):
    """(F2, F3) from (G2, G3)."""
    if mode.space is SpaceKind.HYPERBOLIC:
        return (G2 + 1j * G3) / SQRT2, (1j * G2 + G3) / SQRT2
    return (G2 + G3) / SQRT2, (-G2 + G3) / SQRT2


def gpair_elimination_divisor(mode: ModeSpec, which: str) -> complex:
    """Divisor consumed when eliminating the other G-function."""
    m, k, w = mode.m, mode.k, mode.omega
    if mode.space is SpaceKind.HYPERBOLIC:
        return w * w + (m - 1j * k) ** 2 if which == "G2" else w * w + (m + 1j * k) ** 2
    return -(w * w) + (m - k) ** 2 if which == "G2" else w * w - (m + k) ** 2


def gpair_second_order_coeffs(mode: ModeSpec, which: str = "G2") -> Callable:
    """Coefficient functions (A, B, C) of A G'' + B G' + C G = 0.

    Spherical: in y = sin^2 r.  Hyperbolic: in the sign-flipped variable
    y = -sinh^2 r.  Raises DegenerateElimination when the elimination that
    produces the requested equation divides by zero.
    """
    if which not in ("G2", "G3"):
        raise ValueError(which)
    if abs(gpair_elimination_divisor(mode, which)) < 1e-12:
        raise DegenerateElimination(
            f"{which} elimination divisor vanishes for (m={mode.m}, k={mode.k}, "
            f"omega={mode.omega}); use a special-family constructor or integrate directly")
    m, k, w = mode.m, mode.k, mode.omega
    sign = +1.0 if which == "G2" else -1.0

    if mode.space is SpaceKind.HYPERBOLIC:
        def coeffs(y):
            y = np.asarray(y, dtype=complex)
            A = 4.0 * y * (1.0 - y)
            B = 4.0 * (1.0 - 2.0 * y)
            C = -(-sign * 2j * w + w * w + m * m / (y * (1.0 - y))
                  - (m * m + k * k) / (1.0 - y))
            return A, B, C
    else:
        def coeffs(y):
            y = np.asarray(y, dtype=complex)
            A = 4.0 * y * (1.0 - y)
            B = 4.0 * (1.0 - 2.0 * y)
            C = (sign * 2.0 * w + w * w - m * m / (y * (1.0 - y))
                 + (m * m - k * k) / (1.0 - y))
            return A, B, C

    return coeffs


def gpair_first_order_residuals(mode: ModeSpec, y, G2, G3, dG2, dG3) -> np.ndarray:
    """Normalized residuals of the decoupled first-order pair, shape (2, N).

    Spherical form (variable y = sin^2 r):
        2w G2' - P(y) G2 + [-w^2 + (m-k)^2]/(2y(1-y)) G3 = 0
        2w G3' + P(y) G3 + [ w^2 - (m+k)^2]/(2y(1-y)) G2 = 0
    with P = [-w^2 y + w^2 (1-y) + m^2 - k^2] / (2y(1-y)); hyperbolic form
    (variable y = sinh^2 r) analogously with the unitary mixing factors.
    """
    m, k, w = mode.m, mode.k, mode.omega
    y = np.asarray(y, dtype=complex)
    if mode.space is SpaceKind.HYPERBOLIC:
        denom = 2.0 * y * (1.0 + y)
        P = 1j * (w * w * y + w * w * (1.0 + y) - m * m - k * k) / denom
        rows = [
            (2 * w * dG2, -P * G2, (w * w + (m - 1j * k) ** 2) / denom * G3),
            (2 * w * dG3, +P * G3, (w * w + (m + 1j * k) ** 2) / denom * G2),
        ]
    else:
        denom = 2.0 * y * (1.0 - y)
        P = (-w * w * y + w * w * (1.0 - y) + m * m - k * k) / denom
        rows = [
            (2 * w * dG2, -P * G2, (-(w * w) + (m - k) ** 2) / denom * G3),
            (2 * w * dG3, +P * G3, (w * w - (m + k) ** 2) / denom * G2),
        ]
    out = np.empty((2,) + y.shape, dtype=float)
    for i, terms in enumerate(rows):
        terms = [np.broadcast_to(np.asarray(t, dtype=complex), y.shape) for t in terms]
        total = sum(terms)
        scale = np.maximum(1.0, np.max(np.abs(np.stack(terms)), axis=0))
        out[i] = np.abs(total) / scale
    return out
