"""Cylindrical-chart geometry for the constant-curvature backgrounds.

All four backgrounds share the static diagonal line element

    dS^2 = dt^2 - dr^2 - s(r)^2 dphi^2 - c(r)^2 dz^2

with (s, c) = (sin, cos) on the sphere, (sinh, cosh) on hyperbolic space and
(r, 1) in the flat limit.  The elliptic model shares all local geometry with
the sphere and differs only in its z-range and mode filter.  Everything here
is computed at curvature radius 1; physical frequencies follow from the
documented rescaling omega_phys = (c/rho) * omega.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRange, SingularPoint

# Coordinate-singularity guard, in chart units.  cot r and tan r blow up at
# the chart ends; endpoints are handled analytically by the mode exponents,
# never numerically.
SINGULARITY_GUARD = 1e-8


class SpaceKind(enum.Enum):
    SPHERICAL = "s3"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "h3"
    FLAT = "flat"


def _ranges(kind: SpaceKind) -> tuple[tuple[float, float], tuple[float, float], tuple[float, float]]:
    if kind in (SpaceKind.SPHERICAL, SpaceKind.ELLIPTIC):
        z_half = math.pi / 2 if kind is SpaceKind.ELLIPTIC else math.pi
        return (0.0, math.pi / 2), (-math.pi, math.pi), (-z_half, z_half)
    return (0.0, math.inf), (0.0, 2 * math.pi), (-math.inf, math.inf)


@dataclass(frozen=True)
class GeometryContext:
    kind: SpaceKind
    curvature_radius: float = 1.0
    r_range: tuple[float, float] = field(init=False)
    phi_range: tuple[float, float] = field(init=False)
    z_range: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if self.curvature_radius <= 0:
            raise ValueError("curvature radius must be positive")
        r_rng, phi_rng, z_rng = _ranges(self.kind)
        object.__setattr__(self, "r_range", r_rng)
        object.__setattr__(self, "phi_range", phi_rng)
        object.__setattr__(self, "z_range", z_rng)

    @property
    def compact(self) -> bool:
        return self.kind in (SpaceKind.SPHERICAL, SpaceKind.ELLIPTIC)

    def validate_r(self, r: float, interior: bool = False) -> None:
        lo, hi = self.r_range
        if r < lo or r > hi:
            raise OutOfRange(f"r={r} outside chart range [{lo}, {hi}] of {self.kind.value}")
        if interior:
            if r - lo < SINGULARITY_GUARD or (math.isfinite(hi) and hi - r < SINGULARITY_GUARD):
                raise SingularPoint(f"r={r} within guard band of a chart singularity")

    def omega_physical(self, omega: float, light_speed: float = 1.0) -> float:
        """Dimensionless omega to physical angular frequency, omega * c / rho."""
        return omega * light_speed / self.curvature_radius


S3 = GeometryContext(SpaceKind.SPHERICAL)
ELLIPTIC = GeometryContext(SpaceKind.ELLIPTIC)
H3 = GeometryContext(SpaceKind.HYPERBOLIC)
FLAT = GeometryContext(SpaceKind.FLAT)

_CONTEXTS = {SpaceKind.SPHERICAL: S3, SpaceKind.ELLIPTIC: ELLIPTIC,
             SpaceKind.HYPERBOLIC: H3, SpaceKind.FLAT: FLAT}


def context_for(kind: SpaceKind) -> GeometryContext:
    return _CONTEXTS[kind]


def scale_factors(ctx: GeometryContext, r):
    """(s, c) with metric diag (1, -1, -s^2, -c^2)."""
    if ctx.kind in (SpaceKind.SPHERICAL, SpaceKind.ELLIPTIC):
        return np.sin(r), np.cos(r)
    if ctx.kind is SpaceKind.HYPERBOLIC:
        return np.sinh(r), np.cosh(r)
    return np.asarray(r, dtype=float), np.ones_like(np.asarray(r, dtype=float))


def scale_factor_derivatives(ctx: GeometryContext, r):
    """(ds/dr, dc/dr) matching scale_factors."""
    if ctx.kind in (SpaceKind.SPHERICAL, SpaceKind.ELLIPTIC):
        return np.cos(r), -np.sin(r)
    if ctx.kind is SpaceKind.HYPERBOLIC:
        return np.cosh(r), np.sinh(r)
    one = np.ones_like(np.asarray(r, dtype=float))
    return one, np.zeros_like(one)


def rotation_scalars(ctx: GeometryContext, r):
    """(gamma_122, gamma_313), the only nonzero rotation coefficients.

    gamma_122 = s'/s and gamma_313 = c'/c; the hyperbolic chart flips the
    sign of gamma_313 relative to the sphere (c' = sinh r vs -sin r).
    Vectorized over r; no singularity guard, callers stay interior.
    """
    s, c = scale_factors(ctx, r)
    ds, dc = scale_factor_derivatives(ctx, r)
    return ds / s, dc / c


def metric_diag(ctx: GeometryContext, r: float) -> np.ndarray:
    """Diagonal of the metric in coordinates (t, r, phi, z)."""
    ctx.validate_r(r)
    s, c = scale_factors(ctx, r)
    return np.array([1.0, -1.0, -s * s, -c * c])


def tetrad(ctx: GeometryContext, r: float) -> tuple[np.ndarray, np.ndarray]:
    """(e_(a)^beta, e_(a)beta) diagonal tetrad pair of the chart."""
    ctx.validate_r(r, interior=True)
    s, c = scale_factors(ctx, r)
    e_up = np.diag([1.0, 1.0, 1.0 / s, 1.0 / c])
    e_down = np.diag([1.0, -1.0, -s, -c])
    return e_up, e_down


@dataclass(frozen=True)
class ConnectionSample:
    """Nonzero connection data of the chart at one radius.

    christoffel holds the independent nonzero entries Gamma^k_{ij} (index
    order: upper, lower, lower); p2/p3 are the magnetic-type rotation-vector
    components (gamma_23a, gamma_31a, gamma_12a) for a = 2, 3.  Every
    electric-type v-vector vanishes identically for these static metrics.
    """

    r: float
    christoffel: dict[tuple[str, str, str], float]
    p2: tuple[float, float, float]
    p3: tuple[float, float, float]

    @property
    def gamma_122(self) -> float:
        return self.p2[2]

    @property
    def gamma_313(self) -> float:
        return self.p3[1]


def _connection(ctx: GeometryContext, r: float) -> ConnectionSample:
    ctx.validate_r(r, interior=True)
    s, c = scale_factors(ctx, r)
    ds, dc = scale_factor_derivatives(ctx, r)
    g122, g313 = rotation_scalars(ctx, r)
    christoffel = {
        ("r", "phi", "phi"): -s * ds,
        ("r", "z", "z"): -c * dc,
        ("phi", "r", "phi"): ds / s,
        ("z", "r", "z"): dc / c,
    }
    p2 = (0.0, 0.0, float(g122))
    p3 = (0.0, float(g313), 0.0)
    return ConnectionSample(r=r, christoffel=christoffel, p2=p2, p3=p3)


def christoffel(ctx: GeometryContext, r: float) -> ConnectionSample:
    """Closed-form Christoffel symbols (rotation vectors included)."""
    return _connection(ctx, r)


def ricci_rotation(ctx: GeometryContext, r: float) -> ConnectionSample:
    """Closed-form Ricci rotation data (Christoffel entries included)."""
    return _connection(ctx, r)


# ---------------------------------------------------------------------------
# Finite-difference oracles.  These recompute the connection from the metric
# and tetrad alone, so any sign slip in the closed forms shows up as a
# disagreement here and as a nonvanishing radial consistency residual.
# ---------------------------------------------------------------------------

def christoffel_fd(ctx: GeometryContext, r: float, h: float = 1e-6) -> np.ndarray:
    """Full Gamma^k_{ij} from 0.5 g^{kl}(d_i g_{jl} + d_j g_{il} - d_l g_{ij})."""
    ctx.validate_r(r, interior=True)
    g = np.diag(metric_diag(ctx, r))
    g_inv = np.diag(1.0 / np.diag(g))
    dg = np.zeros((4, 4, 4))  # dg[l, i, j] = d_l g_ij; only l = r is nonzero
    dg[1] = (np.diag(metric_diag(ctx, r + h)) - np.diag(metric_diag(ctx, r - h))) / (2 * h)
    gamma = np.zeros((4, 4, 4))
    for k in range(4):
        for i in range(4):
            for j in range(4):
                acc = 0.0
                for l in range(4):
                    acc += g_inv[k, l] * (dg[i, j, l] + dg[j, i, l] - dg[l, i, j])
                gamma[k, i, j] = 0.5 * acc
    return gamma


def rotation_coefficients_fd(ctx: GeometryContext, r: float, h: float = 1e-6) -> np.ndarray:
    """gamma_abc = e_(a)^beta e_(b)beta;alpha e^alpha_(c), all by differences.

    The covariant derivative uses the finite-difference Christoffel symbols,
    keeping the oracle fully independent of the closed forms.
    """
    ctx.validate_r(r, interior=True)
    e_up, e_down = tetrad(ctx, r)
    gamma_chr = christoffel_fd(ctx, r, h)
    de_down = (tetrad(ctx, r + h)[1] - tetrad(ctx, r - h)[1]) / (2 * h)
    # cov[b, beta, alpha] = d_alpha e_(b)beta - Gamma^sigma_{alpha beta} e_(b)sigma
    cov = np.zeros((4, 4, 4))
    for b in range(4):
        for beta in range(4):
            for alpha in range(4):
                val = de_down[b, beta] if alpha == 1 else 0.0
                for sigma in range(4):
                    val -= gamma_chr[sigma, alpha, beta] * e_down[b, sigma]
                cov[b, beta, alpha] = val
    return np.einsum("aB,bBA,cA->abc", e_up, cov, e_up)


def rotation_coefficients_closed(ctx: GeometryContext, r: float) -> np.ndarray:
    """Closed-form gamma_abc tensor (antisymmetric in its first two slots)."""
    sample = _connection(ctx, r)
    gamma = np.zeros((4, 4, 4))
    gamma[1, 2, 2] = sample.gamma_122
    gamma[2, 1, 2] = -sample.gamma_122
    gamma[3, 1, 3] = sample.gamma_313
    gamma[1, 3, 3] = -sample.gamma_313
    return gamma
