"""Closed-form electromagnetic mode constructors and the frequency spectrum.

Spherical chart: the axially symmetric (m = 0) and planar (k = 0) families
reduce to a single scalar E(r) with two concomitant components; the general
(m, k) family is built from the decoupled G-pair in y = sin^2 r, carries the
frequency spectrum omega = 2n + |m| + |k|, and fixes the relative amplitude
of the pair from the first-order constraint at y = 0.  Hyperbolic chart:
the same machinery in the sign-flipped variable y = -sinh^2 r, with no
quantization of omega.  The elliptic model reuses the spherical modes,
filtered by the boundary-identification parity rule.

Every constructor returns profiles with analytic first derivatives plus an
evaluator for its own second-order radial equation, so verification never
relies on the construction path it is checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import geometry, radial, special
from .errors import (
    DegenerateElimination,
    InvalidBranch,
    InvalidQuantumNumbers,
)
from .geometry import SpaceKind
from .radial import Branch, ModeSpec
from .special import Hyp2F1Params

S3_WINDOW = (0.01, math.pi / 2 - 0.01)
H3_WINDOW = (0.05, 3.0)
H3_GENERAL_WINDOW = (0.05, 2.5)

_DEG_TOL = 1e-12


# ---------------------------------------------------------------------------
# Profile machinery
# ---------------------------------------------------------------------------

class _PowerHyp:
    """u(x) = scale * x^p (1-x)^q F(a,b,c;x) with two x-derivatives.

    negative_domain selects the mapped-argument evaluation used on the
    hyperbolic chart where x runs over (-inf, 0].  An explicit f_eval
    override may supply (F, F', F'') directly.
    """

    def __init__(self, p, q, params: Hyp2F1Params, scale=1.0,
                 negative_domain=False, f_eval=None):
        self.p = p
        self.q = q
        self.params = params
        self.scale = scale
        if f_eval is not None:
            self._f = f_eval
        elif negative_domain:
            self._f = lambda x: (special.hyp2f1_neg(params, x),
                                 special.hyp2f1_neg_derivative(params, x),
                                 special.hyp2f1_neg_second_derivative(params, x))
        else:
            self._f = lambda x: (special.hyp2f1(params, x),
                                 special.hyp2f1_derivative(params, x),
                                 special.hyp2f1_second_derivative(params, x))

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        p, q = self.p, self.q
        pref = x ** p * (1.0 - x) ** q
        lder = p / x - q / (1.0 - x)
        f0, f1, f2 = self._f(x)
        u = pref * f0
        du = pref * (lder * f0 + f1)
        d2u = pref * ((lder * lder - p / x ** 2 - q / (1.0 - x) ** 2) * f0
                      + 2.0 * lder * f1 + f2)
        return self.scale * u, self.scale * du, self.scale * d2u


def _zero_profile(x):
    x = np.asarray(x, dtype=complex)
    z = np.zeros_like(x)
    return z, z, z


def _chain(u, du_dx, d2u_dx2, xp, xpp):
    """x-derivatives to r-derivatives through x(r)."""
    return u, du_dx * xp, d2u_dx2 * xp * xp + du_dx * xpp


def _normalized_residual(terms):
    terms = [np.asarray(t, dtype=complex) for t in terms]
    total = sum(terms)
    scale = np.maximum(1.0, np.max(np.abs(np.stack(terms)), axis=0))
    return np.abs(total) / scale


@dataclass(frozen=True)
class ModeSolution:
    """One constructed mode: profiles, derivatives, and its own residual."""

    spec: ModeSpec
    convention: str
    r_window: tuple[float, float]
    amplitudes: tuple[complex, complex] | None
    _eval: Callable = field(repr=False)
    _resid2: Callable = field(repr=False)
    _E: Callable | None = field(repr=False, default=None)
    non_normalizable: bool = False

    def evaluate(self, r):
        """(f, df/dr), complex arrays of shape (3, N)."""
        return self._eval(np.atleast_1d(np.asarray(r, dtype=float)))

    def f_profile(self, r):
        return self.evaluate(r)[0]

    def df_profile(self, r):
        return self.evaluate(r)[1]

    def E_profile(self, r):
        if self._E is None:
            return None
        return self._E(np.atleast_1d(np.asarray(r, dtype=float)))

    def second_order_residual(self, r):
        """Normalized residual of the family's second-order radial equation."""
        return self._resid2(np.atleast_1d(np.asarray(r, dtype=float)))

    def first_order_residuals(self, r):
        f, df = self.evaluate(r)
        return radial.system_residuals(self.spec, np.atleast_1d(r), f[1], f[2], df[1], df[2])

    def consistency_residual(self, r):
        return self.first_order_residuals(r)[0]

    def default_grid(self, n: int = 256) -> np.ndarray:
        return np.linspace(self.r_window[0], self.r_window[1], n)


# ---------------------------------------------------------------------------
# E-based families (m = 0 and k = 0 on both charts)
# ---------------------------------------------------------------------------

def _e_mode(spec: ModeSpec, convention: str, window, e_eval, family: str,
            amplitudes=None, non_normalizable=False) -> ModeSolution:
    """Assemble (f1, f2, f3) from a scalar profile with two derivatives.

    family "m0": f2 carries E (f2 = E/s), family "k0": f3 carries it
    (f3 = E/c); the concomitants follow from the algebraic row and the
    respective derivative row of the separated system.
    """
    ctx = spec.context
    w, m, k = spec.omega, spec.m, spec.k

    def evaluate(r):
        s, c = geometry.scale_factors(ctx, r)
        ds, dc = geometry.scale_factor_derivatives(ctx, r)
        e0, e1, e2 = e_eval(r)
        sc = s * c
        dsc = ds * c + s * dc
        if family == "m0":
            f1 = (-1j * k / w) * e0 / sc
            f2 = e0 / s
            f3 = e1 / (w * s)
            df1 = (-1j * k / w) * (e1 * sc - e0 * dsc) / sc ** 2
            df2 = (e1 * s - e0 * ds) / s ** 2
            df3 = (e2 * s - e1 * ds) / (w * s ** 2)
        else:
            f1 = (1j * m / w) * e0 / sc
            f3 = e0 / c
            f2 = -e1 / (w * c)
            df1 = (1j * m / w) * (e1 * sc - e0 * dsc) / sc ** 2
            df3 = (e1 * c - e0 * dc) / c ** 2
            df2 = -(e2 * c - e1 * dc) / (w * c ** 2)
        return np.stack([f1, f2, f3]), np.stack([df1, df2, df3])

    def resid2(r):
        s, c = geometry.scale_factors(ctx, r)
        e0, e1, e2 = e_eval(r)
        if family == "m0":
            terms = (e2, -e1 / (s * c), (w * w - k * k / c ** 2) * e0)
        else:
            terms = (e2, e1 / (s * c), (w * w - m * m / s ** 2) * e0)
        return _normalized_residual(terms)

    return ModeSolution(spec=spec, convention=convention, r_window=window,
                        amplitudes=amplitudes, _eval=evaluate, _resid2=resid2,
                        _E=lambda r: e_eval(r)[0], non_normalizable=non_normalizable)


def construct_s3_m0(k: int, family: str = "special", n: int | None = None,
                    space: SpaceKind = SpaceKind.SPHERICAL) -> ModeSolution:
    """Axially symmetric spherical modes, E riding on f2.

    family "special": E = cos^|k| r at omega = |k|; "sin2cos": E =
    sin^2 r cos^|k| r at omega = |k| + 2; "hypergeometric": E =
    sin^2 r cos^|k| r F(-n, |k|+n+2, |k|+1; cos^2 r) at omega = |k|+2(n+1).
    """
    if k == 0 or k != int(k):
        raise InvalidQuantumNumbers("m=0 family needs a nonzero integer k (use construct_s3_k0)")
    k = int(k)
    kappa = abs(k)
    x_of = lambda r: np.cos(r) ** 2
    chain = lambda r: (-np.sin(2 * r), -2 * np.cos(2 * r))

    if family == "special":
        omega = float(kappa)
        profile = _PowerHyp(kappa / 2, 0.0, Hyp2F1Params(0, 1, 1))
        spec_n = 0
        tag = f"m0-special[E=cos^{kappa} r]"
    elif family in ("sin2cos", "hypergeometric"):
        if family == "sin2cos":
            n = 0
        if n is None or n < 0:
            raise InvalidQuantumNumbers("hypergeometric family needs n >= 0")
        omega = float(kappa + 2 * (n + 1))
        profile = _PowerHyp(kappa / 2, 1.0, Hyp2F1Params(-n, kappa + n + 2, kappa + 1))
        spec_n = n + 1
        tag = f"m0-hyper[x=cos^2 r, n={n}]"
    else:
        raise InvalidBranch(f"unknown m=0 family {family!r}")

    spec = ModeSpec(space, omega, 0, k, spec_n, Branch.M_ZERO)

    def e_eval(r):
        u, du, d2u = profile(x_of(r))
        xp, xpp = chain(r)
        return _chain(u, du, d2u, xp, xpp)

    return _e_mode(spec, tag, S3_WINDOW, e_eval, "m0")


def construct_s3_k0(m: int, family: str = "special", n: int | None = None,
                    space: SpaceKind = SpaceKind.SPHERICAL) -> ModeSolution:
    """Planar spherical modes (k = 0), the sin/cos mirror of construct_s3_m0."""
    if m == 0 or m != int(m):
        raise InvalidQuantumNumbers("k=0 family needs a nonzero integer m (use construct_s3_m0)")
    m = int(m)
    mu = abs(m)
    x_of = lambda r: np.sin(r) ** 2
    chain = lambda r: (np.sin(2 * r), 2 * np.cos(2 * r))

    if family == "special":
        omega = float(mu)
        profile = _PowerHyp(mu / 2, 0.0, Hyp2F1Params(0, 1, 1))
        spec_n = 0
        tag = f"k0-special[E=sin^{mu} r]"
    elif family in ("sin2cos", "hypergeometric"):
        if family == "sin2cos":
            n = 0
        if n is None or n < 0:
            raise InvalidQuantumNumbers("hypergeometric family needs n >= 0")
        omega = float(mu + 2 * (n + 1))
        profile = _PowerHyp(mu / 2, 1.0, Hyp2F1Params(-n, mu + n + 2, mu + 1))
        spec_n = n + 1
        tag = f"k0-hyper[x=sin^2 r, n={n}]"
    else:
        raise InvalidBranch(f"unknown k=0 family {family!r}")

    spec = ModeSpec(space, omega, m, 0, spec_n, Branch.K_ZERO)

    def e_eval(r):
        u, du, d2u = profile(x_of(r))
        xp, xpp = chain(r)
        return _chain(u, du, d2u, xp, xpp)

    return _e_mode(spec, tag, S3_WINDOW, e_eval, "k0")


# ---------------------------------------------------------------------------
# General families from the decoupled G-pair
# ---------------------------------------------------------------------------

def s3_amplitudes(m: int, k: int, n: int) -> tuple[float, float]:
    """Relative amplitudes (M2, M3) of the spherical pair, overall scale 1.

    Sign-split form of the y = 0 constraint; the shared factor between the
    two full quadratic expressions has been divided out.
    """
    w = 2 * n + abs(m) + abs(k)
    if m > 0:
        return float(w - k + m), float(-(w - k - m))
    if m < 0:
        return float(w + k - m), float(-(w + k + m))
    return 1.0, -1.0


def h3_amplitudes(m: int, k: float, omega: float) -> tuple[complex, complex]:
    """Relative amplitudes (M2, M3) of the hyperbolic pair, overall scale 1.

    Both follow from the first-order constraint between the pair evaluated
    at y = 0; the relation is rechecked at generic y by the test suite.
    """
    M2 = 1j * (m - 1j * (omega + k)) * (m + 1j * (omega - k))
    M3 = (abs(m) - 1j * (omega + k)) * (abs(m) - 1j * (omega - k))
    return M2, M3


def _s3_g_params(m: int, k: int, n: int):
    A = abs(m) / 2.0
    B = abs(k) / 2.0
    g2 = Hyp2F1Params(-n, n + 1 + abs(m) + abs(k), abs(m) + 1)
    g3 = Hyp2F1Params(-n + 1, n + abs(m) + abs(k), abs(m) + 1)
    return A, B, g2, g3


def _pfaff_terminating_eval(params: Hyp2F1Params, degree: int):
    """(F, F', F'') of F(a,b,c;x) via its terminating x/(x-1) image.

    Used when the direct series does not terminate but the mapped second
    parameter c - b is a nonpositive integer; the image is the polynomial
    P(u) of the given degree times (1-x)^(-a).
    """
    mapped = Hyp2F1Params(params.a, params.c - params.b, params.c)
    coeffs = special.series_coefficients(mapped, degree + 1)
    dcoeffs = coeffs[1:] * np.arange(1, degree + 1)
    d2coeffs = dcoeffs[1:] * np.arange(1, degree) if degree >= 2 else np.zeros(0, complex)
    a = params.a

    def f_eval(x):
        x = np.asarray(x, dtype=complex)
        u = x / (x - 1.0)
        du = -1.0 / (x - 1.0) ** 2
        d2u = 2.0 / (x - 1.0) ** 3
        P0 = np.polyval(coeffs[::-1], u)
        P1 = np.polyval(dcoeffs[::-1], u) if degree >= 1 else np.zeros_like(u)
        P2 = np.polyval(d2coeffs[::-1], u) if degree >= 2 else np.zeros_like(u)
        w0 = (1.0 - x) ** (-a)
        w1 = a * (1.0 - x) ** (-a - 1)
        w2 = a * (a + 1) * (1.0 - x) ** (-a - 2)
        f0 = w0 * P0
        f1 = w1 * P0 + w0 * P1 * du
        f2 = w2 * P0 + 2.0 * w1 * P1 * du + w0 * (P2 * du * du + P1 * d2u)
        return f0, f1, f2

    return f_eval


def _g_mode(spec: ModeSpec, convention: str, window,
            profile2: _PowerHyp | None, profile3: _PowerHyp | None,
            amplitudes) -> ModeSolution:
    """Assemble (f1, f2, f3) from the G-pair profiles in the chart variable."""
    ctx = spec.context
    hyperbolic = spec.space is SpaceKind.HYPERBOLIC
    w, m, k = spec.omega, spec.m, spec.k

    if hyperbolic:
        x_of = lambda r: -np.sinh(r) ** 2
        chain = lambda r: (-np.sinh(2 * r), -2 * np.cosh(2 * r))
    else:
        x_of = lambda r: np.sin(r) ** 2
        chain = lambda r: (np.sin(2 * r), 2 * np.cos(2 * r))

    p2 = profile2 if profile2 is not None else _zero_profile
    p3 = profile3 if profile3 is not None else _zero_profile

    def g_of_r(r):
        x = x_of(r)
        xp, xpp = chain(r)
        g2, dg2, _ = _chain(*p2(x), xp, xpp)
        g3, dg3, _ = _chain(*p3(x), xp, xpp)
        return g2, dg2, g3, dg3

    def evaluate(r):
        s, c = geometry.scale_factors(ctx, r)
        ds, dc = geometry.scale_factor_derivatives(ctx, r)
        g2, dg2, g3, dg3 = g_of_r(r)
        F2, F3 = radial.from_gpair(spec, g2, g3)
        dF2, dF3 = radial.from_gpair(spec, dg2, dg3)
        sc = s * c
        dsc = ds * c + s * dc
        f2 = F2 / s
        f3 = F3 / c
        f1 = -1j * (k * F2 - m * F3) / (w * sc)
        df2 = (dF2 * s - F2 * ds) / s ** 2
        df3 = (dF3 * c - F3 * dc) / c ** 2
        df1 = -1j * ((k * dF2 - m * dF3) * sc - (k * F2 - m * F3) * dsc) / (w * sc ** 2)
        return np.stack([f1, f2, f3]), np.stack([df1, df2, df3])

    def resid2(r):
        x = x_of(r)
        out = np.zeros(np.shape(x), dtype=float)
        for which, prof in (("G2", profile2), ("G3", profile3)):
            if prof is None:
                continue
            coeffs = radial.gpair_second_order_coeffs(spec, which)
            A, B, C = coeffs(x)
            u, du, d2u = prof(x)
            out = np.maximum(out, _normalized_residual((A * d2u, B * du, C * u)))
        return out

    return ModeSolution(spec=spec, convention=convention, r_window=window,
                        amplitudes=amplitudes, _eval=evaluate, _resid2=resid2)


def construct_s3_general(m: int, k: int, n: int,
                         space: SpaceKind = SpaceKind.SPHERICAL) -> ModeSolution:
    """General spherical mode at omega = 2n + |m| + |k| from the G-pair.

    At n = 0 the pair degenerates: with m k > 0 the mode lives entirely in
    G2, with m k < 0 the companion G3 is forced (outer-irregular); with
    m = 0 or k = 0 the amplitude constraint collapses to 0/0 and the
    special families must be used instead.
    """
    m, k = int(m), int(k)
    if n < 0:
        raise InvalidQuantumNumbers("n must be nonnegative")
    omega = 2 * n + abs(m) + abs(k)
    if omega == 0:
        raise InvalidQuantumNumbers("omega=0 excluded")
    if n == 0 and (m == 0 or k == 0):
        raise DegenerateElimination(
            "amplitude constraint is 0/0 at n=0 with m=0 or k=0; "
            "use construct_s3_m0 / construct_s3_k0")
    spec = ModeSpec(space, float(omega), m, k, n, Branch.GENERAL)
    A, B, g2p, g3p = _s3_g_params(m, k, n)
    M2, M3 = s3_amplitudes(m, k, n)

    profile2 = _PowerHyp(A, B, g2p, scale=M2) if M2 != 0 else None
    if M3 == 0:
        profile3 = None
    elif n == 0:
        # G3's series does not terminate at n=0 but its argument-mapped image
        # is a polynomial of degree |k|-1; evaluate that exactly.
        profile3 = _PowerHyp(A, B, g3p, scale=M3,
                             f_eval=_pfaff_terminating_eval(g3p, abs(k) - 1))
    else:
        profile3 = _PowerHyp(A, B, g3p, scale=M3)

    return _g_mode(spec, f"general[y=sin^2 r, n={n}]", S3_WINDOW,
                   profile2, profile3, (M2, M3))


def construct_s3(m: int, k: int, n: int,
                 space: SpaceKind = SpaceKind.SPHERICAL) -> ModeSolution:
    """Canonical spherical constructor: special families when m or k is 0."""
    if m == 0 and k == 0:
        if n == 0:
            raise InvalidQuantumNumbers("omega=0 excluded")
        return construct_s3_general(0, 0, n, space)
    if m == 0:
        if n == 0:
            return construct_s3_m0(k, "special", space=space)
        return construct_s3_m0(k, "hypergeometric", n=n - 1, space=space)
    if k == 0:
        if n == 0:
            return construct_s3_k0(m, "special", space=space)
        return construct_s3_k0(m, "hypergeometric", n=n - 1, space=space)
    return construct_s3_general(m, k, n, space)


# ---------------------------------------------------------------------------
# Hyperbolic constructors
# ---------------------------------------------------------------------------

def construct_h3_m0(omega: float, branch: str = "hypergeometric",
                    k: float | None = None, variant: str = "+") -> ModeSolution:
    """Axially symmetric hyperbolic modes.

    branch "oscillating" (k^2 = omega^2): E = cos or sin of omega*ln cosh r
    (variant "cos"/"sin"); branch "exact": E = sinh^2 r cosh^B r with
    B = -2 +/- i omega and complex axial number k = iB, tagged
    non-normalizable for the growing exp(+-2z) factor; branch
    "hypergeometric" (real k): the flipped-variable solution with
    sinh^2 r cosh^(+-ik) r behavior, variant choosing the exponent sign.
    """
    if omega <= 0:
        raise InvalidQuantumNumbers("omega must be positive")

    if branch == "oscillating":
        if variant not in ("cos", "sin"):
            raise InvalidBranch("oscillating variant must be 'cos' or 'sin'")
        if k is None:
            k = omega
        if abs(abs(k) - omega) > _DEG_TOL:
            raise InvalidQuantumNumbers("oscillating branch requires k^2 = omega^2")
        spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, 0, float(k), None, Branch.M_ZERO)
        trig, dtrig = (np.cos, lambda u: -np.sin(u)) if variant == "cos" else (np.sin, np.cos)

        def e_eval(r):
            L = np.log(np.cosh(r))
            t = np.tanh(r)
            sech2 = 1.0 - t * t
            e0 = trig(omega * L).astype(complex)
            e1 = omega * dtrig(omega * L) * t
            e2 = -omega * omega * trig(omega * L) * t * t + omega * dtrig(omega * L) * sech2
            return e0, e1.astype(complex), e2.astype(complex)

        return _e_mode(spec, f"h3-m0-oscillating[{variant}]", H3_WINDOW, e_eval, "m0")

    if branch == "exact":
        if variant not in ("+", "-"):
            raise InvalidBranch("exact variant must be '+' or '-'")
        B = -2.0 + 1j * omega if variant == "+" else -2.0 - 1j * omega
        k_c = 1j * B if k is None else complex(k)
        if abs(k_c * k_c + B * B) > 1e-9:
            raise InvalidQuantumNumbers("exact branch requires k = +-iB")
        spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, 0, k_c, None, Branch.SPECIAL)
        profile = _PowerHyp(1.0, B / 2.0, Hyp2F1Params(0, 1, 1), negative_domain=True)

        def e_eval(r):
            x = -np.sinh(r) ** 2
            return _chain(*profile(x), -np.sinh(2 * r), -2 * np.cosh(2 * r))

        return _e_mode(spec, f"h3-m0-exact[B=-2{variant}i*omega]", H3_WINDOW,
                       e_eval, "m0", non_normalizable=True)

    if branch == "hypergeometric":
        if k is None:
            raise InvalidQuantumNumbers("hypergeometric branch needs a real k")
        if variant not in ("+", "-"):
            raise InvalidBranch("hypergeometric variant must be '+' or '-'")
        B = 1j * abs(k) if variant == "+" else -1j * abs(k)
        spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, 0, float(k), None, Branch.M_ZERO)
        params = Hyp2F1Params((B + 2 - 1j * omega) / 2, (B + 2 + 1j * omega) / 2, 2)
        profile = _PowerHyp(1.0, B / 2.0, params, negative_domain=True)

        def e_eval(r):
            x = -np.sinh(r) ** 2
            return _chain(*profile(x), -np.sinh(2 * r), -2 * np.cosh(2 * r))

        return _e_mode(spec, f"h3-m0-hyper[y=-sinh^2 r, B={variant}i|k|]",
                       H3_WINDOW, e_eval, "m0")

    raise InvalidBranch(f"unknown hyperbolic m=0 branch {branch!r}")


def construct_h3_k0(m: int, omega: float, b: int = 0) -> ModeSolution:
    """Planar hyperbolic modes (k = 0), E = y^(|m|/2) (1-y)^b F in y = -sinh^2 r.

    b in {0, 1} label the two printed parameter choices; they are the same
    function up to the Euler identity, which the tests confirm.
    """
    if m == 0 or m != int(m):
        raise InvalidQuantumNumbers("k=0 family needs a nonzero integer m")
    if b not in (0, 1):
        raise InvalidQuantumNumbers("b must be 0 or 1")
    if omega <= 0:
        raise InvalidQuantumNumbers("omega must be positive")
    m = int(m)
    a = abs(m) / 2.0
    spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, m, 0.0, None, Branch.K_ZERO)
    params = Hyp2F1Params(a + b - 1j * omega / 2, a + b + 1j * omega / 2, 1 + 2 * a)
    profile = _PowerHyp(a, float(b), params, negative_domain=True)

    def e_eval(r):
        x = -np.sinh(r) ** 2
        return _chain(*profile(x), -np.sinh(2 * r), -2 * np.cosh(2 * r))

    return _e_mode(spec, f"h3-k0-hyper[y=-sinh^2 r, b={b}]", H3_WINDOW,
                   e_eval, "k0", amplitudes=None)


def _h3_g_params(m: int, k: float, omega: float):
    A = abs(m) / 2.0
    B = abs(k) / (2.0 * 1j)
    g2 = Hyp2F1Params(A + B - 1j * omega / 2, A + B + 1 + 1j * omega / 2, abs(m) + 1)
    g3 = Hyp2F1Params(g2.a + 1, g2.b - 1, g2.c)
    return A, B, g2, g3


def construct_h3_general(m: int, k: float, omega: float) -> ModeSolution:
    """General hyperbolic mode at arbitrary positive omega (no quantization)."""
    if omega <= 0:
        raise InvalidQuantumNumbers("omega must be positive")
    m = int(m)
    k = float(k)
    if m == 0 and abs(omega - abs(k)) < _DEG_TOL:
        raise DegenerateElimination(
            "elimination divisors omega^2 + (m -+ ik)^2 vanish at m=0, omega=|k|; "
            "use construct_h3_m0(branch='oscillating')")
    spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, m, k, None, Branch.GENERAL)
    A, B, g2p, g3p = _h3_g_params(m, k, omega)
    M2, M3 = h3_amplitudes(m, k, omega)
    profile2 = _PowerHyp(A, B, g2p, scale=M2, negative_domain=True)
    profile3 = _PowerHyp(A, B, g3p, scale=M3, negative_domain=True)
    return _g_mode(spec, "h3-general[y=-sinh^2 r]", H3_GENERAL_WINDOW,
                   profile2, profile3, (M2, M3))


# ---------------------------------------------------------------------------
# Spectrum and the elliptic filter
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumEntry:
    omega: float
    m: int
    k: int
    n: int
    family: str


def spectrum_s3(m_max: int, k_max: int, n_max: int) -> list[SpectrumEntry]:
    """Enumerate omega = 2n + |m| + |k| over 0 <= m <= m_max, 0 <= k <= k_max.

    Zero-frequency entries are excluded; rows are sorted by (omega, k, m, n).
    """
    if m_max < 0 or k_max < 0 or n_max < 0:
        raise InvalidQuantumNumbers("bounds must be nonnegative")
    entries = []
    for m in range(m_max + 1):
        for k in range(k_max + 1):
            for n in range(n_max + 1):
                omega = 2 * n + m + k
                if omega == 0:
                    continue
                if m == 0 and k != 0:
                    family = "MZeroSpecial"
                elif k == 0 and m != 0:
                    family = "KZeroSpecial"
                else:
                    family = "General"
                entries.append(SpectrumEntry(float(omega), m, k, n, family))
    return sorted(entries, key=lambda e: (e.omega, e.k, e.m, e.n))


@dataclass(frozen=True)
class FilterDecision:
    accept: bool
    reason: str


def elliptic_filter(m: int, k: int) -> FilterDecision:
    """Single-valuedness on the elliptic model: m and k of equal parity.

    The rule comes from identifying the triple boundary points of the
    fundamental region, which forces (k - m) and (k + m) to be even;
    equivalently the frequency 2n + |m| + |k| is even.
    """
    if (m - k) % 2 == 0:
        return FilterDecision(True, "boundary identifications consistent; omega even")
    return FilterDecision(
        False,
        f"triple-point identification (1,1',1'') violated: k-m={k - m} and "
        f"k+m={k + m} must both be even")


# ---------------------------------------------------------------------------
# Amplitude-constraint checks
# ---------------------------------------------------------------------------

def s3_amplitude_identity_y0(m: int, k: int, n: int) -> tuple[int, int]:
    """Both sides of the y = 0 amplitude constraint, exact integers.

    Returns (lhs, rhs) of M3 [(m-k)^2 - w^2] = M2 [w^2 - 2w|m| + m^2 - k^2].
    """
    w = 2 * n + abs(m) + abs(k)
    M2, M3 = (int(a) for a in s3_amplitudes(m, k, n))
    lhs = M3 * ((m - k) ** 2 - w * w)
    rhs = M2 * (w * w - 2 * w * abs(m) + m * m - k * k)
    return lhs, rhs


def h3_amplitude_identity_y0(m: int, k: float, omega: float) -> float:
    """Normalized residual of the y = 0 constraint for the hyperbolic pair."""
    M2, M3 = h3_amplitudes(m, k, omega)
    lhs = M3 * ((m - 1j * k) ** 2 + omega ** 2)
    rhs = M2 * (-2 * omega * abs(m) + 1j * (omega ** 2 - m * m - k * k))
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _pair_relation_residual(spec_mode: ModeSpec, A, B, g2p, g3p, M2, M3, y) -> float:
    """Residual of the first-order pair constraint at generic y.

    G3 * divisor = -4wy(1-y) G2' + (phase)[m^2 - k^2 + w^2(1-2y)] G2 with the
    chart-appropriate divisor and phase; both G built from the printed forms
    with the given amplitudes.
    """
    y = complex(y)
    m, k, w = spec_mode.m, spec_mode.k, spec_mode.omega
    hyperbolic = spec_mode.space is SpaceKind.HYPERBOLIC
    pref = y ** A * (1.0 - y) ** B
    dpref_over = A / y - B / (1.0 - y)
    F2 = special.hyp2f1(g2p, y)
    dF2 = special.hyp2f1_derivative(g2p, y)
    F3 = special.hyp2f1(g3p, y)
    G2 = M2 * pref * F2
    dG2 = M2 * pref * (dpref_over * F2 + dF2)
    G3 = M3 * pref * F3
    if hyperbolic:
        lhs = G3 * ((m - 1j * k) ** 2 + w * w)
        rhs = -4 * w * y * (1 - y) * dG2 + 1j * (-m * m - k * k + w * w * (1 - 2 * y)) * G2
    else:
        lhs = G3 * ((m - k) ** 2 - w * w)
        rhs = -4 * w * y * (1 - y) * dG2 + (m * m - k * k + w * w * (1 - 2 * y)) * G2
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def s3_amplitude_relation_drift(m: int, k: int, n: int, y: float) -> float:
    """Constraint residual away from y = 0 (reported, not load-bearing)."""
    spec = ModeSpec(SpaceKind.SPHERICAL, float(2 * n + abs(m) + abs(k)), m, k, n)
    A, B, g2p, g3p = _s3_g_params(m, k, n)
    M2, M3 = s3_amplitudes(m, k, n)
    return _pair_relation_residual(spec, A, B, g2p, g3p, M2, M3, y)


def h3_amplitude_relation_residual(m: int, k: float, omega: float, y: float) -> float:
    spec = ModeSpec(SpaceKind.HYPERBOLIC, omega, m, k)
    A, B, g2p, g3p = _h3_g_params(m, k, omega)
    M2, M3 = h3_amplitudes(m, k, omega)
    return _pair_relation_residual(spec, A, B, g2p, g3p, M2, M3, y)


# ---------------------------------------------------------------------------
# Catalogues
# ---------------------------------------------------------------------------

def s3_catalogue(m_max: int = 2, k_max: int = 2, n_max: int = 2) -> Iterator[ModeSolution]:
    """All spherical modes with |m| <= m_max, |k| <= k_max, n <= n_max."""
    for m in range(-m_max, m_max + 1):
        for k in range(-k_max, k_max + 1):
            for n in range(n_max + 1):
                if 2 * n + abs(m) + abs(k) == 0:
                    continue
                yield construct_s3(m, k, n)


def h3_catalogue(ms=(0, 1, 2), ks=(0.0, 0.5, 1.0),
                 omegas=(0.7, 1.3, 2.1)) -> Iterator[ModeSolution]:
    """Hyperbolic sample modes on the verification grids (general family)."""
    for m in ms:
        for k in ks:
            for omega in omegas:
                yield construct_h3_general(m, k, omega)
