"""Pure-Python fallback for the hot numerical kernels.

Mirrors the compiled extension in curved_maxwell._kernels: Gauss series
summation for 2F1 (terminating and truncated infinite forms) and a
Dormand-Prince 5(4) integrator specialised to the spherical G2 radial
equation used by the shooting eigenvalue search.  The series routines are
vectorised over the argument array so the fallback stays usable on full
grids; semantics (term order, stopping rule) match the extension.
"""

from __future__ import annotations

import math

import numpy as np

COMPILED = False


def hyp2f1_poly(a: complex, b: complex, c: complex, y: np.ndarray, nterms: int) -> np.ndarray:
    """Finite Gauss sum of exactly nterms terms (terminating series)."""
    y = np.asarray(y, dtype=complex)
    total = np.ones_like(y)
    term = np.ones_like(y)
    for j in range(nterms - 1):
        term = term * ((a + j) * (b + j) / ((c + j) * (1.0 + j))) * y
        total = total + term
    return total


def hyp2f1_series(a: complex, b: complex, c: complex, y: np.ndarray,
                  max_terms: int, rtol: float):
    """Truncated Gauss series, summed per point until |term| <= rtol*|sum|.

    Returns (values, relative error estimates, terms used, all_converged).
    """
    y = np.asarray(y, dtype=complex)
    total = np.ones_like(y)
    term = np.ones_like(y)
    err = np.ones(y.shape, dtype=float)
    active = np.ones(y.shape, dtype=bool)
    used = 1
    for j in range(max_terms - 1):
        term = term * ((a + j) * (b + j) / ((c + j) * (1.0 + j))) * y
        total = np.where(active, total + term, total)
        mag = np.abs(term)
        bound = rtol * np.maximum(np.abs(total), 1e-300)
        newly_done = active & (mag <= bound)
        err = np.where(newly_done, mag / np.maximum(np.abs(total), 1e-300), err)
        active &= ~newly_done
        used = j + 2
        if not active.any():
            return total, err, used, True
    err = np.where(active, np.abs(term) / np.maximum(np.abs(total), 1e-300), err)
    return total, err, used, False


# Dormand-Prince 5(4) tableau.
_C = (0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0)
_A = (
    (),
    (1.0 / 5.0,),
    (3.0 / 40.0, 9.0 / 40.0),
    (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0),
    (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0),
    (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0),
    (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0),
)
_E = (71.0 / 57600.0, 0.0, -71.0 / 16695.0, 71.0 / 1920.0,
      -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0)


def _g2_rhs(m2: float, mk2: float, q0: float, y: float, g: float, dg: float):
    # 4y(1-y) G'' + 4(1-2y) G' + (q0 - m^2/(y(1-y)) + (m^2-k^2)/(1-y)) G = 0
    omy = 1.0 - y
    coef = q0 - m2 / (y * omy) + mk2 / omy
    return dg, -(4.0 * (1.0 - 2.0 * y) * dg + coef * g) / (4.0 * y * omy)


def integrate_g2_s3(m: float, k: float, omega: float, y0: float,
                    g0: float, dg0: float, targets: np.ndarray,
                    rtol: float, atol: float, max_steps: int):
    """Integrate the spherical G2 equation through ascending y targets.

    Returns (array of (G, dG) rows per target, status) with status 0 on
    success and 1 if the step budget ran out.
    """
    targets = np.asarray(targets, dtype=float)
    out = np.empty((targets.size, 2), dtype=float)
    m2 = m * m
    mk2 = m * m - k * k
    q0 = 2.0 * omega + omega * omega
    y, g, dg = float(y0), float(g0), float(dg0)
    h = min(1e-4, (targets[0] - y) / 16.0) if targets.size else 1e-4
    steps = 0
    k1 = _g2_rhs(m2, mk2, q0, y, g, dg)
    for it, yt in enumerate(targets):
        while yt - y > 1e-15:
            if steps >= max_steps:
                return out, 1
            h_step = min(h, yt - y)
            kk = [k1]
            for stage in range(1, 7):
                ag = g
                adg = dg
                for j, aij in enumerate(_A[stage]):
                    ag += h_step * aij * kk[j][0]
                    adg += h_step * aij * kk[j][1]
                kk.append(_g2_rhs(m2, mk2, q0, y + _C[stage] * h_step, ag, adg))
            g_new = g + h_step * sum(a * s[0] for a, s in zip(_A[6], kk[:6]))
            dg_new = dg + h_step * sum(a * s[1] for a, s in zip(_A[6], kk[:6]))
            err_g = h_step * sum(e * s[0] for e, s in zip(_E, kk))
            err_dg = h_step * sum(e * s[1] for e, s in zip(_E, kk))
            sc_g = atol + rtol * max(abs(g), abs(g_new))
            sc_dg = atol + rtol * max(abs(dg), abs(dg_new))
            err = math.sqrt(0.5 * ((err_g / sc_g) ** 2 + (err_dg / sc_dg) ** 2))
            steps += 1
            if err <= 1.0:
                y += h_step
                g, dg = g_new, dg_new
                k1 = kk[6]  # FSAL: stage 7 sits at (y + h, new state)
                factor = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
            else:
                factor = max(0.2, 0.9 * err ** -0.2)
                if h_step <= 1e-15:
                    return out, 1
            h = h_step * factor
        out[it, 0] = g
        out[it, 1] = dg
    return out, 0
