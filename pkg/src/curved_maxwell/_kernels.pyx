# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Gauss 2F1 series and the shooting-ODE integrator.

Same API and semantics as curved_maxwell._kernels_py; see that module for
documentation.  The integrator releases the GIL so concurrent shooting runs
overlap.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

COMPILED = True


def hyp2f1_poly(double complex a, double complex b, double complex c,
                object y, int nterms):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] yy = np.ascontiguousarray(
        np.atleast_1d(np.asarray(y, dtype=np.complex128)))
    cdef Py_ssize_t n = yy.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t i
    cdef int j
    cdef double complex term, total, z
    for i in range(n):
        z = yy[i]
        total = 1.0
        term = 1.0
        for j in range(nterms - 1):
            term = term * ((a + j) * (b + j) / ((c + j) * (1.0 + j))) * z
            total = total + term
        out[i] = total
    return out


def hyp2f1_series(double complex a, double complex b, double complex c,
                  object y, int max_terms, double rtol):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] yy = np.ascontiguousarray(
        np.atleast_1d(np.asarray(y, dtype=np.complex128)))
    cdef Py_ssize_t n = yy.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] err = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i
    cdef int j, used = 1, worst_used = 1
    cdef bint ok = True, converged
    cdef double complex term, total, z
    cdef double mag, tmag
    for i in range(n):
        z = yy[i]
        total = 1.0
        term = 1.0
        converged = False
        used = 1
        for j in range(max_terms - 1):
            term = term * ((a + j) * (b + j) / ((c + j) * (1.0 + j))) * z
            total = total + term
            used = j + 2
            mag = sqrt(term.real * term.real + term.imag * term.imag)
            tmag = sqrt(total.real * total.real + total.imag * total.imag)
            if tmag < 1e-300:
                tmag = 1e-300
            if mag <= rtol * tmag:
                converged = True
                break
        out[i] = total
        err[i] = mag / tmag if used > 1 else 0.0
        if not converged:
            ok = False
        if used > worst_used:
            worst_used = used
    return out, err, worst_used, ok


cdef inline void _g2_rhs(double m2, double mk2, double q0, double y,
                         double g, double dg, double *out) noexcept nogil:
    cdef double omy = 1.0 - y
    cdef double coef = q0 - m2 / (y * omy) + mk2 / omy
    out[0] = dg
    out[1] = -(4.0 * (1.0 - 2.0 * y) * dg + coef * g) / (4.0 * y * omy)


def integrate_g2_s3(double m, double k, double omega, double y0,
                    double g0, double dg0, object targets,
                    double rtol, double atol, int max_steps):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tt = np.ascontiguousarray(
        np.asarray(targets, dtype=np.float64))
    cdef Py_ssize_t ntarg = tt.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((ntarg, 2), dtype=np.float64)
    cdef int status = 0
    cdef double m2 = m * m
    cdef double mk2 = m * m - k * k
    cdef double q0 = 2.0 * omega + omega * omega
    cdef double y = y0, g = g0, dg = dg0
    cdef double h, h_step, yt, ag, adg, g_new, dg_new
    cdef double err_g, err_dg, sc_g, sc_dg, err, factor
    cdef double kk[7][2]
    # Dormand-Prince 5(4) tableau
    cdef double C[7]
    cdef double A[7][6]
    cdef double E[7]
    cdef int steps = 0
    cdef Py_ssize_t it
    cdef int stage, j
    C[0] = 0.0; C[1] = 1.0 / 5.0; C[2] = 3.0 / 10.0; C[3] = 4.0 / 5.0
    C[4] = 8.0 / 9.0; C[5] = 1.0; C[6] = 1.0
    for stage in range(7):
        for j in range(6):
            A[stage][j] = 0.0
    A[1][0] = 1.0 / 5.0
    A[2][0] = 3.0 / 40.0; A[2][1] = 9.0 / 40.0
    A[3][0] = 44.0 / 45.0; A[3][1] = -56.0 / 15.0; A[3][2] = 32.0 / 9.0
    A[4][0] = 19372.0 / 6561.0; A[4][1] = -25360.0 / 2187.0
    A[4][2] = 64448.0 / 6561.0; A[4][3] = -212.0 / 729.0
    A[5][0] = 9017.0 / 3168.0; A[5][1] = -355.0 / 33.0
    A[5][2] = 46732.0 / 5247.0; A[5][3] = 49.0 / 176.0; A[5][4] = -5103.0 / 18656.0
    A[6][0] = 35.0 / 384.0; A[6][1] = 0.0; A[6][2] = 500.0 / 1113.0
    A[6][3] = 125.0 / 192.0; A[6][4] = -2187.0 / 6784.0; A[6][5] = 11.0 / 84.0
    E[0] = 71.0 / 57600.0; E[1] = 0.0; E[2] = -71.0 / 16695.0; E[3] = 71.0 / 1920.0
    E[4] = -17253.0 / 339200.0; E[5] = 22.0 / 525.0; E[6] = -1.0 / 40.0

    if ntarg == 0:
        return out, 0
    h = (tt[0] - y) / 16.0
    if h > 1e-4:
        h = 1e-4
    with nogil:
        _g2_rhs(m2, mk2, q0, y, g, dg, &kk[0][0])
        for it in range(ntarg):
            yt = tt[it]
            while yt - y > 1e-15:
                if steps >= max_steps:
                    status = 1
                    break
                h_step = h if h < yt - y else yt - y
                for stage in range(1, 7):
                    ag = g
                    adg = dg
                    for j in range(stage):
                        ag += h_step * A[stage][j] * kk[j][0]
                        adg += h_step * A[stage][j] * kk[j][1]
                    _g2_rhs(m2, mk2, q0, y + C[stage] * h_step, ag, adg, &kk[stage][0])
                g_new = g
                dg_new = dg
                for j in range(6):
                    g_new += h_step * A[6][j] * kk[j][0]
                    dg_new += h_step * A[6][j] * kk[j][1]
                err_g = 0.0
                err_dg = 0.0
                for j in range(7):
                    err_g += E[j] * kk[j][0]
                    err_dg += E[j] * kk[j][1]
                err_g *= h_step
                err_dg *= h_step
                sc_g = atol + rtol * (fabs(g) if fabs(g) > fabs(g_new) else fabs(g_new))
                sc_dg = atol + rtol * (fabs(dg) if fabs(dg) > fabs(dg_new) else fabs(dg_new))
                err = sqrt(0.5 * ((err_g / sc_g) * (err_g / sc_g)
                                  + (err_dg / sc_dg) * (err_dg / sc_dg)))
                steps += 1
                if err <= 1.0:
                    y += h_step
                    g = g_new
                    dg = dg_new
                    _g2_rhs(m2, mk2, q0, y, g, dg, &kk[0][0])
                    if err == 0.0:
                        factor = 5.0
                    else:
                        factor = 0.9 * err ** -0.2
                        if factor > 5.0:
                            factor = 5.0
                        elif factor < 0.2:
                            factor = 0.2
                else:
                    factor = 0.9 * err ** -0.2
                    if factor < 0.2:
                        factor = 0.2
                    if h_step <= 1e-15:
                        status = 1
                        break
                h = h_step * factor
            if status:
                break
            out[it, 0] = g
            out[it, 1] = dg
    return out, status
