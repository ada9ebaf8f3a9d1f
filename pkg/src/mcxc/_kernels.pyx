# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled angular accumulation for the built-in local functionals.

For every spatial point the loop runs over directions in order, evaluates the
collinear integrand on the projected variables, applies the effective
transform and accumulates the energy density and potential channels.  Points
are independent, so splitting them across threads never changes a result.
"""
from cython.parallel cimport prange
from libc.math cimport cbrt

import numpy as np

from mcxc.functionals import C_X as _C_X

cdef double CX = _C_X

# variable slots used by each kernel code (see functionals.SLOTS)
cdef int NVAR[5]
NVAR[:] = [2, 3, 7, 2, 2]
cdef int SLOTMAP[5][7]
SLOTMAP[0][:] = [0, 6, 0, 0, 0, 0, 0]
SLOTMAP[1][:] = [7, 8, 9, 0, 0, 0, 0]
SLOTMAP[2][:] = [1, 2, 3, 6, 7, 8, 9]
SLOTMAP[3][:] = [6, 10, 0, 0, 0, 0, 0]
SLOTMAP[4][:] = [6, 11, 0, 0, 0, 0, 0]

NUM_CODES = 5


cdef void collinear(int code, double* x, double* f, double* d1, double* d2, bint second) noexcept nogil:
    cdef double n, s, a, b, ca, cb, ia, ib, plus, minus
    cdef int i
    if code == 0:
        n = x[0]
        s = x[1]
        if s > n:
            s = n
        elif s < -n:
            s = -n
        a = n + s
        b = n - s
        ca = cbrt(a)
        cb = cbrt(b)
        f[0] = -CX * (a * ca + b * cb)
        d1[0] = -CX * 4.0 / 3.0 * (ca + cb)
        d1[1] = -CX * 4.0 / 3.0 * (ca - cb)
        if second:
            ia = 1.0 / (ca * ca)
            ib = 1.0 / (cb * cb)
            plus = -CX * 4.0 / 9.0 * (ia + ib)
            minus = -CX * 4.0 / 9.0 * (ia - ib)
            d2[0] = plus
            d2[1] = minus
            d2[2] = minus
            d2[3] = plus
    elif code == 1:
        f[0] = x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
        for i in range(3):
            d1[i] = 2.0 * x[i]
        if second:
            for i in range(9):
                d2[i] = 0.0
            d2[0] = 2.0
            d2[4] = 2.0
            d2[8] = 2.0
    elif code == 2:
        # x = (grad n, s, grad s)
        s = x[3]
        a = x[0] * x[4] + x[1] * x[5] + x[2] * x[6]
        f[0] = s * a
        for i in range(3):
            d1[i] = s * x[4 + i]
            d1[4 + i] = s * x[i]
        d1[3] = a
        if second:
            for i in range(49):
                d2[i] = 0.0
            for i in range(3):
                d2[i * 7 + 3] = x[4 + i]
                d2[3 * 7 + i] = x[4 + i]
                d2[3 * 7 + 4 + i] = x[i]
                d2[(4 + i) * 7 + 3] = x[i]
                d2[i * 7 + 4 + i] = s
                d2[(4 + i) * 7 + i] = s
    else:
        f[0] = x[0] * x[1]
        d1[0] = x[1]
        d1[1] = x[0]
        if second:
            d2[0] = 0.0
            d2[1] = 1.0
            d2[2] = 1.0
            d2[3] = 0.0


cdef void accumulate_point(int code, Py_ssize_t p,
                           const double[::1] n, const double[:, ::1] grad_n,
                           const double[::1] lap_n, const double[::1] tau,
                           const double[:, ::1] m, const double[:, :, ::1] grad_m,
                           const double[:, ::1] lap_m, const double[:, ::1] u,
                           const double[:, ::1] dirs, const double[::1] wts, bint channels,
                           double[::1] eps, double[:, ::1] vk, double[:, :, ::1] vo) noexcept nogil:
    cdef double x[12]
    cdef double xs[7]
    cdef double d1[7]
    cdef double d2[49]
    cdef double f, fe, w, e0, e1, e2, dv
    cdef int k = NVAR[code]
    cdef int i, j, a, slot
    cdef Py_ssize_t d
    cdef Py_ssize_t ndir = wts.shape[0]
    cdef double acc = 0.0

    x[0] = n[p]
    x[1] = grad_n[p, 0]
    x[2] = grad_n[p, 1]
    x[3] = grad_n[p, 2]
    x[4] = lap_n[p]
    x[5] = tau[p]
    for d in range(ndir):
        e0 = dirs[d, 0]
        e1 = dirs[d, 1]
        e2 = dirs[d, 2]
        w = wts[d]
        x[6] = m[p, 0] * e0 + m[p, 1] * e1 + m[p, 2] * e2
        for a in range(3):
            x[7 + a] = grad_m[p, a, 0] * e0 + grad_m[p, a, 1] * e1 + grad_m[p, a, 2] * e2
        x[10] = lap_m[p, 0] * e0 + lap_m[p, 1] * e1 + lap_m[p, 2] * e2
        x[11] = u[p, 0] * e0 + u[p, 1] * e1 + u[p, 2] * e2
        for i in range(k):
            xs[i] = x[SLOTMAP[code][i]]
        collinear(code, xs, &f, d1, d2, channels)
        fe = f
        for i in range(k):
            if SLOTMAP[code][i] >= 6:
                fe = fe + xs[i] * d1[i]
        acc = acc + w * fe
        if channels:
            for i in range(k):
                slot = SLOTMAP[code][i]
                dv = d1[i]
                if slot >= 6:
                    dv = 2.0 * d1[i]
                for j in range(k):
                    if SLOTMAP[code][j] >= 6:
                        dv = dv + d2[i * k + j] * xs[j]
                if slot < 6:
                    vk[p, slot] += w * dv
                else:
                    vo[p, slot - 6, 0] += w * dv * e0
                    vo[p, slot - 6, 1] += w * dv * e1
                    vo[p, slot - 6, 2] += w * dv * e2
    eps[p] = acc


def mc_local(int code, n, grad_n, lap_n, tau, m, grad_m, lap_m, u, dirs, wts,
             bint channels=True, int nthreads=1):
    """Energy density (P,), even channels (P, 6) and odd channels (P, 6, 3)."""
    if not 0 <= code < NUM_CODES:
        raise ValueError(f"no compiled kernel for code {code}")
    cdef const double[::1] n_v = np.ascontiguousarray(n, dtype=np.float64)
    cdef const double[:, ::1] gn_v = np.ascontiguousarray(grad_n, dtype=np.float64)
    cdef const double[::1] ln_v = np.ascontiguousarray(lap_n, dtype=np.float64)
    cdef const double[::1] t_v = np.ascontiguousarray(tau, dtype=np.float64)
    cdef const double[:, ::1] m_v = np.ascontiguousarray(m, dtype=np.float64)
    cdef const double[:, :, ::1] gm_v = np.ascontiguousarray(grad_m, dtype=np.float64)
    cdef const double[:, ::1] lm_v = np.ascontiguousarray(lap_m, dtype=np.float64)
    cdef const double[:, ::1] u_v = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[:, ::1] e_v = np.ascontiguousarray(dirs, dtype=np.float64)
    cdef const double[::1] w_v = np.ascontiguousarray(wts, dtype=np.float64)
    cdef Py_ssize_t P = n_v.shape[0]
    eps = np.zeros(P)
    vk = np.zeros((P, 6))
    vo = np.zeros((P, 6, 3))
    cdef double[::1] eps_v = eps
    cdef double[:, ::1] vk_v = vk
    cdef double[:, :, ::1] vo_v = vo
    cdef Py_ssize_t p
    if nthreads < 1:
        nthreads = 1
    for p in prange(P, nogil=True, num_threads=nthreads, schedule="static"):
        accumulate_point(code, p, n_v, gn_v, ln_v, t_v, m_v, gm_v, lm_v, u_v, e_v, w_v,
                         channels, eps_v, vk_v, vo_v)
    return eps, vk, vo
