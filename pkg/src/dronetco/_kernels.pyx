# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels.

Statement-for-statement transliteration of ``dronetco._kernels_py``; both
backends must produce bit-identical results. See that module for the packed
parameter layout and the algorithm contracts. Keep the two in lockstep when
editing.
"""

from libc.math cimport INFINITY, pow, sqrt

import numpy as np

cdef double LN2 = 0.6931471805599453
cdef double MIN_COORD_STEP = 1e-6


cdef struct Params:
    double k
    double d
    double a
    double b
    double smc
    double fhc
    double bhc
    double bbu
    double mux
    double c_base
    double c_step_size
    double fh_mult
    double mapping
    double variant


cdef inline Params _unpack(p):
    cdef Params P
    P.k = p[0]
    P.d = p[1]
    P.a = p[2]
    P.b = p[3]
    P.smc = p[4]
    P.fhc = p[5]
    P.bhc = p[6]
    P.bbu = p[7]
    P.mux = p[8]
    P.c_base = p[9]
    P.c_step_size = p[10]
    P.fh_mult = p[11]
    P.mapping = p[12]
    P.variant = p[13]
    return P


cdef inline double _capacity(double s, Params* P) nogil:
    if P.mapping == 0.0:
        return P.c_base + (s - 1.0) * P.c_step_size
    return P.c_base * (s - 1.0) * 100.0


cdef inline double _pow_pos(double x, double e) nogil:
    if x > 0.0:
        return pow(x, e)
    return 0.0 if e > 0.0 else INFINITY


cdef inline void _components(double n, double s, Params* P, double* out) nogil:
    cdef double c, c_dr, n_sc, c_sc, u, c_fh, v, c_bh
    c = _capacity(s, P)

    c_dr = pow(2.0, s - 1.0) * n * P.d
    n_sc = P.k / (n * n)
    c_sc = n_sc * n * P.smc

    u = P.fhc + n * c * P.fh_mult
    c_fh = n_sc * P.a * (_pow_pos(u, P.b) - _pow_pos(P.fhc, P.b))

    if P.variant == 0.0:
        v = P.bhc + c * P.k / n
    else:
        v = P.bhc + n * c * P.k
    c_bh = P.bbu * P.a * (_pow_pos(v / P.mux, P.b) - _pow_pos(P.bhc / P.mux, P.b))

    out[0] = c_dr
    out[1] = c_sc
    out[2] = c_fh
    out[3] = c_bh


cdef inline double _objective(double n, double s, Params* P, double horizon) nogil:
    cdef double comp[4]
    _components(n, s, P, comp)
    return comp[0] + comp[1] + horizon * (comp[2] + comp[3])


cdef inline void _gradient(double n, double s, Params* P, double horizon,
                           double* gn_out, double* gs_out) nogil:
    cdef double c, dc_ds, two_pow, n2
    cdef double gn_cap, gs_cap, u, u_b, u_bm1, fhc_b, gn_fh, gs_fh
    cdef double v, dv_dn, dv_ds, w_bm1, gn_bh, gs_bh

    c = _capacity(s, P)
    if P.mapping == 0.0:
        dc_ds = P.c_step_size
    else:
        dc_ds = P.c_base * 100.0

    two_pow = pow(2.0, s - 1.0)
    n2 = n * n

    gn_cap = two_pow * P.d - (P.k / n2) * P.smc
    gs_cap = LN2 * two_pow * n * P.d

    u = P.fhc + n * c * P.fh_mult
    u_b = _pow_pos(u, P.b)
    u_bm1 = _pow_pos(u, P.b - 1.0)
    fhc_b = _pow_pos(P.fhc, P.b)
    gn_fh = P.a * P.k * (-2.0 / (n2 * n) * (u_b - fhc_b)
                         + (P.b * c * P.fh_mult / n2) * u_bm1)
    gs_fh = (P.k / n2) * P.a * P.b * u_bm1 * (n * P.fh_mult * dc_ds)

    if P.variant == 0.0:
        v = P.bhc + c * P.k / n
        dv_dn = -(c * P.k) / n2
        dv_ds = (P.k / n) * dc_ds
    else:
        v = P.bhc + n * c * P.k
        dv_dn = c * P.k
        dv_ds = n * P.k * dc_ds
    w_bm1 = _pow_pos(v / P.mux, P.b - 1.0)
    gn_bh = P.bbu * P.a * P.b * w_bm1 * (dv_dn / P.mux)
    gs_bh = P.bbu * P.a * P.b * w_bm1 * (dv_ds / P.mux)

    gn_out[0] = gn_cap + horizon * (gn_fh + gn_bh)
    gs_out[0] = gs_cap + horizon * (gs_fh + gs_bh)


cdef inline double _clamp(double x, double lo, double hi) nogil:
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


cdef inline double _pg_norm(double n, double s, double gn, double gs,
                            double n_max, double c_max) nogil:
    if (n <= 1.0 and gn > 0.0) or (n >= n_max and gn < 0.0):
        gn = 0.0
    if (s <= 1.0 and gs > 0.0) or (s >= c_max and gs < 0.0):
        gs = 0.0
    return sqrt(gn * gn + gs * gs)


def capacity_increment(double s, p):
    cdef Params P = _unpack(p)
    return _capacity(s, &P)


def components(double n, double s, p):
    cdef Params P = _unpack(p)
    cdef double comp[4]
    _components(n, s, &P, comp)
    return comp[0], comp[1], comp[2], comp[3]


def objective(double n, double s, p, double horizon):
    cdef Params P = _unpack(p)
    return _objective(n, s, &P, horizon)


def gradient(double n, double s, p, double horizon):
    cdef Params P = _unpack(p)
    cdef double gn, gs
    _gradient(n, s, &P, horizon, &gn, &gs)
    return gn, gs


def descend(double n0, double s0, p, double horizon, double step0,
            double tol_rel, long max_iter, double n_max, double c_max):
    """Coordinate descent on the packed-parameter objective.

    Same loop as dronetco._kernels_py.descend_loop specialized to the packed
    objective/gradient; returns (n, s, f, converged, cycles, trace).
    """
    cdef Params P = _unpack(p)
    cdef double n, s, fval, gn, gs, tol, g, direction, step
    cdef double cand_n, cand_s, cand_f
    cdef long cycles = 0
    cdef int coord
    cdef bint converged, moved

    n = _clamp(n0, 1.0, n_max)
    s = _clamp(s0, 1.0, c_max)
    fval = _objective(n, s, &P, horizon)
    trace = [(n, s, fval)]

    _gradient(n, s, &P, horizon, &gn, &gs)
    tol = tol_rel * _pg_norm(n, s, gn, gs, n_max, c_max)
    converged = False

    while cycles < max_iter:
        cycles += 1
        moved = False
        for coord in range(2):
            _gradient(n, s, &P, horizon, &gn, &gs)
            g = gn if coord == 0 else gs
            if g == 0.0:
                continue
            direction = -1.0 if g > 0.0 else 1.0
            step = step0
            while step >= MIN_COORD_STEP:
                if coord == 0:
                    cand_n = _clamp(n + direction * step, 1.0, n_max)
                    cand_s = s
                else:
                    cand_n = n
                    cand_s = _clamp(s + direction * step, 1.0, c_max)
                if cand_n == n and cand_s == s:
                    break
                cand_f = _objective(cand_n, cand_s, &P, horizon)
                if cand_f < fval:
                    n = cand_n
                    s = cand_s
                    fval = cand_f
                    trace.append((n, s, fval))
                    moved = True
                    break
                step *= 0.5
        if not moved:
            _gradient(n, s, &P, horizon, &gn, &gs)
            converged = _pg_norm(n, s, gn, gs, n_max, c_max) <= tol
            break

    return n, s, fval, converged, cycles, trace


def grid_scan(p, double horizon, long n_lo, long n_hi, long c_lo, long c_hi):
    """Objective values over the integer lattice, drone counts down the rows."""
    cdef Params P = _unpack(p)
    cdef Py_ssize_t nn = n_hi - n_lo + 1
    cdef Py_ssize_t nc = c_hi - c_lo + 1
    out = np.empty((nn, nc), dtype=np.float64)
    cdef double[:, ::1] v = out
    cdef Py_ssize_t i, j
    cdef double n
    with nogil:
        for i in range(nn):
            n = <double> (n_lo + i)
            for j in range(nc):
                v[i, j] = _objective(n, <double> (c_lo + j), &P, horizon)
    return out
