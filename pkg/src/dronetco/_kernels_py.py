"""Pure-Python evaluation kernels.

Reference implementation of the numeric hot paths: cost-component and
objective evaluation, the analytic gradient, the projected cyclic coordinate
descent loop, and integer-lattice scans. The compiled module
``dronetco._kernels`` mirrors every routine here operation for operation, so
the two backends produce bit-identical results; keep them in lockstep when
editing.

Parameters travel as a flat 14-tuple of floats (``CostParams.pack()``):

    index  0 k            small-cell scaling constant, city_area/(pi*reach^2)
           1 d            drone unit cost, euros
           2 a            lease-curve coefficient
           3 b            lease-curve exponent, 0 < b < 1
           4 smc          small-cell upgrade cost, euros
           5 fhc          existing fronthaul capacity per cell, Mbps
           6 bhc          existing backhaul capacity per cell, Mbps
           7 bbu          BBU site count (as float)
           8 mux          multiplexing gain
           9 c_base       base link capacity, Mbps
          10 c_step_size  capacity added per step, Mbps
          11 fh_mult      fronthaul rate multiplier (split burden)
          12 mapping      0.0 = additive capacity steps, 1.0 = product form
          13 variant      0.0 = inverse-chain backhaul increment (c*k/n),
                          1.0 = linear-chain backhaul increment (n*c*k)
"""

from math import inf, sqrt

LN2 = 0.6931471805599453

# backtracking gives up once the trial step shrinks below this
MIN_COORD_STEP = 1e-6


def capacity_increment(s, p):
    """Provisioned link capacity in Mbps at capacity step index ``s``."""
    if p[12] == 0.0:
        return p[9] + (s - 1.0) * p[10]
    return p[9] * (s - 1.0) * 100.0


def _pow_pos(x, e):
    # x**e for x >= 0 with C pow() semantics at x == 0, e < 0
    if x > 0.0:
        return x ** e
    return 0.0 if e > 0.0 else inf


def components(n, s, p):
    """All four cost components at a design point.

    Returns (drone CAPEX, small-cell CAPEX, fronthaul OPEX/yr,
    backhaul OPEX/yr) in euros.
    """
    k = p[0]
    a = p[2]
    b = p[3]
    fhc = p[5]
    bhc = p[6]
    mux = p[8]
    c = capacity_increment(s, p)

    c_dr = 2.0 ** (s - 1.0) * n * p[1]
    n_sc = k / (n * n)
    c_sc = n_sc * n * p[4]

    u = fhc + n * c * p[11]
    c_fh = n_sc * a * (_pow_pos(u, b) - _pow_pos(fhc, b))

    if p[13] == 0.0:
        v = bhc + c * k / n
    else:
        v = bhc + n * c * k
    c_bh = p[7] * a * (_pow_pos(v / mux, b) - _pow_pos(bhc / mux, b))
    return c_dr, c_sc, c_fh, c_bh


def objective(n, s, p, horizon):
    """Horizon-aggregated total cost: CAPEX plus ``horizon`` years of OPEX."""
    c_dr, c_sc, c_fh, c_bh = components(n, s, p)
    return c_dr + c_sc + horizon * (c_fh + c_bh)


def gradient(n, s, p, horizon):
    """Analytic partial derivatives of the objective at (n, s).

    Derived directly from the evaluated cost expressions under the active
    capacity mapping and backhaul variant; checked against central finite
    differences in the test suite.
    """
    k = p[0]
    d = p[1]
    a = p[2]
    b = p[3]
    smc = p[4]
    fhc = p[5]
    bhc = p[6]
    bbu = p[7]
    mux = p[8]
    fhm = p[11]

    c = capacity_increment(s, p)
    if p[12] == 0.0:
        dc_ds = p[10]
    else:
        dc_ds = p[9] * 100.0

    two_pow = 2.0 ** (s - 1.0)
    n2 = n * n

    # one-off CAPEX partials (drone + small-cell terms)
    gn_cap = two_pow * d - (k / n2) * smc
    gs_cap = LN2 * two_pow * n * d

    # fronthaul lease term
    u = fhc + n * c * fhm
    u_b = _pow_pos(u, b)
    u_bm1 = _pow_pos(u, b - 1.0)
    fhc_b = _pow_pos(fhc, b)
    gn_fh = a * k * (-2.0 / (n2 * n) * (u_b - fhc_b) + (b * c * fhm / n2) * u_bm1)
    gs_fh = (k / n2) * a * b * u_bm1 * (n * fhm * dc_ds)

    # backhaul lease term
    if p[13] == 0.0:
        v = bhc + c * k / n
        dv_dn = -(c * k) / n2
        dv_ds = (k / n) * dc_ds
    else:
        v = bhc + n * c * k
        dv_dn = c * k
        dv_ds = n * k * dc_ds
    w_bm1 = _pow_pos(v / mux, b - 1.0)
    gn_bh = bbu * a * b * w_bm1 * (dv_dn / mux)
    gs_bh = bbu * a * b * w_bm1 * (dv_ds / mux)

    return (gn_cap + horizon * (gn_fh + gn_bh),
            gs_cap + horizon * (gs_fh + gs_bh))


def _clamp(x, lo, hi):
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


def _pg_norm(n, s, gn, gs, n_max, c_max):
    # projected gradient: zero a component whose descent direction points
    # out of the box, so boundary optima register as stationary
    if (n <= 1.0 and gn > 0.0) or (n >= n_max and gn < 0.0):
        gn = 0.0
    if (s <= 1.0 and gs > 0.0) or (s >= c_max and gs < 0.0):
        gs = 0.0
    return sqrt(gn * gn + gs * gs)


def descend_loop(f, grad, n0, s0, step0, tol_rel, max_iter, n_max, c_max):
    """Projected cyclic coordinate descent over callables.

    Each coordinate move steps against the sign of the partial derivative,
    halving the trial step from ``step0`` until the objective strictly
    decreases or the step falls below MIN_COORD_STEP. Candidates are clamped
    onto [1, n_max] x [1, c_max] before evaluation. The walk continues while
    any coordinate still accepts a move; once a full cycle accepts none, it
    stops and convergence is declared if the projected gradient norm has
    fallen to ``tol_rel`` times its value at the projected start. Exhausting
    ``max_iter`` cycles mid-walk leaves converged False.

    Returns (n, s, f_value, converged, cycles, trace) with trace a list of
    (n, s, f_value) including the projected start.
    """
    n = _clamp(n0, 1.0, n_max)
    s = _clamp(s0, 1.0, c_max)
    fval = f(n, s)
    trace = [(n, s, fval)]

    gn, gs = grad(n, s)
    tol = tol_rel * _pg_norm(n, s, gn, gs, n_max, c_max)
    converged = False
    cycles = 0

    while cycles < max_iter:
        cycles += 1
        moved = False
        for coord in (0, 1):
            gn, gs = grad(n, s)
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
                    # clamped onto the current point: every smaller step
                    # clamps too, so this coordinate is pinned
                    break
                cand_f = f(cand_n, cand_s)
                if cand_f < fval:
                    n, s, fval = cand_n, cand_s, cand_f
                    trace.append((n, s, fval))
                    moved = True
                    break
                step *= 0.5
        if not moved:
            gn, gs = grad(n, s)
            converged = _pg_norm(n, s, gn, gs, n_max, c_max) <= tol
            break

    return n, s, fval, converged, cycles, trace


def descend(n0, s0, p, horizon, step0, tol_rel, max_iter, n_max, c_max):
    """Coordinate descent on the packed-parameter objective."""

    def f(n, s):
        return objective(n, s, p, horizon)

    def g(n, s):
        return gradient(n, s, p, horizon)

    return descend_loop(f, g, n0, s0, step0, tol_rel, max_iter, n_max, c_max)


def grid_scan(p, horizon, n_lo, n_hi, c_lo, c_hi):
    """Objective values over the integer lattice [n_lo..n_hi] x [c_lo..c_hi].

    Returns a float64 array with drone counts down the rows and capacity
    steps across the columns.
    """
    import numpy as np

    nn = n_hi - n_lo + 1
    nc = c_hi - c_lo + 1
    out = np.empty((nn, nc), dtype=np.float64)
    for i in range(nn):
        n = float(n_lo + i)
        for j in range(nc):
            out[i, j] = objective(n, float(c_lo + j), p, horizon)
    return out
