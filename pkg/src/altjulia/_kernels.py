"""Compiled per-point kernels shared by the scalar API and the grid samplers.

Single code path for scalar and grid use, no fastmath, no reassociation:
point queries, serial grids and threaded grids therefore agree bit for bit.
All kernels release the GIL so row workers can run in plain threads.
"""
from __future__ import annotations

import cmath
import math

from numba import njit

# Orbit fate tags (the public API wraps these in dataclasses).
ESCAPED = 0
PERIODIC = 1
NO_CYCLE = 2

# Connectivity codes: fixed serialization contract for grids and volumes.
TOTALLY_DISCONNECTED = 0
CONNECTED = 1
DISCONNECTED = 2


@njit(cache=True, nogil=True)
def quartic_orbit_fate(w0, c1, c2, max_iters, radius_sq, tol, budget):
    """Fate of the orbit of w0 under w -> (w*w + c1)**2 + c2.

    Returns (tag, n): (ESCAPED, k) at the first index k whose squared
    modulus exceeds radius_sq (k = 0 for w0 itself), (PERIODIC, p) when a
    cycle of period p <= budget shows up after the boundedness phase, and
    (NO_CYCLE, 0) otherwise.  Non-finite intermediates fail the
    `m2 <= radius_sq` comparison and are reported as escapes.
    """
    w = w0
    m2 = w.real * w.real + w.imag * w.imag
    if not (m2 <= radius_sq):
        return ESCAPED, 0
    for k in range(1, max_iters + 1):
        t = w * w + c1
        w = t * t + c2
        m2 = w.real * w.real + w.imag * w.imag
        if not (m2 <= radius_sq):
            return ESCAPED, k
    # Bounded within budget.  Brent search for the period on further steps:
    # advance the hare, compare against the anchored tortoise, teleport the
    # tortoise at powers of two.  Two points are "equal" when
    # |x - y| <= tol * max(1, |x|) with x the tortoise.
    tortoise = w
    hare = w
    power = 1
    lam = 0
    for _ in range(budget):
        t = hare * hare + c1
        hare = t * t + c2
        lam += 1
        d = tortoise - hare
        ref = math.hypot(tortoise.real, tortoise.imag)
        if ref < 1.0:
            ref = 1.0
        if math.hypot(d.real, d.imag) <= tol * ref:
            return PERIODIC, lam
        if lam == power:
            tortoise = hare
            power = power * 2
            lam = 0
    return NO_CYCLE, 0


@njit(cache=True, nogil=True)
def classify_point(c1, c2, max_iters, radius_override, tol, budget):
    """Connectivity code plus orbit evidence for one parameter pair.

    radius_override <= 0 means "derive the escape radius from the params"
    (max of 2 and both parameter moduli); callers validate any positive
    override against that bound before handing it down.

    Returns (code, low_confidence, fz_tag, fz_n, fc_tag, fc_n) where fz is
    the orbit of the critical point 0 and fc the orbit of the principal
    square root of -c1 (the other root has the identical orbit because the
    quartic is even).
    """
    r = radius_override
    if r <= 0.0:
        r = 2.0
        m = math.hypot(c1.real, c1.imag)
        if m > r:
            r = m
        m = math.hypot(c2.real, c2.imag)
        if m > r:
            r = m
    r2 = r * r
    fz_tag, fz_n = quartic_orbit_fate(0j, c1, c2, max_iters, r2, tol, budget)
    # 0.0 - x normalizes -0.0 so the principal branch is taken on the cut.
    w0 = cmath.sqrt(complex(0.0 - c1.real, 0.0 - c1.imag))
    fc_tag, fc_n = quartic_orbit_fate(w0, c1, c2, max_iters, r2, tol, budget)

    zero_bounded = fz_tag != ESCAPED
    crit_bounded = fc_tag != ESCAPED
    low = (fz_tag == NO_CYCLE) or (fc_tag == NO_CYCLE)
    if zero_bounded and crit_bounded:
        code = CONNECTED
    elif not zero_bounded and not crit_bounded:
        code = TOTALLY_DISCONNECTED
    else:
        bounded_tag = fz_tag if zero_bounded else fc_tag
        code = DISCONNECTED if bounded_tag == PERIODIC else TOTALLY_DISCONNECTED
    return code, low, fz_tag, fz_n, fc_tag, fc_n


@njit(cache=True, nogil=True)
def classify_row(codes, xs, y_val, base, x_axis, y_axis,
                 max_iters, radius_override, tol, budget):
    """Classify one grid row into codes; returns the row's low-confidence count.

    base holds the four parameter coordinates (re1, im1, re2, im2); the free
    x/y axes are overwritten per cell / per row.
    """
    v0 = base[0]
    v1 = base[1]
    v2 = base[2]
    v3 = base[3]
    if y_axis == 0:
        v0 = y_val
    elif y_axis == 1:
        v1 = y_val
    elif y_axis == 2:
        v2 = y_val
    else:
        v3 = y_val
    n_low = 0
    for i in range(xs.shape[0]):
        a0 = v0
        a1 = v1
        a2 = v2
        a3 = v3
        x = xs[i]
        if x_axis == 0:
            a0 = x
        elif x_axis == 1:
            a1 = x
        elif x_axis == 2:
            a2 = x
        else:
            a3 = x
        code, low, _, _, _, _ = classify_point(
            complex(a0, a1), complex(a2, a3),
            max_iters, radius_override, tol, budget)
        codes[i] = code
        if low:
            n_low += 1
    return n_low


@njit(cache=True, nogil=True)
def alternated_escape(z0, c1, c2, n_steps, radius_sq):
    """Escape index of z0 under the alternated iteration (c1 on even step
    indices, c2 on odd), or -1 when no escape occurs within n_steps."""
    z = z0
    m2 = z.real * z.real + z.imag * z.imag
    if not (m2 <= radius_sq):
        return 0
    for k in range(1, n_steps + 1):
        if (k - 1) % 2 == 0:
            z = z * z + c1
        else:
            z = z * z + c2
        m2 = z.real * z.real + z.imag * z.imag
        if not (m2 <= radius_sq):
            return k
    return -1


@njit(cache=True, nogil=True)
def alternated_escape_row(out, xs, y_val, c1, c2, n_steps, radius_sq):
    for i in range(xs.shape[0]):
        out[i] = alternated_escape(complex(xs[i], y_val), c1, c2,
                                   n_steps, radius_sq)
