"""Connectivity classification for alternated quadratic Julia sets.

Two quadratic maps z^2 + c1 and z^2 + c2 applied in alternation (c1 on even
step indices) share their boundedness behaviour with the quartic composition
Q(w) = (w^2 + c1)^2 + c2.  The filled set of the alternated system is
therefore connected when both critical orbits of Q (from 0 and from a square
root of -c1) stay bounded, totally disconnected when both escape, and in the
mixed case disconnected exactly when the bounded orbit is periodic.

Everything in this module is a pure function of its arguments: no shared
mutable state, safe to call from any number of threads.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional, Sequence, Union

from . import _kernels


class ConnectivityClass(IntEnum):
    """Three-way verdict; the numeric codes are the on-disk cell contract."""

    TOTALLY_DISCONNECTED = 0
    CONNECTED = 1
    DISCONNECTED = 2

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def short(self) -> str:
        return _SHORT_BY_CLASS[self]

    @classmethod
    def from_short(cls, code: str) -> "ConnectivityClass":
        try:
            return _CLASS_BY_SHORT[code.lower()]
        except KeyError:
            raise ValueError(
                f"unknown class code {code!r}; expected one of cl, dl, tdl"
            ) from None

    @classmethod
    def short_names(cls) -> tuple:
        return tuple(_CLASS_BY_SHORT)


_SHORT_BY_CLASS = {
    ConnectivityClass.CONNECTED: "cl",
    ConnectivityClass.DISCONNECTED: "dl",
    ConnectivityClass.TOTALLY_DISCONNECTED: "tdl",
}
_CLASS_BY_SHORT = {v: k for k, v in _SHORT_BY_CLASS.items()}


def _require_finite(name: str, z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")


@dataclass(frozen=True)
class MapParams:
    """Ordered parameter pair; c1 acts on even steps, so order matters."""

    c1: complex
    c2: complex

    def __post_init__(self):
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        _require_finite("c1", self.c1)
        _require_finite("c2", self.c2)

    def conjugate(self) -> "MapParams":
        return MapParams(self.c1.conjugate(), self.c2.conjugate())

    def swapped(self) -> "MapParams":
        return MapParams(self.c2, self.c1)


@dataclass(frozen=True)
class IterationConfig:
    """Budgets and tolerances for orbit analysis.

    max_quartic_iters bounds the boundedness phase, cycle_search_budget the
    extra quartic steps spent hunting for a period, cycle_tolerance is the
    relative closeness threshold for cycle detection, and
    escape_radius_override (when set) replaces the derived escape radius; it
    must dominate the derived bound and is rejected otherwise at call sites.
    """

    max_quartic_iters: int = 500
    cycle_tolerance: float = 1e-9
    cycle_search_budget: int = 2048
    escape_radius_override: Optional[float] = None

    def __post_init__(self):
        if self.max_quartic_iters < 1:
            raise ValueError("max_quartic_iters must be >= 1")
        if not self.cycle_tolerance > 0.0:
            raise ValueError("cycle_tolerance must be > 0")
        if self.cycle_search_budget < 2:
            raise ValueError("cycle_search_budget must be >= 2")
        if self.escape_radius_override is not None:
            if not self.escape_radius_override > 0.0:
                raise ValueError("escape_radius_override must be > 0")


DEFAULT_CONFIG = IterationConfig()


@dataclass(frozen=True)
class Escaped:
    escape_iter: int

    bounded = False


@dataclass(frozen=True)
class BoundedPeriodic:
    period: int

    bounded = True


@dataclass(frozen=True)
class BoundedNoCycleFound:
    bounded = True


OrbitFate = Union[Escaped, BoundedPeriodic, BoundedNoCycleFound]


@dataclass(frozen=True)
class ClassificationResult:
    """Verdict plus the orbit evidence it was derived from.

    connectivity is a pure function of (fate_zero, fate_crit); low_confidence
    is set whenever a bounded orbit exhausted the cycle search budget.
    """

    connectivity: ConnectivityClass
    fate_zero: OrbitFate
    fate_crit: OrbitFate
    low_confidence: bool


def escape_radius(params: MapParams) -> float:
    """Escape bound max(2, |c1|, |c2|).

    Beyond this radius every alternated step strictly grows the modulus
    (|z^2 + c| >= |z|^2 - |c| > |z| once |z| > max(2, |c|)), so crossing it
    certifies divergence.
    """
    return max(2.0, abs(params.c1), abs(params.c2))


def _override_or_zero(params: MapParams, config: IterationConfig) -> float:
    """Validated escape-radius override, or 0.0 meaning "derive per point"."""
    if config.escape_radius_override is None:
        return 0.0
    bound = escape_radius(params)
    if config.escape_radius_override < bound:
        raise ValueError(
            f"escape_radius_override {config.escape_radius_override} is below "
            f"the sound bound {bound} for these params")
    return float(config.escape_radius_override)


def resolved_radius(params: MapParams, config: IterationConfig) -> float:
    """The escape radius actually used: the override when set, else the bound."""
    override = _override_or_zero(params, config)
    return override if override > 0.0 else escape_radius(params)


def alternated_step(z: complex, params: MapParams, n: int) -> complex:
    """One step of the alternated iteration at step index n (c1 when n is even)."""
    if n < 0:
        raise ValueError("step index must be non-negative")
    c = params.c1 if n % 2 == 0 else params.c2
    return z * z + c


def quartic_step(w: complex, params: MapParams) -> complex:
    """The two-step composition (w^2 + c1)^2 + c2, evaluated exactly as two
    alternated steps so the composition identity holds bit for bit."""
    t = w * w + params.c1
    return t * t + params.c2


def critical_points(c1: complex) -> list[complex]:
    """Critical points of the quartic whose orbits decide connectivity.

    Returns [0, principal sqrt(-c1)]; the mirrored root -sqrt(-c1) has the
    identical orbit because the quartic is even, so it is not listed.  Both
    entries coincide at 0 when c1 = 0.
    """
    c1 = complex(c1)
    # 0.0 - x maps -0.0 to +0.0 so the principal branch is taken on the cut.
    return [0j, cmath.sqrt(complex(0.0 - c1.real, 0.0 - c1.imag))]


def _wrap_fate(tag: int, n: int) -> OrbitFate:
    if tag == _kernels.ESCAPED:
        return Escaped(int(n))
    if tag == _kernels.PERIODIC:
        return BoundedPeriodic(int(n))
    return BoundedNoCycleFound()


def orbit_fate(w0: complex, params: MapParams,
               config: IterationConfig = DEFAULT_CONFIG) -> OrbitFate:
    """Fate of the quartic orbit started at w0.

    Escaped(k) at the first index whose modulus crosses the escape radius
    (k = 0 for w0 itself); otherwise the orbit counts as bounded and a Brent
    cycle search runs on up to cycle_search_budget further steps.
    """
    r = resolved_radius(params, config)
    tag, n = _kernels.quartic_orbit_fate(
        complex(w0), params.c1, params.c2,
        config.max_quartic_iters, r * r,
        config.cycle_tolerance, config.cycle_search_budget)
    return _wrap_fate(tag, n)


def detect_cycle(orbit_tail: Sequence[complex], tol: float) -> Optional[int]:
    """Smallest period visible in orbit_tail, or None.

    Brent-style search over the already-computed sequence: the tortoise stays
    anchored while the hare walks forward, teleporting the tortoise at powers
    of two.  Points x, y count as equal when |x - y| <= tol * max(1, |x|)
    with x the tortoise.  The input should start after the boundedness
    transient so the orbit has settled onto its cycle.
    """
    if not tol > 0.0:
        raise ValueError("tol must be > 0")
    tail = list(orbit_tail)
    if not tail:
        return None
    tortoise = complex(tail[0])
    power = 1
    lam = 0
    for idx in range(1, len(tail)):
        hare = complex(tail[idx])
        lam += 1
        ref = abs(tortoise)
        if ref < 1.0:
            ref = 1.0
        if abs(tortoise - hare) <= tol * ref:
            return lam
        if lam == power:
            tortoise = hare
            power *= 2
            lam = 0
    return None


def classify(params: MapParams,
             config: IterationConfig = DEFAULT_CONFIG) -> ClassificationResult:
    """Three-way connectivity verdict from the two critical orbit fates.

    Both bounded -> connected (periodicity is irrelevant in that branch);
    both escaped -> totally disconnected; exactly one bounded -> disconnected
    when the bounded orbit is periodic, totally disconnected (flagged
    low-confidence) when no cycle was found within budget.
    """
    override = _override_or_zero(params, config)
    code, low, fz_tag, fz_n, fc_tag, fc_n = _kernels.classify_point(
        params.c1, params.c2, config.max_quartic_iters, override,
        config.cycle_tolerance, config.cycle_search_budget)
    return ClassificationResult(
        connectivity=ConnectivityClass(int(code)),
        fate_zero=_wrap_fate(fz_tag, fz_n),
        fate_crit=_wrap_fate(fc_tag, fc_n),
        low_confidence=bool(low),
    )
