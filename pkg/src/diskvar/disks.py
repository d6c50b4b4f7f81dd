"""Exact variability regions (closed disks) for values and derivatives of
analytic self-maps of the unit disk, and the invariant derivative functionals
used to state them.

Conventions: g is analytic with |g| <= 1 on the disk; r = |z0|, s = |w0|,
R = |delta0|.  Every region below is sharp: the harness in
``diskvar.harness`` checks membership on random samples and the extremal
constructors in ``diskvar.extremal`` land on each boundary.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .functions import eval_jet
from .moebius import (
    DegeneracyError,
    Disk,
    DomainError,
    closed_disk_point,
    mobius_T,
    require_finite,
    unit_disk_point,
)

__all__ = [
    "schwarz_pick_disk",
    "rogosinski_disk",
    "mercer_disk",
    "dieudonne_disk",
    "second_derivative_disk",
    "modulus_max_second_derivative",
    "max_attaining_alpha",
    "SecondOrderData",
    "SecondOrderDisk",
    "second_order_dieudonne_disk",
    "DerivativePair",
    "peschl_pair",
    "hyperbolic_d1",
    "peschl_d2",
    "hyperbolic_h2",
    "H2_DEGENERACY_THRESHOLD",
]


def schwarz_pick_disk(z0, delta0):
    """Region of g'(z0) over self-maps with g(z0) = delta0.

    The disk is centered at 0 with radius (1 - |delta0|^2) / (1 - |z0|^2).
    """
    z0 = unit_disk_point(z0, "z0")
    delta0 = unit_disk_point(delta0, "delta0")
    return Disk(0j, (1.0 - abs(delta0) ** 2) / (1.0 - abs(z0) ** 2))


def rogosinski_disk(z0, gprime0):
    """Region of g(z0) over self-maps with g(0) = 0 and g'(0) = gprime0."""
    z0 = unit_disk_point(z0, "z0")
    b = unit_disk_point(gprime0, "gprime0")
    r2 = abs(z0) ** 2
    b2 = abs(b) ** 2
    den = 1.0 - r2 * b2
    return Disk(z0 * b * (1.0 - r2) / den, r2 * (1.0 - b2) / den)


def dieudonne_disk(z0, w0):
    """Region of f'(z0) over self-maps with f(0) = 0 and f(z0) = w0.

    center = w0/z0, radius = (|z0|^2 - |w0|^2) / (|z0| (1 - |z0|^2)).
    Writing f = z h with h(z0) = w0/z0, this is w0/z0 plus z0 times the
    Schwarz-Pick disk of h'(z0).
    """
    z0 = require_finite(z0, "z0")
    w0 = require_finite(w0, "w0")
    r = abs(z0)
    s = abs(w0)
    if r >= 1.0:
        raise DomainError("z0 must lie in the open unit disk")
    if s >= r:
        raise DomainError("dieudonne_disk requires |w0| < |z0|")
    return Disk(w0 / z0, (r * r - s * s) / (r * (1.0 - r * r)))


def mercer_disk(z0, w0, z):
    """Region of g(z) over self-maps with g(0) = 0 and g(z0) = w0.

    With u0 = w0/z0 and t = T_{-z0}(z), the region is z times the two-point
    Schwarz-Pick disk of h(z) for h = g/z:

        center = z u0 (1 - |t|^2) / (1 - |u0|^2 |t|^2)
        radius = |z t| (1 - |u0|^2) / (1 - |u0|^2 |t|^2)

    At z = z0 the region degenerates to the point {w0}; as z0 -> 0 with
    w0/z0 -> b it converges to the Rogosinski disk for g'(0) = b.
    """
    z0 = require_finite(z0, "z0")
    w0 = require_finite(w0, "w0")
    z = unit_disk_point(z, "z")
    if abs(z0) >= 1.0:
        raise DomainError("z0 must lie in the open unit disk")
    if abs(w0) >= abs(z0):
        raise DomainError("mercer_disk requires |w0| < |z0|")
    u0 = w0 / z0
    t = mobius_T(-z0, z)
    k2 = abs(t) ** 2
    m2 = abs(u0) ** 2
    den = 1.0 - m2 * k2
    return Disk(z * u0 * (1.0 - k2) / den, abs(z * t) * (1.0 - m2) / den)


def second_derivative_disk(data):
    """Region of g''(z0) over self-maps with the given value and hyperbolic
    derivative at z0.

        c2  = 2 (1 - |delta0|^2) (conj(z0) - conj(delta0) delta1) delta1 / (1 - |z0|^2)^2
        rho2 = 2 (1 - |delta0|^2) (1 - |delta1|^2) / (1 - |z0|^2)^2

    For |delta1| = 1 the radius vanishes: the class contains exactly one
    function (a degree-1 Blaschke product) and g''(z0) = c2.
    """
    z0, d0, d1 = data.z0, data.delta0, data.delta1
    lead = 2.0 * (1.0 - abs(d0) ** 2) / (1.0 - abs(z0) ** 2) ** 2
    center = lead * (z0.conjugate() - d0.conjugate() * d1) * d1
    radius = lead * (1.0 - abs(d1) ** 2)
    return Disk(center, radius)


def modulus_max_second_derivative(data):
    """max |g''(z0)| over the class, i.e. |c2| + rho2."""
    d = second_derivative_disk(data)
    return abs(d.center) + d.radius


def max_attaining_alpha(data):
    """Boundary parameter alpha at which |g''(z0)| is maximal.

    Returns None when the center vanishes (delta1 = 0 or the centered case):
    then every unimodular alpha attains the maximum.
    """
    d = second_derivative_disk(data)
    if d.center == 0:
        return None
    return d.center / abs(d.center)


class SecondOrderDisk(NamedTuple):
    """Derived first derivative w1 and the region of f''(z0)."""

    w1: complex
    region: Disk


@dataclass(frozen=True)
class SecondOrderData:
    """Zero-fixing interpolation data (f(0) = 0, f(z0) = w0) augmented with
    the hyperbolic parameter delta1 of h = f/z and the induced f'(z0) = w1.

    w1 is determined by (z0, w0, delta1); the constructor checks consistency
    rather than trusting the caller.
    """

    z0: complex
    w0: complex
    delta1: complex
    w1: complex

    def __post_init__(self):
        z0 = unit_disk_point(self.z0, "z0")
        w0 = require_finite(self.w0, "w0")
        if abs(w0) >= abs(z0):
            raise DomainError("SecondOrderData requires |w0| < |z0|")
        d1 = closed_disk_point(self.delta1, "delta1")
        w1 = require_finite(self.w1, "w1")
        expected = _first_derivative_value(z0, w0, d1)
        if abs(w1 - expected) > 1e-12 * (1.0 + abs(expected)):
            raise DomainError(
                f"w1 = {w1!r} is inconsistent with (z0, w0, delta1); "
                f"expected {expected!r}"
            )
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "w0", w0)
        object.__setattr__(self, "delta1", d1)
        object.__setattr__(self, "w1", w1)

    @classmethod
    def from_delta1(cls, z0, w0, delta1):
        z0 = unit_disk_point(z0, "z0")
        w0 = require_finite(w0, "w0")
        delta1 = closed_disk_point(delta1, "delta1")
        return cls(z0, w0, delta1, _first_derivative_value(z0, w0, delta1))


def _first_derivative_value(z0, w0, delta1):
    # w1 = c1 + rho1 * r * delta1 / conj(z0) with (c1, rho1) the first-order disk
    d = dieudonne_disk(z0, w0)
    return d.center + d.radius * abs(z0) * delta1 / z0.conjugate()


def second_order_dieudonne_disk(z0, w0, delta1):
    """Region of f''(z0) over self-maps with f(0) = 0, f(z0) = w0 and first
    derivative pinned at w1 (returned alongside the region).

        c2'  = 2 (r^2 - s^2) delta1 (1 - (z0 conj(w0)/conj(z0)) delta1) / (r^2 (1 - r^2)^2)
        rho2' = 2 (r^2 - s^2) (1 - |delta1|^2) / (r (1 - r^2)^2)
    """
    data = SecondOrderData.from_delta1(z0, w0, delta1)
    z0, w0, d1 = data.z0, data.w0, data.delta1
    r = abs(z0)
    s = abs(w0)
    lead = 2.0 * (r * r - s * s) / (1.0 - r * r) ** 2
    center = (lead / (r * r)) * d1 * (1.0 - (z0 * w0.conjugate() / z0.conjugate()) * d1)
    radius = (lead / r) * (1.0 - abs(d1) ** 2)
    return SecondOrderDisk(data.w1, Disk(center, radius))


class DerivativePair(NamedTuple):
    d1: complex
    d2: complex


def peschl_pair(g, z0):
    """First and second invariant derivatives of g at z0.

        D1 g = (1 - |z0|^2) g' / (1 - |g|^2)
        D2 g = (1 - |z0|^2)^2 / (1 - |g|^2)
               * [ g'' - 2 conj(z0) g' / (1 - |z0|^2) + 2 conj(g) g'^2 / (1 - |g|^2) ]

    Undefined when |g(z0)| = 1 (g is then a unimodular constant).
    """
    j = eval_jet(g, z0)
    z0 = complex(z0)
    gden = 1.0 - abs(j.f0) ** 2
    if gden <= 0.0:
        raise DegeneracyError("|g(z0)| = 1: invariant derivatives are undefined")
    zden = 1.0 - abs(z0) ** 2
    d1 = zden * j.f1 / gden
    inner = j.f2 - 2.0 * z0.conjugate() * j.f1 / zden + 2.0 * j.f0.conjugate() * j.f1 * j.f1 / gden
    d2 = zden * zden * inner / gden
    return DerivativePair(d1, d2)


def hyperbolic_d1(g, z0):
    """Hyperbolic derivative (1 - |z0|^2) g'(z0) / (1 - |g(z0)|^2)."""
    return peschl_pair(g, z0).d1


def peschl_d2(g, z0):
    """Second invariant derivative; satisfies |D2 g| <= 2 (1 - |D1 g|^2),
    with equality exactly for Blaschke products of degree <= 2."""
    return peschl_pair(g, z0).d2


H2_DEGENERACY_THRESHOLD = 1e-12


def hyperbolic_h2(g, z0):
    """Normalised second derivative D2 g / (2 (1 - |D1 g|^2)).

    Raises DegeneracyError when 1 - |D1 g|^2 <= 1e-12: g behaves like a
    Blaschke product of degree <= 1 at z0 and the quotient is ill-posed.
    """
    d1, d2 = peschl_pair(g, z0)
    den = 1.0 - abs(d1) ** 2
    if den <= H2_DEGENERACY_THRESHOLD:
        raise DegeneracyError(
            "1 - |D1 g|^2 is below the degeneracy threshold (degree <= 1 behaviour)"
        )
    return d2 / (2.0 * den)
