"""Unit-disk Moebius maps, pseudo-hyperbolic differences, closed disks, and
second-order jet arithmetic.

Everything here works on plain ``complex`` scalars.  Domains are checked at
the API boundary: open-disk arguments must satisfy |z| < 1, closed-disk
arguments |z| <= 1 (with a tiny slack so that unimodular values produced by
``cmath.exp`` are accepted).
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "DomainError",
    "PoleError",
    "DegeneracyError",
    "require_finite",
    "unit_disk_point",
    "closed_disk_point",
    "unimodular_point",
    "mobius_T",
    "mobius_T_inverse",
    "hyperbolic_bracket",
    "Disk",
    "disk_contains",
    "Jet2",
    "jet_add",
    "jet_sub",
    "jet_scale",
    "jet_mul",
    "jet_div",
    "jet_compose",
    "jet_mobius",
    "jet_bracket",
]

# |z| <= 1 + _CLOSED_SLACK counts as the closed disk; covers e^{i theta}
# computed in doubles.
_CLOSED_SLACK = 1e-12


class DomainError(ValueError):
    """An input lies outside the domain declared for the operation."""


class PoleError(ZeroDivisionError):
    """A denominator vanished while evaluating a map or a jet."""


class DegeneracyError(ArithmeticError):
    """The requested functional is undefined for this function/point."""


def require_finite(z, name="value"):
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainError(f"{name} must have finite components, got {z!r}")
    return z


def unit_disk_point(z, name="z"):
    """Validate |z| < 1 and return z as a complex number."""
    z = require_finite(z, name)
    if abs(z) >= 1.0:
        raise DomainError(f"{name} must lie in the open unit disk, |{name}| = {abs(z)}")
    return z


def closed_disk_point(z, name="z"):
    """Validate |z| <= 1 and return z as a complex number."""
    z = require_finite(z, name)
    if abs(z) > 1.0 + _CLOSED_SLACK:
        raise DomainError(f"{name} must lie in the closed unit disk, |{name}| = {abs(z)}")
    return z


def unimodular_point(z, name="alpha"):
    """Validate |z| = 1 (within 1e-9) and renormalise exactly onto the circle."""
    z = require_finite(z, name)
    m = abs(z)
    if abs(m - 1.0) > 1e-9:
        raise DomainError(f"{name} must be unimodular, |{name}| = {m}")
    return z / m


def mobius_T(a, z):
    """Disk automorphism T_a(z) = (z + a) / (1 + conj(a) z)."""
    a = unit_disk_point(a, "a")
    z = closed_disk_point(z, "z")
    return (z + a) / (1.0 + a.conjugate() * z)


def mobius_T_inverse(a, w):
    """Inverse automorphism; T_a^{-1} = T_{-a}."""
    a = unit_disk_point(a, "a")
    return mobius_T(-a, w)


def hyperbolic_bracket(z, w):
    """Pseudo-hyperbolic difference [z, w] = (z - w) / (1 - conj(w) z).

    [z, z] = 0 even for |z| = 1.  For z != w the base point must satisfy
    |w| < 1; a unimodular w with z != w is refused rather than guessed at.
    """
    z = closed_disk_point(z, "z")
    w = closed_disk_point(w, "w")
    if z == w:
        return 0j
    if abs(w) >= 1.0:
        raise DomainError("bracket base point must satisfy |w| < 1 when z != w")
    return (z - w) / (1.0 - w.conjugate() * z)


@dataclass(frozen=True)
class Disk:
    """Closed disk {p : |p - center| <= radius}; radius 0 encodes a point."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", require_finite(self.center, "center"))
        r = float(self.radius)
        if not math.isfinite(r) or r < 0.0:
            raise DomainError(f"radius must be finite and non-negative, got {r}")
        object.__setattr__(self, "radius", r)

    def contains(self, p, tol=0.0):
        return disk_contains(self, p, tol)

    def boundary_distance(self, p):
        """Distance of p from the boundary circle: | |p - center| - radius |."""
        return abs(abs(require_finite(p, "p") - self.center) - self.radius)

    def margin(self, p):
        """Signed inclusion margin (radius - |p - center|) / (1 + radius).

        Positive inside, negative outside; the 1 + radius scaling matches the
        relative tolerance used by :func:`disk_contains`.
        """
        p = require_finite(p, "p")
        return (self.radius - abs(p - self.center)) / (1.0 + self.radius)


def disk_contains(d, p, tol=0.0):
    """Membership with relative slack: |p - center| <= radius + tol*(1 + radius)."""
    if tol < 0.0:
        raise DomainError("tol must be non-negative")
    p = require_finite(p, "p")
    return abs(p - d.center) <= d.radius + tol * (1.0 + d.radius)


class Jet2(NamedTuple):
    """Second-order jet (f(z0), f'(z0), f''(z0)) of an analytic map.

    All binary operations assume both operands are expanded at the same base
    point; combining jets taken at different points is meaningless and is not
    detectable from the values themselves.
    """

    f0: complex
    f1: complex
    f2: complex

    @classmethod
    def constant(cls, c):
        return cls(complex(c), 0j, 0j)

    @classmethod
    def variable(cls, z0):
        """Jet of the identity map at z0."""
        return cls(complex(z0), 1.0 + 0j, 0j)


def jet_add(a, b):
    return Jet2(a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2)


def jet_sub(a, b):
    return Jet2(a.f0 - b.f0, a.f1 - b.f1, a.f2 - b.f2)


def jet_scale(s, a):
    s = complex(s)
    return Jet2(s * a.f0, s * a.f1, s * a.f2)


def jet_mul(a, b):
    """Leibniz to second order: (fg)'' = f''g + 2f'g' + fg''."""
    return Jet2(
        a.f0 * b.f0,
        a.f1 * b.f0 + a.f0 * b.f1,
        a.f2 * b.f0 + 2.0 * a.f1 * b.f1 + a.f0 * b.f2,
    )


def jet_div(a, b):
    """Quotient jet; solves a = q*b order by order."""
    if b.f0 == 0:
        raise PoleError("jet division by a jet with zero value part")
    q0 = a.f0 / b.f0
    q1 = (a.f1 - q0 * b.f1) / b.f0
    q2 = (a.f2 - 2.0 * q1 * b.f1 - q0 * b.f2) / b.f0
    return Jet2(q0, q1, q2)


def jet_compose(outer, inner):
    """Chain rule; ``outer`` must be expanded at ``inner.f0``."""
    return Jet2(
        outer.f0,
        outer.f1 * inner.f1,
        outer.f2 * inner.f1 * inner.f1 + outer.f1 * inner.f2,
    )


def jet_mobius(a, x):
    """Push the jet x through T_a."""
    a = unit_disk_point(a, "a")
    ac = a.conjugate()
    num = Jet2(x.f0 + a, x.f1, x.f2)
    den = Jet2(1.0 + ac * x.f0, ac * x.f1, ac * x.f2)
    return jet_div(num, den)


def jet_bracket(w, x):
    """Push the jet x through z -> [z, w]."""
    w = unit_disk_point(w, "w")
    wc = w.conjugate()
    num = Jet2(x.f0 - w, x.f1, x.f2)
    den = Jet2(1.0 - wc * x.f0, -wc * x.f1, -wc * x.f2)
    return jet_div(num, den)
