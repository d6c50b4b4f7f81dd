"""Constructors for the functions that attain each variability-disk boundary
and each sharp bound, plus a small attainment checker.

Every constructor returns a ``FunctionExpr`` tree, so extremal functions can
be evaluated, differentiated via jets, serialized, and fed back through the
same machinery the harness uses for random samples.
"""

import cmath
from dataclasses import dataclass, field
from enum import Enum

from .bounds import Branch, branch_value
from .functions import (
    Bracket,
    Compose,
    Constant,
    Identity,
    MobiusT,
    Product,
    Rotation,
    eval_jet,
)
from .moebius import (
    Disk,
    DomainError,
    closed_disk_point,
    require_finite,
    unimodular_point,
    unit_disk_point,
)

__all__ = ["ExtremalKind", "make_extremal", "AttainmentReport", "verify_attainment"]


class ExtremalKind(Enum):
    """Which boundary or bound the constructed function attains."""

    SCHWARZ_PICK = "schwarz-pick"
    DIEUDONNE = "dieudonne"
    SECOND_DEGENERATE = "second-degenerate"
    SECOND_BOUNDARY = "second-boundary"
    DIEUDONNE2_DEGENERATE = "dieudonne2-degenerate"
    DIEUDONNE2_BOUNDARY = "dieudonne2-boundary"
    SHARP_DEG1 = "sharp-deg1"
    SHARP_DEG2 = "sharp-deg2"
    SZASZ = "szasz"


def _u(z0):
    """The normalising substitution u = T_{-z0}(z)."""
    return MobiusT(-z0, Identity())


def _need(value, name, kind):
    if value is None:
        raise DomainError(f"{kind.value} requires parameter {name}")
    return value


def make_extremal(kind, *, z0=None, delta0=None, delta1=None, alpha=None, w0=None, theta=0.0):
    """Build the extremal function of the given kind.

    Parameters vary by kind:

    * schwarz-pick: z0, delta0, alpha (|alpha| <= 1; boundary for |alpha| = 1)
    * dieudonne: z0, w0 (|w0| < |z0|), alpha (|alpha| <= 1)
    * second-degenerate: z0, delta0, delta1 with |delta1| = 1
    * second-boundary: z0, delta0, delta1 (|delta1| < 1), alpha (|alpha| <= 1)
    * dieudonne2-degenerate / dieudonne2-boundary: as above with w0 for delta0
    * sharp-deg1: z0 != 0, delta0; attains the deg1 branch value
    * sharp-deg2: z0, delta0 with |z0| + 2|delta0| < 2; attains the deg2
      branch value (theta picks the free rotation when z0 = 0 or delta0 = 0)
    * szasz: z0, theta; attains the Szasz bound with |g(z0)| = |z0|^2 / 8
    """
    kind = ExtremalKind(kind)
    theta = float(theta)

    if kind is ExtremalKind.SCHWARZ_PICK:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        delta0 = unit_disk_point(_need(delta0, "delta0", kind), "delta0")
        alpha = closed_disk_point(_need(alpha, "alpha", kind), "alpha")
        return MobiusT(delta0, Product(Constant(alpha), _u(z0)))

    if kind is ExtremalKind.DIEUDONNE:
        z0, u0 = _zero_fixing_data(z0, w0, kind)
        alpha = closed_disk_point(_need(alpha, "alpha", kind), "alpha")
        return Product(Identity(), MobiusT(u0, Product(Constant(alpha), _u(z0))))

    if kind is ExtremalKind.SECOND_DEGENERATE:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        delta0 = unit_disk_point(_need(delta0, "delta0", kind), "delta0")
        delta1 = unimodular_point(_need(delta1, "delta1", kind), "delta1")
        return MobiusT(delta0, Product(Constant(delta1), _u(z0)))

    if kind is ExtremalKind.SECOND_BOUNDARY:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        delta0 = unit_disk_point(_need(delta0, "delta0", kind), "delta0")
        delta1 = unit_disk_point(_need(delta1, "delta1", kind), "delta1")
        alpha = closed_disk_point(_need(alpha, "alpha", kind), "alpha")
        u = _u(z0)
        return MobiusT(delta0, Product(u, MobiusT(delta1, Product(Constant(alpha), u))))

    if kind is ExtremalKind.DIEUDONNE2_DEGENERATE:
        z0, u0 = _zero_fixing_data(z0, w0, kind)
        delta1 = unimodular_point(_need(delta1, "delta1", kind), "delta1")
        return Product(Identity(), MobiusT(u0, Product(Constant(delta1), _u(z0))))

    if kind is ExtremalKind.DIEUDONNE2_BOUNDARY:
        z0, u0 = _zero_fixing_data(z0, w0, kind)
        delta1 = unit_disk_point(_need(delta1, "delta1", kind), "delta1")
        alpha = closed_disk_point(_need(alpha, "alpha", kind), "alpha")
        u = _u(z0)
        return Product(
            Identity(),
            MobiusT(u0, Product(u, MobiusT(delta1, Product(Constant(alpha), u)))),
        )

    if kind is ExtremalKind.SHARP_DEG1:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        delta0 = unit_disk_point(_need(delta0, "delta0", kind), "delta0")
        r, R = abs(z0), abs(delta0)
        if r == 0.0:
            raise DomainError("sharp-deg1 requires z0 != 0")
        rot = cmath.phase(-z0.conjugate() * delta0) if delta0 != 0 else 0.0
        a = (r + R) * z0 / (r * (1.0 + r * R))
        return Rotation(rot, Bracket(a, Identity()))

    if kind is ExtremalKind.SHARP_DEG2:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        delta0 = unit_disk_point(_need(delta0, "delta0", kind), "delta0")
        return _sharp_deg2(z0, delta0, theta)

    if kind is ExtremalKind.SZASZ:
        z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
        r = abs(z0)
        if r == 0.0:
            return Rotation(theta, Product(Identity(), Identity()))
        R = r * r / 8.0
        delta0 = R * cmath.exp(1j * (theta - cmath.phase(-z0.conjugate() ** 2)))
        return _sharp_deg2(z0, delta0, theta)

    raise DomainError(f"unknown extremal kind {kind!r}")


def _zero_fixing_data(z0, w0, kind):
    z0 = unit_disk_point(_need(z0, "z0", kind), "z0")
    w0 = require_finite(_need(w0, "w0", kind), "w0")
    if abs(w0) >= abs(z0):
        raise DomainError(f"{kind.value} requires |w0| < |z0|")
    return z0, w0 / z0


def _sharp_deg2(z0, delta0, theta):
    """Compose(G, u) with G(u) = T_{delta0}(u T_{delta1}(alpha u)), the
    degree-2 rational attaining the deg2 branch bound."""
    r, R = abs(z0), abs(delta0)
    if r + 2.0 * R >= 2.0:
        raise DomainError("sharp-deg2 requires |z0| + 2|delta0| < 2")
    if R > 0.0 and r > 0.0:
        # phase-wise: the product forms underflow for tiny r, R
        rel = cmath.phase(delta0) - cmath.phase(z0)
        delta1 = -(r / (2.0 * (1.0 - R))) * cmath.exp(1j * rel)
        alpha = -cmath.exp(1j * (rel - cmath.phase(z0)))
    elif R > 0.0:
        # z0 = 0: T_{delta0}(alpha z^2) with a free rotation
        delta1 = 0j
        alpha = cmath.exp(1j * theta)
    else:
        # delta0 = 0: any |delta1| = r/2 with the phase-matched alpha
        alpha = cmath.exp(1j * theta)
        delta1 = alpha * z0 / 2.0
    ident = Identity()
    g_outer = MobiusT(delta0, Product(ident, MobiusT(delta1, Product(Constant(alpha), ident))))
    return Compose(g_outer, _u(z0))


# which jet component each kind pins to its target
_FIRST_ORDER_KINDS = frozenset({ExtremalKind.SCHWARZ_PICK, ExtremalKind.DIEUDONNE})


@dataclass(frozen=True)
class AttainmentReport:
    """Measured jet of an extremal function against its target.

    ``distance`` is the absolute distance to the disk boundary when the
    target is a Disk, and the relative gap | |g''| - bound | / bound when the
    target is a positive real bound.
    """

    kind: ExtremalKind
    value: complex
    first: complex
    second: complex
    target: str
    distance: float
    tol: float
    passed: bool
    params: dict = field(default_factory=dict)


def verify_attainment(kind, params, expected, tol):
    """Build the extremal of ``kind`` with ``params`` (a dict of keyword
    arguments for :func:`make_extremal`) and check that it lands on
    ``expected`` (a Disk boundary or a real bound) within ``tol``."""
    kind = ExtremalKind(kind)
    if tol < 0.0:
        raise DomainError("tol must be non-negative")
    g = make_extremal(kind, **params)
    z0 = complex(params.get("z0", 0j) or 0j)
    j = eval_jet(g, z0)
    probe = j.f1 if kind in _FIRST_ORDER_KINDS else j.f2
    if isinstance(expected, Disk):
        distance = expected.boundary_distance(probe)
        target = f"boundary of disk(center={expected.center!r}, radius={expected.radius!r})"
    else:
        bound = float(expected)
        if bound <= 0.0:
            raise DomainError("a bound target must be positive")
        distance = abs(abs(probe) - bound) / bound
        target = f"bound {bound!r}"
    return AttainmentReport(
        kind=kind,
        value=j.f0,
        first=j.f1,
        second=j.f2,
        target=target,
        distance=distance,
        tol=float(tol),
        passed=distance <= tol,
        params=dict(params),
    )


def branch_bound_for(kind, z0, delta0=None):
    """Closed-form target value the sharp kinds are expected to attain."""
    kind = ExtremalKind(kind)
    r = abs(complex(z0))
    if kind is ExtremalKind.SZASZ:
        return branch_value(Branch.SZASZ, r)
    R = abs(complex(delta0 if delta0 is not None else 0j))
    if kind is ExtremalKind.SHARP_DEG1:
        return branch_value(Branch.DEG1, r, R)
    if kind is ExtremalKind.SHARP_DEG2:
        if R == 0.0:
            return branch_value(Branch.DEG2_ZERO, r)
        return branch_value(Branch.DEG2, r, R)
    raise DomainError(f"{kind.value} does not target a scalar bound")
