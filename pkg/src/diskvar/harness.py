"""Randomized verification suites.

Three suites back the closed-form results numerically:

* membership: random interpolation data and random Schur-class parameters are
  pushed through the parametrizations; the predicted derivative must land in
  the predicted disk, every time;
* attainment: extremal functions are swept over parameter grids and must land
  on the predicted disk boundaries / bound values;
* tightness: coarse maximisation of |g''(z0)| over sampled parameters must
  approach the sharp bound from below and never cross it.

Sampling is deterministic: every sample draws from an independent RNG
substream keyed by (seed, suite tag, index), so serial and parallel runs
aggregate to identical reports (violation counts sum, margins reduce by min).
"""

import math
import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .bounds import theorem31_bound
from .disks import (
    dieudonne_disk,
    max_attaining_alpha,
    mercer_disk,
    schwarz_pick_disk,
    second_derivative_disk,
    second_order_dieudonne_disk,
)
from .extremal import ExtremalKind, branch_bound_for, make_extremal
from .functions import (
    Constant,
    PrescribedData,
    _schur_tree,
    dieudonne_parametrize,
    disk_sample,
    schur_parametrize,
    substream,
)
from .moebius import DomainError

__all__ = [
    "HarnessConfig",
    "HarnessReport",
    "run_membership_suite",
    "run_attainment_suite",
    "run_tightness_search",
    "MEMBERSHIP_FAMILIES",
]

MEMBERSHIP_FAMILIES = ("second", "dieudonne", "mercer")
_FAMILY_TAGS = {"second": 11, "dieudonne": 12, "mercer": 13}
_TIGHTNESS_TAG = 31


@dataclass(frozen=True)
class HarnessConfig:
    seed: int = 42
    samples: int = 10000
    tol_membership: float = 1e-8
    tol_attainment: float = 1e-8
    parallel: bool = False
    max_blaschke_degree: int = 4
    zero_modulus_cap: float = 0.95

    def __post_init__(self):
        if int(self.seed) < 0:
            raise DomainError("seed must be a non-negative integer")
        if int(self.samples) < 0:
            raise DomainError("samples must be non-negative")
        if not self.tol_membership > 0.0:
            raise DomainError("tol_membership must be positive")
        if not self.tol_attainment > 0.0:
            raise DomainError("tol_attainment must be positive")
        if int(self.max_blaschke_degree) < 1:
            raise DomainError("max_blaschke_degree must be at least 1")
        if not 0.0 < self.zero_modulus_cap < 1.0:
            raise DomainError("zero_modulus_cap must lie in (0, 1)")


@dataclass(frozen=True)
class HarnessReport:
    """Outcome of one suite.

    worst_margin is the most negative margin seen (None when nothing ran);
    positive margins mean comfortable passes.  wall_time is informational and
    is deliberately left out of the JSON form so reports for a fixed (seed,
    config) are byte-identical across runs.
    """

    suite: str
    samples: int
    violations: int
    worst_margin: float | None
    wall_time: float
    details: dict | None = None

    def to_obj(self):
        doc = {
            "suite": self.suite,
            "samples": self.samples,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
        }
        if self.details is not None:
            doc["details"] = self.details
        return doc


def _workers():
    env = os.environ.get("THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(os.cpu_count() or 1, 8)


def _chunk_ranges(n, pieces):
    size = max(1, math.ceil(n / pieces))
    return [(lo, min(lo + size, n)) for lo in range(0, n, size)]


def _map_chunks(fn, n, parallel):
    """Apply fn over index ranges; aggregation downstream must be
    order-independent (sum / min), which keeps parallel == serial."""
    if n == 0:
        return []
    if not parallel:
        return [fn((0, n))]
    ranges = _chunk_ranges(n, _workers() * 4)
    if len(ranges) == 1:
        return [fn(ranges[0])]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return [fn(rg) for rg in ranges]
    with ProcessPoolExecutor(max_workers=_workers(), mp_context=ctx) as pool:
        return list(pool.map(fn, ranges))


def _merge(parts):
    samples = sum(p[0] for p in parts)
    violations = sum(p[1] for p in parts)
    worsts = [p[2] for p in parts if p[2] is not None]
    return samples, violations, (min(worsts) if worsts else None)


def _nonzero_disk_sample(rng, cap):
    z = disk_sample(rng, cap)
    while abs(z) <= 1e-6:
        z = disk_sample(rng, cap)
    return z


def _membership_margin(cfg, family, index):
    """Inclusion margin of one random sample in its predicted disk."""
    rng = substream(cfg.seed, _FAMILY_TAGS[family], index)
    if family == "second":
        z0 = disk_sample(rng, 0.95)
        data = PrescribedData(z0, disk_sample(rng, 0.95), disk_sample(rng, 0.98))
        gstar = _schur_tree(rng, cfg.max_blaschke_degree, cfg.zero_modulus_cap)
        g = schur_parametrize(data, gstar)
        return second_derivative_disk(data).margin(g.jet(z0).f2)
    if family == "dieudonne":
        z0 = _nonzero_disk_sample(rng, 0.95)
        w0 = disk_sample(rng, 0.95) * z0
        fstar = _schur_tree(rng, cfg.max_blaschke_degree, cfg.zero_modulus_cap)
        f = dieudonne_parametrize(z0, w0, fstar)
        return dieudonne_disk(z0, w0).margin(f.jet(z0).f1)
    if family == "mercer":
        z0 = _nonzero_disk_sample(rng, 0.95)
        w0 = disk_sample(rng, 0.95) * z0
        z = disk_sample(rng, 0.95)
        fstar = _schur_tree(rng, cfg.max_blaschke_degree, cfg.zero_modulus_cap)
        f = dieudonne_parametrize(z0, w0, fstar)
        return mercer_disk(z0, w0, z).margin(f.value(z))
    raise DomainError(f"unknown membership family {family!r}")


def _membership_chunk(cfg, families, rg):
    lo, hi = rg
    n = 0
    violations = 0
    worst = None
    for index in range(lo, hi):
        for family in families:
            m = _membership_margin(cfg, family, index)
            n += 1
            if m < -cfg.tol_membership:
                violations += 1
            if worst is None or m < worst:
                worst = m
    return n, violations, worst


def run_membership_suite(cfg, families=MEMBERSHIP_FAMILIES):
    """Check cfg.samples random samples per family against their disks."""
    families = tuple(families)
    for family in families:
        if family not in _FAMILY_TAGS:
            raise DomainError(f"unknown membership family {family!r}")
    start = time.perf_counter()
    parts = _map_chunks(partial(_membership_chunk, cfg, families), cfg.samples, cfg.parallel)
    samples, violations, worst = _merge(parts)
    return HarnessReport(
        suite="membership:" + "+".join(families),
        samples=samples,
        violations=violations,
        worst_margin=worst,
        wall_time=time.perf_counter() - start,
        details={"families": list(families), "per_family_samples": cfg.samples},
    )


# -- attainment ---------------------------------------------------------------

_Z0_GRID = (0j, 0.4 + 0j, 0.3 + 0.45j, -0.62 + 0.1j)
_D0_GRID = (0j, 0.35 + 0j, -0.2 + 0.4j)
_D1_GRID = (0j, 0.3 + 0j, 0.5j, -0.4 + 0.35j)
_U0_GRID = (0j, 0.5 + 0j, -0.3 + 0.2j)
_RR_GRID = (0.1, 0.3, 0.5, 0.7, 0.9)


def _roots_of_unity(n):
    return tuple(complex(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n))


_ALPHA_GRID = _roots_of_unity(16)
_UNIMODULAR_GRID = _roots_of_unity(8)


def _attainment_rows(kind):
    """Yield (margin, ok) rows for one extremal kind.

    Distance rows use margin = -distance with ok = distance <= tol; interior
    rows (perturbed extremals) use the disk inclusion margin with ok =
    margin > 0.  The tolerance comparison happens in the caller.
    """
    if kind is ExtremalKind.SECOND_BOUNDARY:
        for z0 in _Z0_GRID:
            for d0 in _D0_GRID:
                for d1 in _D1_GRID:
                    data = PrescribedData(z0, d0, d1)
                    disk = second_derivative_disk(data)
                    for alpha in _ALPHA_GRID:
                        g = make_extremal(kind, z0=z0, delta0=d0, delta1=d1, alpha=alpha)
                        yield "boundary", disk.boundary_distance(g.jet(complex(z0)).f2)
                    best = max_attaining_alpha(data)
                    if best is not None:
                        g = make_extremal(kind, z0=z0, delta0=d0, delta1=d1, alpha=best)
                        top = abs(disk.center) + disk.radius
                        yield "boundary", abs(abs(g.jet(complex(z0)).f2) - top)
                    g = make_extremal(kind, z0=z0, delta0=d0, delta1=d1,
                                      alpha=0.99 * complex(math.cos(0.7), math.sin(0.7)))
                    yield "interior", disk.margin(g.jet(complex(z0)).f2)
    elif kind is ExtremalKind.SECOND_DEGENERATE:
        for z0 in _Z0_GRID:
            for d0 in _D0_GRID:
                for d1 in _UNIMODULAR_GRID:
                    data = PrescribedData(z0, d0, d1)
                    disk = second_derivative_disk(data)
                    g = make_extremal(kind, z0=z0, delta0=d0, delta1=d1)
                    yield "boundary", abs(g.jet(complex(z0)).f2 - disk.center)
    elif kind is ExtremalKind.SCHWARZ_PICK:
        for z0 in _Z0_GRID:
            for d0 in _D0_GRID:
                disk = schwarz_pick_disk(z0, d0)
                for alpha in _ALPHA_GRID:
                    g = make_extremal(kind, z0=z0, delta0=d0, alpha=alpha)
                    yield "boundary", disk.boundary_distance(g.jet(complex(z0)).f1)
    elif kind is ExtremalKind.DIEUDONNE:
        for z0 in _Z0_GRID[1:]:
            for u0 in _U0_GRID:
                w0 = u0 * z0
                disk = dieudonne_disk(z0, w0)
                for alpha in _ALPHA_GRID:
                    f = make_extremal(kind, z0=z0, w0=w0, alpha=alpha)
                    yield "boundary", disk.boundary_distance(f.jet(complex(z0)).f1)
    elif kind is ExtremalKind.DIEUDONNE2_BOUNDARY:
        for z0 in _Z0_GRID[1:]:
            for u0 in _U0_GRID:
                w0 = u0 * z0
                for d1 in _D1_GRID:
                    w1, disk = second_order_dieudonne_disk(z0, w0, d1)
                    for alpha in _ALPHA_GRID[::2]:
                        f = make_extremal(kind, z0=z0, w0=w0, delta1=d1, alpha=alpha)
                        jet = f.jet(complex(z0))
                        yield "boundary", disk.boundary_distance(jet.f2)
                    # the first derivative is pinned regardless of alpha
                    yield "boundary", abs(jet.f1 - w1)
    elif kind is ExtremalKind.DIEUDONNE2_DEGENERATE:
        for z0 in _Z0_GRID[1:]:
            for u0 in _U0_GRID:
                w0 = u0 * z0
                for d1 in _UNIMODULAR_GRID:
                    w1, disk = second_order_dieudonne_disk(z0, w0, d1)
                    f = make_extremal(kind, z0=z0, w0=w0, delta1=d1)
                    jet = f.jet(complex(z0))
                    yield "boundary", abs(jet.f2 - disk.center)
                    yield "boundary", abs(jet.f1 - w1)
    elif kind is ExtremalKind.SHARP_DEG1:
        for r in _RR_GRID:
            for R in _RR_GRID:
                for z0, d0 in ((complex(r), complex(R)),
                               (r * complex(math.cos(0.6), math.sin(0.6)),
                                R * complex(math.cos(-1.2), math.sin(-1.2)))):
                    bound = branch_bound_for(kind, z0, d0)
                    g = make_extremal(kind, z0=z0, delta0=d0)
                    jet = g.jet(z0)
                    yield "bound", abs(abs(jet.f2) - bound) / bound
                    yield "boundary", abs(jet.f0 - d0)
    elif kind is ExtremalKind.SHARP_DEG2:
        for r in _RR_GRID:
            for R in (0.0,) + _RR_GRID:
                if r + 2.0 * R >= 2.0:
                    continue
                for z0, d0 in ((complex(r), complex(R)),
                               (r * complex(math.cos(0.6), math.sin(0.6)),
                                R * complex(math.cos(-1.2), math.sin(-1.2)))):
                    bound = branch_bound_for(kind, z0, d0)
                    g = make_extremal(kind, z0=z0, delta0=d0)
                    jet = g.jet(z0)
                    yield "bound", abs(abs(jet.f2) - bound) / bound
                    yield "boundary", abs(abs(jet.f0) - abs(d0))
        for R in (0.35, 0.6):
            bound = branch_bound_for(kind, 0j, complex(R))
            for theta in (0.0, 1.3):
                g = make_extremal(kind, z0=0j, delta0=complex(R), theta=theta)
                yield "bound", abs(abs(g.jet(0j).f2) - bound) / bound
    elif kind is ExtremalKind.SZASZ:
        for r in (0.0, 0.25, 0.5, 0.75, 0.9):
            for theta in (0.0, 1.1):
                z0 = r * complex(math.cos(0.4), math.sin(0.4)) if r else 0j
                bound = branch_bound_for(kind, z0)
                g = make_extremal(kind, z0=z0, theta=theta)
                jet = g.jet(z0)
                yield "bound", abs(abs(jet.f2) - bound) / bound
                yield "boundary", abs(abs(jet.f0) - r * r / 8.0)
    else:
        raise DomainError(f"no attainment rows defined for {kind!r}")


def _normalize_kinds(kinds):
    if kinds is None:
        return tuple(ExtremalKind)
    return tuple(ExtremalKind(k) for k in kinds)


def run_attainment_suite(cfg, kinds=None):
    """Sweep extremal kinds over deterministic grids.

    Rows are deterministic (no sampling), so cfg.seed and cfg.parallel do not
    change the report.
    """
    kinds = _normalize_kinds(kinds)
    start = time.perf_counter()
    n = 0
    violations = 0
    worst = None
    per_kind = {}
    for kind in kinds:
        kind_violations = 0
        for row_type, value in _attainment_rows(kind):
            n += 1
            if row_type == "interior":
                margin = value
                ok = margin > 0.0
            else:
                margin = -value
                ok = value <= cfg.tol_attainment
            if not ok:
                violations += 1
                kind_violations += 1
            if worst is None or margin < worst:
                worst = margin
        per_kind[kind.value] = kind_violations
    return HarnessReport(
        suite="attainment",
        samples=n,
        violations=violations,
        worst_margin=worst,
        wall_time=time.perf_counter() - start,
        details={"kinds": [k.value for k in kinds], "violations_by_kind": per_kind},
    )


# -- tightness ----------------------------------------------------------------


def _tightness_chunk(cfg, r, R, bound, rg):
    lo, hi = rg
    z0 = complex(r)
    d0 = complex(R)
    n = 0
    violations = 0
    worst = None
    best = None
    total = max(1, cfg.samples)
    for index in range(lo, hi):
        rng = substream(cfg.seed, _TIGHTNESS_TAG, index)
        # stratify the delta1 modulus by index; phases stay uniform
        m = (index + rng.random()) / total
        phase = 2.0 * math.pi * rng.random()
        d1 = m * complex(math.cos(phase), math.sin(phase))
        data = PrescribedData(z0, d0, d1)
        alphas = [complex(math.cos(a), math.sin(a)) for a in (2.0 * math.pi * rng.random(),)]
        aligned = max_attaining_alpha(data)
        if aligned is not None:
            alphas.append(aligned)
        for alpha in alphas:
            g = schur_parametrize(data, Constant(alpha))
            second = abs(g.jet(z0).f2)
            n += 1
            margin = bound - second
            if margin < -cfg.tol_membership:
                violations += 1
            if worst is None or margin < worst:
                worst = margin
            if best is None or second > best:
                best = second
    return n, violations, worst, best


def run_tightness_search(cfg, r, R):
    """Sampled maximisation of |g''(z0)| at |z0| = r, |g(z0)| = R.

    The sample set is stratified over the delta1 modulus, includes the
    aligned boundary parameter for each sample, and always contains the
    closed-form extremal of the active branch, so the supremum is reached up
    to sampling resolution.  No sample may exceed the bound.
    """
    result = theorem31_bound(r, R)
    bound = result.value
    start = time.perf_counter()
    parts = _map_chunks(partial(_tightness_chunk, cfg, float(r), float(R), bound), cfg.samples, cfg.parallel)
    n, violations, worst, best = _merge_tightness(parts)

    # deterministic candidates: the branch extremal and unimodular delta1
    z0 = complex(float(r))
    d0 = complex(float(R))
    extremal_candidates = []
    if float(r) + 2.0 * float(R) >= 2.0:
        extremal_candidates.append(make_extremal(ExtremalKind.SHARP_DEG1, z0=z0, delta0=d0))
    else:
        extremal_candidates.append(make_extremal(ExtremalKind.SHARP_DEG2, z0=z0, delta0=d0))
    if abs(z0) > 0:
        for d1 in _UNIMODULAR_GRID:
            extremal_candidates.append(
                make_extremal(ExtremalKind.SECOND_DEGENERATE, z0=z0, delta0=d0, delta1=d1)
            )
    for g in extremal_candidates:
        second = abs(g.jet(z0).f2)
        n += 1
        margin = bound - second
        if margin < -cfg.tol_membership:
            violations += 1
        if worst is None or margin < worst:
            worst = margin
        if best is None or second > best:
            best = second

    return HarnessReport(
        suite="tightness",
        samples=n,
        violations=violations,
        worst_margin=worst,
        wall_time=time.perf_counter() - start,
        details={
            "r": float(r),
            "R": float(R),
            "branch": result.branch.value,
            "bound": bound,
            "best": best,
            "gap": None if best is None else bound - best,
        },
    )


def _merge_tightness(parts):
    n = sum(p[0] for p in parts)
    violations = sum(p[1] for p in parts)
    worsts = [p[2] for p in parts if p[2] is not None]
    bests = [p[3] for p in parts if p[3] is not None]
    return (
        n,
        violations,
        min(worsts) if worsts else None,
        max(bests) if bests else None,
    )
