"""
Sensor coverage on a discretized planar region.

Grid points sit at ``resolution`` spacing over the region, row by row
(y ascending, then x ascending). Each sensor monitors an open disk. A
grid point covered by at least one disk takes as its aura the grid trace
of the nearest covering sensor's disk (ties to the lowest sensor index);
an uncovered point gets itself, or every grid point closer than delta
when ``uncovered_aura=("delta", delta)``. The grid carries the discrete
topology, kept lazy.
"""
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import log
from .aura import AuraSpace, ScopeFunction, is_aura_open, iterate_closure
from .consts import GRID_EPSILON
from .errors import AuraError, PropertyFailure, SpaceMismatch
from .pointset import PointSet, make_bitset
from .rough import (ApproximationReport, approximate, is_refinement,
                    refinement_report)
from .space import Topology, check_universe
from .utils import list_like, unpack_kwargs

__all__ = [
    "SensorDeployment", "GridSpace", "CoverageReport",
    "DeploymentComparison", "build_grid_space", "grid_rect",
    "coverage_report", "relay_reach", "compare_deployments"
]

Sensor = Tuple[float, float, float]


@dataclass(frozen=True)
class SensorDeployment:
    """Sensors as (x, y, range) triples over the rectangle
    region = (x0, y0, x1, y1), sampled every ``resolution`` units."""
    sensors: Tuple[Sensor, ...]
    region: Tuple[float, float, float, float]
    resolution: float

    def __post_init__(self):
        values = [v for s in self.sensors for v in s] + list(self.region)
        values.append(self.resolution)
        if not all(math.isfinite(v) for v in values):
            raise AuraError("deployment has non-finite coordinates")
        if self.resolution <= 0:
            raise AuraError("resolution must be positive")
        for i, (_, _, r) in enumerate(self.sensors):
            if r <= 0:
                raise AuraError("sensor %d has non-positive range %g" %
                                (i, r))
        x0, y0, x1, y1 = self.region
        if x0 > x1 or y0 > y1:
            raise AuraError("region is empty")

    @staticmethod
    def of(sensors: Sequence[Sequence[float]], region: Sequence[float],
           resolution: float) -> "SensorDeployment":
        return SensorDeployment(
            tuple((float(x), float(y), float(r)) for x, y, r in sensors),
            tuple(float(v) for v in region), float(resolution))


@dataclass(frozen=True)
class GridSpace:
    aura_space: AuraSpace
    coordinates: Tuple[Tuple[float, float], ...]
    owner: Tuple[Optional[int], ...]
    deployment: SensorDeployment

    @property
    def n(self) -> int:
        return self.aura_space.n


@dataclass(frozen=True)
class CoverageReport:
    approximation: ApproximationReport
    full_coverage: bool

    @property
    def lower(self) -> PointSet:
        return self.approximation.lower

    @property
    def upper(self) -> PointSet:
        return self.approximation.upper

    @property
    def boundary(self) -> PointSet:
        return self.approximation.boundary


@dataclass(frozen=True)
class DeploymentComparison:
    """before/after approximations of one target; monotone is None when
    the new deployment is not a pointwise refinement of the old one."""
    refinement: bool
    before: ApproximationReport
    after: ApproximationReport
    monotone: Optional[bool]


def _axis(lo: float, hi: float, step: float) -> np.ndarray:
    count = int(math.floor((hi - lo) / step + GRID_EPSILON)) + 1
    return lo + step * np.arange(count)


def _label(x: float, y: float) -> str:
    return "(%g,%g)" % (x, y)


def build_grid_space(d: SensorDeployment, **kwargs) -> GridSpace:
    """build_grid_space(d, uncovered_aura="self") -> GridSpace
        uncovered_aura -> "self", or ("delta", delta) for a ball of
            grid points around each uncovered point
    """
    kwargs = unpack_kwargs("build_grid_space", kwargs,
                           (("uncovered_aura", "self"), ))
    uncovered = kwargs["uncovered_aura"]
    delta: Union[None, float] = None
    if list_like(uncovered) and len(uncovered) == 2 and \
            uncovered[0] == "delta":
        delta = float(uncovered[1])
        if not delta > 0:
            raise AuraError("delta must be positive")
    elif uncovered != "self":
        raise AuraError("uncovered_aura must be 'self' or ('delta', d), "
                        "got %r" % (uncovered, ))

    x0, y0, x1, y1 = d.region
    xs = _axis(x0, x1, d.resolution)
    ys = _axis(y0, y1, d.resolution)
    gx, gy = np.meshgrid(xs, ys)
    coords = np.column_stack([gx.ravel(), gy.ravel()])
    n = len(coords)
    if n == 0:
        raise AuraError("deployment produces no grid points")
    if not np.all(np.isfinite(coords)):
        raise AuraError("grid has non-finite coordinates")

    if d.sensors:
        sensors = np.array(d.sensors, dtype=float)
        diff = coords[:, None, :] - sensors[None, :, :2]
        dist2 = np.sum(diff**2, axis=2)
        inside = dist2 < sensors[None, :, 2]**2
        disks = [make_bitset(np.flatnonzero(inside[:, s]).tolist())
                 for s in range(len(sensors))]
    else:
        dist2 = np.zeros((n, 0))
        inside = np.zeros((n, 0), dtype=bool)
        disks = []

    auras = []
    owners = []
    for i in range(n):
        covering = np.flatnonzero(inside[i])
        if len(covering):
            owner = int(covering[np.argmin(dist2[i, covering])])
            owners.append(owner)
            auras.append(disks[owner])
        else:
            owners.append(None)
            if delta is None:
                auras.append(1 << i)
            else:
                near = np.sum((coords - coords[i])**2, axis=1) < delta**2
                auras.append(make_bitset(np.flatnonzero(near).tolist()))

    labels = [_label(x, y) for x, y in coords.tolist()]
    topology = Topology.discrete(n, labels)
    scope = ScopeFunction(PointSet(n, bits) for bits in auras)
    log.debug("grid: %d points, %d covered" %
              (n, sum(o is not None for o in owners)))
    return GridSpace(AuraSpace(topology, scope),
                     tuple((float(x), float(y)) for x, y in coords.tolist()),
                     tuple(owners), d)


def grid_rect(g: GridSpace, x0: float, y0: float, x1: float,
              y1: float) -> PointSet:
    """Grid points in the closed rectangle [x0, x1] x [y0, y1]."""
    return PointSet.of(
        g.n,
        (i for i, (x, y) in enumerate(g.coordinates)
         if x0 - GRID_EPSILON <= x <= x1 + GRID_EPSILON and
         y0 - GRID_EPSILON <= y <= y1 + GRID_EPSILON))


def coverage_report(g: GridSpace, target: PointSet) -> CoverageReport:
    """coverage_report(g, target) -> CoverageReport
        Full coverage means the target equals its lower approximation,
        which must agree with the target being aura-open.
    """
    check_universe(g.n, target)
    approximation = approximate(g.aura_space, target)
    full = approximation.lower == target
    if full != is_aura_open(g.aura_space, target):
        raise PropertyFailure(
            "full_coverage",
            "full coverage and aura-openness disagree on %r" % (target, ),
            target)
    return CoverageReport(approximation, full)


def relay_reach(g: GridSpace, alert_source: PointSet, steps: int) -> PointSet:
    """Points alerted after ``steps`` relay rounds."""
    return iterate_closure(g.aura_space, alert_source, steps)


def compare_deployments(before: GridSpace, after: GridSpace,
                        target: PointSet) -> DeploymentComparison:
    """compare_deployments(before, after, target) -> DeploymentComparison
        Approximate the target under both deployments. When every aura
        of after lies in the matching aura of before, the lower
        approximation may only grow and the upper one only shrink.
    """
    if before.coordinates != after.coordinates:
        raise SpaceMismatch("the deployments sample different grids")
    if not is_refinement(before.aura_space, after.aura_space):
        return DeploymentComparison(False,
                                    approximate(before.aura_space, target),
                                    approximate(after.aura_space, target),
                                    None)
    report = refinement_report(before.aura_space, after.aura_space, target)
    if not report.monotone:
        raise PropertyFailure("deployment_refinement",
                              "refined deployment lost coverage", target)
    return DeploymentComparison(True, report.coarse, report.fine, True)
