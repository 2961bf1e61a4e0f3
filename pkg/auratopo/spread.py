"""
Forward spread over an aura space.

One spread step sends a set A to the union of the auras of its members:
everyone inside the aura of an infected point is exposed. Iterating gives
a chain that stops within n steps. Interventions shrink auras: quarantine
replaces an aura by the singleton, distancing by any smaller valid scope.
"""
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from .aura import AuraSpace, ScopeFunction, scope_profile, validate_scope
from .consts import MAX_COMPONENTS
from .errors import (NotARefinement, QuarantineError, ScopeError,
                     UniverseMismatch, UniverseTooLarge)
from .pointset import PointSet, full_bits, iter_indexes, make_bitset
from .space import check_universe

__all__ = [
    "SpreadTrace", "SpreadComponent", "ImmunityReport", "spread_step",
    "spread_power", "spread_trace", "apply_quarantine", "apply_distancing",
    "spread_components", "contact_graph", "immunity_report"
]


@dataclass(frozen=True)
class SpreadTrace:
    stages: Tuple[PointSet, ...]
    stabilized_at: int

    @property
    def reach(self) -> PointSet:
        return self.stages[-1]

    @property
    def unreached(self) -> PointSet:
        return ~self.stages[-1]


@dataclass(frozen=True)
class SpreadComponent:
    """A distinct total-spread set with the points generating it.

    overlaps lists the indexes of the other components it meets, in the
    order returned by ``spread_components``.
    """
    reach: PointSet
    generators: Tuple[int, ...]
    overlaps: Tuple[int, ...]
    a_open: bool
    complement_a_open: bool


@dataclass(frozen=True)
class ImmunityReport:
    immune: PointSet
    a_open: bool
    outside_a_open: bool
    transitive: bool
    shielded: bool


def spread_step(S: AuraSpace, A: PointSet) -> PointSet:
    """spread_step(S, A) -> PointSet
        Union of the auras of the members of A.
    """
    check_universe(S.n, A)
    return PointSet(S.n, S.spread_mask(A.bits))


def spread_power(S: AuraSpace, A: PointSet, k: int) -> PointSet:
    check_universe(S.n, A)
    if k < 0:
        raise ValueError("step count must be non-negative, got %d" % k)
    bits = A.bits
    for _ in range(k):
        bits = S.spread_mask(bits)
    return PointSet(S.n, bits)


def spread_trace(S: AuraSpace, A0: PointSet) -> SpreadTrace:
    """spread_trace(S, A0) -> SpreadTrace
        Spread from A0 until nothing new is reached.
    """
    check_universe(S.n, A0)
    stages = [A0]
    while True:
        step = S.spread_mask(stages[-1].bits)
        if step == stages[-1].bits:
            break
        stages.append(PointSet(S.n, step))
    return SpreadTrace(tuple(stages), len(stages) - 1)


def apply_quarantine(S: AuraSpace, Q: PointSet) -> AuraSpace:
    """apply_quarantine(S, Q) -> AuraSpace
        Shrink the aura of every point of Q to the point itself. Each such
        singleton must be open.
    """
    check_universe(S.n, Q)
    scope = S.scope
    for x in Q:
        alone = PointSet.single(S.n, x)
        if not S.topology.is_open(alone):
            raise QuarantineError(x)
        scope = scope.replace(x, alone)
    return AuraSpace(S.topology, scope)


def apply_distancing(S: AuraSpace, replacement: ScopeFunction) -> AuraSpace:
    """apply_distancing(S, replacement) -> AuraSpace
        Swap in a smaller scope function; every new aura must lie inside
        the old one.
    """
    if len(replacement) != S.n:
        raise UniverseMismatch(S.n, len(replacement))
    validation = validate_scope(S.topology, replacement)
    if not validation.ok:
        raise ScopeError(validation)
    for x, (old, new) in enumerate(zip(S.scope, replacement)):
        if not new <= old:
            raise NotARefinement(x)
    return AuraSpace(S.topology, replacement)


def contact_graph(S: AuraSpace) -> nx.DiGraph:
    """Edge x -> y whenever y lies in the aura of x (y != x)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(S.n))
    for x, aura in enumerate(S.auras):
        graph.add_edges_from((x, y) for y in iter_indexes(aura) if y != x)
    return graph


def spread_components(S: AuraSpace) -> List[SpreadComponent]:
    """spread_components(S) -> list of SpreadComponent
        The distinct total-spread sets of single points, in canonical
        order. Overlaps are recorded, not merged: the sets partition the
        universe only for symmetric transitive scopes.
    """
    if S.n > MAX_COMPONENTS:
        raise UniverseTooLarge(S.n, MAX_COMPONENTS, "spread_components")
    graph = contact_graph(S)
    generators = {}
    for x in range(S.n):
        reach = make_bitset(nx.descendants(graph, x)) | (1 << x)
        generators.setdefault(reach, []).append(x)

    everything = full_bits(S.n)
    ordered = sorted(generators)
    components = []
    for i, reach in enumerate(ordered):
        overlaps = tuple(j for j, other in enumerate(ordered)
                         if j != i and other & reach)
        rest = everything & ~reach
        components.append(
            SpreadComponent(
                reach=PointSet(S.n, reach),
                generators=tuple(generators[reach]),
                overlaps=overlaps,
                a_open=S.spread_mask(reach) == reach,
                complement_a_open=S.spread_mask(rest) == rest,
            ))
    return components


def immunity_report(S: AuraSpace, immune: PointSet) -> ImmunityReport:
    """Whether spread from outside the immune set can enter it.

    shielded holds when one spread step from the complement misses the
    immune set; this is guaranteed when the complement is aura-open.
    """
    check_universe(S.n, immune)
    outside = (~immune).bits
    return ImmunityReport(
        immune=immune,
        a_open=S.spread_mask(immune.bits) == immune.bits,
        outside_a_open=S.spread_mask(outside) == outside,
        transitive=scope_profile(S).transitive,
        shielded=S.spread_mask(outside) & immune.bits == 0,
    )
