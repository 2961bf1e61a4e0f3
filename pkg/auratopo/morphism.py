"""
Maps between aura spaces and their continuity profile.

Aura continuity pulls aura-open sets of the target back to aura-open sets
of the source. The semi, pre, alpha and beta variants pull back every
open set of the target topology and classify the preimage in the source.
"""
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .aura import AuraSpace, aura_topology, is_aura_open
from .classes import ClassProfile, classify_set, enumerate_class
from .consts import MAX_EXHAUSTIVE
from .errors import MapError, SpaceMismatch, UniverseTooLarge
from .pointset import PointSet
from .space import check_universe, closed_sets
from .utils import int_like
from .validation import Validation

__all__ = [
    "SpaceMap", "ContinuityProfile", "validate_map", "preimage",
    "continuity_profile", "is_aura_continuous", "compose", "identity_map",
    "constant_map", "semi_continuity_via_closed",
    "semi_continuity_via_neighbourhoods"
]


class SpaceMap:
    """f: source -> target as the list of images of the source points."""

    def __init__(self, source: AuraSpace, target: AuraSpace,
                 mapping: Sequence[int]):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self, A: PointSet) -> PointSet:
        check_universe(self.source.n, A)
        _require_valid(self)
        return PointSet.of(self.target.n, (self.mapping[x] for x in A))

    def __eq__(self, other):
        return isinstance(other, SpaceMap) and (
            self.source, self.target, self.mapping) == (other.source,
                                                        other.target,
                                                        other.mapping)

    def __hash__(self):
        return hash((self.source, self.target, self.mapping))

    def __repr__(self):
        return "SpaceMap(%s)" % ", ".join(
            "%s->%s" % (self.source.labels[x], self.target.labels[y])
            for x, y in enumerate(self.mapping)
            if x < self.source.n and int_like(y) and 0 <= y < self.target.n)


@dataclass(frozen=True)
class ContinuityProfile:
    continuous: bool
    a_continuous: bool
    a_semi: bool
    a_pre: bool
    a_alpha: bool
    a_beta: bool


def validate_map(m: SpaceMap) -> Validation:
    """validate_map(m) -> Validation
        The mapping must have one entry per source point, each naming a
        target point.
    """
    result = Validation()
    if len(m.mapping) != m.source.n:
        result.add(
            "length", "mapping has %d entries for %d source points" %
            (len(m.mapping), m.source.n))
    for x, y in enumerate(m.mapping):
        if not int_like(y) or not 0 <= y < m.target.n:
            result.add("range",
                       "image of source point %d is %r, outside the target" %
                       (x, y), x)
    return result


def _require_valid(m: SpaceMap):
    validation = validate_map(m)
    if not validation.ok:
        raise MapError(validation)


def preimage(m: SpaceMap, V: PointSet) -> PointSet:
    """preimage(m, V) -> PointSet
        Source points whose image lies in V.
    """
    check_universe(m.target.n, V)
    _require_valid(m)
    return PointSet.of(m.source.n,
                       (x for x, y in enumerate(m.mapping) if y in V))


def _check_size(m: SpaceMap, operation: str):
    for S in (m.source, m.target):
        if S.n > MAX_EXHAUSTIVE:
            raise UniverseTooLarge(S.n, MAX_EXHAUSTIVE, operation)


def is_aura_continuous(m: SpaceMap) -> bool:
    """Preimages of aura-open target sets are aura-open."""
    _require_valid(m)
    _check_size(m, "is_aura_continuous")
    return all(
        is_aura_open(m.source, preimage(m, V))
        for V in aura_topology(m.target).opens)


def continuity_profile(m: SpaceMap) -> ContinuityProfile:
    """continuity_profile(m) -> ContinuityProfile
        a_continuous quantifies over the target's aura-open sets; the other
        flags quantify over the target's open sets.
    """
    _require_valid(m)
    _check_size(m, "continuity_profile")
    source_topology = m.source.topology
    a_continuous = is_aura_continuous(m)

    profiles: Dict[int, ClassProfile] = {}
    continuous = True
    for V in m.target.topology.opens:
        pre = preimage(m, V)
        continuous = continuous and source_topology.is_open(pre)
        if pre.bits not in profiles:
            profiles[pre.bits] = classify_set(m.source, pre)
    flags = list(profiles.values())
    return ContinuityProfile(
        continuous=continuous,
        a_continuous=a_continuous,
        a_semi=all(p.a_semi_open for p in flags),
        a_pre=all(p.a_pre_open for p in flags),
        a_alpha=all(p.a_alpha_open for p in flags),
        a_beta=all(p.a_beta_open for p in flags),
    )


def semi_continuity_via_closed(m: SpaceMap) -> bool:
    """Preimages of closed target sets are complements of aura-semi-open
    sets."""
    _require_valid(m)
    _check_size(m, "semi_continuity_via_closed")
    return all(
        classify_set(m.source, ~preimage(m, F)).a_semi_open
        for F in closed_sets(m.target.topology))


def semi_continuity_via_neighbourhoods(m: SpaceMap) -> bool:
    """For each x and open V around f(x), some aura-semi-open U around x
    maps into V."""
    _require_valid(m)
    _check_size(m, "semi_continuity_via_neighbourhoods")
    semi = [U.bits for U in enumerate_class(m.source, "a_semi_open")]
    for V in m.target.topology.opens:
        pulled = preimage(m, V).bits
        reachable = 0
        for U in semi:
            if U & ~pulled == 0:
                reachable |= U
        if pulled & ~reachable:
            return False
    return True


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """compose(f, g) -> SpaceMap
        The map g∘f, defined when f's target is g's source.
    """
    if f.target != g.source:
        raise SpaceMismatch()
    _require_valid(f)
    _require_valid(g)
    return SpaceMap(f.source, g.target, (g.mapping[y] for y in f.mapping))


def identity_map(S: AuraSpace) -> SpaceMap:
    return SpaceMap(S, S, range(S.n))


def constant_map(source: AuraSpace, target: AuraSpace, c: int) -> SpaceMap:
    return SpaceMap(source, target, [c] * source.n)
