"""
Separation axioms for the aura topology and the underlying topology.

In a finite space every point x has a smallest open neighbourhood M(x),
and the smallest open set around a set F is the union of M(y) over F.
Two points can be separated by (disjoint) open sets exactly when their
smallest neighbourhoods can, so each axiom reduces to a scan of point
pairs against these neighbourhoods.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .aura import AuraSpace, aura_topology, is_aura_open
from .consts import MAX_EXHAUSTIVE, MAX_HIERARCHY
from .errors import UniverseTooLarge
from .pointset import PointSet, iter_indexes
from .space import Topology, closed_sets, minimal_neighbourhood

__all__ = [
    "SeparationWitness", "SeparationProfile", "T1Report",
    "separation_profile", "t1_via_singletons", "family_separation"
]


@dataclass(frozen=True)
class SeparationWitness:
    """Points that cannot be separated; closed_set is set for regularity
    failures, where points holds the single outside point."""
    points: Tuple[int, ...]
    closed_set: Optional[PointSet] = None


@dataclass(frozen=True)
class SeparationProfile:
    a_t0: bool
    a_t1: bool
    a_t2: bool
    a_regular: bool
    t0: bool
    t1: bool
    t2: bool
    witnesses: Dict[str, SeparationWitness] = field(default_factory=dict)


@dataclass(frozen=True)
class T1Report:
    holds: bool
    per_point: Tuple[bool, ...]


def _neighbourhoods(T: Topology) -> List[int]:
    return [minimal_neighbourhood(T, x).bits for x in range(T.n)]


def _first_pair(n: int, fails) -> Optional[Tuple[int, int]]:
    for x in range(n):
        for y in range(x + 1, n):
            if fails(x, y):
                return (x, y)
    return None


def family_separation(T: Topology) -> Dict[str, Optional[Tuple[int, int]]]:
    """First unseparable pair for T0, T1 and T2 of a topology (None when
    the axiom holds)."""
    M = _neighbourhoods(T)

    def inside(x, y):
        return (M[x] >> y) & 1 == 1

    return {
        "t0": _first_pair(T.n, lambda x, y: inside(x, y) and inside(y, x)),
        "t1": _first_pair(T.n, lambda x, y: inside(x, y) or inside(y, x)),
        "t2": _first_pair(T.n, lambda x, y: M[x] & M[y] != 0),
    }


def _regularity_failure(T: Topology) -> Optional[SeparationWitness]:
    M = _neighbourhoods(T)
    for F in closed_sets(T):
        around = 0
        for y in iter_indexes(F.bits):
            around |= M[y]
        for x in range(T.n):
            if x not in F and M[x] & around:
                return SeparationWitness((x, ), F)
    return None


def separation_profile(S: AuraSpace) -> SeparationProfile:
    """separation_profile(S) -> SeparationProfile
        Aura T0, T1, T2 and regularity, plus classical T0, T1, T2 of the
        underlying topology. Witnesses are the first failing pair, or the
        first failing (point, closed set), in canonical order.
    """
    if S.n > MAX_HIERARCHY:
        raise UniverseTooLarge(S.n, MAX_HIERARCHY, "separation_profile")
    aura_family = aura_topology(S)
    aura_pairs = family_separation(aura_family)
    classical_pairs = family_separation(S.topology)
    regular_failure = _regularity_failure(aura_family)

    witnesses = {}
    for name, pair in aura_pairs.items():
        if pair is not None:
            witnesses["a_" + name] = SeparationWitness(pair)
    if regular_failure is not None:
        witnesses["a_regular"] = regular_failure
    for name, pair in classical_pairs.items():
        if pair is not None:
            witnesses[name] = SeparationWitness(pair)
    return SeparationProfile(
        a_t0=aura_pairs["t0"] is None,
        a_t1=aura_pairs["t1"] is None,
        a_t2=aura_pairs["t2"] is None,
        a_regular=regular_failure is None,
        t0=classical_pairs["t0"] is None,
        t1=classical_pairs["t1"] is None,
        t2=classical_pairs["t2"] is None,
        witnesses=witnesses,
    )


def t1_via_singletons(S: AuraSpace) -> T1Report:
    """Aura T1 read off singletons: X minus {x} must be aura-open for
    every x."""
    if S.n > MAX_EXHAUSTIVE:
        raise UniverseTooLarge(S.n, MAX_EXHAUSTIVE, "t1_via_singletons")
    per_point = tuple(
        is_aura_open(S, ~PointSet.single(S.n, x)) for x in range(S.n))
    return T1Report(all(per_point), per_point)
