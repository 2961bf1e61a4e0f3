"""
Scope functions, aura spaces and the aura operators.

An aura space pairs a topology with a scope function that assigns each
point x an open set a(x) holding x. The aura closure of A collects the
points whose aura meets A; it is additive and extensive but in general
not idempotent, so iterating it to a fixpoint gives a second, coarser
closure.

Classes:
ScopeFunction: The assignment x -> a(x).
AuraSpace: A topology with a valid scope function.
ScopeProfile: Structural flags of a scope function.
ClosureTrace: The chain A, cl(A), cl(cl(A)), ... up to its fixpoint.
ClosureComparison: Classical closure against aura closure for one set.
"""
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, Iterator, Sequence, Tuple, Union

from .consts import MAX_EXHAUSTIVE
from .errors import ScopeError, UniverseMismatch, UniverseTooLarge
from .pointset import PointSet, full_bits, iter_indexes
from .space import Topology, check_universe, closure, set_name
from .validation import Validation

__all__ = [
    "ScopeFunction", "AuraSpace", "ScopeProfile", "ClosureTrace",
    "ClosureComparison", "validate_scope", "aura_closure", "aura_interior",
    "iterate_closure", "closure_trace", "is_aura_open", "aura_topology",
    "infinity_topology", "scope_profile", "aura_base", "closure_coincidence"
]


class ScopeFunction:
    """The list a(0), ..., a(n-1)."""

    def __init__(self, assignment: Iterable[PointSet]):
        self.assignment = tuple(assignment)

    @staticmethod
    def trivial(n: int) -> "ScopeFunction":
        return ScopeFunction(PointSet.full(n) for _ in range(n))

    @staticmethod
    def discrete(n: int) -> "ScopeFunction":
        return ScopeFunction(PointSet.single(n, x) for x in range(n))

    @staticmethod
    def from_members(n: int,
                     members: Sequence[Iterable[int]]) -> "ScopeFunction":
        """from_members(n, members) -> ScopeFunction
            members[x] lists the point indexes of a(x).
        """
        return ScopeFunction(PointSet.of(n, m) for m in members)

    def replace(self, x: int, aura: PointSet) -> "ScopeFunction":
        assignment = list(self.assignment)
        assignment[x] = aura
        return ScopeFunction(assignment)

    def __len__(self):
        return len(self.assignment)

    def __getitem__(self, x: int) -> PointSet:
        return self.assignment[x]

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.assignment)

    def __eq__(self, other):
        return isinstance(other,
                          ScopeFunction) and self.assignment == other.assignment

    def __hash__(self):
        return hash(self.assignment)

    def __repr__(self):
        return "ScopeFunction(%r)" % (list(self.assignment), )


def validate_scope(T: Topology, s: ScopeFunction) -> Validation:
    """validate_scope(T, s) -> Validation
        Every point must lie in its own aura and every aura must be open.
        Violations come in point order.
    """
    if len(s) != T.n:
        raise UniverseMismatch(T.n, len(s))
    result = Validation()
    for x, aura in enumerate(s):
        name = T.labels[x]
        if aura.n != T.n:
            result.add("aura-universe",
                       "aura of %s lives over %d points, not %d" %
                       (name, aura.n, T.n), x)
            continue
        if x not in aura:
            result.add("aura-membership",
                       "point %s is not in its own aura %s" %
                       (name, set_name(aura, T.labels)), x)
        if not T.is_open(aura):
            result.add("aura-open",
                       "aura of %s, %s, is not an open set of the topology" %
                       (name, set_name(aura, T.labels)), x)
    return result


class AuraSpace:
    """A topology paired with a valid scope function.

    Construction validates the scope and raises ``ScopeError`` on failure.
    The ``*_mask`` methods are the raw bitmask forms of the operators.
    """

    def __init__(self, topology: Topology, scope: ScopeFunction):
        validation = validate_scope(topology, scope)
        if not validation.ok:
            raise ScopeError(validation)
        self.topology = topology
        self.scope = scope
        self.n = topology.n
        self.labels = topology.labels
        self.auras = tuple(aura.bits for aura in scope)

    def aura(self, x: int) -> PointSet:
        return self.scope[x]

    def universe(self) -> PointSet:
        return PointSet.full(self.n)

    def points(self, names: Iterable[str]) -> PointSet:
        return self.topology.points(names)

    def closure_mask(self, bits: int) -> int:
        result = 0
        for x, aura in enumerate(self.auras):
            if aura & bits:
                result |= 1 << x
        return result

    def interior_mask(self, bits: int) -> int:
        result = 0
        for x in iter_indexes(bits):
            if self.auras[x] & ~bits == 0:
                result |= 1 << x
        return result

    def spread_mask(self, bits: int) -> int:
        result = 0
        for x in iter_indexes(bits):
            result |= self.auras[x]
        return result

    def limit_closure_mask(self, bits: int) -> int:
        while True:
            step = self.closure_mask(bits)
            if step == bits:
                return bits
            bits = step

    def __eq__(self, other):
        return isinstance(other, AuraSpace) and (
            self.topology, self.scope) == (other.topology, other.scope)

    def __hash__(self):
        return hash((self.topology, self.scope))

    def __repr__(self):
        auras = ", ".join("%s:%s" % (self.labels[x], set_name(a, self.labels))
                          for x, a in enumerate(self.scope))
        return "AuraSpace(%r, {%s})" % (self.topology, auras)


@dataclass(frozen=True)
class ScopeProfile:
    trivial: bool
    discrete: bool
    transitive: bool
    symmetric: bool


@dataclass(frozen=True)
class ClosureTrace:
    stages: Tuple[PointSet, ...]
    stabilized_at: int

    @property
    def limit(self) -> PointSet:
        return self.stages[-1]


@dataclass(frozen=True)
class ClosureComparison:
    """Classical closure, aura closure and the union of the auras of A."""
    closure: PointSet
    aura_closure: PointSet
    aura_union: PointSet

    @property
    def coincide(self) -> bool:
        return self.closure == self.aura_closure

    @property
    def within_union(self) -> bool:
        return self.aura_closure <= self.aura_union


def aura_closure(S: AuraSpace, A: PointSet) -> PointSet:
    """aura_closure(S, A) -> PointSet
        Points whose aura meets A.
    """
    check_universe(S.n, A)
    return PointSet(S.n, S.closure_mask(A.bits))


def aura_interior(S: AuraSpace, A: PointSet) -> PointSet:
    """aura_interior(S, A) -> PointSet
        Points of A whose whole aura lies in A.
    """
    check_universe(S.n, A)
    return PointSet(S.n, S.interior_mask(A.bits))


def iterate_closure(S: AuraSpace, A: PointSet, k: int) -> PointSet:
    """iterate_closure(S, A, k) -> PointSet
        Apply the aura closure k times; k=0 returns A.
    """
    check_universe(S.n, A)
    if k < 0:
        raise ValueError("step count must be non-negative, got %d" % k)
    bits = A.bits
    for _ in range(k):
        step = S.closure_mask(bits)
        if step == bits:
            break
        bits = step
    return PointSet(S.n, bits)


def closure_trace(S: AuraSpace, A: PointSet) -> ClosureTrace:
    """closure_trace(S, A) -> ClosureTrace
        Stages from A up to the first fixpoint; stabilized_at is the index
        of that fixpoint, so the last stage is the limit closure of A.
    """
    check_universe(S.n, A)
    stages = [A]
    while True:
        step = S.closure_mask(stages[-1].bits)
        if step == stages[-1].bits:
            break
        stages.append(PointSet(S.n, step))
    return ClosureTrace(tuple(stages), len(stages) - 1)


def is_aura_open(S: AuraSpace, A: PointSet) -> bool:
    """A is aura-open iff it contains the aura of each of its points."""
    check_universe(S.n, A)
    return S.spread_mask(A.bits) == A.bits


def _exhaustive(S: AuraSpace, operation: str):
    if S.n > MAX_EXHAUSTIVE:
        raise UniverseTooLarge(S.n, MAX_EXHAUSTIVE, operation)


def aura_topology(
    S: AuraSpace,
    as_predicate: bool = False
) -> Union[Topology, Callable[[PointSet], bool]]:
    """aura_topology(S, as_predicate=False) -> Topology
        The aura-open sets, by scanning all subsets. With as_predicate the
        membership test is returned instead, for any universe size.
    """
    if as_predicate:
        return partial(is_aura_open, S)
    _exhaustive(S, "aura_topology")
    opens = [
        PointSet(S.n, bits) for bits in range(1 << S.n)
        if S.spread_mask(bits) == bits
    ]
    return Topology(S.n, opens, S.labels)


def infinity_topology(S: AuraSpace) -> Topology:
    """Sets whose complement is a fixpoint of the aura closure."""
    _exhaustive(S, "infinity_topology")
    everything = full_bits(S.n)
    opens = []
    for bits in range(1 << S.n):
        rest = everything & ~bits
        if S.limit_closure_mask(rest) == rest:
            opens.append(PointSet(S.n, bits))
    return Topology(S.n, opens, S.labels)


def scope_profile(S: AuraSpace) -> ScopeProfile:
    everything = full_bits(S.n)
    auras = S.auras
    trivial = all(a == everything for a in auras)
    discrete = all(a == 1 << x for x, a in enumerate(auras)) and all(
        S.topology.is_open(PointSet.single(S.n, x)) for x in range(S.n))
    transitive = all(auras[y] & ~auras[x] == 0
                     for x in range(S.n) for y in iter_indexes(auras[x]))
    symmetric = all((auras[y] >> x) & 1 for x in range(S.n)
                    for y in iter_indexes(auras[x]))
    return ScopeProfile(trivial, discrete, transitive, symmetric)


def aura_base(S: AuraSpace) -> Tuple[PointSet, ...]:
    """The distinct auras, in canonical order."""
    return tuple(PointSet(S.n, bits) for bits in sorted(set(S.auras)))


def closure_coincidence(S: AuraSpace, A: PointSet) -> ClosureComparison:
    check_universe(S.n, A)
    return ClosureComparison(closure(S.topology, A), aura_closure(S, A),
                             PointSet(S.n, S.spread_mask(A.bits)))
