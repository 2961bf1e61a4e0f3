"""
This module provides finite topological spaces and the classical
closure and interior operators.

Classes:
Topology: A finite universe with its full family of open sets.

Functions:
validate_topology: Check the topology axioms, reporting violations.
interior, closure: Classical operators.
closed_sets: Complements of the opens.
minimal_neighbourhood: Smallest open set holding a point.
topology_from_subbasis: Smallest topology containing a family of sets.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

from .consts import MAX_EXHAUSTIVE
from .errors import AuraError, UniverseMismatch, UniverseTooLarge
from .pointset import PointSet, full_bits, iter_indexes
from .utils import default_labels
from .validation import Validation

__all__ = [
    "Topology", "validate_topology", "interior", "closure", "closed_sets",
    "minimal_neighbourhood", "topology_from_subbasis", "set_name",
    "check_universe"
]


def check_universe(n: int, A: PointSet):
    if A.n != n:
        raise UniverseMismatch(n, A.n)


def set_name(A: PointSet, labels: Optional[Sequence[str]] = None) -> str:
    """Render a set as "{a,b}" for messages."""
    labels = labels if labels is not None else default_labels(A.n)
    return "{" + ",".join(A.labels(labels)) + "}"


class Topology:
    """A finite universe of n points with its open sets.

    The open family is stored extensionally and sorted in canonical order;
    duplicates given by the caller are kept so that ``validate_topology``
    can report them. The discrete topology can be kept lazy
    (``Topology.discrete``): membership is then a predicate and the family
    is only materialized on request for n <= MAX_EXHAUSTIVE.
    """

    def __init__(self,
                 n: int,
                 opens: Optional[Iterable[PointSet]] = None,
                 labels: Optional[Sequence[str]] = None,
                 lazy_discrete: bool = False):
        if n < 1:
            raise AuraError("a topology needs at least one point")
        self.n = n
        self.labels = tuple(labels) if labels is not None else tuple(
            default_labels(n))
        if len(self.labels) != n:
            raise AuraError("expected %d labels, got %d" %
                            (n, len(self.labels)))
        self.lazy_discrete = lazy_discrete
        if lazy_discrete:
            self._opens = None
            self._open_bits = None
        else:
            family = list(opens if opens is not None else ())
            for O in family:
                check_universe(n, O)
            self._opens = tuple(sorted(family, key=PointSet.sort_key))
            self._open_bits = frozenset(O.bits for O in self._opens)

    @staticmethod
    def discrete(n: int, labels: Optional[Sequence[str]] = None):
        """discrete(n, labels=None) -> Topology
            Every subset is open; the family stays a predicate.
        """
        return Topology(n, labels=labels, lazy_discrete=True)

    @staticmethod
    def indiscrete(n: int, labels: Optional[Sequence[str]] = None):
        return Topology(n, [PointSet.empty(n), PointSet.full(n)], labels)

    @property
    def opens(self) -> Tuple[PointSet, ...]:
        if self._opens is None:
            if self.n > MAX_EXHAUSTIVE:
                raise UniverseTooLarge(self.n, MAX_EXHAUSTIVE,
                                       "discrete topology materialization")
            self._opens = tuple(PointSet.all_subsets(self.n))
        return self._opens

    def open_bits(self) -> frozenset:
        if self._open_bits is None:
            self._open_bits = frozenset(O.bits for O in self.opens)
        return self._open_bits

    def is_open(self, A: PointSet) -> bool:
        check_universe(self.n, A)
        if self.lazy_discrete:
            return True
        return A.bits in self._open_bits

    def is_discrete(self) -> bool:
        return self.lazy_discrete or all(
            (1 << x) in self._open_bits for x in range(self.n))

    def universe(self) -> PointSet:
        return PointSet.full(self.n)

    def points(self, names: Iterable[str]) -> PointSet:
        """Set of the points with the given labels."""
        index = {label: i for i, label in enumerate(self.labels)}
        return PointSet.of(self.n, (index[name] for name in names))

    def with_labels(self, labels: Sequence[str]) -> "Topology":
        if self.lazy_discrete:
            return Topology.discrete(self.n, labels)
        return Topology(self.n, self._opens, labels)

    def _key(self):
        if self.lazy_discrete:
            return (self.n, self.labels, "discrete")
        return (self.n, self.labels, tuple(O.bits for O in self._opens))

    def __eq__(self, other):
        return isinstance(other, Topology) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.lazy_discrete:
            return "Topology.discrete(%d)" % self.n
        return "Topology(%d, [%s])" % (self.n, ", ".join(
            set_name(O, self.labels) for O in self._opens))


def validate_topology(candidate: Topology) -> Validation:
    """validate_topology(candidate) -> Validation
        Check that the empty set and the whole universe are open, that no
        open set is listed twice, and that the family is closed under
        pairwise union and intersection. Violations name the failing pair.
    """
    result = Validation()
    if candidate.lazy_discrete:
        return result
    labels = candidate.labels
    n = candidate.n
    everything = full_bits(n)
    bits_list = [O.bits for O in candidate.opens]
    present = candidate.open_bits()
    if 0 not in present:
        result.add("empty", "the empty set is not open", 0)
    if everything not in present:
        result.add("universe", "the whole universe is not open", everything)
    seen = set()
    for bits in bits_list:
        if bits in seen:
            result.add("duplicate",
                       "%s is listed more than once" %
                       set_name(PointSet(n, bits), labels), bits)
        seen.add(bits)
    distinct = sorted(seen)
    for i, a in enumerate(distinct):
        for b in distinct[i + 1:]:
            A, B = PointSet(n, a), PointSet(n, b)
            if a | b not in present:
                result.add(
                    "union", "%s ∪ %s missing" %
                    (set_name(A, labels), set_name(B, labels)), a, b)
            if a & b not in present:
                result.add(
                    "intersection", "%s ∩ %s missing" %
                    (set_name(A, labels), set_name(B, labels)), a, b)
    return result


def interior(T: Topology, A: PointSet) -> PointSet:
    """interior(T, A) -> PointSet
        Union of all opens contained in A.
    """
    check_universe(T.n, A)
    if T.lazy_discrete:
        return A
    bits = 0
    for O in T.opens:
        if O.bits & ~A.bits == 0:
            bits |= O.bits
    return PointSet(T.n, bits)


def closure(T: Topology, A: PointSet) -> PointSet:
    """closure(T, A) -> PointSet
        Complement of the interior of the complement.
    """
    check_universe(T.n, A)
    return ~interior(T, ~A)


def closed_sets(T: Topology) -> Tuple[PointSet, ...]:
    complements = {(~O).bits for O in T.opens}
    return tuple(PointSet(T.n, bits) for bits in sorted(complements))


def minimal_neighbourhood(T: Topology, x: int) -> PointSet:
    """Intersection of every open set containing x."""
    if not 0 <= x < T.n:
        raise AuraError("point %d is not in a universe of %d" % (x, T.n))
    if T.lazy_discrete:
        return PointSet.single(T.n, x)
    bits = full_bits(T.n)
    for O in T.opens:
        if (O.bits >> x) & 1:
            bits &= O.bits
    return PointSet(T.n, bits)


def topology_from_subbasis(n: int,
                           subbasis: Iterable[PointSet],
                           labels: Optional[Sequence[str]] = None) -> Topology:
    """topology_from_subbasis(n, subbasis, labels=None) -> Topology
        The opens of the generated topology are the unions of minimal
        neighbourhoods, where the minimal neighbourhood of x is the
        intersection of the subbasis sets holding x (the universe when
        there are none). The family grows one neighbourhood at a time, so
        the work is proportional to the number of opens produced.
    """
    if n < 1:
        raise AuraError("cannot generate a topology on an empty universe")
    neighbourhoods = [full_bits(n)] * n
    for S in subbasis:
        check_universe(n, S)
        for x in iter_indexes(S.bits):
            neighbourhoods[x] &= S.bits
    family = {0}
    for M in sorted(set(neighbourhoods)):
        family |= {F | M for F in family}
    opens: List[PointSet] = [PointSet(n, bits) for bits in sorted(family)]
    return Topology(n, opens, labels)
