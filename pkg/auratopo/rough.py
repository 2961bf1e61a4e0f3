"""
Rough-set approximation through an aura space.

The lower approximation of A is its aura interior, the upper one its aura
closure. When the auras partition the universe this is exactly the
classical partition-based approximation, which ``pawlak_approximate``
computes from the blocks directly.

Classes:
ApproximationReport: Lower/upper approximations with their measures.
PartitionOracle: A partition of the universe into blocks.
RefinementReport: The same target approximated in a space and a
    refinement of it.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .aura import AuraSpace, aura_closure, aura_interior, scope_profile
from .errors import (NotARefinement, PartitionError, SpaceMismatch,
                     UniverseMismatch)
from .pointset import PointSet, full_bits
from .space import check_universe

__all__ = [
    "ApproximationReport", "PartitionOracle", "RefinementReport",
    "approximate", "is_refinement", "refinement_report",
    "pawlak_approximate", "aura_partition"
]


@dataclass(frozen=True)
class ApproximationReport:
    """lower ⊆ target ⊆ upper, with accuracy |lower| / |upper|.

    The ratio is kept unreduced in ``lower_size``/``upper_size`` (the
    medical example reads 2/6); ``accuracy`` is the exact Fraction. An
    empty upper approximation only happens for the empty target and is
    reported as definable with accuracy 1.
    """
    target: PointSet
    lower: PointSet
    upper: PointSet

    @property
    def boundary(self) -> PointSet:
        return self.upper - self.lower

    @property
    def negative(self) -> PointSet:
        return ~self.upper

    @property
    def lower_size(self) -> int:
        return len(self.lower)

    @property
    def upper_size(self) -> int:
        return len(self.upper)

    @property
    def accuracy(self) -> Fraction:
        if not self.upper:
            return Fraction(1)
        return Fraction(len(self.lower), len(self.upper))

    @property
    def roughness(self) -> Fraction:
        return 1 - self.accuracy

    @property
    def definable(self) -> bool:
        return self.lower == self.upper


class PartitionOracle:
    """Equivalence classes of the universe {0, ..., n-1}."""

    def __init__(self, n: int, blocks: Iterable[PointSet]):
        self.n = n
        self.blocks = tuple(sorted(blocks, key=PointSet.sort_key))
        covered = 0
        for block in self.blocks:
            check_universe(n, block)
            if not block:
                raise PartitionError("empty block")
            if covered & block.bits:
                raise PartitionError("blocks overlap at %r" % (PointSet(
                    n, covered & block.bits), ))
            covered |= block.bits
        if covered != full_bits(n):
            raise PartitionError("blocks miss %r" %
                                 (PointSet(n, full_bits(n) & ~covered), ))
        self._block_of = [0] * n
        for block in self.blocks:
            for x in block:
                self._block_of[x] = block.bits

    def block(self, x: int) -> PointSet:
        return PointSet(self.n, self._block_of[x])

    def __eq__(self, other):
        return isinstance(other, PartitionOracle) and (
            self.n, self.blocks) == (other.n, other.blocks)

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return "PartitionOracle(%d, %r)" % (self.n, list(self.blocks))


@dataclass(frozen=True)
class RefinementReport:
    coarse: ApproximationReport
    fine: ApproximationReport

    @property
    def lower_grows(self) -> bool:
        return self.coarse.lower <= self.fine.lower

    @property
    def upper_shrinks(self) -> bool:
        return self.fine.upper <= self.coarse.upper

    @property
    def boundary_shrinks(self) -> bool:
        return len(self.fine.boundary) <= len(self.coarse.boundary)

    @property
    def monotone(self) -> bool:
        return self.lower_grows and self.upper_shrinks and \
            self.boundary_shrinks


def approximate(S: AuraSpace, A: PointSet) -> ApproximationReport:
    """approximate(S, A) -> ApproximationReport
        Lower approximation = aura interior, upper = aura closure.
    """
    check_universe(S.n, A)
    return ApproximationReport(A, aura_interior(S, A), aura_closure(S, A))


def _same_carrier(coarse: AuraSpace, fine: AuraSpace):
    if coarse.n != fine.n:
        raise UniverseMismatch(coarse.n, fine.n)
    if coarse.topology != fine.topology:
        raise SpaceMismatch("the two spaces have different topologies")


def is_refinement(coarse: AuraSpace, fine: AuraSpace) -> bool:
    """Each aura of fine lies inside the matching aura of coarse."""
    _same_carrier(coarse, fine)
    return all(f & ~c == 0 for c, f in zip(coarse.auras, fine.auras))


def _first_escape(coarse: AuraSpace, fine: AuraSpace) -> Optional[int]:
    for x, (c, f) in enumerate(zip(coarse.auras, fine.auras)):
        if f & ~c:
            return x
    return None


def refinement_report(coarse: AuraSpace, fine: AuraSpace,
                      A: PointSet) -> RefinementReport:
    """refinement_report(coarse, fine, A) -> RefinementReport
        Approximate A in both spaces. Raises NotARefinement when some aura
        of fine escapes its coarse counterpart.
    """
    _same_carrier(coarse, fine)
    escape = _first_escape(coarse, fine)
    if escape is not None:
        raise NotARefinement(escape)
    return RefinementReport(approximate(coarse, A), approximate(fine, A))


def pawlak_approximate(P: PartitionOracle, A: PointSet) -> ApproximationReport:
    """Approximation by equivalence blocks."""
    check_universe(P.n, A)
    lower = upper = 0
    for block in P.blocks:
        if block.bits & ~A.bits == 0:
            lower |= block.bits
        if block.bits & A.bits:
            upper |= block.bits
    return ApproximationReport(A, PointSet(P.n, lower), PointSet(P.n, upper))


def aura_partition(S: AuraSpace) -> Optional[PartitionOracle]:
    """The aura family as a partition, when the scope is symmetric and
    transitive; None otherwise."""
    profile = scope_profile(S)
    if not (profile.symmetric and profile.transitive):
        return None
    blocks: Tuple[PointSet, ...] = tuple(
        PointSet(S.n, bits) for bits in sorted(set(S.auras)))
    return PartitionOracle(S.n, blocks)
