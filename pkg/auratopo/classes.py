"""
Generalized open-set classes of an aura space.

Eleven classes are registered, five classical (open, semi, pre, alpha,
beta) and six aura variants obtained by replacing the classical closure
with the aura closure (plus the aura b-open class). Each class is a
predicate registered in ``OpenClasses`` under its flag name.

Classes:
ClassRegistry: Name -> predicate table, in registration order.
ClassProfile: All eleven flags for one set.
HierarchyEdge, HierarchySeparation, HierarchyReport: The output of
    ``verify_hierarchy``.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .aura import AuraSpace
from .consts import MAX_EXHAUSTIVE, MAX_HIERARCHY
from .errors import UniverseTooLarge, UnknownName
from .pointset import PointSet
from .space import check_universe, closure, interior

__all__ = [
    "ClassRegistry", "OpenClasses", "CLASS_NAMES", "ClassProfile",
    "HierarchyEdge", "HierarchySeparation", "HierarchyReport",
    "HIERARCHY_EDGES", "classify_set", "enumerate_class", "is_class_closed",
    "verify_hierarchy"
]


class ClassRegistry:

    def __init__(self):
        self._registry = dict()

    def open_class(self, name):

        def wrapper(func):
            self._registry[name] = func
            return func

        return wrapper

    def invoke(self, name, context) -> bool:
        return self._registry[name](context)

    def check(self, name) -> bool:
        return name in self._registry

    def require(self, name):
        if not self.check(name):
            raise UnknownName("class", name, self.names())

    def names(self) -> Tuple[str, ...]:
        return tuple(self._registry)


OpenClasses = ClassRegistry()


class SetContext:
    """Operator values for one set, computed once and shared by the
    class predicates."""

    def __init__(self, space: AuraSpace, bits: int):
        self.space = space
        self.n = space.n
        self.bits = bits

    def int_(self, bits: int) -> int:
        return interior(self.space.topology, PointSet(self.n, bits)).bits

    def cl(self, bits: int) -> int:
        return closure(self.space.topology, PointSet(self.n, bits)).bits

    def cla(self, bits: int) -> int:
        return self.space.closure_mask(bits)

    def within(self, bits: int) -> bool:
        return self.bits & ~bits == 0

    @cached_property
    def interior(self) -> int:
        return self.int_(self.bits)

    @cached_property
    def closure(self) -> int:
        return self.cl(self.bits)

    @cached_property
    def aura_closure(self) -> int:
        return self.cla(self.bits)


@OpenClasses.open_class("open")
def _open(c: SetContext):
    return c.space.topology.is_open(PointSet(c.n, c.bits))


@OpenClasses.open_class("semi_open")
def _semi_open(c: SetContext):
    return c.within(c.cl(c.interior))


@OpenClasses.open_class("pre_open")
def _pre_open(c: SetContext):
    return c.within(c.int_(c.closure))


@OpenClasses.open_class("alpha_open")
def _alpha_open(c: SetContext):
    return c.within(c.int_(c.cl(c.interior)))


@OpenClasses.open_class("beta_open")
def _beta_open(c: SetContext):
    return c.within(c.cl(c.int_(c.closure)))


@OpenClasses.open_class("a_open")
def _a_open(c: SetContext):
    return c.space.spread_mask(c.bits) == c.bits


@OpenClasses.open_class("a_semi_open")
def _a_semi_open(c: SetContext):
    return c.within(c.cla(c.interior))


@OpenClasses.open_class("a_pre_open")
def _a_pre_open(c: SetContext):
    return c.within(c.int_(c.aura_closure))


@OpenClasses.open_class("a_alpha_open")
def _a_alpha_open(c: SetContext):
    return c.within(c.int_(c.cla(c.interior)))


@OpenClasses.open_class("a_beta_open")
def _a_beta_open(c: SetContext):
    return c.within(c.cla(c.int_(c.aura_closure)))


@OpenClasses.open_class("a_b_open")
def _a_b_open(c: SetContext):
    return c.within(c.cla(c.interior) | c.int_(c.aura_closure))


CLASS_NAMES = OpenClasses.names()


@dataclass(frozen=True)
class ClassProfile:
    open: bool
    semi_open: bool
    pre_open: bool
    alpha_open: bool
    beta_open: bool
    a_open: bool
    a_semi_open: bool
    a_pre_open: bool
    a_alpha_open: bool
    a_beta_open: bool
    a_b_open: bool

    def flag(self, name: str) -> bool:
        OpenClasses.require(name)
        return getattr(self, name)

    def as_dict(self) -> Dict[str, bool]:
        return {name: getattr(self, name) for name in CLASS_NAMES}


def _profile_bits(S: AuraSpace, bits: int) -> ClassProfile:
    context = SetContext(S, bits)
    return ClassProfile(
        **{name: OpenClasses.invoke(name, context)
           for name in CLASS_NAMES})


def classify_set(S: AuraSpace, A: PointSet) -> ClassProfile:
    """classify_set(S, A) -> ClassProfile
        Evaluate the defining inclusion of each of the eleven classes.
    """
    check_universe(S.n, A)
    return _profile_bits(S, A.bits)


def enumerate_class(S: AuraSpace, class_name: str) -> Tuple[PointSet, ...]:
    """enumerate_class(S, class_name) -> tuple of PointSet
        Every subset in the class, in canonical order.
    """
    OpenClasses.require(class_name)
    if S.n > MAX_EXHAUSTIVE:
        raise UniverseTooLarge(S.n, MAX_EXHAUSTIVE, "enumerate_class")
    return tuple(
        PointSet(S.n, bits) for bits in range(1 << S.n)
        if OpenClasses.invoke(class_name, SetContext(S, bits)))


def is_class_closed(S: AuraSpace, A: PointSet, class_name: str) -> bool:
    """A is closed for a class when its complement belongs to the class."""
    OpenClasses.require(class_name)
    check_universe(S.n, A)
    return OpenClasses.invoke(class_name, SetContext(S, (~A).bits))


# (subclass, superclass) pairs that hold in every aura space.
HIERARCHY_EDGES = (
    ("open", "a_alpha_open"),
    ("a_alpha_open", "a_semi_open"),
    ("a_alpha_open", "a_pre_open"),
    ("a_semi_open", "a_b_open"),
    ("a_pre_open", "a_b_open"),
    ("a_b_open", "a_beta_open"),
    ("semi_open", "a_semi_open"),
    ("pre_open", "a_pre_open"),
    ("alpha_open", "a_alpha_open"),
    ("beta_open", "a_beta_open"),
    ("a_open", "open"),
)

# Pairs with no inclusion either way in general.
INCOMPARABLE_PAIRS = (
    ("a_semi_open", "a_pre_open"),
    ("a_pre_open", "a_semi_open"),
)


@dataclass(frozen=True)
class HierarchyEdge:
    """One inclusion sub ⊆ sup checked over all subsets.

    counterexample is the first set in sub but not in sup (a fault);
    witnesses are the sets in sup but not in sub, showing strictness.
    """
    sub: str
    sup: str
    holds: bool
    counterexample: Optional[PointSet]
    witnesses: Tuple[PointSet, ...]

    @property
    def witness(self) -> Optional[PointSet]:
        return self.witnesses[0] if self.witnesses else None

    @property
    def strict(self) -> bool:
        return bool(self.witnesses)


@dataclass(frozen=True)
class HierarchySeparation:
    """Sets in left but not in right, for an incomparable pair."""
    left: str
    right: str
    witnesses: Tuple[PointSet, ...]

    @property
    def witness(self) -> Optional[PointSet]:
        return self.witnesses[0] if self.witnesses else None


@dataclass(frozen=True)
class HierarchyReport:
    edges: Tuple[HierarchyEdge, ...]
    separations: Tuple[HierarchySeparation, ...]

    @property
    def holds(self) -> bool:
        return all(edge.holds for edge in self.edges)

    def edge(self, sub: str, sup: str) -> HierarchyEdge:
        for edge in self.edges:
            if (edge.sub, edge.sup) == (sub, sup):
                return edge
        raise UnknownName("hierarchy edge", "%s -> %s" % (sub, sup),
                          ("%s -> %s" % (e.sub, e.sup) for e in self.edges))

    def separation(self, left: str, right: str) -> HierarchySeparation:
        for sep in self.separations:
            if (sep.left, sep.right) == (left, right):
                return sep
        raise UnknownName("class pair", "%s \\ %s" % (left, right),
                          ("%s \\ %s" % (s.left, s.right)
                           for s in self.separations))


def verify_hierarchy(S: AuraSpace) -> HierarchyReport:
    """verify_hierarchy(S) -> HierarchyReport
        Check every inclusion of HIERARCHY_EDGES over all 2^n subsets and
        collect strictness witnesses. A failing edge is an implementation
        fault and is reported through ``holds``.
    """
    if S.n > MAX_HIERARCHY:
        raise UniverseTooLarge(S.n, MAX_HIERARCHY, "verify_hierarchy")
    members: Dict[str, List[int]] = {name: [] for name in CLASS_NAMES}
    for bits in range(1 << S.n):
        profile = _profile_bits(S, bits)
        for name in CLASS_NAMES:
            if getattr(profile, name):
                members[name].append(bits)

    def difference(left: str, right: str) -> Tuple[PointSet, ...]:
        exclude = set(members[right])
        return tuple(
            PointSet(S.n, bits) for bits in members[left]
            if bits not in exclude)

    edges = []
    for sub, sup in HIERARCHY_EDGES:
        faults = difference(sub, sup)
        edges.append(
            HierarchyEdge(sub, sup, not faults,
                          faults[0] if faults else None,
                          difference(sup, sub)))
    separations = tuple(
        HierarchySeparation(left, right, difference(left, right))
        for left, right in INCOMPARABLE_PAIRS)
    return HierarchyReport(tuple(edges), separations)
