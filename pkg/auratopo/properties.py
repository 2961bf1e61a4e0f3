"""
Executable laws of aura spaces, checked on generated inputs.

Each law is registered in ``Properties`` under a stable name and, like a
grader, returns ``(passed, info)`` for one ``Case``. ``run_properties``
builds cases from (seed, case index) only, evaluates every law on each
case (optionally in a thread pool) and merges results in case order, so
a fixed seed gives an identical ``FuzzReport``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from . import log
from .aura import (aura_topology, closure_trace, infinity_topology,
                   scope_profile)
from .classes import CLASS_NAMES, classify_set, verify_hierarchy
from .consts import (DEFAULT_FUZZ_CASES, DEFAULT_FUZZ_MAX_N,
                     DEFAULT_FUZZ_SEED, DEFAULT_LABEL_PATTERN, FUZZ_MAX_N,
                     FUZZ_MIN_N)
from .document import dumps, encode_space, read_space
from .errors import PropertyFailure, UnknownName
from .generator import Generator
from .morphism import (SpaceMap, compose, continuity_profile,
                       semi_continuity_via_closed,
                       semi_continuity_via_neighbourhoods)
from .pointset import PointSet, full_bits
from .rough import (approximate, aura_partition, is_refinement,
                    pawlak_approximate, refinement_report)
from .separation import separation_profile, t1_via_singletons
from .space import closure, interior, set_name, validate_topology
from .spread import (apply_quarantine, immunity_report, spread_components,
                     spread_trace)
from .utils import unpack_kwargs

__all__ = [
    "PropertyRegistry", "Properties", "Case", "PropertyResult", "FuzzReport",
    "check_property", "run_properties"
]

# Above this size pair laws run on a sample instead of all 4^n pairs.
EXHAUSTIVE_PAIRS_N = 6
SAMPLED_PAIRS = 512
# Fresh target spaces tried before a map falls back to a constant one.
MAP_TARGETS = 4


class PropertyRegistry:

    def __init__(self):
        self._registry = dict()

    def law(self, name):

        def wrapper(func):
            self._registry[name] = func
            return func

        return wrapper

    def invoke(self, name, case):
        return self._registry[name](case)

    def check(self, name):
        return name in self._registry

    def names(self) -> Tuple[str, ...]:
        return tuple(self._registry)


Properties = PropertyRegistry()


def _draw_map(source, max_n: int, continuous: bool, rng) -> SpaceMap:
    """A random map out of source into a fresh target of at least two
    points; with continuous, targets are redrawn until an aura-continuous
    map is found."""
    for attempt in range(MAP_TARGETS):
        target = Generator.space(rng.randint(2, max(2, max_n)),
                                 shape="any",
                                 rng=rng)
        last = attempt == MAP_TARGETS - 1
        m = Generator.map(source,
                          target,
                          a_continuous=continuous,
                          fallback=last,
                          rng=rng)
        if m is not None:
            return m


class Case:
    """One generated input bundle.

    All randomness is drawn in ``__init__``; everything else is derived
    lazily and deterministically from the drawn values.
    """

    def __init__(self, seed: int, index: int, max_n: int):
        self.seed = seed
        self.index = index
        rng = Generator.case_rng(seed, index)
        pattern = DEFAULT_LABEL_PATTERN if rng.random() < 0.125 else None
        n = rng.randint(1, max_n)
        self.space = Generator.space(n,
                                     shape="any",
                                     rng=rng,
                                     label_pattern=pattern)
        self.n = n
        self.refined = Generator.refinement(self.space, rng=rng)
        continuous = rng.random() < 0.5
        self.f = _draw_map(self.space, max_n, continuous, rng)
        self.g = _draw_map(self.f.target, max_n, continuous, rng)
        self.quarantine = PointSet(n, rng.getrandbits(n))
        self.immune = PointSet(n, rng.getrandbits(n))
        self.union_picks = [rng.getrandbits(16) for _ in range(4)]
        if n <= EXHAUSTIVE_PAIRS_N:
            self.pairs = [(a, b) for a in range(1 << n) for b in range(1 << n)]
        else:
            self.pairs = [(rng.getrandbits(n), rng.getrandbits(n))
                          for _ in range(SAMPLED_PAIRS)]

    def name(self, bits: int) -> str:
        return set_name(PointSet(self.n, bits), self.space.labels)

    @property
    def subsets(self) -> range:
        return range(1 << self.n)

    @property
    def everything(self) -> int:
        return full_bits(self.n)

    @cached_property
    def aura_closure(self) -> List[int]:
        return [self.space.closure_mask(b) for b in self.subsets]

    @cached_property
    def aura_interior(self) -> List[int]:
        return [self.space.interior_mask(b) for b in self.subsets]

    @cached_property
    def limit_closure(self) -> List[int]:
        return [self.space.limit_closure_mask(b) for b in self.subsets]

    @cached_property
    def closure(self) -> List[int]:
        T = self.space.topology
        return [closure(T, PointSet(self.n, b)).bits for b in self.subsets]

    @cached_property
    def interior(self) -> List[int]:
        T = self.space.topology
        return [interior(T, PointSet(self.n, b)).bits for b in self.subsets]

    @cached_property
    def profile(self):
        return scope_profile(self.space)

    @cached_property
    def classes(self) -> Dict[str, List[int]]:
        members: Dict[str, List[int]] = {name: [] for name in CLASS_NAMES}
        for b in self.subsets:
            flags = classify_set(self.space, PointSet(self.n, b)).as_dict()
            for name, value in flags.items():
                if value:
                    members[name].append(b)
        return members

    def witness(self) -> Dict[str, Any]:
        """The inputs of this case as documents."""
        return {
            "case": self.index,
            "space": encode_space(self.space),
            "refined": encode_space(self.refined),
            "map_f": list(self.f.mapping),
            "map_g": list(self.g.mapping),
        }


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def _fail(message: str):
    return (False, message)


PASSED = (True, None)


@Properties.law("finite_space_laws")
def _finite_space_laws(c: Case):
    if not validate_topology(c.space.topology).ok:
        return _fail("generated topology fails validation")
    cl, it = c.closure, c.interior
    for b in c.subsets:
        if not (_subset(it[b], b) and _subset(b, cl[b])):
            return _fail("int ⊆ A ⊆ cl fails at %s" % c.name(b))
        if it[it[b]] != it[b] or cl[cl[b]] != cl[b]:
            return _fail("classical operators not idempotent at %s" %
                         c.name(b))
        if cl[b] != c.everything & ~it[c.everything & ~b]:
            return _fail("closure/interior duality fails at %s" % c.name(b))
    for a, b in c.pairs:
        if it[a & b] != it[a] & it[b] or cl[a | b] != cl[a] | cl[b]:
            return _fail("Kuratowski meet/join law fails at %s, %s" %
                         (c.name(a), c.name(b)))
    return PASSED


@Properties.law("cech_axioms")
def _cech_axioms(c: Case):
    cla, cl = c.aura_closure, c.closure
    if cla[0] != 0:
        return _fail("aura closure of the empty set is not empty")
    for b in c.subsets:
        if not _subset(b, cla[b]):
            return _fail("aura closure not extensive at %s" % c.name(b))
        if not _subset(cl[b], cla[b]):
            return _fail("closure not inside aura closure at %s" % c.name(b))
    for a, b in c.pairs:
        if cla[a | b] != cla[a] | cla[b]:
            return _fail("aura closure not additive at %s, %s" %
                         (c.name(a), c.name(b)))
        if _subset(a, b) and not _subset(cla[a], cla[b]):
            return _fail("aura closure not monotone at %s, %s" %
                         (c.name(a), c.name(b)))
    return PASSED


@Properties.law("interior_laws")
def _interior_laws(c: Case):
    ia, cla, it = c.aura_interior, c.aura_closure, c.interior
    full = c.everything
    if ia[full] != full:
        return _fail("aura interior of the universe is not the universe")
    for b in c.subsets:
        if not _subset(ia[b], b):
            return _fail("aura interior not inside the set at %s" %
                         c.name(b))
        if not _subset(ia[b], it[b]):
            return _fail("aura interior not inside the interior at %s" %
                         c.name(b))
        if ia[b] != b & ~cla[full & ~b]:
            return _fail("aura interior/closure duality fails at %s" %
                         c.name(b))
    for a, b in c.pairs:
        if ia[a & b] != ia[a] & ia[b]:
            return _fail("aura interior does not preserve meets at %s, %s" %
                         (c.name(a), c.name(b)))
        if _subset(a, b) and not _subset(ia[a], ia[b]):
            return _fail("aura interior not monotone at %s, %s" %
                         (c.name(a), c.name(b)))
    return PASSED


@Properties.law("kuratowski_completion")
def _kuratowski_completion(c: Case):
    inf = c.limit_closure
    if inf[0] != 0:
        return _fail("limit closure of the empty set is not empty")
    for b in c.subsets:
        if not _subset(b, inf[b]) or inf[inf[b]] != inf[b]:
            return _fail("limit closure not extensive/idempotent at %s" %
                         c.name(b))
    for a, b in c.pairs:
        if inf[a | b] != inf[a] | inf[b]:
            return _fail("limit closure not additive at %s, %s" %
                         (c.name(a), c.name(b)))
    return PASSED


@Properties.law("topology_chain")
def _topology_chain(c: Case):
    aura_family = aura_topology(c.space)
    limit_family = infinity_topology(c.space)
    for family, name in ((aura_family, "aura"), (limit_family, "limit")):
        if not validate_topology(family).ok:
            return _fail("%s topology fails validation" % name)
    if not limit_family.open_bits() <= aura_family.open_bits():
        return _fail("limit topology not inside the aura topology")
    if not aura_family.open_bits() <= c.space.topology.open_bits():
        return _fail("aura topology not inside the topology")
    return PASSED


@Properties.law("stabilization")
def _stabilization(c: Case):
    for b in c.subsets:
        trace = closure_trace(c.space, PointSet(c.n, b))
        if trace.stabilized_at > c.n:
            return _fail("trace from %s needs %d steps" %
                         (c.name(b), trace.stabilized_at))
        for earlier, later in zip(trace.stages, trace.stages[1:]):
            if not earlier <= later:
                return _fail("trace from %s is not increasing" % c.name(b))
        if trace.limit.bits != c.limit_closure[b]:
            return _fail("trace from %s misses the limit closure" %
                         c.name(b))
    return PASSED


@Properties.law("special_auras")
def _special_auras(c: Case):
    p, cla = c.profile, c.aura_closure
    if p.discrete and not (p.transitive and p.symmetric):
        return _fail("discrete scope not transitive and symmetric")
    for b in c.subsets:
        if p.trivial and b and cla[b] != c.everything:
            return _fail("trivial scope: closure of %s is not X" % c.name(b))
        if p.discrete and cla[b] != b:
            return _fail("discrete scope: closure of %s moved" % c.name(b))
    if p.symmetric:
        for x in range(c.n):
            for y in range(c.n):
                if bool(cla[1 << y] >> x & 1) != bool(cla[1 << x] >> y & 1):
                    return _fail("symmetric scope: closures of points %d, %d "
                                 "disagree" % (x, y))
    return PASSED


@Properties.law("cover_base")
def _cover_base(c: Case):
    for A in aura_topology(c.space).opens:
        if c.space.spread_mask(A.bits) != A.bits:
            return _fail("aura-open %s is not the union of its auras" %
                         c.name(A.bits))
    return PASSED


@Properties.law("transitive_consequences")
def _transitive_consequences(c: Case):
    if not c.profile.transitive:
        return PASSED
    cla = c.aura_closure
    for b in c.subsets:
        if cla[cla[b]] != cla[b]:
            return _fail("transitive scope: closure of %s not idempotent" %
                         c.name(b))
    for x, aura in enumerate(c.space.auras):
        if c.space.spread_mask(aura) != aura:
            return _fail("transitive scope: aura of point %d not aura-open" %
                         x)
    return PASSED


@Properties.law("class_hierarchy")
def _class_hierarchy(c: Case):
    report = verify_hierarchy(c.space)
    for edge in report.edges:
        if not edge.holds:
            return _fail("%s ⊄ %s at %s" %
                         (edge.sub, edge.sup, c.name(edge.counterexample.bits)))
    return PASSED


@Properties.law("semi_open_unions")
def _semi_open_unions(c: Case):
    family = c.classes["a_semi_open"]
    members = set(family)
    for a in family:
        for b in family:
            if a | b not in members:
                return _fail("union of aura-semi-open %s and %s is not" %
                             (c.name(a), c.name(b)))
    union = 0
    for pick in c.union_picks:
        union |= family[pick % len(family)]
    if union not in members:
        return _fail("union %s of aura-semi-open sets is not" % c.name(union))
    return PASSED


@Properties.law("transitive_class_decomposition")
def _transitive_class_decomposition(c: Case):
    alpha = set(c.classes["a_alpha_open"])
    both = set(c.classes["a_semi_open"]) & set(c.classes["a_pre_open"])
    if not alpha <= both:
        return _fail("aura-alpha-open set outside semi ∩ pre")
    if c.profile.transitive and alpha != both:
        extra = min(both - alpha)
        return _fail("transitive scope: %s is semi and pre but not alpha" %
                     c.name(extra))
    return PASSED


@Properties.law("a_open_family_is_topology")
def _a_open_family_is_topology(c: Case):
    if not validate_topology(aura_topology(c.space)).ok:
        return _fail("aura-open family is not a topology")
    return PASSED


def _profile_chain(profile) -> bool:
    return ((not profile.continuous or profile.a_alpha) and
            (not profile.a_alpha or (profile.a_semi and profile.a_pre)) and
            (not (profile.a_semi or profile.a_pre) or profile.a_beta))


@Properties.law("continuity_hierarchy")
def _continuity_hierarchy(c: Case):
    for name, m in (("f", c.f), ("g", c.g)):
        if not _profile_chain(continuity_profile(m)):
            return _fail("continuity implications fail for map %s %r" %
                         (name, m.mapping))
    return PASSED


@Properties.law("continuity_composition")
def _continuity_composition(c: Case):
    pf, pg = continuity_profile(c.f), continuity_profile(c.g)
    pgf = continuity_profile(compose(c.f, c.g))
    if pf.a_continuous and pg.a_continuous and not pgf.a_continuous:
        return _fail("composition of aura-continuous maps is not")
    if pf.a_semi and pg.continuous and not pgf.a_semi:
        return _fail("aura-semi then continuous is not aura-semi")
    return PASSED


@Properties.law("semi_continuity_characterization")
def _semi_continuity_characterization(c: Case):
    for name, m in (("f", c.f), ("g", c.g)):
        flag = continuity_profile(m).a_semi
        if semi_continuity_via_closed(m) != flag:
            return _fail("closed-set form disagrees for map %s" % name)
        if semi_continuity_via_neighbourhoods(m) != flag:
            return _fail("neighbourhood form disagrees for map %s" % name)
    return PASSED


@Properties.law("transitive_continuity_decomposition")
def _transitive_continuity_decomposition(c: Case):
    for name, m in (("f", c.f), ("g", c.g)):
        p = continuity_profile(m)
        if p.a_alpha and not (p.a_semi and p.a_pre):
            return _fail("aura-alpha map %s is not semi and pre" % name)
        if scope_profile(m.source).transitive and \
                p.a_alpha != (p.a_semi and p.a_pre):
            return _fail("transitive source: alpha differs from semi ∧ pre "
                         "for map %s" % name)
    return PASSED


@Properties.law("separation_chain")
def _separation_chain(c: Case):
    p = separation_profile(c.space)
    if (p.a_t2 and not p.a_t1) or (p.a_t1 and not p.a_t0):
        return _fail("aura T2 ⇒ T1 ⇒ T0 fails")
    if (p.t2 and not p.t1) or (p.t1 and not p.t0):
        return _fail("classical T2 ⇒ T1 ⇒ T0 fails")
    return PASSED


@Properties.law("t1_characterization")
def _t1_characterization(c: Case):
    if t1_via_singletons(c.space).holds != separation_profile(c.space).a_t1:
        return _fail("singleton criterion disagrees with aura T1")
    return PASSED


@Properties.law("rough_laws")
def _rough_laws(c: Case):
    lower, upper, full = c.aura_interior, c.aura_closure, c.everything
    if lower[0] or upper[0] or lower[full] != full or upper[full] != full:
        return _fail("approximations of ∅ or X moved")
    for b in c.subsets:
        if not (_subset(lower[b], b) and _subset(b, upper[b])):
            return _fail("lower ⊆ A ⊆ upper fails at %s" % c.name(b))
        if lower[full & ~b] != full & ~upper[b]:
            return _fail("lower/upper duality fails at %s" % c.name(b))
        if upper[full & ~b] != full & ~lower[b]:
            return _fail("upper/lower duality fails at %s" % c.name(b))
        if not _subset(lower[lower[b]], lower[b]) or not _subset(
                upper[b], upper[upper[b]]):
            return _fail("iterated approximation inclusion fails at %s" %
                         c.name(b))
        report = approximate(c.space, PointSet(c.n, b))
        if report.roughness != 1 - report.accuracy or (
                report.upper and report.definable !=
            (report.accuracy == 1)):
            return _fail("accuracy measures inconsistent at %s" % c.name(b))
    for a, b in c.pairs:
        if lower[a & b] != lower[a] & lower[b]:
            return _fail("lower does not preserve meets at %s, %s" %
                         (c.name(a), c.name(b)))
        if upper[a | b] != upper[a] | upper[b]:
            return _fail("upper does not preserve joins at %s, %s" %
                         (c.name(a), c.name(b)))
    return PASSED


@Properties.law("refinement_monotonicity")
def _refinement_monotonicity(c: Case):
    if not is_refinement(c.space, c.refined):
        return _fail("generated refinement is not one")
    for b in c.subsets:
        if not refinement_report(c.space, c.refined,
                                 PointSet(c.n, b)).monotone:
            return _fail("refinement lost precision at %s" % c.name(b))
    return PASSED


@Properties.law("pawlak_reduction")
def _pawlak_reduction(c: Case):
    if not (c.profile.symmetric and c.profile.transitive):
        return PASSED
    partition = aura_partition(c.space)
    if partition is None:
        return _fail("symmetric transitive auras are not a partition")
    for b in c.subsets:
        A = PointSet(c.n, b)
        ours, theirs = approximate(c.space, A), pawlak_approximate(
            partition, A)
        if (ours.lower, ours.upper) != (theirs.lower, theirs.upper):
            return _fail("partition approximation differs at %s" % c.name(b))
    return PASSED


@Properties.law("spread_laws")
def _spread_laws(c: Case):
    S, p = c.space, c.profile
    for b in c.subsets:
        step = S.spread_mask(b)
        if not (_subset(b, step) and _subset(step, S.closure_mask(step))):
            return _fail("A ⊆ S(A) ⊆ cl(S(A)) fails at %s" % c.name(b))
        if p.transitive and S.spread_mask(step) != step:
            return _fail("transitive scope: spread of %s not aura-open" %
                         c.name(b))
        trace = spread_trace(S, PointSet(c.n, b))
        if trace.stabilized_at > c.n or \
                S.spread_mask(trace.reach.bits) != trace.reach.bits:
            return _fail("spread from %s does not settle" % c.name(b))
    for component in spread_components(S):
        if p.transitive and not component.a_open:
            return _fail("transitive scope: component %s not aura-open" %
                         c.name(component.reach.bits))
        if p.transitive and p.symmetric:
            reach = component.reach.bits
            if not component.complement_a_open or \
                    S.closure_mask(reach) != reach or component.overlaps:
                return _fail("partition scope: component %s is not clopen" %
                             c.name(reach))
    return PASSED


@Properties.law("quarantine_containment")
def _quarantine_containment(c: Case):
    T = c.space.topology
    Q = PointSet.of(c.n, (x for x in c.quarantine
                          if T.is_open(PointSet.single(c.n, x))))
    quarantined = apply_quarantine(c.space, Q)
    if not is_refinement(c.space, quarantined):
        return _fail("quarantine of %s is not a refinement" % c.name(Q.bits))
    for x in Q:
        if quarantined.spread_mask(1 << x) != 1 << x:
            return _fail("quarantined point %s still spreads" %
                         c.space.labels[x])
    for b in c.subsets:
        A = PointSet(c.n, b)
        before = spread_trace(c.space, A).reach
        after = spread_trace(quarantined, A).reach
        if not after <= before:
            return _fail("quarantine of %s widened spread from %s" %
                         (c.name(Q.bits), c.name(b)))
    return PASSED


@Properties.law("immunity")
def _immunity(c: Case):
    report = immunity_report(c.space, c.immune)
    if report.outside_a_open and not report.shielded:
        return _fail("aura-open complement of %s still lets spread in" %
                     c.name(c.immune.bits))
    return PASSED


@Properties.law("document_round_trip")
def _document_round_trip(c: Case):
    text = dumps(encode_space(c.space))
    decoded = read_space(text).to_space()
    if decoded != c.space:
        return _fail("decoded space differs")
    for b in c.subsets:
        if decoded.closure_mask(b) != c.aura_closure[b]:
            return _fail("decoded space closes %s differently" % c.name(b))
    if dumps(encode_space(decoded)) != text:
        return _fail("re-encoding is not byte-identical")
    return PASSED


def check_property(name: str, case: Case):
    """Evaluate one law; raise PropertyFailure on a counterexample."""
    if not Properties.check(name):
        raise UnknownName("property", name, Properties.names())
    (result, info) = Properties.invoke(name, case)
    status = "passed" if result else "!!!FAILED!!!"
    info = info if info is not None else ""
    log.debug("case {} {}: {} {}".format(case.index, name, status, info))
    if not result:
        raise PropertyFailure(name, info, case.witness())


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_case: Optional[int] = None
    message: Optional[str] = None
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def as_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "checked": self.checked,
            "failed": self.failed,
            "passed": self.passed,
        }
        if not self.passed:
            document["first_case"] = self.first_case
            document["message"] = self.message
            document["counterexample"] = self.counterexample
        return document


@dataclass
class FuzzReport:
    seed: int
    cases: int
    max_n: int
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise UnknownName("property", name, (r.name for r in self.results))

    def as_document(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "cases": self.cases,
            "max_n": self.max_n,
            "properties": {r.name: r.as_document()
                           for r in self.results},
        }


def _run_case(seed: int, index: int, max_n: int,
              names: Tuple[str, ...]) -> List[Optional[PropertyFailure]]:
    case = Case(seed, index, max_n)
    outcomes: List[Optional[PropertyFailure]] = []
    for name in names:
        try:
            check_property(name, case)
            outcomes.append(None)
        except PropertyFailure as e:
            outcomes.append(e)
    return outcomes


def run_properties(**kwargs) -> FuzzReport:
    """run_properties(**kwargs) -> FuzzReport
        **kwargs(Keyword args):
            int seed = 42
            int cases = 500 -> number of generated cases, at least 1
            int max_n = 6 -> largest universe, between 2 and 8
            tuple names = None -> laws to run; None runs every law
            int max_workers = -1 -> thread pool size; -1 runs inline,
                None lets the pool decide
            job_pool = None -> an existing executor to submit cases to
    """
    kwargs = unpack_kwargs(
        "run_properties",
        kwargs,
        (
            ("seed", DEFAULT_FUZZ_SEED),
            ("cases", DEFAULT_FUZZ_CASES),
            ("max_n", DEFAULT_FUZZ_MAX_N),
            ("names", None),
            ("max_workers", -1),
            ("job_pool", None),
        ),
    )
    seed, cases, max_n = kwargs["seed"], kwargs["cases"], kwargs["max_n"]
    max_workers, job_pool = kwargs["max_workers"], kwargs["job_pool"]
    if cases < 1:
        raise ValueError("cases must be at least 1, got %d" % cases)
    if not FUZZ_MIN_N <= max_n <= FUZZ_MAX_N:
        raise ValueError("max_n must be between %d and %d, got %d" %
                         (FUZZ_MIN_N, FUZZ_MAX_N, max_n))
    names = tuple(kwargs["names"] or Properties.names())
    for name in names:
        if not Properties.check(name):
            raise UnknownName("property", name, Properties.names())

    if (max_workers is None or max_workers >= 0) and job_pool is None:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_workers or None) as job_pool:
            return run_properties(seed=seed,
                                  cases=cases,
                                  max_n=max_n,
                                  names=names,
                                  max_workers=max_workers,
                                  job_pool=job_pool)

    def do(index):
        return _run_case(seed, index, max_n, names)

    if job_pool is not None:
        outcomes = list(job_pool.map(do, range(cases)))
    else:
        outcomes = [do(index) for index in range(cases)]

    report = FuzzReport(seed, cases, max_n,
                        [PropertyResult(name) for name in names])
    for index, case_outcomes in enumerate(outcomes):
        for result, failure in zip(report.results, case_outcomes):
            result.checked += 1
            if failure is None:
                continue
            result.failed += 1
            if result.first_case is None:
                result.first_case = index
                result.message = failure.message
                result.counterexample = failure.witness
    for result in report.results:
        log.debug("{}: {} {}/{}".format(
            result.name, "passed" if result.passed else "!!!FAILED!!!",
            result.checked - result.failed, result.checked))
    passed = sum(r.passed for r in report.results)
    log.info("{} of {} properties passed on {} cases".format(
        passed, len(report.results), cases))
    return report
