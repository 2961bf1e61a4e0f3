"""
Named example spaces, maps and deployments.

The names are stable: the CLI accepts them through ``--fixture`` and the
tests refer to them. ``fixture(name)`` builds a fresh instance each call.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

from .aura import AuraSpace, ScopeFunction
from .errors import UnknownName
from .morphism import SpaceMap
from .pointset import PointSet
from .sensor import SensorDeployment
from .space import Topology, topology_from_subbasis

__all__ = ["Fixture", "FIXTURES", "fixture", "fixture_names", "provenance"]

FixtureValue = Union[AuraSpace, SpaceMap, SensorDeployment]


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    provenance: str
    build: Callable[[], FixtureValue]


def _space(points: Sequence[str], opens, auras: Dict[str, Sequence[str]]):
    """opens is "discrete" or a list of label collections."""
    n = len(points)
    index = {p: i for i, p in enumerate(points)}

    def as_set(labels):
        return PointSet.of(n, (index[p] for p in labels))

    if opens == "discrete":
        topology = Topology.discrete(n, points)
    else:
        topology = Topology(n, [as_set(o) for o in opens], points)
    scope = ScopeFunction(as_set(auras[p]) for p in points)
    return AuraSpace(topology, scope)


def finite_aura_basic():
    return _space("abcd", ["", "a", "b", "ab", "abc", "abcd"], {
        "a": "a",
        "b": "ab",
        "c": "abc",
        "d": "abcd"
    })


def non_idempotent():
    return _space("abc", "discrete", {"a": "ab", "b": "bc", "c": "c"})


def closure_coincide():
    return _space("abc", ["", "a", "bc", "abc"], {
        "a": "a",
        "b": "bc",
        "c": "bc"
    })


def closure_strict():
    return _space("abc", "discrete", {"a": "ab", "b": "b", "c": "c"})


def semi_not_pre():
    return _space("abcd", ["", "a", "c", "ac", "abc", "abcd"], {
        "a": "a",
        "b": "abc",
        "c": "c",
        "d": "abcd"
    })


def pre_not_semi():
    return _space("abcd", ["", "ab", "cd", "abcd"], {
        "a": "ab",
        "b": "ab",
        "c": "cd",
        "d": "abcd"
    })


def pre_not_semi_map():
    space = pre_not_semi()
    return SpaceMap(space, space, [0, 0, 2, 2])


def trivial_discrete():
    return _space("abc", "discrete", {p: "abc" for p in "abc"})


def discrete_discrete():
    return _space("abc", "discrete", {p: p for p in "abc"})


PATIENTS = ["p1", "p2", "p3", "p4", "p5", "p6"]
MEDICAL_AURAS = {
    "p1": ["p1", "p2"],
    "p2": ["p1", "p2", "p3"],
    "p3": ["p2", "p3"],
    "p4": ["p4", "p5"],
    "p5": ["p4", "p5", "p6"],
    "p6": ["p5", "p6"],
}
MEDICAL_REFINED_AURAS = dict(MEDICAL_AURAS,
                             p2=["p1", "p2"],
                             p5=["p4", "p5"])


def _medical(auras: Dict[str, List[str]]) -> AuraSpace:
    n = len(PATIENTS)
    index = {p: i for i, p in enumerate(PATIENTS)}
    subbasis = [
        PointSet.of(n, (index[p] for p in aura))
        for aura in MEDICAL_AURAS.values()
    ]
    topology = topology_from_subbasis(n, subbasis, PATIENTS)
    scope = ScopeFunction(
        PointSet.of(n, (index[q] for q in auras[p])) for p in PATIENTS)
    return AuraSpace(topology, scope)


def medical():
    return _medical(MEDICAL_AURAS)


def medical_refined():
    return _medical(MEDICAL_REFINED_AURAS)


def epidemic_seven():
    return _space("abcdefg", "discrete", {
        "a": "ab",
        "b": "bcd",
        "c": "c",
        "d": "de",
        "e": "ef",
        "f": "f",
        "g": "g"
    })


def sensor_triple():
    return SensorDeployment.of([(0, 0, 3), (4, 0, 2), (2, 3, 2)],
                               (-4, -4, 7, 6), 0.5)


def sensor_empty():
    return SensorDeployment.of([], (0, 0, 2, 2), 1)


_CATALOG: Tuple[Fixture, ...] = (
    Fixture("finite_aura_basic", "space",
            "four points, a chain of nested auras; aura topology of five sets",
            finite_aura_basic),
    Fixture("non_idempotent", "space",
            "aura closure of {c} is {b,c}, applied twice gives X",
            non_idempotent),
    Fixture("closure_coincide", "space",
            "classical and aura closure agree on every set",
            closure_coincide),
    Fixture("closure_strict", "space",
            "aura closure of {b} is {a,b} while the closure is {b}",
            closure_strict),
    Fixture("semi_not_pre", "space",
            "{a,b} is aura-semi-open, not aura-pre-open, not aura-alpha-open",
            semi_not_pre),
    Fixture("pre_not_semi", "space",
            "{a,c} is aura-pre-open and not aura-semi-open", pre_not_semi),
    Fixture("pre_not_semi_map", "map",
            "self-map a,b -> a and c,d -> c of pre_not_semi; aura-continuous",
            pre_not_semi_map),
    Fixture("trivial_discrete", "space",
            "trivial aura on the discrete topology: T2 but not aura-T0",
            trivial_discrete),
    Fixture("discrete_discrete", "space",
            "discrete aura on the discrete topology: aura-T2 and regular",
            discrete_discrete),
    Fixture("medical", "space",
            "six patients, topology generated by their auras; accuracy 2/6",
            medical),
    Fixture("medical_refined", "space",
            "medical with the auras of p2 and p5 narrowed", medical_refined),
    Fixture("epidemic_seven", "space",
            "seven people, spread from a stabilizes after four steps",
            epidemic_seven),
    Fixture("sensor_triple", "deployment",
            "three sensors over [-4,7]x[-4,6] at resolution 0.5",
            sensor_triple),
    Fixture("sensor_empty", "deployment",
            "no sensors over [0,2]x[0,2]; every aura is a singleton",
            sensor_empty),
)

FIXTURES: Dict[str, Fixture] = {f.name: f for f in _CATALOG}


def fixture_names() -> Tuple[str, ...]:
    return tuple(f.name for f in _CATALOG)


def _lookup(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownName("fixture", name, fixture_names()) from None


def fixture(name: str) -> FixtureValue:
    """fixture(name) -> AuraSpace | SpaceMap | SensorDeployment
        A freshly built instance of the named example.
    """
    return _lookup(name).build()


def provenance(name: str) -> str:
    return _lookup(name).provenance
