"""
Space, deployment and report documents.

Documents are JSON. A space document looks like::

    {
      "name": "finite_aura_basic",
      "points": ["a", "b", "c", "d"],
      "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"],
                ["a", "b", "c", "d"]],
      "aura": {"a": ["a"], "b": ["a", "b"], "c": ["a", "b", "c"],
               "d": ["a", "b", "c", "d"]}
    }

``"opens": "discrete"`` stands for the discrete topology. Sets are label
lists in point order; opens are listed in canonical order. Encoding uses
sorted keys, so equal inputs give byte-identical text.
"""
import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .aura import AuraSpace, ScopeFunction, validate_scope
from .consts import DECIMAL_PLACES
from .errors import DocumentError, ScopeError
from .pointset import PointSet
from .sensor import SensorDeployment
from .space import Topology, validate_topology
from .validation import Validation

__all__ = [
    "SpaceDocument", "read_space", "read_deployment", "encode_space",
    "decode_space", "encode_deployment", "read_aura_map", "dumps",
    "set_labels", "ratio_document", "input_digest", "build_report", "FORMATS"
]

FORMATS = ("report", "compact")


def dumps(document: Any, format: str = "report") -> str:
    """Serialize a document; "report" is indented, "compact" one line."""
    if format == "compact":
        return json.dumps(document,
                          sort_keys=True,
                          ensure_ascii=False,
                          separators=(",", ":"))
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2)


def set_labels(A: PointSet, labels: Sequence[str]) -> List[str]:
    return A.labels(labels)


def ratio_document(num: int, den: int) -> Dict[str, Any]:
    """{num, den} pair with a decimal rendering; 0/0 reads as 1."""
    value = Fraction(num, den) if den else Fraction(1)
    return {
        "num": num,
        "den": den,
        "decimal": round(float(value), DECIMAL_PLACES)
    }


def input_digest(texts: Iterable[str]) -> str:
    digest = hashlib.sha256()
    for text in texts:
        digest.update(text.encode("utf-8"))
        digest.update(b"\0")
    return digest.hexdigest()


def build_report(command: Sequence[str], digest: str, result: Any,
                 violations: Sequence[Any] = ()) -> Dict[str, Any]:
    return {
        "command": list(command),
        "input_digest": digest,
        "ok": not violations,
        "result": result,
        "violations": list(violations),
    }


@dataclass(frozen=True)
class SpaceDocument:
    """A decoded space document whose scope may still be incomplete or
    invalid; ``validate`` reports every fault, ``to_space`` builds the
    AuraSpace when there is none."""
    topology: Topology
    auras: Tuple[Optional[PointSet], ...]
    name: Optional[str] = None
    provenance: Optional[str] = None

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.topology.labels

    def validate(self) -> Validation:
        result = validate_topology(self.topology)
        missing = [x for x, aura in enumerate(self.auras) if aura is None]
        scope = ScopeFunction(
            aura if aura is not None else PointSet.full(self.topology.n)
            for aura in self.auras)
        per_point = Validation()
        for x in missing:
            per_point.add("aura-missing",
                          "point %s has no aura" % self.labels[x], x)
        per_point.violations.extend(
            v for v in validate_scope(self.topology, scope).violations
            if v.subjects[0] not in missing)
        # point order; the sort is stable within a point
        per_point.violations.sort(key=lambda v: v.subjects[0])
        result.extend(per_point)
        return result

    def to_space(self) -> AuraSpace:
        validation = self.validate()
        if not validation.ok:
            raise ScopeError(validation)
        return AuraSpace(self.topology, ScopeFunction(self.auras))

    @staticmethod
    def from_space(S: AuraSpace,
                   name: Optional[str] = None,
                   provenance: Optional[str] = None) -> "SpaceDocument":
        return SpaceDocument(S.topology, tuple(S.scope), name, provenance)

    def encode(self) -> Dict[str, Any]:
        labels = self.labels
        document: Dict[str, Any] = {"points": list(labels)}
        if self.topology.lazy_discrete:
            document["opens"] = "discrete"
        else:
            document["opens"] = [
                set_labels(O, labels) for O in self.topology.opens
            ]
        document["aura"] = {
            labels[x]: set_labels(aura, labels)
            for x, aura in enumerate(self.auras) if aura is not None
        }
        if self.name is not None:
            document["name"] = self.name
        if self.provenance is not None:
            document["provenance"] = self.provenance
        return document


def _locate(text: str, needle: str) -> Optional[int]:
    """1-based line of the first occurrence of needle."""
    offset = text.find(needle)
    if offset < 0:
        return None
    return text.count("\n", 0, offset) + 1


def _load(text: str, path: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(path, e.msg, e.lineno, e.colno) from None


class _Reader:
    """Label resolution with line context for error messages."""

    def __init__(self, text: str, path: str):
        self.text = text
        self.path = path

    def fail(self, message: str, needle: Optional[str] = None):
        lineno = _locate(self.text, needle) if needle is not None else None
        raise DocumentError(self.path, message, lineno)

    def field(self, document: Dict[str, Any], key: str, kind, kind_name):
        if key not in document:
            self.fail("missing key '%s'" % key)
        value = document[key]
        if not isinstance(value, kind) or isinstance(value, bool):
            self.fail("key '%s' must be %s" % (key, kind_name), '"%s"' % key)
        return value

    def points(self, value: Any) -> List[str]:
        if not value:
            self.fail("a space needs at least one point", '"points"')
        seen = set()
        for label in value:
            if not isinstance(label, str):
                self.fail("point labels must be strings, got %r" % (label, ),
                          '"points"')
            if label in seen:
                self.fail("duplicate point '%s'" % label, '"points"')
            seen.add(label)
        return list(value)

    def label_set(self, value: Any, index: Dict[str, int],
                  where: str) -> PointSet:
        if not isinstance(value, list):
            self.fail("%s must be a list of labels" % where)
        for label in value:
            if not isinstance(label, str) or label not in index:
                self.fail("unknown label '%s' in %s" % (label, where),
                          '"%s"' % label if isinstance(label, str) else None)
        return PointSet.of(len(index), (index[label] for label in value))


def read_space(text: str, path: str = "<document>") -> SpaceDocument:
    """read_space(text, path) -> SpaceDocument
        Parse a space document. Syntax faults, unknown labels and duplicate
        points raise DocumentError; scope faults are left to ``validate``.
    """
    reader = _Reader(text, path)
    document = _load(text, path)
    if not isinstance(document, dict):
        reader.fail("a space document must be an object")
    points = reader.points(reader.field(document, "points", list, "a list"))
    index = {label: i for i, label in enumerate(points)}
    n = len(points)

    opens = document.get("opens", None)
    if opens == "discrete":
        topology = Topology.discrete(n, points)
    elif isinstance(opens, list):
        topology = Topology(
            n, [reader.label_set(O, index, "opens") for O in opens], points)
    else:
        reader.fail("'opens' must be a list of label lists or \"discrete\"",
                    '"opens"')

    aura_map = reader.field(document, "aura", dict, "an object")
    auras: List[Optional[PointSet]] = [None] * n
    for label, value in aura_map.items():
        if label not in index:
            reader.fail("unknown label '%s' in aura" % label,
                        '"%s"' % label)
        auras[index[label]] = reader.label_set(value, index,
                                               "aura of '%s'" % label)
    name = document.get("name")
    provenance = document.get("provenance")
    return SpaceDocument(topology, tuple(auras), name, provenance)


def encode_space(S: AuraSpace,
                 name: Optional[str] = None,
                 provenance: Optional[str] = None) -> Dict[str, Any]:
    return SpaceDocument.from_space(S, name, provenance).encode()


def decode_space(text: str, path: str = "<document>") -> AuraSpace:
    """Parse and validate a space document into an AuraSpace."""
    return read_space(text, path).to_space()


def encode_deployment(d: SensorDeployment,
                      uncovered_aura: Any = "self") -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "sensors": [list(s) for s in d.sensors],
        "region": list(d.region),
        "resolution": d.resolution,
    }
    if uncovered_aura == "self":
        document["uncovered_aura"] = "self"
    else:
        document["uncovered_aura"] = {"delta": uncovered_aura[1]}
    return document


def read_deployment(text: str,
                    path: str = "<document>") -> Tuple[SensorDeployment, Any]:
    """read_deployment(text, path) -> (SensorDeployment, uncovered_aura)
        uncovered_aura is "self" or ("delta", d), ready for
        ``build_grid_space``.
    """
    reader = _Reader(text, path)
    document = _load(text, path)
    if not isinstance(document, dict):
        reader.fail("a deployment document must be an object")
    sensors = reader.field(document, "sensors", list, "a list")
    for sensor in sensors:
        if not (isinstance(sensor, list) and len(sensor) == 3 and all(
                isinstance(v, (int, float)) for v in sensor)):
            reader.fail("each sensor must be an [x, y, range] triple",
                        '"sensors"')
    region = reader.field(document, "region", list, "a list")
    if len(region) != 4 or not all(isinstance(v, (int, float))
                                   for v in region):
        reader.fail("region must be [x0, y0, x1, y1]", '"region"')
    resolution = reader.field(document, "resolution", (int, float),
                              "a number")
    uncovered = document.get("uncovered_aura", "self")
    if isinstance(uncovered, dict) and isinstance(uncovered.get("delta"),
                                                  (int, float)):
        uncovered = ("delta", float(uncovered["delta"]))
    elif uncovered != "self":
        reader.fail("uncovered_aura must be \"self\" or {\"delta\": d}",
                    '"uncovered_aura"')
    try:
        deployment = SensorDeployment.of(sensors, region, resolution)
    except ValueError as e:
        raise DocumentError(path, str(e)) from None
    return deployment, uncovered


def read_aura_map(text: str, labels: Sequence[str],
                  path: str = "<document>") -> Dict[int, PointSet]:
    """read_aura_map(text, labels, path) -> dict of point index -> PointSet
        A JSON object from point labels to label lists, such as a
        replacement scope for some of the points of a space.
    """
    reader = _Reader(text, path)
    document = _load(text, path)
    if not isinstance(document, dict):
        reader.fail("an aura map must be an object")
    index = {label: i for i, label in enumerate(labels)}
    auras: Dict[int, PointSet] = {}
    for label, value in document.items():
        if label not in index:
            reader.fail("unknown label '%s'" % label, '"%s"' % label)
        auras[index[label]] = reader.label_set(value, index,
                                               "aura of '%s'" % label)
    return auras
