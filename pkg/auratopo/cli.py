"""
Command line interface.

    auratopo validate FILE
    auratopo analyze FILE --set a,b
    auratopo enumerate FILE --class a_semi_open
    auratopo separation FILE
    auratopo map SOURCE TARGET --mapping a=x,b=y
    auratopo rough FILE --set a,b [--refined FILE]
    auratopo spread FILE --set a [--quarantine c] [--distancing FILE]
    auratopo sensor FILE --target x0,y0,x1,y1 [--after FILE]
    auratopo fixtures [--dump NAME]
    auratopo fuzz [--seed 42] [--cases 500] [--max-n 6]

Every verb but ``fixtures`` and ``fuzz`` also accepts ``--fixture NAME``
in place of its input file. The report document is written to stdout;
diagnostics go to stderr. Exit status: 0 success, 1 validation or
property failure, 2 usage or parse error.
"""
import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import log
from .aura import (AuraSpace, aura_closure, aura_interior, closure_trace,
                   scope_profile)
from .classes import CLASS_NAMES, OpenClasses, classify_set, enumerate_class
from .consts import (DEFAULT_FUZZ_CASES, DEFAULT_FUZZ_MAX_N,
                     DEFAULT_FUZZ_SEED, EXIT_FAILURE, EXIT_OK, EXIT_USAGE,
                     MAX_COMPONENTS)
from .document import (FORMATS, build_report, dumps, encode_deployment,
                       encode_space, input_digest, ratio_document,
                       read_aura_map, read_deployment, read_space, set_labels)
from .errors import AuraError, DocumentError, ScopeError, UnknownName
from .fixtures import FIXTURES, fixture, fixture_names
from .morphism import (SpaceMap, continuity_profile,
                       semi_continuity_via_closed,
                       semi_continuity_via_neighbourhoods)
from .pointset import PointSet
from .properties import run_properties
from .rough import ApproximationReport, approximate, refinement_report
from .sensor import (build_grid_space, compare_deployments, coverage_report,
                     grid_rect)
from .separation import separation_profile
from .space import closure, interior
from .spread import apply_distancing, apply_quarantine, spread_components, \
    spread_trace
from .utils import index_of, parse_label_list

__all__ = ["main", "build_parser"]


class UsageError(AuraError):
    """bad flag value, reported with exit status 2"""


class _Input:
    """A loaded input value with the text it was read from."""

    def __init__(self, value, text: str):
        self.value = value
        self.text = text


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror)) from None


def _fixture_of_kind(name: str, kind: str):
    if name not in FIXTURES:
        raise UnknownName("fixture", name, fixture_names())
    if FIXTURES[name].kind != kind:
        raise UsageError("fixture '%s' is a %s, not a %s" %
                         (name, FIXTURES[name].kind, kind))
    return fixture(name)


def _load_space(path: Optional[str], fixture_name: Optional[str]) -> _Input:
    if fixture_name is not None:
        space = _fixture_of_kind(fixture_name, "space")
        return _Input(space, dumps(encode_space(space, fixture_name)))
    if path is None:
        raise UsageError("an input file or --fixture is required")
    text = _read_text(path)
    try:
        return _Input(read_space(text, path).to_space(), text)
    except ScopeError as e:
        raise ScopeError(e.validation, path) from None


def _load_deployment(path: Optional[str],
                     fixture_name: Optional[str]) -> _Input:
    if fixture_name is not None:
        deployment = _fixture_of_kind(fixture_name, "deployment")
        return _Input((deployment, "self"),
                      dumps(encode_deployment(deployment)))
    if path is None:
        raise UsageError("a deployment file or --fixture is required")
    text = _read_text(path)
    return _Input(read_deployment(text, path), text)


def _label_set(space: AuraSpace, text: Optional[str], flag: str) -> PointSet:
    if text is None:
        raise UsageError("%s is required" % flag)
    index = index_of(space.labels)
    members = []
    for label in parse_label_list(text):
        if label not in index:
            raise UnknownName("label", label, space.labels)
        members.append(index[label])
    return PointSet.of(space.n, members)


def _parse_numbers(text: str, count: int, flag: str) -> List[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError("%s expects %d comma separated numbers" %
                         (flag, count)) from None
    if len(values) != count:
        raise UsageError("%s expects %d comma separated numbers" %
                         (flag, count))
    return values


def _names(space: AuraSpace, A: PointSet) -> List[str]:
    return set_labels(A, space.labels)


def _approximation_document(space: AuraSpace,
                            report: ApproximationReport) -> Dict[str, Any]:
    upper = report.upper_size
    return {
        "lower": _names(space, report.lower),
        "upper": _names(space, report.upper),
        "boundary": _names(space, report.boundary),
        "negative": _names(space, report.negative),
        "accuracy": ratio_document(report.lower_size, upper),
        "roughness": ratio_document(upper - report.lower_size, upper)
        if upper else ratio_document(0, 1),
        "definable": report.definable,
    }


def cmd_validate(args) -> Dict[str, Any]:
    if args.fixture is not None:
        space = _fixture_of_kind(args.fixture, "space")
        text = dumps(encode_space(space, args.fixture))
        path = "<fixture %s>" % args.fixture
    elif args.file is not None:
        path = args.file
        text = _read_text(path)
    else:
        raise UsageError("an input file or --fixture is required")
    document = read_space(text, path)
    validation = document.validate()
    violations = [{
        "kind": v.kind,
        "message": v.message,
        "subjects": list(v.subjects)
    } for v in validation.violations]
    for v in validation.violations:
        log.warn("%s: %s" % (path, v.message))
    result = {"points": len(document.labels), "valid": validation.ok}
    return build_report(args.argv, input_digest([text]), result, violations)


def cmd_analyze(args) -> Dict[str, Any]:
    source = _load_space(args.file, args.fixture)
    space = source.value
    A = _label_set(space, args.set, "--set")
    trace = closure_trace(space, A)
    result = {
        "set": _names(space, A),
        "closure": _names(space, closure(space.topology, A)),
        "interior": _names(space, interior(space.topology, A)),
        "aura_closure": _names(space, aura_closure(space, A)),
        "aura_interior": _names(space, aura_interior(space, A)),
        "closure_trace": [_names(space, stage) for stage in trace.stages],
        "stabilized_at": trace.stabilized_at,
        "classes": classify_set(space, A).as_dict(),
        "approximation": _approximation_document(space, approximate(space,
                                                                    A)),
    }
    return build_report(args.argv, input_digest([source.text]), result)


def cmd_enumerate(args) -> Dict[str, Any]:
    source = _load_space(args.file, args.fixture)
    space = source.value
    OpenClasses.require(args.class_name)
    sets = enumerate_class(space, args.class_name)
    result = {
        "class": args.class_name,
        "count": len(sets),
        "sets": [_names(space, A) for A in sets],
    }
    return build_report(args.argv, input_digest([source.text]), result)


def cmd_separation(args) -> Dict[str, Any]:
    source = _load_space(args.file, args.fixture)
    space = source.value
    profile = separation_profile(space)
    result: Dict[str, Any] = {
        name: getattr(profile, name)
        for name in ("a_t0", "a_t1", "a_t2", "a_regular", "t0", "t1", "t2")
    }
    result["witnesses"] = {
        name: {
            "points": [space.labels[x] for x in w.points],
            "closed_set": _names(space, w.closed_set)
            if w.closed_set is not None else None,
        }
        for name, w in profile.witnesses.items()
    }
    return build_report(args.argv, input_digest([source.text]), result)


def _parse_mapping(source: AuraSpace, target: AuraSpace,
                   text: Optional[str]) -> List[int]:
    if text is None:
        raise UsageError("--mapping is required")
    src, dst = index_of(source.labels), index_of(target.labels)
    images: Dict[int, int] = {}
    for item in parse_label_list(text):
        if "=" not in item:
            raise UsageError("mapping entries look like a=b, got '%s'" % item)
        x, y = (part.strip() for part in item.split("=", 1))
        if x not in src:
            raise UnknownName("source label", x, source.labels)
        if y not in dst:
            raise UnknownName("target label", y, target.labels)
        images[src[x]] = dst[y]
    missing = [source.labels[x] for x in range(source.n) if x not in images]
    if missing:
        raise UsageError("--mapping leaves %s without an image" %
                         ",".join(missing))
    return [images[x] for x in range(source.n)]


def cmd_map(args) -> Dict[str, Any]:
    if args.fixture is not None and FIXTURES.get(args.fixture) is not None \
            and FIXTURES[args.fixture].kind == "map":
        m = fixture(args.fixture)
        texts = [dumps(encode_space(m.source)), dumps(encode_space(m.target))]
    else:
        source = _load_space(args.source, args.fixture)
        target = _load_space(args.target, None) if args.target is not None \
            else source
        m = SpaceMap(source.value, target.value,
                     _parse_mapping(source.value, target.value,
                                    args.mapping))
        texts = [source.text, target.text]
    texts.append(",".join(str(y) for y in m.mapping))
    profile = continuity_profile(m)
    result = {
        "mapping": {
            m.source.labels[x]: m.target.labels[y]
            for x, y in enumerate(m.mapping)
        },
        "continuous": profile.continuous,
        "a_continuous": profile.a_continuous,
        "a_semi": profile.a_semi,
        "a_pre": profile.a_pre,
        "a_alpha": profile.a_alpha,
        "a_beta": profile.a_beta,
        "a_semi_via_closed": semi_continuity_via_closed(m),
        "a_semi_via_neighbourhoods": semi_continuity_via_neighbourhoods(m),
    }
    return build_report(args.argv, input_digest(texts), result)


def cmd_rough(args) -> Dict[str, Any]:
    source = _load_space(args.file, args.fixture)
    space = source.value
    A = _label_set(space, args.set, "--set")
    texts = [source.text]
    result: Dict[str, Any] = {
        "set": _names(space, A),
        "approximation": _approximation_document(space, approximate(space,
                                                                    A)),
    }
    profile = scope_profile(space)
    result["partition"] = profile.symmetric and profile.transitive
    if args.refined is not None:
        refined = _load_space(args.refined, None)
        texts.append(refined.text)
        report = refinement_report(space, refined.value, A)
        result["refined"] = _approximation_document(refined.value,
                                                    report.fine)
        result["lower_grows"] = report.lower_grows
        result["upper_shrinks"] = report.upper_shrinks
        result["boundary_shrinks"] = report.boundary_shrinks
    return build_report(args.argv, input_digest(texts), result)


def cmd_spread(args) -> Dict[str, Any]:
    source = _load_space(args.file, args.fixture)
    space = source.value
    texts = [source.text]
    A = _label_set(space, args.set, "--set")
    interventions = []
    if args.quarantine is not None:
        space = apply_quarantine(space,
                                 _label_set(space, args.quarantine,
                                            "--quarantine"))
        interventions.append("quarantine")
    if args.distancing is not None:
        text = _read_text(args.distancing)
        texts.append(text)
        scope = space.scope
        for x, aura in read_aura_map(text, space.labels,
                                     args.distancing).items():
            scope = scope.replace(x, aura)
        space = apply_distancing(space, scope)
        interventions.append("distancing")
    trace = spread_trace(space, A)
    components = None
    if space.n <= MAX_COMPONENTS:
        components = [{
            "reach": _names(space, c.reach),
            "generators": [space.labels[x] for x in c.generators],
            "overlaps": list(c.overlaps),
            "a_open": c.a_open,
            "complement_a_open": c.complement_a_open,
        } for c in spread_components(space)]
    else:
        log.info("spread components skipped: %d points, limit %d" %
                 (space.n, MAX_COMPONENTS))
    result = {
        "set": _names(space, A),
        "interventions": interventions,
        "stages": [_names(space, stage) for stage in trace.stages],
        "reach": _names(space, trace.reach),
        "unreached": _names(space, trace.unreached),
        "stabilized_at": trace.stabilized_at,
        "components": components,
    }
    return build_report(args.argv, input_digest(texts), result)


def cmd_sensor(args) -> Dict[str, Any]:
    source = _load_deployment(args.file, args.fixture)
    deployment, uncovered = source.value
    if args.target is None:
        raise UsageError("--target is required")
    x0, y0, x1, y1 = _parse_numbers(args.target, 4, "--target")
    g = build_grid_space(deployment, uncovered_aura=uncovered)
    target = grid_rect(g, x0, y0, x1, y1)
    report = coverage_report(g, target)
    space = g.aura_space
    texts = [source.text]
    result: Dict[str, Any] = {
        "grid_points": g.n,
        "covered_points": sum(owner is not None for owner in g.owner),
        "target": _names(space, target),
        "approximation": _approximation_document(space,
                                                 report.approximation),
        "full_coverage": report.full_coverage,
    }
    if args.after is not None:
        after = _load_deployment(args.after, None)
        texts.append(after.text)
        after_deployment, after_uncovered = after.value
        h = build_grid_space(after_deployment, uncovered_aura=after_uncovered)
        comparison = compare_deployments(g, h, grid_rect(h, x0, y0, x1, y1))
        result["after"] = {
            "refinement": comparison.refinement,
            "monotone": comparison.monotone,
            "approximation": _approximation_document(h.aura_space,
                                                     comparison.after),
        }
    return build_report(args.argv, input_digest(texts), result)


def cmd_fixtures(args) -> Dict[str, Any]:
    if args.dump is None:
        result: Any = [{
            "name": f.name,
            "kind": f.kind,
            "provenance": f.provenance
        } for f in FIXTURES.values()]
        return build_report(args.argv, input_digest([]), result)
    value = fixture(args.dump)
    kind = FIXTURES[args.dump].kind
    if kind == "space":
        result = encode_space(value, args.dump, FIXTURES[args.dump].provenance)
    elif kind == "deployment":
        result = encode_deployment(value)
    else:
        result = {
            "source": encode_space(value.source),
            "target": encode_space(value.target),
            "mapping": list(value.mapping),
        }
    return build_report(args.argv, input_digest([]), result)


def cmd_fuzz(args) -> Dict[str, Any]:
    names = tuple(parse_label_list(args.properties)) \
        if args.properties is not None else None
    try:
        report = run_properties(seed=args.seed,
                                cases=args.cases,
                                max_n=args.max_n,
                                names=names,
                                max_workers=args.workers)
    except AuraError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None
    violations = [{
        "kind": "property",
        "message": "%s: %s" % (r.name, r.message),
        "subjects": [r.first_case],
    } for r in report.results if not r.passed]
    return build_report(args.argv, input_digest([]), report.as_document(),
                        violations)


def _add_common(parser: argparse.ArgumentParser, fixture_flag: bool = True):
    parser.add_argument("--format",
                        choices=FORMATS,
                        default="report",
                        help="report: indented JSON; compact: one line")
    if fixture_flag:
        parser.add_argument("--fixture",
                            metavar="NAME",
                            help="use a named fixture instead of a file")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true")
    verbosity.add_argument("--quiet", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="auratopo", description="Compute with finite aura spaces.")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    p = verbs.add_parser("validate", help="check a space document")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = verbs.add_parser("analyze", help="operators and classes of one set")
    p.add_argument("file", nargs="?")
    p.add_argument("--set", metavar="LABELS")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = verbs.add_parser("enumerate", help="every set of an open class")
    p.add_argument("file", nargs="?")
    p.add_argument("--class",
                   dest="class_name",
                   metavar="NAME",
                   default="a_open",
                   help="one of %s" % ", ".join(CLASS_NAMES))
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = verbs.add_parser("separation", help="separation axioms")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(func=cmd_separation)

    p = verbs.add_parser("map", help="continuity profile of a map")
    p.add_argument("source", nargs="?")
    p.add_argument("target", nargs="?")
    p.add_argument("--mapping", metavar="a=x,b=y")
    _add_common(p)
    p.set_defaults(func=cmd_map)

    p = verbs.add_parser("rough", help="rough approximation of a set")
    p.add_argument("file", nargs="?")
    p.add_argument("--set", metavar="LABELS")
    p.add_argument("--refined",
                   metavar="FILE",
                   help="a space whose auras lie inside those of FILE")
    _add_common(p)
    p.set_defaults(func=cmd_rough)

    p = verbs.add_parser("spread", help="trace spread from a set")
    p.add_argument("file", nargs="?")
    p.add_argument("--set", metavar="LABELS")
    p.add_argument("--quarantine", metavar="LABELS")
    p.add_argument("--distancing",
                   metavar="FILE",
                   help="JSON object of replacement auras")
    _add_common(p)
    p.set_defaults(func=cmd_spread)

    p = verbs.add_parser("sensor", help="coverage of a target rectangle")
    p.add_argument("file", nargs="?")
    p.add_argument("--target", metavar="x0,y0,x1,y1")
    p.add_argument("--after",
                   metavar="FILE",
                   help="a second deployment to compare with")
    _add_common(p)
    p.set_defaults(func=cmd_sensor)

    p = verbs.add_parser("fixtures", help="list or dump named fixtures")
    p.add_argument("--dump", metavar="NAME")
    _add_common(p, fixture_flag=False)
    p.set_defaults(func=cmd_fixtures)

    p = verbs.add_parser("fuzz", help="check every property on random input")
    p.add_argument("--seed", type=int, default=DEFAULT_FUZZ_SEED)
    p.add_argument("--cases", type=int, default=DEFAULT_FUZZ_CASES)
    p.add_argument("--max-n", type=int, default=DEFAULT_FUZZ_MAX_N)
    p.add_argument("--properties",
                   metavar="NAMES",
                   help="comma separated subset of the properties")
    p.add_argument("--workers",
                   type=int,
                   default=-1,
                   help="thread pool size; -1 runs the cases inline")
    _add_common(p, fixture_flag=False)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    args.argv = argv
    if args.verbose:
        log.set_verbose()
    elif args.quiet:
        log.set_quiet()
    else:
        log.set_normal()

    try:
        report = args.func(args)
    except (DocumentError, UsageError, UnknownName) as e:
        log.error(str(e))
        return EXIT_USAGE
    except AuraError as e:
        log.error(str(e))
        return EXIT_FAILURE
    log.print(dumps(report, args.format))
    return EXIT_OK if report["ok"] else EXIT_FAILURE
