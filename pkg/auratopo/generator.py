"""
Random aura spaces, maps and refinements for property checks.

Every factory takes an optional ``rng`` keyword (a ``random.Random``);
the module-level ``random`` state is used otherwise, so scripts can fix
it with ``utils.process_args()`` and ``--randseed=``.
"""
import random
from typing import List, Optional

import xeger

from .aura import AuraSpace, ScopeFunction
from .morphism import SpaceMap, constant_map, is_aura_continuous
from .pointset import PointSet
from .space import Topology, minimal_neighbourhood, topology_from_subbasis
from .utils import default_labels, unpack_kwargs

__all__ = ["Generator", "SHAPES"]

SHAPES = ("random", "transitive", "partition")


class Generator:

    @staticmethod
    def labels(n: int, **kwargs) -> List[str]:
        """labels(n, **kwargs) -> list of str
            n distinct point labels.
            **kwargs(Keyword args):
                str pattern = None -> a regular expression the labels match;
                    None gives a, b, c, ...
                Random rng = random -> source of randomness
                int limit = 4 -> repetition limit passed to xeger
        """
        kwargs = unpack_kwargs("labels", kwargs, (("pattern", None),
                                                  ("rng", random), ("limit",
                                                                    4)))
        if kwargs["pattern"] is None:
            return default_labels(n)
        rng = kwargs["rng"]
        x = xeger.Xeger(limit=kwargs["limit"], seed=rng.getrandbits(32))
        labels: List[str] = []
        attempts = 0
        while len(labels) < n and attempts < 50 * n:
            attempts += 1
            label = x.xeger(kwargs["pattern"])
            if label and label not in labels:
                labels.append(label)
        while len(labels) < n:
            labels.append("x%d" % len(labels))
        return labels

    @staticmethod
    def subset(n: int, **kwargs) -> PointSet:
        kwargs = unpack_kwargs("subset", kwargs, (("rng", random), ))
        return PointSet(n, kwargs["rng"].getrandbits(n) if n else 0)

    @staticmethod
    def topology(n: int, **kwargs) -> Topology:
        """topology(n, **kwargs) -> Topology
            The topology generated by a random subbasis of at most n sets.
            **kwargs(Keyword args):
                Random rng = random
                list labels = None
        """
        kwargs = unpack_kwargs("topology", kwargs, (("rng", random),
                                                    ("labels", None)))
        rng = kwargs["rng"]
        subbasis = [
            PointSet(n, rng.getrandbits(n)) for _ in range(rng.randint(0, n))
        ]
        return topology_from_subbasis(n, subbasis, kwargs["labels"])

    @staticmethod
    def space(n: int, **kwargs) -> AuraSpace:
        """space(n, **kwargs) -> AuraSpace
            A random aura space on n points.
            **kwargs(Keyword args):
                str shape = "random" -> "random": each aura drawn uniformly
                    among the opens holding its point; "transitive": each aura
                    is the smallest open neighbourhood; "partition": auras
                    are the blocks of a random partition (symmetric and
                    transitive); "any": one of the three at random
                Random rng = random
                str label_pattern = None -> regex for point labels
        """
        kwargs = unpack_kwargs("space", kwargs,
                               (("shape", "random"), ("rng", random),
                                ("label_pattern", None)))
        rng = kwargs["rng"]
        shape = kwargs["shape"]
        if shape == "any":
            shape = rng.choice(SHAPES + ("random", ))
        if shape not in SHAPES:
            raise ValueError("unknown shape %r" % (shape, ))
        labels = Generator.labels(n, pattern=kwargs["label_pattern"], rng=rng)

        if shape == "partition":
            block_of = [rng.randrange(n) for _ in range(n)]
            blocks = [
                PointSet.of(n, (x for x in range(n) if block_of[x] == b))
                for b in sorted(set(block_of))
            ]
            topology = topology_from_subbasis(n, blocks, labels)
            scope = ScopeFunction(
                next(B for B in blocks if x in B) for x in range(n))
            return AuraSpace(topology, scope)

        topology = Generator.topology(n, rng=rng, labels=labels)
        if shape == "transitive":
            scope = ScopeFunction(
                minimal_neighbourhood(topology, x) for x in range(n))
        else:
            scope = ScopeFunction(
                rng.choice([O for O in topology.opens if x in O])
                for x in range(n))
        return AuraSpace(topology, scope)

    @staticmethod
    def map(source: AuraSpace, target: AuraSpace,
            **kwargs) -> Optional[SpaceMap]:
        """map(source, target, **kwargs) -> SpaceMap or None
            A uniformly random mapping.
            **kwargs(Keyword args):
                bool a_continuous = False -> resample until the map is
                    aura-continuous, falling back to a constant map
                int tries = 30 -> resampling budget
                bool fallback = True -> return a constant map once the budget
                    runs out; False returns None instead
                Random rng = random
        """
        kwargs = unpack_kwargs("map", kwargs,
                               (("a_continuous", False), ("tries", 30),
                                ("fallback", True), ("rng", random)))
        rng = kwargs["rng"]
        for _ in range(kwargs["tries"]):
            m = SpaceMap(source, target,
                         [rng.randrange(target.n) for _ in range(source.n)])
            if not kwargs["a_continuous"] or is_aura_continuous(m):
                return m
        if not kwargs["fallback"]:
            return None
        return constant_map(source, target, rng.randrange(target.n))

    @staticmethod
    def refinement(S: AuraSpace, **kwargs) -> AuraSpace:
        """refinement(S, **kwargs) -> AuraSpace
            Shrink each aura to a random open subset still holding its point.
        """
        kwargs = unpack_kwargs("refinement", kwargs, (("rng", random), ))
        rng = kwargs["rng"]
        opens = S.topology.opens
        scope = ScopeFunction(
            rng.choice([O for O in opens if x in O and O <= S.aura(x)])
            for x in range(S.n))
        return AuraSpace(S.topology, scope)

    @staticmethod
    def case_rng(seed: int, case: int) -> random.Random:
        """Independent generator for one fuzz case."""
        return random.Random("auratopo:%d:%d" % (seed, case))


