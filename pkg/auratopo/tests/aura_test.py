import unittest
from auratopo import (AuraSpace, PointSet, ScopeError, ScopeFunction,
                      Topology, UniverseMismatch, UniverseTooLarge,
                      aura_base, aura_closure, aura_interior, aura_topology,
                      closure_coincidence, closure_trace, fixture,
                      infinity_topology, is_aura_open, iterate_closure,
                      scope_profile, validate_scope)


class TestAura(unittest.TestCase):

    def test_aura_topology(self):
        S = fixture("finite_aura_basic")
        opens = aura_topology(S).opens
        self.assertEqual([A.labels(S.labels) for A in opens],
                         [[], ["a"], ["a", "b"], ["a", "b", "c"],
                          ["a", "b", "c", "d"]])
        self.assertEqual(infinity_topology(S), aura_topology(S))
        is_open = aura_topology(S, as_predicate=True)
        self.assertTrue(is_open(S.points("ab")))
        self.assertFalse(is_open(S.points("b")))

    def test_operators(self):
        S = fixture("finite_aura_basic")
        self.assertEqual(aura_closure(S, S.points("a")), S.universe())
        self.assertEqual(aura_closure(S, S.points("c")), S.points("cd"))
        self.assertEqual(aura_closure(S, S.points("d")), S.points("d"))
        self.assertEqual(aura_interior(S, S.points("ab")), S.points("ab"))
        self.assertEqual(aura_interior(S, S.points("b")), S.points(""))
        self.assertEqual(aura_interior(S, S.universe()), S.universe())

    def test_non_idempotent(self):
        S = fixture("non_idempotent")
        c = S.points("c")
        self.assertEqual(aura_closure(S, c), S.points("bc"))
        self.assertEqual(aura_closure(S, aura_closure(S, c)), S.universe())
        trace = closure_trace(S, c)
        self.assertEqual([A.labels(S.labels) for A in trace.stages],
                         [["c"], ["b", "c"], ["a", "b", "c"]])
        self.assertEqual(trace.stabilized_at, 2)
        self.assertEqual(trace.limit, S.universe())
        self.assertEqual(iterate_closure(S, c, 0), c)
        self.assertEqual(iterate_closure(S, c, 1), S.points("bc"))
        self.assertEqual(iterate_closure(S, c, 5), S.universe())
        with self.assertRaises(ValueError):
            iterate_closure(S, c, -1)
        self.assertEqual(len(aura_topology(S).opens), 4)

    def test_closure_comparison(self):
        S = fixture("closure_coincide")
        for A in PointSet.all_subsets(S.n):
            self.assertTrue(closure_coincidence(S, A).coincide)
        S = fixture("closure_strict")
        comparison = closure_coincidence(S, S.points("b"))
        self.assertEqual(comparison.closure, S.points("b"))
        self.assertEqual(comparison.aura_closure, S.points("ab"))
        self.assertFalse(comparison.coincide)
        self.assertFalse(comparison.within_union)

    def test_profile(self):
        p = scope_profile(fixture("finite_aura_basic"))
        self.assertEqual((p.trivial, p.discrete, p.transitive, p.symmetric),
                         (False, False, True, False))
        p = scope_profile(fixture("trivial_discrete"))
        self.assertTrue(p.trivial and p.symmetric and p.transitive)
        self.assertFalse(p.discrete)
        p = scope_profile(fixture("discrete_discrete"))
        self.assertTrue(p.discrete and p.symmetric and p.transitive)
        self.assertFalse(scope_profile(fixture("non_idempotent")).transitive)

    def test_special_auras(self):
        T = Topology.discrete(3)
        trivial = AuraSpace(T, ScopeFunction.trivial(3))
        discrete = AuraSpace(T, ScopeFunction.discrete(3))
        for A in PointSet.all_subsets(3):
            self.assertEqual(aura_closure(discrete, A), A)
            if A:
                self.assertEqual(aura_closure(trivial, A), T.universe())

    def test_special_traces(self):
        trivial = fixture("trivial_discrete")
        trace = closure_trace(trivial, trivial.points("a"))
        self.assertEqual(trace.stages,
                         (trivial.points("a"), trivial.points("abc")))
        self.assertEqual(trace.stabilized_at, 1)
        discrete = fixture("discrete_discrete")
        trace = closure_trace(discrete, discrete.points("ac"))
        self.assertEqual(trace.stages, (discrete.points("ac"), ))
        self.assertEqual(trace.stabilized_at, 0)

    def test_special_topologies(self):
        trivial = fixture("trivial_discrete")
        for family in (aura_topology(trivial), infinity_topology(trivial)):
            self.assertEqual([O.bits for O in family.opens], [0, 7])
        discrete = fixture("discrete_discrete")
        for family in (aura_topology(discrete), infinity_topology(discrete)):
            self.assertEqual([O.bits for O in family.opens], list(range(8)))

    def test_aura_base(self):
        S = fixture("finite_aura_basic")
        self.assertEqual([B.bits for B in aura_base(S)], [1, 3, 7, 15])
        for B in aura_base(S):
            self.assertTrue(is_aura_open(S, B))

    def test_invalid_scope(self):
        T = fixture("finite_aura_basic").topology
        scope = ScopeFunction([
            T.points("b"),
            T.points("bc"),
            T.points("abc"),
            T.universe()
        ])
        result = validate_scope(T, scope)
        self.assertEqual([v.kind for v in result.violations],
                         ["aura-membership", "aura-open"])
        self.assertEqual(result.violations[0].message,
                         "point a is not in its own aura {b}")
        self.assertEqual(
            result.violations[1].message,
            "aura of b, {b,c}, is not an open set of the topology")
        with self.assertRaises(ScopeError):
            AuraSpace(T, scope)
        with self.assertRaises(UniverseMismatch):
            validate_scope(T, ScopeFunction.trivial(3))

    def test_large_universe(self):
        n = 30
        S = AuraSpace(Topology.discrete(n), ScopeFunction.discrete(n))
        A = PointSet.of(n, [4, 17])
        self.assertEqual(aura_closure(S, A), A)
        self.assertTrue(aura_topology(S, as_predicate=True)(A))
        with self.assertRaises(UniverseTooLarge):
            aura_topology(S)
