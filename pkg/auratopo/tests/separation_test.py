import unittest
from auratopo import (AuraSpace, ScopeFunction, Topology, UniverseTooLarge,
                      family_separation, fixture, separation_profile,
                      t1_via_singletons)


class TestSeparation(unittest.TestCase):

    def test_trivial_aura(self):
        p = separation_profile(fixture("trivial_discrete"))
        self.assertTrue(p.t2)
        self.assertFalse(p.a_t0)
        self.assertEqual(p.witnesses["a_t0"].points, (0, 1))
        self.assertNotIn("t2", p.witnesses)

    def test_discrete_aura(self):
        p = separation_profile(fixture("discrete_discrete"))
        self.assertTrue(p.a_t0 and p.a_t1 and p.a_t2 and p.a_regular)
        self.assertEqual(p.witnesses, {})
        self.assertTrue(t1_via_singletons(fixture("discrete_discrete")).holds)

    def test_chain(self):
        S = fixture("finite_aura_basic")
        p = separation_profile(S)
        self.assertTrue(p.a_t0)
        self.assertFalse(p.a_t1)
        self.assertFalse(p.a_t2)
        self.assertEqual(p.witnesses["a_t1"].points, (0, 1))
        self.assertFalse(p.a_regular)
        regular = p.witnesses["a_regular"]
        self.assertEqual(regular.points, (0, ))
        self.assertEqual(regular.closed_set, S.points("d"))
        self.assertTrue(p.t0)
        self.assertFalse(p.t1)
        self.assertEqual(p.witnesses["t1"].points, (0, 2))

    def test_t1_singletons(self):
        S = fixture("finite_aura_basic")
        report = t1_via_singletons(S)
        self.assertFalse(report.holds)
        self.assertEqual(report.per_point, (False, False, False, True))
        self.assertEqual(report.holds, separation_profile(S).a_t1)

    def test_t1_trivial_aura(self):
        report = t1_via_singletons(fixture("trivial_discrete"))
        self.assertFalse(report.holds)
        self.assertEqual(report.per_point, (False, False, False))

    def test_family(self):
        pairs = family_separation(Topology.indiscrete(3))
        self.assertEqual(pairs, {"t0": (0, 1), "t1": (0, 1), "t2": (0, 1)})
        pairs = family_separation(Topology.discrete(3))
        self.assertEqual(pairs, {"t0": None, "t1": None, "t2": None})

    def test_size_limit(self):
        S = AuraSpace(Topology.discrete(13), ScopeFunction.discrete(13))
        with self.assertRaises(UniverseTooLarge):
            separation_profile(S)
