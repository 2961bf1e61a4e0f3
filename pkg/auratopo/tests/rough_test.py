import unittest
from fractions import Fraction
from auratopo import (AuraSpace, NotARefinement, PartitionError,
                      PartitionOracle, PointSet, ScopeFunction, SpaceMismatch,
                      Topology, UniverseMismatch, approximate, aura_partition,
                      fixture, is_refinement, pawlak_approximate,
                      refinement_report)


class TestRough(unittest.TestCase):

    def setUp(self):
        self.medical = fixture("medical")
        self.target = self.medical.points(["p1", "p2", "p4", "p5"])

    def test_medical(self):
        S = self.medical
        report = approximate(S, self.target)
        self.assertEqual(report.lower, S.points(["p1", "p4"]))
        self.assertEqual(report.upper, S.universe())
        self.assertEqual(report.boundary,
                         S.points(["p2", "p3", "p5", "p6"]))
        self.assertEqual(report.negative, PointSet(6, 0))
        self.assertEqual((report.lower_size, report.upper_size), (2, 6))
        self.assertEqual(report.accuracy, Fraction(2, 6))
        self.assertEqual(report.roughness, Fraction(2, 3))
        self.assertFalse(report.definable)

    def test_medical_refined(self):
        S = fixture("medical_refined")
        report = approximate(S, self.target)
        self.assertEqual(report.lower, self.target)
        self.assertEqual(report.boundary, S.points(["p3", "p6"]))
        self.assertEqual((report.lower_size, report.upper_size), (4, 6))
        self.assertEqual(report.accuracy, Fraction(2, 3))

    def test_refinement(self):
        refined = fixture("medical_refined")
        self.assertTrue(is_refinement(self.medical, refined))
        self.assertFalse(is_refinement(refined, self.medical))
        report = refinement_report(self.medical, refined, self.target)
        self.assertTrue(report.lower_grows)
        self.assertTrue(report.upper_shrinks)
        self.assertTrue(report.boundary_shrinks)
        self.assertTrue(report.monotone)
        with self.assertRaises(NotARefinement) as cm:
            refinement_report(refined, self.medical, self.target)
        self.assertEqual(cm.exception.point, 1)

    def test_different_carriers(self):
        other = AuraSpace(Topology.discrete(6, self.medical.labels),
                          ScopeFunction.discrete(6))
        with self.assertRaises(SpaceMismatch):
            is_refinement(self.medical, other)
        with self.assertRaises(UniverseMismatch):
            is_refinement(self.medical, fixture("finite_aura_basic"))

    def test_empty_target(self):
        report = approximate(self.medical, PointSet(6, 0))
        self.assertEqual(report.accuracy, 1)
        self.assertTrue(report.definable)
        self.assertEqual(report.negative, self.medical.universe())

    def test_partition_oracle(self):
        blocks = [PointSet.of(4, [0, 1]), PointSet.of(4, [2, 3])]
        P = PartitionOracle(4, blocks)
        self.assertEqual(P.block(3), blocks[1])
        report = pawlak_approximate(P, PointSet.of(4, [0, 1, 2]))
        self.assertEqual(report.lower, blocks[0])
        self.assertEqual(report.upper, PointSet.full(4))
        with self.assertRaises(PartitionError):
            PartitionOracle(4, [PointSet.of(4, [0, 1]), PointSet.of(4, [1])])
        with self.assertRaises(PartitionError):
            PartitionOracle(4, blocks[:1])
        with self.assertRaises(PartitionError):
            PartitionOracle(4, blocks + [PointSet(4, 0)])

    def test_pawlak_reduction(self):
        self.assertIsNone(aura_partition(self.medical))
        for name in ("discrete_discrete", "trivial_discrete",
                     "closure_coincide"):
            S = fixture(name)
            P = aura_partition(S)
            self.assertIsNotNone(P, name)
            for A in PointSet.all_subsets(S.n):
                ours, theirs = approximate(S, A), pawlak_approximate(P, A)
                self.assertEqual((ours.lower, ours.upper),
                                 (theirs.lower, theirs.upper))

    def test_duality(self):
        S = self.medical
        for A in PointSet.all_subsets(S.n):
            report = approximate(S, A)
            self.assertTrue(report.lower <= A <= report.upper)
            self.assertEqual(approximate(S, ~A).lower, ~report.upper)
