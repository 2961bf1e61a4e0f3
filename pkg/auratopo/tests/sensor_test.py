import unittest
from auratopo import (AuraError, PointSet, SensorDeployment, SpaceMismatch,
                      build_grid_space, compare_deployments, coverage_report,
                      fixture, grid_rect, relay_reach)


class TestSensor(unittest.TestCase):

    def test_triple(self):
        g = build_grid_space(fixture("sensor_triple"))
        self.assertEqual(g.n, 23 * 21)
        target = grid_rect(g, 1, 0, 3, 2)
        self.assertEqual(len(target), 25)
        report = coverage_report(g, target)
        self.assertEqual(report.lower, PointSet(g.n, 0))
        self.assertTrue(target < report.upper)
        self.assertFalse(report.full_coverage)
        self.assertEqual(report.boundary, report.upper)

    def test_grid_layout(self):
        g = build_grid_space(fixture("sensor_empty"))
        self.assertEqual(g.n, 9)
        self.assertEqual(g.coordinates[:4],
                         ((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0)))
        self.assertEqual(g.aura_space.labels[1], "(1,0)")
        self.assertEqual(g.owner, (None, ) * 9)
        for x in range(9):
            self.assertEqual(g.aura_space.aura(x), PointSet.single(9, x))

    def test_uncovered_full_coverage(self):
        g = build_grid_space(fixture("sensor_empty"))
        target = grid_rect(g, 0, 0, 1, 1)
        self.assertEqual(target.members(), [0, 1, 3, 4])
        report = coverage_report(g, target)
        self.assertTrue(report.full_coverage)
        self.assertEqual(report.lower, target)

    def test_delta_aura(self):
        g = build_grid_space(fixture("sensor_empty"),
                             uncovered_aura=("delta", 1.5))
        self.assertEqual(g.aura_space.aura(0).members(), [0, 1, 3, 4])
        self.assertEqual(len(g.aura_space.aura(4)), 9)
        with self.assertRaises(AuraError):
            build_grid_space(fixture("sensor_empty"),
                             uncovered_aura=("delta", 0))
        with self.assertRaises(AuraError):
            build_grid_space(fixture("sensor_empty"), uncovered_aura="ball")

    def test_owner_ties(self):
        d = SensorDeployment.of([(0, 0, 1), (0, 0, 2), (5, 5, 1)],
                                (0, 0, 0, 0), 1)
        g = build_grid_space(d)
        self.assertEqual(g.owner, (0, ))

    def test_compare(self):
        wide = build_grid_space(
            SensorDeployment.of([(1, 1, 1.5)], (0, 0, 2, 2), 1))
        bare = build_grid_space(fixture("sensor_empty"))
        self.assertEqual(wide.owner, (0, ) * 9)
        target = grid_rect(wide, 0, 0, 1, 1)
        comparison = compare_deployments(wide, bare, target)
        self.assertTrue(comparison.refinement)
        self.assertTrue(comparison.monotone)
        self.assertEqual(comparison.before.lower, PointSet(9, 0))
        self.assertEqual(comparison.after.lower, target)
        comparison = compare_deployments(bare, wide, target)
        self.assertFalse(comparison.refinement)
        self.assertIsNone(comparison.monotone)
        with self.assertRaises(SpaceMismatch):
            compare_deployments(wide, build_grid_space(
                fixture("sensor_triple")), target)

    def test_relay(self):
        wide = build_grid_space(
            SensorDeployment.of([(1, 1, 1.5)], (0, 0, 2, 2), 1))
        source = PointSet.single(9, 0)
        self.assertEqual(relay_reach(wide, source, 0), source)
        self.assertEqual(relay_reach(wide, source, 1), PointSet.full(9))

    def test_invalid_deployment(self):
        with self.assertRaises(AuraError):
            SensorDeployment.of([(0, 0, 1)], (0, 0, 1, 1), 0)
        with self.assertRaises(AuraError):
            SensorDeployment.of([(0, 0, -1)], (0, 0, 1, 1), 1)
        with self.assertRaises(AuraError):
            SensorDeployment.of([], (2, 0, 1, 1), 1)
        with self.assertRaises(AuraError):
            SensorDeployment.of([(float("nan"), 0, 1)], (0, 0, 1, 1), 1)
