import unittest
from auratopo import PointSet, UniverseMismatch


class TestPointSet(unittest.TestCase):

    def test_of_and_members(self):
        A = PointSet.of(4, [2, 0])
        self.assertEqual(A.bits, 0b0101)
        self.assertEqual(A.members(), [0, 2])
        self.assertEqual(len(A), 2)
        self.assertIn(2, A)
        self.assertNotIn(1, A)
        self.assertNotIn(7, A)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            PointSet.of(3, [3])
        with self.assertRaises(ValueError):
            PointSet(2, 0b100)

    def test_algebra(self):
        A = PointSet.of(4, [0, 1])
        B = PointSet.of(4, [1, 2])
        self.assertEqual((A | B).members(), [0, 1, 2])
        self.assertEqual((A & B).members(), [1])
        self.assertEqual((A - B).members(), [0])
        self.assertEqual((~A).members(), [2, 3])
        self.assertTrue(A & B <= A)
        self.assertTrue(A & B < A)
        self.assertFalse(A < A)
        self.assertTrue(A.isdisjoint(PointSet.of(4, [3])))
        self.assertTrue((A | ~A).is_full())
        self.assertFalse(PointSet.empty(4))

    def test_universe_mismatch(self):
        with self.assertRaises(UniverseMismatch) as cm:
            PointSet.full(3) | PointSet.full(4)
        self.assertEqual(cm.exception.expected, 3)
        self.assertEqual(cm.exception.got, 4)
        self.assertEqual(str(cm.exception),
                         "Universe mismatch: expected 3 points, got 4")

    def test_canonical_order(self):
        subsets = list(PointSet.all_subsets(3))
        self.assertEqual(len(subsets), 8)
        self.assertEqual([S.bits for S in subsets], list(range(8)))
        self.assertEqual(sorted(reversed(subsets), key=PointSet.sort_key),
                         subsets)

    def test_labels(self):
        A = PointSet.of(3, [2, 0])
        self.assertEqual(A.labels(["x", "y", "z"]), ["x", "z"])
        self.assertEqual(repr(A), "PointSet(n=3, {0,2})")

    def test_large_universe(self):
        A = PointSet.single(500, 499)
        self.assertEqual(len(~A), 499)
        self.assertEqual(list(A), [499])
