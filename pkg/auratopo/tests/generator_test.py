import random
import re
import unittest
from auratopo import (Generator, SHAPES, is_aura_continuous, is_refinement,
                      scope_profile, validate_topology)


class TestGenerator(unittest.TestCase):

    def test_shapes(self):
        rng = random.Random(7)
        for shape in SHAPES:
            for n in range(1, 7):
                S = Generator.space(n, shape=shape, rng=rng)
                self.assertEqual(S.n, n)
                self.assertTrue(validate_topology(S.topology).ok)
                profile = scope_profile(S)
                if shape != "random":
                    self.assertTrue(profile.transitive, shape)
                if shape == "partition":
                    self.assertTrue(profile.symmetric)

    def test_unknown_shape(self):
        with self.assertRaises(ValueError):
            Generator.space(3, shape="star")
        with self.assertRaises(TypeError):
            Generator.space(3, colour="red")

    def test_deterministic(self):
        first = Generator.space(5, shape="any", rng=Generator.case_rng(42, 3))
        second = Generator.space(5, shape="any", rng=Generator.case_rng(42, 3))
        self.assertEqual(first, second)

    def test_labels(self):
        self.assertEqual(Generator.labels(3), ["a", "b", "c"])
        labels = Generator.labels(6, pattern=r"[a-z][0-9]{2}",
                                  rng=random.Random(1))
        self.assertEqual(len(set(labels)), 6)
        for label in labels:
            self.assertTrue(re.fullmatch(r"[a-z][0-9]{2}", label), label)

    def test_map(self):
        rng = random.Random(3)
        X = Generator.space(4, rng=rng)
        Y = Generator.space(3, rng=rng)
        m = Generator.map(X, Y, rng=rng)
        self.assertEqual(len(m.mapping), 4)
        self.assertTrue(all(0 <= y < 3 for y in m.mapping))
        m = Generator.map(X, Y, a_continuous=True, rng=rng)
        self.assertTrue(is_aura_continuous(m))
        self.assertIsNone(
            Generator.map(X, Y, tries=0, fallback=False, rng=rng))
        m = Generator.map(X, Y, tries=0, rng=rng)
        self.assertEqual(len(set(m.mapping)), 1)

    def test_refinement(self):
        rng = random.Random(11)
        for _ in range(20):
            S = Generator.space(rng.randint(1, 6), rng=rng)
            self.assertTrue(is_refinement(S, Generator.refinement(S, rng=rng)))

    def test_subset(self):
        A = Generator.subset(5, rng=random.Random(0))
        self.assertEqual(A.n, 5)
