import unittest
from auratopo import (FIXTURES, AuraSpace, SensorDeployment, SpaceMap,
                      UnknownName, decode_space, dumps, encode_deployment,
                      encode_space, fixture, fixture_names, provenance,
                      read_deployment, validate_topology)


class TestFixtures(unittest.TestCase):

    def test_catalog(self):
        names = fixture_names()
        self.assertEqual(names[0], "finite_aura_basic")
        for name in ("non_idempotent", "medical", "medical_refined",
                     "epidemic_seven", "sensor_triple", "pre_not_semi_map"):
            self.assertIn(name, names)
        self.assertEqual(len(names), len(FIXTURES))
        self.assertIn("2/6", provenance("medical"))

    def test_unknown(self):
        with self.assertRaises(UnknownName) as cm:
            fixture("no_such_space")
        self.assertEqual(cm.exception.kind, "fixture")
        self.assertIn("medical", cm.exception.known)
        with self.assertRaises(KeyError):
            provenance("no_such_space")

    def test_kinds(self):
        for name in fixture_names():
            value = fixture(name)
            kind = FIXTURES[name].kind
            expected = {
                "space": AuraSpace,
                "map": SpaceMap,
                "deployment": SensorDeployment
            }[kind]
            self.assertIsInstance(value, expected, name)
            if kind == "space":
                self.assertTrue(validate_topology(value.topology).ok, name)

    def test_fresh_instances(self):
        self.assertEqual(fixture("medical"), fixture("medical"))
        self.assertIsNot(fixture("medical"), fixture("medical"))

    def test_round_trip(self):
        for name in fixture_names():
            value = fixture(name)
            if FIXTURES[name].kind == "space":
                text = dumps(encode_space(value, name))
                decoded = decode_space(text)
                self.assertEqual(decoded, value, name)
                self.assertEqual(dumps(encode_space(decoded, name)), text)
            elif FIXTURES[name].kind == "deployment":
                text = dumps(encode_deployment(value))
                deployment, uncovered = read_deployment(text)
                self.assertEqual(deployment, value)
                self.assertEqual(uncovered, "self")
