import json
import os
import shutil
import tempfile
import unittest
from auratopo import dumps, encode_space, fixture
from auratopo.cli import main
from auratopo.output_capture import captured_output

MISSING_AURA = """{
  "points": ["a", "b"],
  "opens": [[], ["a"], ["a", "b"]],
  "aura": {"a": ["a"]}
}"""


NOT_OPEN_AURA = """{
  "points": ["a", "b"],
  "opens": [[], ["a"], ["a", "b"]],
  "aura": {"a": ["a"], "b": ["b"]}
}"""

class TestCli(unittest.TestCase):

    def setUp(self):
        self.original_directory = os.getcwd()
        self.temp_directory = tempfile.mkdtemp()
        os.chdir(self.temp_directory)

    def tearDown(self):
        os.chdir(self.original_directory)
        try:
            shutil.rmtree(self.temp_directory)
        except:
            pass

    def run_cli(self, *argv):
        with captured_output() as (out, err):
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()

    def run_report(self, *argv):
        status, out, err = self.run_cli(*argv)
        self.assertEqual(status, 0, err)
        return json.loads(out)

    def write_space(self, filename, name):
        with open(filename, "w") as f:
            f.write(dumps(encode_space(fixture(name), name)))

    def test_validate(self):
        report = self.run_report("validate", "--fixture", "finite_aura_basic")
        self.assertTrue(report["ok"])
        self.assertEqual(report["command"],
                         ["validate", "--fixture", "finite_aura_basic"])
        self.assertEqual(report["result"], {"points": 4, "valid": True})

    def test_validate_violation(self):
        with open("space.json", "w") as f:
            f.write(MISSING_AURA)
        status, out, err = self.run_cli("validate", "space.json")
        self.assertEqual(status, 1)
        report = json.loads(out)
        self.assertFalse(report["ok"])
        self.assertEqual(report["violations"][0]["kind"], "aura-missing")
        self.assertIn("point b has no aura", err)

    def test_parse_error(self):
        with open("broken.json", "w") as f:
            f.write('{"points": ["a",]}')
        status, out, err = self.run_cli("validate", "broken.json")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")
        self.assertIn("broken.json:1:", err)
        status, _, err = self.run_cli("analyze", "missing.json", "--set", "a")
        self.assertEqual(status, 2)

    def test_scope_error_names_the_file(self):
        with open("space.json", "w") as f:
            f.write(NOT_OPEN_AURA)
        status, out, err = self.run_cli("analyze", "space.json", "--set",
                                        "a")
        self.assertEqual(status, 1)
        self.assertEqual(out, "")
        self.assertTrue(
            err.startswith("space.json: Invalid scope function: aura of b"),
            err)

    def test_analyze(self):
        report = self.run_report("analyze", "--fixture", "non_idempotent",
                                 "--set", "c")
        result = report["result"]
        self.assertEqual(result["closure_trace"],
                         [["c"], ["b", "c"], ["a", "b", "c"]])
        self.assertEqual(result["stabilized_at"], 2)
        self.assertEqual(result["aura_closure"], ["b", "c"])
        self.assertEqual(result["closure"], ["c"])

    def test_analyze_medical(self):
        report = self.run_report("analyze", "--fixture", "medical", "--set",
                                 "p1,p2,p4,p5")
        approximation = report["result"]["approximation"]
        self.assertEqual(approximation["accuracy"], {
            "num": 2,
            "den": 6,
            "decimal": 0.333
        })
        self.assertEqual(approximation["lower"], ["p1", "p4"])
        report = self.run_report("analyze", "--fixture", "medical", "--set",
                                 "p1,p2,p3,p4,p5,p6")
        self.assertEqual(report["result"]["aura_interior"],
                         ["p1", "p2", "p3", "p4", "p5", "p6"])

    def test_unknown_names(self):
        status, _, err = self.run_cli("analyze", "--fixture", "medical",
                                      "--set", "p9")
        self.assertEqual(status, 2)
        self.assertIn("p9", err)
        status, _, _ = self.run_cli("analyze", "--fixture", "nothing",
                                    "--set", "a")
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli("enumerate", "--fixture", "medical",
                                    "--class", "gamma_open")
        self.assertEqual(status, 2)

    def test_enumerate(self):
        report = self.run_report("enumerate", "--fixture", "finite_aura_basic",
                                 "--class", "a_open")
        self.assertEqual(report["result"]["count"], 5)
        self.assertEqual(report["result"]["sets"][1], ["a"])

    def test_separation(self):
        report = self.run_report("separation", "--fixture", "trivial_discrete")
        self.assertFalse(report["result"]["a_t0"])
        self.assertTrue(report["result"]["t2"])
        self.assertEqual(report["result"]["witnesses"]["a_t0"]["points"],
                         ["a", "b"])

    def test_spread(self):
        report = self.run_report("spread", "--fixture", "epidemic_seven",
                                 "--set", "a")
        result = report["result"]
        self.assertEqual(result["reach"], ["a", "b", "c", "d", "e", "f"])
        self.assertEqual(result["unreached"], ["g"])
        self.assertEqual(result["stabilized_at"], 4)
        self.assertEqual(len(result["components"]), 7)

    def test_spread_interventions(self):
        report = self.run_report("spread", "--fixture", "epidemic_seven",
                                 "--set", "a", "--quarantine", "d")
        self.assertEqual(report["result"]["reach"], ["a", "b", "c", "d"])
        self.assertEqual(report["result"]["interventions"], ["quarantine"])
        with open("distancing.json", "w") as f:
            f.write('{"b": ["b"]}')
        report = self.run_report("spread", "--fixture", "epidemic_seven",
                                 "--set", "a", "--distancing",
                                 "distancing.json")
        self.assertEqual(report["result"]["reach"], ["a", "b"])
        with open("wider.json", "w") as f:
            f.write('{"c": ["c", "d"]}')
        status, _, err = self.run_cli("spread", "--fixture", "epidemic_seven",
                                      "--set", "a", "--distancing",
                                      "wider.json")
        self.assertEqual(status, 1)
        self.assertIn("Not a refinement", err)

    def test_spread_large_space(self):
        points = ["x%d" % i for i in range(70)]
        with open("large.json", "w") as f:
            f.write(
                json.dumps({
                    "points": points,
                    "opens": "discrete",
                    "aura": {p: [p] for p in points}
                }))
        report = self.run_report("spread", "large.json", "--set", "x0,x5")
        self.assertEqual(report["result"]["reach"], ["x0", "x5"])
        self.assertEqual(report["result"]["stabilized_at"], 0)
        self.assertIsNone(report["result"]["components"])

    def test_map(self):
        report = self.run_report("map", "--fixture", "pre_not_semi_map")
        self.assertTrue(report["result"]["a_continuous"])
        self.assertEqual(report["result"]["mapping"], {
            "a": "a",
            "b": "a",
            "c": "c",
            "d": "c"
        })
        self.write_space("space.json", "pre_not_semi")
        report = self.run_report("map", "space.json", "space.json",
                                 "--mapping", "a=a,b=a,c=c,d=c")
        self.assertTrue(report["result"]["a_continuous"])
        status, _, _ = self.run_cli("map", "space.json", "space.json",
                                    "--mapping", "a=a,b=a")
        self.assertEqual(status, 2)

    def test_rough(self):
        self.write_space("refined.json", "medical_refined")
        report = self.run_report("rough", "--fixture", "medical", "--set",
                                 "p1,p2,p4,p5", "--refined", "refined.json")
        result = report["result"]
        self.assertEqual(result["approximation"]["accuracy"]["num"], 2)
        self.assertEqual(result["refined"]["accuracy"], {
            "num": 4,
            "den": 6,
            "decimal": 0.667
        })
        self.assertTrue(result["lower_grows"])
        self.assertFalse(result["partition"])

    def test_sensor(self):
        report = self.run_report("sensor", "--fixture", "sensor_triple",
                                 "--target", "1,0,3,2")
        result = report["result"]
        self.assertEqual(result["grid_points"], 483)
        self.assertEqual(result["approximation"]["lower"], [])
        self.assertEqual(len(result["target"]), 25)
        self.assertGreater(len(result["approximation"]["upper"]), 25)
        self.assertFalse(result["full_coverage"])
        status, _, _ = self.run_cli("sensor", "--fixture", "sensor_triple",
                                    "--target", "1,0,3")
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli("sensor", "--fixture", "medical",
                                    "--target", "1,0,3,2")
        self.assertEqual(status, 2)

    def test_fixtures(self):
        report = self.run_report("fixtures")
        self.assertIn("medical", [f["name"] for f in report["result"]])
        report = self.run_report("fixtures", "--dump", "finite_aura_basic")
        self.assertEqual(report["result"]["points"], ["a", "b", "c", "d"])
        with open("basic.json", "w") as f:
            f.write(json.dumps(report["result"]))
        report = self.run_report("validate", "basic.json")
        self.assertTrue(report["ok"])

    def test_fuzz(self):
        status, first, _ = self.run_cli("fuzz", "--seed", "42", "--cases",
                                        "5", "--max-n", "4")
        self.assertEqual(status, 0)
        status, second, _ = self.run_cli("fuzz", "--seed", "42", "--cases",
                                         "5", "--max-n", "4")
        self.assertEqual(first, second)
        report = json.loads(first)
        self.assertTrue(report["ok"])
        self.assertEqual(report["result"]["cases"], 5)
        status, out, err = self.run_cli("fuzz", "--max-n", "9")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")

    def test_format_and_usage(self):
        status, out, _ = self.run_cli("separation", "--fixture",
                                      "discrete_discrete", "--format",
                                      "compact")
        self.assertEqual(status, 0)
        self.assertEqual(len(out.strip().splitlines()), 1)
        status, _, _ = self.run_cli()
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli("analyze", "--set", "a")
        self.assertEqual(status, 2)
