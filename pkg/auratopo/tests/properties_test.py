import unittest
from concurrent.futures import ThreadPoolExecutor
from auratopo import (Case, Properties, PropertyFailure, PropertyResult,
                      UnknownName, check_property, dumps, log,
                      run_properties)
from auratopo.output_capture import captured_output

LAWS = ("finite_space_laws", "cech_axioms", "interior_laws",
        "kuratowski_completion", "topology_chain", "stabilization",
        "special_auras", "cover_base", "transitive_consequences",
        "class_hierarchy", "semi_open_unions",
        "transitive_class_decomposition", "a_open_family_is_topology",
        "continuity_hierarchy", "continuity_composition",
        "semi_continuity_characterization",
        "transitive_continuity_decomposition", "separation_chain",
        "t1_characterization", "rough_laws", "refinement_monotonicity",
        "pawlak_reduction", "spread_laws", "quarantine_containment",
        "immunity", "document_round_trip")


class TestProperties(unittest.TestCase):

    def test_registry(self):
        self.assertEqual(sorted(Properties.names()), sorted(LAWS))

    def test_case_is_deterministic(self):
        first, second = Case(42, 7, 6), Case(42, 7, 6)
        self.assertEqual(first.space, second.space)
        self.assertEqual(first.refined, second.refined)
        self.assertEqual(first.f.mapping, second.f.mapping)
        self.assertEqual(first.pairs, second.pairs)
        self.assertTrue(1 <= first.n <= 6)

    def test_every_law_on_cases(self):
        for index in range(12):
            case = Case(3, index, 5)
            for name in LAWS:
                check_property(name, case)

    def test_run(self):
        report = run_properties(seed=42, cases=25, max_n=5)
        self.assertTrue(report.ok, dumps(report.as_document()))
        self.assertEqual([r.name for r in report.results],
                         list(Properties.names()))
        for result in report.results:
            self.assertEqual(result.checked, 25)
        document = report.as_document()
        self.assertEqual((document["seed"], document["cases"],
                          document["max_n"]), (42, 25, 5))
        self.assertEqual(document["properties"]["cech_axioms"], {
            "checked": 25,
            "failed": 0,
            "passed": True
        })

    def test_case_maps(self):
        varied = 0
        for index in range(40):
            case = Case(42, index, 6)
            self.assertGreaterEqual(case.f.target.n, 2)
            self.assertGreaterEqual(case.g.target.n, 2)
            self.assertIs(case.g.source, case.f.target)
            varied += len(set(case.f.mapping)) > 1
        self.assertGreater(varied, 5)

    def test_acceptance_run(self):
        report = run_properties(seed=42, cases=500, max_n=6)
        self.assertTrue(report.ok, dumps(report.as_document()))
        for result in report.results:
            self.assertEqual(result.checked, 500)

    def test_deterministic_reports(self):
        first = run_properties(seed=5, cases=10, max_n=6)
        second = run_properties(seed=5, cases=10, max_n=6, max_workers=4)
        self.assertEqual(dumps(first.as_document()),
                         dumps(second.as_document()))
        with ThreadPoolExecutor(max_workers=2) as pool:
            third = run_properties(seed=5, cases=10, max_n=6, job_pool=pool)
        self.assertEqual(dumps(first.as_document()),
                         dumps(third.as_document()))

    def test_subset_of_laws(self):
        report = run_properties(cases=3, names=("rough_laws", "immunity"))
        self.assertEqual([r.name for r in report.results],
                         ["rough_laws", "immunity"])
        self.assertEqual(report.result("immunity").checked, 3)
        with self.assertRaises(UnknownName):
            report.result("cech_axioms")

    def test_arguments(self):
        with self.assertRaises(ValueError):
            run_properties(cases=0)
        with self.assertRaises(ValueError):
            run_properties(max_n=9)
        with self.assertRaises(ValueError):
            run_properties(max_n=1)
        with self.assertRaises(UnknownName):
            run_properties(cases=1, names=("no_such_law", ))
        with self.assertRaises(TypeError):
            run_properties(seeds=1)
        with self.assertRaises(UnknownName):
            check_property("no_such_law", Case(1, 0, 3))

    def test_failure_document(self):
        result = PropertyResult("cech_axioms", checked=4, failed=1,
                                first_case=2, message="closure moved",
                                counterexample={"case": 2})
        self.assertFalse(result.passed)
        self.assertEqual(result.as_document()["first_case"], 2)
        self.assertEqual(result.as_document()["counterexample"], {"case": 2})
        failure = PropertyFailure("cech_axioms", "closure moved")
        self.assertEqual(str(failure),
                         "In property 'cech_axioms'. closure moved")

    def test_status_lines(self):
        with captured_output(verbose=True) as (out, err):
            run_properties(seed=1, cases=2, max_n=3, names=("cover_base", ))
        lines = err.getvalue().splitlines()
        self.assertIn("case 0 cover_base: passed ", lines)
        self.assertIn("cover_base: passed 2/2", lines)
        self.assertEqual(out.getvalue(), "")
