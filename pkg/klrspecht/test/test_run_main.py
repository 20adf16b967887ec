"""Test the klrspecht command line: configuration, dispatch and reports."""
from __future__ import absolute_import

import json
import os
import unittest

import mock

import klrspecht

from klrspecht import run_main
from klrspecht.utility import SettingError, ShapeError, StraighteningError
from klrspecht.verify import ALL_SUITES, LIGHT_SUITES, CheckResult

from .testutils import LoggedRun, execute_run_main, yaml_path


def records(output, title):
    document = json.loads(output)
    for section in document["sections"]:
        if section["title"] == title:
            return section["records"]
    raise AssertionError("No section {!r} in {}".format(title, output))


def config(args, environ=None):
    opts = klrspecht.cli("klrspecht", args=args)
    return run_main.build_config(opts, environ={} if environ is None else environ)


class TestBuildConfig(unittest.TestCase):
    def test_defaults(self):
        cfg = config(["tabs", "--n", "2"])
        self.assertEqual(cfg.e, 2)
        self.assertEqual(cfg.charge, (0,))
        self.assertEqual(cfg.characteristic, 0)
        self.assertEqual(cfg.output_format, "text")
        self.assertEqual(cfg.rank_cap, 6)
        self.assertEqual(cfg.reduced_words, "lexmin")
        self.assertEqual(cfg.shapes, ())

    def test_flags_override_yaml(self):
        cfg = config(["gram", "--yaml", yaml_path("test_config/run-221.yaml"), "--char", "3"])
        self.assertEqual(cfg.characteristic, 3)
        self.assertEqual(cfg.output_format, "json")
        self.assertEqual([str(shape) for shape in cfg.shapes], ["2,2,1"])
        self.assertEqual(cfg.rank_cap, 6)

    def test_yaml_overrides_environment(self):
        path = yaml_path("test_config/run-221.yaml")
        cfg = config(["gram", "--yaml", path], {run_main.FORMAT_ENV: "csv"})
        self.assertEqual(cfg.output_format, "json")
        cfg = config(["gram", "--n", "2"], {run_main.FORMAT_ENV: "csv"})
        self.assertEqual(cfg.output_format, "csv")

    def test_level_from_charge(self):
        cfg = config(["tabs", "--e", "inf", "--charge", "0,2", "--shape", "1"])
        self.assertIsNone(cfg.e)
        self.assertEqual(cfg.charge, (0, 2))
        self.assertEqual([str(shape) for shape in cfg.shapes], ["1|0"])

    def test_reduced_word_conventions(self):
        self.assertEqual(config(["tabs", "--n", "1", "--reduced-words", "lexmax"]).reduced_words, "lexmax")
        path = yaml_path("test_config/lexmax-words.yaml")
        self.assertEqual(config(["tabs", "--n", "1", "--reduced-words", path]).reduced_words, "lexmax")
        with self.assertRaises(SettingError):
            config(["tabs", "--n", "1", "--reduced-words", "random"])

    def test_degstats_lists(self):
        cfg = config(["degstats", "--shape", "2", "--e-list", "2,inf", "--primes", "2,3"])
        self.assertEqual(cfg.e_list, (2, None))
        self.assertEqual(cfg.primes, (2, 3))
        with self.assertRaises(SettingError):
            config(["degstats", "--shape", "2", "--primes", "4"])

    def test_verify_suites(self):
        self.assertEqual(config(["verify", "--n", "2"]).suites, LIGHT_SUITES)
        self.assertEqual(config(["verify", "--n", "2", "--slow"]).suites, ALL_SUITES)
        self.assertEqual(config(["verify", "--n", "2", "--suite", "gram"]).suites, ("gram",))

    def test_bad_values(self):
        with self.assertRaises(ShapeError):
            config(["tabs", "--shape", "1,2"])
        with self.assertRaises(SettingError):
            config(["tabs", "--n", "1", "--char", "4"])
        with self.assertRaises(SettingError):
            config(["gram", "--n", "1", "--block", "01"], {run_main.FORMAT_ENV: "xml"})


class TestCommands(unittest.TestCase):
    def test_tabs_of_the_empty_shape(self):
        status, output = execute_run_main(["tabs", "--shape", "0", "--format", "json"])
        self.assertEqual(status, 0)
        document = json.loads(output)
        self.assertEqual(document["command"], "tabs")
        self.assertEqual(document["setting"], "e=2 charge=0")
        self.assertTrue(document["passed"])
        (record,) = records(output, "tableaux")
        self.assertEqual(record["degree"], 0)
        self.assertEqual(record["codegree"], 0)
        self.assertEqual(record["residues"], "")

    def test_tabs_of_221(self):
        status, output = execute_run_main(["tabs", "--shape", "2,2,1", "--format", "json"])
        self.assertEqual(status, 0)
        rows = records(output, "tableaux")
        self.assertEqual(len(rows), 5)
        self.assertEqual(rows[0]["residues"], "01100")
        self.assertEqual(rows[0]["degree"], 2)
        self.assertEqual(rows[0]["d(t)"], [])

    def test_gram_elementary_divisors(self):
        status, output = execute_run_main(
            ["gram", "--shape", "2,2,1", "--snf", "--format", "json"]
        )
        self.assertEqual(status, 0)
        (row,) = records(output, "elementary divisors")
        self.assertEqual(row["divisors"], [1, 1, 1, 1, 2])
        self.assertEqual(row["rank"], 5)
        self.assertEqual(len(records(output, "gram 2,2,1")), 5)

    def test_gram_from_yaml(self):
        status, output = execute_run_main(
            ["gram", "--yaml", yaml_path("test_config/run-221.yaml"), "--snf"]
        )
        self.assertEqual(status, 0)
        (row,) = records(output, "elementary divisors")
        self.assertEqual(row["characteristic"], 2)
        self.assertEqual(row["rank"], 4)
        for gram_row in records(output, "gram 2,2,1"):
            self.assertTrue(all(x in (0, 1) for x in gram_row["entries"]))

    def test_decomposition_matrix(self):
        status, output = execute_run_main(["decomp", "--n", "2", "--format", "json"])
        self.assertEqual(status, 0)
        self.assertEqual(
            records(output, "decomposition matrix"),
            [{"shape": "2", "1,1": "q"}, {"shape": "1,1", "1,1": "1"}],
        )

    def test_adjustment_matrix(self):
        status, output = execute_run_main(
            ["adjust", "--n", "2", "--char", "2", "--format", "json"]
        )
        self.assertEqual(status, 0)
        self.assertEqual(records(output, "adjustment matrix"), [{"shape": "1,1", "1,1": "1"}])

    def test_crystal(self):
        status, output = execute_run_main(
            ["crystal", "--n", "2", "--shape", "2", "--format", "json"]
        )
        self.assertEqual(status, 0)
        self.assertEqual(records(output, "shapes"), [{"shape": "2", "kleshchev": False}])
        self.assertEqual(
            records(output, "kleshchev"),
            [{"shape": "1,1", "good_path": "01", "mullineux": "1,1"}],
        )

    def test_characters(self):
        status, output = execute_run_main(["char", "--e", "3", "--shape", "2,1", "--format", "json"])
        self.assertEqual(status, 0)
        rows = records(output, "characters")
        self.assertEqual([row["residues"] for row in rows], ["012", "021"])
        self.assertEqual(rows[1]["specht"], "q")
        self.assertEqual(rows[1]["simple"], "0")

    def test_degstats(self):
        status, output = execute_run_main(
            ["degstats", "--shape", "2", "--primes", "2", "--format", "json"]
        )
        self.assertEqual(status, 0)
        self.assertEqual(records(output, "Deg_p"), [{"shape": "2", "p": 2, "Deg": 1}])
        self.assertEqual(records(output, "deg_e"), [{"shape": "2", "e": "2", "deg": 1}])

    def test_fock_check(self):
        status, output = execute_run_main(["fock-check", "--rank-cap", "3", "--format", "csv"])
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("# fock relations\nfamily,passed,counterexample\n"))

    def test_verify_text_report(self):
        status, output = execute_run_main(["verify", "--n", "2", "--suite", "gram"])
        self.assertEqual(status, 0)
        self.assertTrue(output.endswith("passed\n"))

    def test_reports_are_deterministic(self):
        args = ["char", "--shape", "2,2,1", "--format", "csv"]
        self.assertEqual(execute_run_main(args), execute_run_main(args))


class TestExitStatus(unittest.TestCase):
    def test_missing_command(self):
        with self.assertRaises(SystemExit) as context:
            execute_run_main([])
        self.assertEqual(context.exception.code, 2)

    def test_bad_shape(self):
        with LoggedRun() as log:
            status, output = execute_run_main(["tabs", "--shape", "1,2"])
        self.assertEqual(status, 2)
        self.assertEqual(output, "")
        self.assertIn("ShapeError", log.getvalue())

    def test_missing_shapes(self):
        status, _ = execute_run_main(["tabs"])
        self.assertEqual(status, 2)

    def test_adjust_needs_a_prime(self):
        with LoggedRun() as log:
            status, _ = execute_run_main(["adjust", "--n", "2"])
        self.assertEqual(status, 2)
        self.assertIn("adjust needs a prime characteristic", log.getvalue())

    def test_environment_format(self):
        with mock.patch.dict(os.environ, {run_main.FORMAT_ENV: "csv"}):
            status, output = execute_run_main(["tabs", "--shape", "1"])
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("# tableaux\n"))

    def test_failed_verification(self):
        failing = [CheckResult("gram", "symmetric Gram of 1", False, "boom")]
        with mock.patch.object(run_main, "run_suites", return_value=failing):
            status, output = execute_run_main(["verify", "--n", "1"])
        self.assertEqual(status, 1)
        self.assertTrue(output.endswith("FAILED\n"))

    def test_engine_failure(self):
        with mock.patch.object(
            run_main, "gram_matrix", side_effect=StraighteningError("stuck")
        ):
            with LoggedRun() as log:
                status, output = execute_run_main(["gram", "--shape", "2,1"])
        self.assertEqual(status, 1)
        self.assertEqual(output, "")
        self.assertIn("stuck", log.getvalue())


# -fin-
