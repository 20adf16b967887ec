"""Test klrspecht parsing helpers and configuration files."""
from __future__ import absolute_import

import unittest

from collections import namedtuple

from klrspecht import utility
from klrspecht.utility import SettingError, ShapeError

from .testutils import yaml_path


class TestParseShape(unittest.TestCase):
    def test_shape_grammar(self):
        Data = namedtuple("Data", "text level components")
        tests = [
            Data("3,2^2,1^2", None, ((3, 2, 2, 1, 1),)),
            Data("7,6,3,2|4,3,1", None, ((7, 6, 3, 2), (4, 3, 1))),
            Data("2|2|1|1|3|3|2|2", None, ((2,), (2,), (1,), (1,), (3,), (3,), (2,), (2,))),
            Data("0", None, ((),)),
            Data("1", 3, ((1,), (), ())),
            Data("0|1^3", None, ((), (1, 1, 1))),
        ]
        for test in tests:
            self.assertEqual(utility.parse_shape(test.text, test.level), test.components)

    def test_increasing_parts_rejected(self):
        with self.assertRaises(ShapeError):
            utility.parse_shape("1,2")

    def test_bad_token_rejected(self):
        with self.assertRaises(ShapeError):
            utility.parse_shape("3,x")

    def test_too_many_components_for_level(self):
        with self.assertRaises(ShapeError):
            utility.parse_shape("1|1|1", level=2)


class TestParseSetting(unittest.TestCase):
    def test_parse_e(self):
        self.assertEqual(utility.parse_e("3"), 3)
        self.assertEqual(utility.parse_e(2), 2)
        self.assertIsNone(utility.parse_e("inf"))
        self.assertIsNone(utility.parse_e(None))
        with self.assertRaises(SettingError):
            utility.parse_e(1)
        with self.assertRaises(SettingError):
            utility.parse_e("two")

    def test_format_e(self):
        self.assertEqual(utility.format_e(None), "inf")
        self.assertEqual(utility.format_e(5), "5")

    def test_parse_charge(self):
        self.assertEqual(utility.parse_charge("4,4,3,3,2,2,1,1"), (4, 4, 3, 3, 2, 2, 1, 1))
        self.assertEqual(utility.parse_charge(0), (0,))
        self.assertEqual(utility.parse_charge([0, 2]), (0, 2))
        with self.assertRaises(SettingError):
            utility.parse_charge("")

    def test_characteristic_is_zero_or_prime(self):
        self.assertEqual(utility.parse_characteristic("0"), 0)
        self.assertEqual(utility.parse_characteristic(3), 3)
        for value in (1, 4, 9, "p"):
            with self.assertRaises(SettingError):
                utility.parse_characteristic(value)

    def test_parse_residue_word(self):
        self.assertEqual(utility.parse_residue_word("01100"), (0, 1, 1, 0, 0))
        self.assertEqual(utility.parse_residue_word("4,5,-3"), (4, 5, -3))
        with self.assertRaises(ShapeError):
            utility.parse_residue_word("01a")

    def test_parse_int_list(self):
        self.assertEqual(utility.parse_int_list("2,3"), (2, 3))
        self.assertEqual(utility.parse_int_list([5]), (5,))
        with self.assertRaises(SettingError):
            utility.parse_int_list("2,three", "primes")


class TestReadYaml(unittest.TestCase):
    def test_run_configuration(self):
        data = utility.read_yaml(yaml_path("test_config/run-221.yaml"))
        self.assertEqual(data["e"], 2)
        self.assertEqual(data["shapes"], ["2,2,1"])
        self.assertEqual(data["characteristic"], 2)
        self.assertNotIn("rank_cap", data)

    def test_bad_characteristic_exits(self):
        with self.assertRaises(RuntimeError):
            utility.read_yaml(yaml_path("test_config/bad-characteristic.yaml"))

    def test_not_a_mapping_is_empty(self):
        self.assertEqual(utility.read_yaml(yaml_path("test_config/not-a-mapping.yaml")), {})


# -fin-
