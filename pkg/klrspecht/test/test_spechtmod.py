"""Test Specht module straightening, Gram matrices and characters."""
from __future__ import absolute_import

import unittest

from collections import namedtuple

from nose.plugins.attrib import attr

from klrspecht import combinat, spechtmod
from klrspecht.combinat import Tableau
from klrspecht.exactalg import ONE, Q, LaurentPoly
from klrspecht.spechtmod import Character, SpechtElement, SpechtModule
from klrspecht.utility import ShapeError, StraighteningError

from .testutils import level_one


class TestGeneratorActions(unittest.TestCase):
    def setUp(self):
        self.setting, self.shape = level_one(3, "2,1")
        self.module = SpechtModule(self.setting, self.shape)
        self.initial, self.second = self.module.basis

    def test_basis_words(self):
        self.assertEqual(self.module.word(self.initial), ())
        self.assertEqual(self.module.word(self.second), (2,))
        self.assertEqual(self.module.residues(self.second), (0, 2, 1))
        self.assertEqual(self.module.degree(self.initial), 0)
        self.assertEqual(self.module.degree(self.second), 1)

    def test_psi_moves_along_the_basis(self):
        v = self.module.vector(self.initial)
        self.assertEqual(self.module.act_psi(v, 2), SpechtElement({self.second: 1}))
        self.assertEqual(self.module.act_word(v, (2,)), self.module.vector(self.second))

    def test_psi_inside_a_row_kills_the_initial_vector(self):
        v = self.module.vector(self.initial)
        self.assertTrue(self.module.act_psi(v, 1).is_zero())

    def test_y_kills_the_initial_vector(self):
        v = self.module.vector(self.initial)
        for k in range(1, 4):
            self.assertTrue(self.module.act_y(v, k).is_zero())

    def test_idempotents_project_on_residue_words(self):
        x = self.module.vector(self.initial) + self.module.vector(self.second)
        self.assertEqual(self.module.act_e(x, (0, 1, 2)), self.module.vector(self.initial))
        self.assertTrue(self.module.act_e(x, (0, 0, 0)).is_zero())
        generator = spechtmod.e_gen((0, 2, 1))
        self.assertEqual(self.module.act(x, generator), self.module.vector(self.second))

    def test_bad_generators(self):
        v = self.module.vector(self.initial)
        with self.assertRaises(IndexError):
            self.module.act_psi(v, 3)
        with self.assertRaises(IndexError):
            self.module.act_y(v, 0)
        with self.assertRaises(ValueError):
            self.module.act(v, spechtmod.Generator("x", 1))

    def test_level_mismatch(self):
        with self.assertRaises(ShapeError):
            SpechtModule(combinat.Setting(3, (0, 1)), self.shape)

    def test_nilpotency(self):
        for r in range(1, 4):
            self.assertGreaterEqual(self.module.nilpotency_index(r), 1)
        trivial = SpechtModule(*level_one(3, "2"))
        self.assertEqual(trivial.nilpotency_index(1), 1)

    def test_nilpotency_on_a_fresh_module(self):
        fresh = SpechtModule(*level_one(3, "2,1"))
        self.assertEqual(fresh.nilpotency_index(1), 1)
        self.assertEqual(len(fresh.basis), 2)


class TestSpechtElement(unittest.TestCase):
    def test_linear_combinations(self):
        a, b = combinat.standard_tableaux(combinat.Multipartition.parse("2,1"))
        x = SpechtElement({a: 1, b: 2})
        self.assertEqual(x - x, SpechtElement())
        self.assertEqual(3 * x, SpechtElement({a: 3, b: 6}))
        self.assertEqual(x.reduce_mod(2), SpechtElement({a: 1}))
        self.assertEqual(-x, SpechtElement({a: -1, b: -2}))


class TestGramMatrices(unittest.TestCase):
    def test_two_part_hook(self):
        setting, shape = level_one(3, "2,1")
        gram = SpechtModule(setting, shape).gram_matrix()
        self.assertEqual(gram.tolist(), [[1, 0], [0, 0]])
        self.assertEqual(gram.degrees, [0, 1])

    def test_two_row_shapes_at_e_two(self):
        self.assertEqual(SpechtModule(*level_one(2, "1,1")).gram_matrix().tolist(), [[1]])
        self.assertEqual(SpechtModule(*level_one(2, "2")).gram_matrix().tolist(), [[0]])

    def test_gram_of_221(self):
        setting, shape = level_one(2, "2,2,1")
        gram = SpechtModule(setting, shape).gram_matrix()
        self.assertTrue(gram.is_symmetric())
        self.assertTrue(gram.block_support_ok())
        self.assertEqual(gram.smith_normal_form(), [1, 1, 1, 1, 2])
        self.assertEqual(gram.rank(), 5)
        self.assertEqual(gram.rank(2), 4)
        self.assertEqual(sorted(gram.degrees), [-2, 0, 0, 0, 2])

    def test_entries_of_221(self):
        setting, shape = level_one(2, "2,2,1")
        gram = SpechtModule(setting, shape).gram_matrix()
        Entry = namedtuple("Entry", "s t value")
        entries = [
            Entry([[1, 2], [3, 4], [5]], [[1, 3], [2, 5], [4]], 1),
            Entry([[1, 3], [2, 4], [5]], [[1, 2], [3, 5], [4]], 1),
            Entry([[1, 4], [2, 5], [3]], [[1, 4], [2, 5], [3]], -2),
        ]
        nonzero = {}
        for entry in entries:
            i = gram.tableaux.index(Tableau.from_rows(shape, [entry.s]))
            j = gram.tableaux.index(Tableau.from_rows(shape, [entry.t]))
            nonzero[i, j] = nonzero[j, i] = entry.value
        for i in range(5):
            for j in range(5):
                self.assertEqual(gram[i, j], nonzero.get((i, j), 0), "entry {},{}".format(i, j))

    def test_reduction_mod_p(self):
        setting, shape = level_one(2, "2,2,1")
        gram = spechtmod.gram_matrix(setting, shape, characteristic=2)
        self.assertTrue(all(0 <= x < 2 for row in gram.tolist() for x in row))
        self.assertEqual(gram.rank(2), 4)

    def test_weight_blocks(self):
        setting, shape = level_one(2, "2,2,1")
        module = SpechtModule(setting, shape)
        block = spechtmod.gram_block(setting, shape, (0, 1, 1, 0, 0))
        self.assertTrue(all(word == (0, 1, 1, 0, 0) for word in block.words))
        self.assertEqual(block, module.gram_matrix().block((0, 1, 1, 0, 0)))

    def test_depth_guard(self):
        setting, shape = level_one(2, "2,2,1")
        with self.assertRaises(StraighteningError):
            SpechtModule(setting, shape, depth_guard=1).gram_matrix()

    def test_shared_modules(self):
        setting, shape = level_one(2, "2,1")
        self.assertIs(spechtmod.get_module(setting, shape), spechtmod.get_module(setting, shape))
        self.assertIsNot(
            spechtmod.get_module(setting, shape),
            spechtmod.get_module(setting, shape, convention="lexmax"),
        )

    def test_clear_modules(self):
        setting, shape = level_one(2, "2,1")
        before = spechtmod.get_module(setting, shape)
        spechtmod.clear_modules()
        self.assertEqual(spechtmod._MODULES, {})
        self.assertIsNot(spechtmod.get_module(setting, shape), before)


class TestCharacters(unittest.TestCase):
    def test_specht_character(self):
        setting, shape = level_one(3, "2,1")
        self.assertEqual(
            spechtmod.specht_character(setting, shape),
            Character({(0, 1, 2): ONE, (0, 2, 1): Q}),
        )

    def test_dual_character_is_shifted_bar(self):
        for e, text in ((2, "2,2,1"), (3, "3,1"), (2, "3,1,1")):
            setting, shape = level_one(e, text)
            shift = LaurentPoly.monomial(combinat.defect(setting, shape))
            self.assertEqual(
                spechtmod.dual_specht_character(setting, shape),
                spechtmod.specht_character(setting, shape).bar().scale(shift),
            )

    def test_restricted_character(self):
        setting, shape = level_one(3, "2,1")
        self.assertEqual(
            spechtmod.restricted_character(setting, shape, 2), Character({(0, 1): ONE})
        )
        self.assertEqual(
            set(spechtmod.restricted_character(setting, shape, 1)), {(0, 2)}
        )
        self.assertEqual(spechtmod.restricted_character(setting, shape, 0), Character())

    def test_simple_characters(self):
        setting = combinat.Setting(2, (0,))
        column = combinat.Multipartition.parse("1,1")
        row = combinat.Multipartition.parse("2")
        self.assertEqual(spechtmod.simple_character(setting, column), Character({(0, 1): ONE}))
        self.assertEqual(spechtmod.simple_character(setting, row), Character())

    def test_simple_dimensions(self):
        setting, shape = level_one(2, "2,2,1")
        self.assertEqual(spechtmod.simple_character(setting, shape).dimension(), 5)
        self.assertEqual(spechtmod.simple_character(setting, shape, 2).dimension(), 4)
        self.assertTrue(spechtmod.simple_character(setting, shape, 2).is_bar_invariant())

    def test_exponent_sequences(self):
        setting, shape = level_one(2, "2,2,1")
        data = spechtmod.exponent_sequences(setting, shape)
        self.assertEqual(data.degree_exponents, (0, 1, 0, 1, 0))
        self.assertEqual(data.initial_word, (0, 1, 1, 0, 0))


@attr("slow")
class TestColumnWeightBlock(unittest.TestCase):
    def test_block_gram_and_characters(self):
        setting, shape = level_one(2, "3,2^2,1^2")
        word = (0, 1, 0, 1, 0, 1, 0, 1, 0)
        module = SpechtModule(setting, shape)
        block = module.gram_matrix(word=word)
        self.assertEqual(sorted(block.degrees), [-1, 1, 1, 1, 1, 1])
        self.assertEqual(block.smith_normal_form(), [2, 2, 0, 0, 0, 0])
        difference = spechtmod.simple_character(
            setting, shape, 0, gram=block
        ) - spechtmod.simple_character(setting, shape, 2, gram=block)
        self.assertEqual(difference, Character({word: Q + LaurentPoly.monomial(-1)}))


@attr("slow")
class TestLevelEightWeightSpace(unittest.TestCase):
    def test_degree_zero_block(self):
        setting = combinat.Setting(None, (4, 4, 3, 3, 2, 2, 1, 1))
        shape = combinat.Multipartition.parse("2|2|1|1|3|3|2|2", 8)
        word = (4, 5, 3, 4, 2, 3, 4, 5, 2, 3, 1, 2, 3, 4, 1, 2)
        block = SpechtModule(setting, shape).gram_matrix(word=word)
        zero = [k for k, degree in enumerate(block.degrees) if degree == 0]
        self.assertEqual(len(zero), 5)
        self.assertEqual(block.submatrix(zero, zero).smith_normal_form(), [1, 1, 2, 0, 0])


# -fin-
