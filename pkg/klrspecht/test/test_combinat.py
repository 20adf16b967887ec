"""Test multipartition, tableau, degree and crystal combinatorics."""
from __future__ import absolute_import

import unittest

from collections import namedtuple

from klrspecht import combinat
from klrspecht.combinat import Multipartition, Node, Setting, StandardTableau
from klrspecht.utility import NotGarnirNodeError, NotKleshchevError, ShapeError

from .testutils import level_one


def shape(text, level=1):
    return Multipartition.parse(text, level)


class TestResidues(unittest.TestCase):
    def test_residue_of_node(self):
        setting = Setting(2, (0,))
        self.assertEqual(combinat.residue(setting, Node(1, 1, 1)), 0)
        self.assertEqual(combinat.residue(setting, Node(1, 3, 1)), 0)
        self.assertEqual(combinat.residue(Setting(None, (0,)), Node(1, 3, 1)), -2)
        with self.assertRaises(ShapeError):
            combinat.residue(setting, Node(2, 1, 1))

    def test_initial_residue_words(self):
        Data = namedtuple("Data", "e charge shape word")
        tests = [
            Data(2, (0,), "2,2,1", "01100"),
            Data(3, (0, 2), "7,6,3,2|4,3,1", "01201202012011200120121200"),
        ]
        for test in tests:
            setting = Setting(test.e, test.charge)
            lam = shape(test.shape, setting.level)
            word = combinat.residue_sequence(setting, StandardTableau.initial(lam))
            self.assertEqual(setting.format_word(word), test.word)

    def test_infinite_words_are_comma_separated(self):
        setting = Setting(None, (0,))
        word = combinat.residue_sequence(setting, StandardTableau.initial(shape("2,1")))
        self.assertEqual(word, (0, 1, -1))
        self.assertEqual(setting.format_word(word), "0,1,-1")

    def test_integer_contents(self):
        setting = Setting(2, (3,))
        t = StandardTableau.initial(shape("2,1"))
        self.assertEqual(combinat.integer_contents(setting, t), (3, 4, 2))

    def test_cartan_pairing(self):
        self.assertEqual(Setting(2, (0,)).cartan(0, 1), -2)
        self.assertEqual(Setting(3, (0,)).cartan(0, 2), -1)
        self.assertEqual(Setting(4, (0,)).cartan(0, 2), 0)
        self.assertEqual(Setting(None, (0,)).cartan(5, 5), 2)
        self.assertTrue(Setting(3, (0,)).arrow(2, 0))
        self.assertEqual(Setting(3, (0, 3, 1)).lam(0), 2)


class TestMultipartitions(unittest.TestCase):
    def test_enumeration_order(self):
        self.assertEqual(combinat.multipartitions(Setting(2, (0,)), 0), [shape("0")])
        self.assertEqual(
            combinat.multipartitions(Setting(2, (0,)), 2), [shape("2"), shape("1,1")]
        )
        self.assertEqual(
            combinat.multipartitions(Setting(2, (0, 1)), 1), [shape("1|0", 2), shape("0|1", 2)]
        )

    def test_enumeration_refines_dominance(self):
        shapes = combinat.multipartitions(Setting(3, (0, 1)), 4)
        for k, lam in enumerate(shapes):
            for mu in shapes[:k]:
                self.assertFalse(
                    combinat.dominates(lam, mu) and lam != mu,
                    "{} listed after {}".format(lam, mu),
                )

    def test_dominance(self):
        self.assertTrue(combinat.dominates(shape("2"), shape("1,1")))
        self.assertFalse(combinat.dominates(shape("1,1"), shape("2")))
        self.assertTrue(combinat.dominates(shape("1|0", 2), shape("0|1", 2)))
        self.assertTrue(combinat.dominates(shape("3,1,1"), shape("2,2,1")))
        with self.assertRaises(ShapeError):
            combinat.dominates(shape("2"), shape("2,1"))

    def test_conjugation(self):
        self.assertEqual(shape("2,1").conjugate(), shape("2,1"))
        self.assertEqual(shape("3").conjugate(), shape("1,1,1"))
        self.assertEqual(shape("2|1", 2).conjugate(), shape("1|1,1", 2))
        setting = Setting(2, (0, 0))
        shapes = [lam for n in range(5) for lam in combinat.multipartitions(setting, n)]
        for lam in shapes:
            self.assertEqual(lam.conjugate().conjugate(), lam)
        for n in range(1, 5):
            level_shapes = combinat.multipartitions(setting, n)
            for lam in level_shapes:
                for mu in level_shapes:
                    self.assertEqual(
                        combinat.dominates(lam, mu),
                        combinat.dominates(mu.conjugate(), lam.conjugate()),
                    )

    def test_addable_and_removable_nodes(self):
        lam = shape("2,2,1")
        self.assertEqual(
            lam.addable_nodes(), [Node(1, 1, 3), Node(1, 3, 2), Node(1, 4, 1)]
        )
        self.assertEqual(lam.removable_nodes(), [Node(1, 2, 2), Node(1, 3, 1)])
        with self.assertRaises(ShapeError):
            lam.add_node(Node(1, 2, 3))


class TestTableaux(unittest.TestCase):
    def test_standard_tableaux(self):
        lam = shape("2,2,1")
        tableaux = combinat.standard_tableaux(lam)
        self.assertEqual(len(tableaux), 5)
        self.assertEqual(tableaux[0], StandardTableau.initial(lam))
        self.assertEqual(tableaux[-1], StandardTableau.final(lam))
        self.assertEqual(len(set(tableaux)), 5)
        self.assertEqual(len(combinat.standard_tableaux(shape("1|1|1", 3))), 6)
        self.assertEqual(len(combinat.standard_tableaux(shape("0"))), 1)

    def test_squares_of_dimensions(self):
        setting = Setting(2, (0, 1))
        total = sum(
            len(combinat.standard_tableaux(lam)) ** 2 for lam in combinat.multipartitions(setting, 3)
        )
        self.assertEqual(total, 48)

    def test_tableaux_between_initial_and_final(self):
        lam = shape("2,2,1")
        first = StandardTableau.initial(lam)
        last = StandardTableau.final(lam)
        for t in combinat.standard_tableaux(lam):
            self.assertTrue(combinat.tableau_dominates(first, t))
            self.assertTrue(combinat.tableau_dominates(t, last))

    def test_permutations_and_degrees(self):
        setting, lam = level_one(2, "2,2,1")
        degrees = {
            combinat.tableau_permutation(t): combinat.tableau_degree(setting, t)
            for t in combinat.standard_tableaux(lam)
        }
        self.assertEqual(degrees, {(): 2, (2,): 0, (2, 4): -2, (4,): 0, (2, 4, 3): 0})

    def test_final_tableau_of_columns_is_longest(self):
        lam = shape("1|1|1", 3)
        word = combinat.tableau_permutation(StandardTableau.final(lam))
        self.assertEqual(len(word), 3)

    def test_conjugate_tableau(self):
        t = StandardTableau.initial(shape("2,1"))
        self.assertEqual(combinat.conjugate_tableau(t).rows(), [[[1, 3], [2]]])

    def test_tableaux_of_a_residue_word(self):
        setting, lam = level_one(2, "2,2,1")
        for word in {combinat.residue_sequence(setting, t) for t in combinat.standard_tableaux(lam)}:
            self.assertEqual(
                combinat.standard_tableaux_of_word(setting, lam, word),
                [
                    t
                    for t in combinat.standard_tableaux(lam)
                    if combinat.residue_sequence(setting, t) == word
                ],
            )
        self.assertEqual(combinat.standard_tableaux_of_word(setting, lam, (0, 1)), [])
        self.assertEqual(combinat.standard_tableaux_of_word(setting, lam, (1, 1, 1, 0, 0)), [])

    def test_level_eight_weight_space(self):
        setting = Setting(None, (4, 4, 3, 3, 2, 2, 1, 1))
        lam = shape("2|2|1|1|3|3|2|2", 8)
        word = (4, 5, 3, 4, 2, 3, 4, 5, 2, 3, 1, 2, 3, 4, 1, 2)
        tableaux = combinat.standard_tableaux_of_word(setting, lam, word)
        self.assertTrue(tableaux)
        degrees = [combinat.tableau_degree(setting, t) for t in tableaux]
        self.assertEqual(degrees.count(0), 5)

    def test_column_word_tableaux(self):
        setting, lam = level_one(2, "3,2^2,1^2")
        word = (0, 1, 0, 1, 0, 1, 0, 1, 0)
        degrees = sorted(
            combinat.tableau_degree(setting, t)
            for t in combinat.standard_tableaux(lam)
            if combinat.residue_sequence(setting, t) == word
        )
        self.assertEqual(degrees, [-1, 1, 1, 1, 1, 1])


class TestDegreeIdentities(unittest.TestCase):
    def test_degree_plus_codegree_is_defect(self):
        for e in (2, 3):
            setting = Setting(e, (0,))
            for n in range(6):
                for lam in combinat.multipartitions(setting, n):
                    defect = combinat.defect(setting, lam)
                    self.assertGreaterEqual(defect, 0)
                    for t in combinat.standard_tableaux(lam):
                        self.assertEqual(
                            combinat.tableau_degree(setting, t)
                            + combinat.tableau_codegree(setting, t),
                            defect,
                        )

    def test_boundary_counts(self):
        setting = Setting(3, (0, 1))
        for n in range(4):
            for lam in combinat.multipartitions(setting, n):
                for node in lam.addable_nodes():
                    stats = combinat.boundary_stats(setting, lam, node)
                    self.assertEqual(stats.after + 1 + stats.before, stats.total)

    def test_boundary_examples(self):
        setting = Setting(2, (0,))
        stats = combinat.boundary_stats(setting, shape("0"), Node(1, 1, 1))
        self.assertEqual((stats.after, stats.before, stats.total), (0, 0, 1))
        self.assertEqual(combinat.d_after(setting, shape("2"), Node(1, 1, 2)), 1)
        with self.assertRaises(ShapeError):
            combinat.d_after(setting, shape("2"), Node(1, 1, 1))

    def test_beta_and_defect(self):
        Data = namedtuple("Data", "shape beta defect")
        setting = Setting(2, (0,))
        tests = [
            Data("0", {}, 0),
            Data("1,1", {0: 1, 1: 1}, 1),
            Data("2,2,1", {0: 3, 1: 2}, 2),
        ]
        for test in tests:
            root, defect = combinat.beta_and_defect(setting, shape(test.shape))
            self.assertEqual(dict(root.items()), test.beta)
            self.assertEqual(defect, test.defect)

    def test_blocks(self):
        grouped = combinat.blocks(Setting(2, (0,)), 3)
        self.assertEqual(
            sorted(len(members) for members in grouped.values()), [1, 2]
        )


class TestGarnirData(unittest.TestCase):
    def test_belt_and_coset_representatives(self):
        setting = Setting(3, (0,))
        data = combinat.garnir_data(setting, shape("14,6"), Node(1, 1, 4))
        self.assertEqual(data.bricks, 4)
        self.assertEqual(data.a, 3)
        self.assertEqual(data.c, 1)
        self.assertEqual(len(data.belt), 3 * 4)
        self.assertEqual(
            [rep.reduced_word() for rep in data.coset_reps], [(), (3,), (3, 2), (3, 2, 1)]
        )

    def test_infinite_e_has_no_belt(self):
        data = combinat.garnir_data(Setting(None, (0,)), shape("2,2"), Node(1, 1, 1))
        self.assertEqual(data.belt, ())
        self.assertEqual(data.bricks, 0)
        self.assertEqual(len(data.coset_reps), 1)

    def test_belt_size_is_a_multiple_of_e(self):
        data = combinat.garnir_data(Setting(2, (0,)), shape("2,2"), Node(1, 1, 1))
        self.assertEqual(len(data.belt), 2 * data.bricks)
        self.assertEqual(data.bricks, data.a + data.c)

    def test_not_a_garnir_node(self):
        with self.assertRaises(NotGarnirNodeError):
            combinat.garnir_data(Setting(2, (0,)), shape("2,1"), Node(1, 1, 2))


class TestCrystal(unittest.TestCase):
    def test_normal_and_good_nodes(self):
        setting = Setting(2, (0,))
        self.assertEqual(combinat.normal_good_nodes(setting, shape("0"), 0), ([], None))
        normal, good = combinat.normal_good_nodes(setting, shape("1,1"), 1)
        self.assertEqual(normal, [Node(1, 2, 1)])
        self.assertEqual(good, Node(1, 2, 1))
        self.assertEqual(combinat.normal_good_nodes(setting, shape("2"), 1), ([], None))
        normal, good = combinat.normal_good_nodes(setting, shape("2,1"), 1)
        self.assertEqual(normal, [Node(1, 1, 2), Node(1, 2, 1)])
        self.assertEqual(good, Node(1, 1, 2))
        self.assertEqual(
            combinat.kleshchev_set(setting, 3), {shape("2,1"), shape("1,1,1")}
        )

    def test_kleshchev_sets(self):
        setting = Setting(2, (0,))
        self.assertEqual(combinat.kleshchev_set(setting, 0), {shape("0")})
        self.assertEqual(combinat.kleshchev_set(setting, 2), {shape("1,1")})
        for e in (2, 3):
            for n in range(7):
                self.assertEqual(
                    combinat.kleshchev_set(Setting(e, (0,)), n),
                    set(combinat.restricted_partitions(e, n)),
                )

    def test_crystal_edges_end_in_kleshchev_set(self):
        setting = Setting(2, (0, 1))
        targets = {target for _, _, target in combinat.crystal_edges(setting, 3) if target.size == 3}
        self.assertEqual(targets, combinat.kleshchev_set(setting, 3))

    def test_mullineux(self):
        setting = Setting(2, (0,))
        self.assertEqual(combinat.mullineux(setting, shape("0")), shape("0"))
        self.assertEqual(combinat.mullineux(setting, shape("1,1")), shape("1,1"))
        self.assertEqual(combinat.mullineux(Setting(3, (0,)), shape("1")), shape("1"))
        with self.assertRaises(NotKleshchevError):
            combinat.mullineux(setting, shape("2"))

    def test_mullineux_is_an_involution(self):
        setting = Setting(3, (0,))
        for n in range(6):
            for mu in combinat.kleshchev_set(setting, n):
                image = combinat.mullineux(setting, mu)
                self.assertIn(image, combinat.kleshchev_set(setting.conjugate(), n))
                self.assertEqual(combinat.mullineux(setting.conjugate(), image), mu)

    def test_separated_settings(self):
        self.assertTrue(combinat.is_separated(Setting(5, (0,)), 4))
        self.assertFalse(combinat.is_separated(Setting(2, (0,)), 2))
        self.assertFalse(combinat.is_separated(Setting(None, (0, 1)), 2))
        self.assertTrue(combinat.is_separated(Setting(None, (0, 5)), 3))

    def test_one_dimensional_words(self):
        words = combinat.one_dimensional_words(Setting(3, (0,)), 3)
        self.assertEqual(words, [(0, 1, 2), (0, 2, 1)])


# -fin-
