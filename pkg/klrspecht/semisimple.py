"""Closed-form modules: seminormal representations and the nil-Hecke module.

Both are used on their own and as oracles for the straightening engine in
`spechtmod`.

"""
from __future__ import absolute_import

import itertools
import math

from collections import namedtuple

import numpy as np
import sympy

from .combinat import (
    Multipartition,
    Setting,
    StandardTableau,
    is_kleshchev,
    multipartitions,
    one_dimensional_words,
    require_separated,
    residue_sequence,
    standard_tableaux,
)
from .logger import user_logger
from .spechtmod import SpechtElement, get_module, simple_character


NilHeckeSign = namedtuple("NilHeckeSign", "n sign matches_half_n_n_minus_1 matches_n_n_minus_2")
NilHeckeSign.__doc__ = """Sign of the nil-Hecke Gram matrix.

``matches_n_n_minus_2`` is None when n(n-2)/2 is not an integer.
"""

OneDimensionalRow = namedtuple("OneDimensionalRow", "shape word dimension")

Mismatch = namedtuple("Mismatch", "shape tableau generator expected actual")


def _neighbours(setting, i):
    return {setting.residue(i - 1), setting.residue(i + 1)}


def _admissible(setting, word):
    """Membership test for separated residue words, checked on the last letter."""
    r = len(word) - 1
    i = word[r]
    if r == 0:
        return setting.lam(i) != 0
    nbrs = _neighbours(setting, i)
    if setting.lam(i) == 0 and not nbrs & set(word[:r]):
        return False
    for s in range(r):
        if word[s] == i and not nbrs <= set(word[s + 1 : r]):
            return False
    return True


def separated_residue_sequences(setting, n):
    """I^n for a separated setting, by the word conditions and by tableaux.

    Raises
    ------
    SettingError
        If the setting is not separated for n
    RuntimeError
        If the two descriptions disagree

    """
    require_separated(setting, n)
    words = {()}
    for _ in range(n):
        words = {
            word + (i,)
            for word in words
            for i in setting.residues(n)
            if _admissible(setting, word + (i,))
        }
    from_tableaux = {
        residue_sequence(setting, t)
        for shape in multipartitions(setting, n)
        for t in standard_tableaux(shape)
    }
    if words != from_tableaux:
        raise RuntimeError(
            "Residue word conditions give {} words, tableaux give {}".format(
                len(words), len(from_tableaux)
            )
        )
    return words


class SeminormalRepresentation(object):
    """Generator matrices on the direct sum of all S^lambda, lambda of size n.

    Matrices act on row vectors from the right, so the product AB is the
    action of a then b.

    """

    def __init__(self, setting, n):
        require_separated(setting, n)
        self.setting = setting
        self.n = n
        self.shapes = multipartitions(setting, n)
        self.basis = [t for shape in self.shapes for t in standard_tableaux(shape)]
        self.index = {t: k for k, t in enumerate(self.basis)}
        self.words = [residue_sequence(setting, t) for t in self.basis]

    @property
    def dimension(self):
        return len(self.basis)

    def zeros(self):
        return np.zeros((self.dimension, self.dimension), dtype=object)

    def identity(self):
        matrix = self.zeros()
        for k in range(self.dimension):
            matrix[k, k] = 1
        return matrix

    def e(self, word):
        matrix = self.zeros()
        for k, w in enumerate(self.words):
            if w == tuple(word):
                matrix[k, k] = 1
        return matrix

    def y(self, r):
        return self.zeros()

    def psi(self, r):
        matrix = self.zeros()
        for t, k in self.index.items():
            swapped = t.swap(r)
            if swapped.is_standard():
                matrix[k, self.index[StandardTableau(t.shape, swapped.values)]] = 1
        return matrix

    def psi_word(self, word):
        matrix = self.identity()
        for r in word:
            matrix = matrix.dot(self.psi(r))
        return matrix

    def weights(self):
        return sorted(set(self.words))

    def check_relations(self):
        """Relations of the degree zero presentation, as (name, passed) pairs."""
        checks = []
        total = self.zeros()
        for word in self.weights():
            total = total + self.e(word)
        checks.append(("idempotents sum to one", _same(total, self.identity())))
        for a, b in itertools.product(self.weights(), repeat=2):
            product = self.e(a).dot(self.e(b))
            expected = self.e(a) if a == b else self.zeros()
            if not _same(product, expected):
                checks.append(("orthogonal idempotents {} {}".format(a, b), False))
        for r in range(1, self.n):
            checks.extend(self._psi_checks(r))
        return checks

    def _psi_checks(self, r):
        setting = self.setting
        psi = self.psi(r)
        checks = []
        for word in self.weights():
            e_i = self.e(word)
            swapped = list(word)
            swapped[r - 1], swapped[r] = swapped[r], swapped[r - 1]
            checks.append(
                ("psi_{} e(i) = e(s_r i) psi_{}".format(r, r),
                 _same(psi.dot(e_i), self.e(swapped).dot(psi)))
            )
            a, b = word[r - 1], word[r]
            adjacent = setting.arrow(a, b) or setting.arrow(b, a)
            expected = self.zeros() if (a == b or adjacent) else e_i
            checks.append(("psi_{}^2 e(i)".format(r), _same(psi.dot(psi).dot(e_i), expected)))
            if r + 1 < self.n:
                nxt = self.psi(r + 1)
                braid = psi.dot(nxt).dot(psi) - nxt.dot(psi).dot(nxt)
                c = word[r + 1]
                expected = self.zeros()
                if c == a and setting.arrow(a, b):
                    expected = -e_i
                elif c == a and setting.arrow(b, a):
                    expected = e_i
                checks.append(("braid at {}".format(r), _same(braid.dot(e_i), expected)))
        for s in range(r + 2, self.n):
            other = self.psi(s)
            checks.append(
                ("psi_{} psi_{} commute".format(r, s), _same(psi.dot(other), other.dot(psi)))
            )
        return checks


def _same(a, b):
    return bool(np.all(a == b))


def seminormal_matrices(setting, n):
    return SeminormalRepresentation(setting, n)


def matrix_units(setting, n):
    """e_st = psi_{d(s)}^* e(i^lambda) psi_{d(t)} for s, t of a common shape."""
    rep = SeminormalRepresentation(setting, n)
    units = {}
    for shape in rep.shapes:
        basis = standard_tableaux(shape)
        idempotent = rep.e(residue_sequence(setting, basis[0]))
        for s, t in itertools.product(basis, repeat=2):
            down = rep.psi_word(reversed(s.permutation().reduced_word()))
            up = rep.psi_word(t.permutation().reduced_word())
            units[s, t] = down.dot(idempotent).dot(up)
    return rep, units


def check_matrix_units(rep, units):
    """Product law e_st e_uv = delta_tu e_sv and the dimension count."""
    ok = True
    for (s, t), unit in units.items():
        if unit[rep.index[s], rep.index[t]] != 1 or sum(unit.flat) != 1:
            ok = False
    for (s, t), (u, v) in itertools.product(units, repeat=2):
        product = units[s, t].dot(units[u, v])
        expected = units[s, v] if t == u and (s, v) in units else rep.zeros()
        if not _same(product, expected):
            ok = False
    expected_dim = rep.setting.level ** rep.n * math.factorial(rep.n)
    return ok and len(units) == expected_dim


def compare_with_engine(setting, n):
    """Mismatches between the straightening engine and the seminormal action."""
    rep = SeminormalRepresentation(setting, n)
    mismatches = []
    for shape in rep.shapes:
        module = get_module(setting, shape)
        for t in module.basis:
            v = module.vector(t)
            for r in range(1, n):
                swapped = t.swap(r)
                expected = SpechtElement()
                if swapped.is_standard():
                    expected[StandardTableau(shape, swapped.values)] = 1
                actual = module.act_psi(v, r)
                if actual != expected:
                    mismatches.append(Mismatch(shape, t, "psi{}".format(r), expected, actual))
            for k in range(1, n + 1):
                actual = module.act_y(v, k)
                if actual:
                    mismatches.append(Mismatch(shape, t, "y{}".format(k), {}, actual))
    return mismatches


# nil-Hecke


def nilhecke_setting(n, e=None):
    """Lambda = n Lambda_0: charge (0, ..., 0) of level n."""
    return Setting(e, (0,) * n)


def nilhecke_shape(n):
    return Multipartition([(1,)] * n)


class NilHeckeModule(object):
    """Schubert-basis action on S^(1|...|1) for Lambda = n Lambda_i."""

    def __init__(self, n, e=None):
        self.n = n
        self.setting = nilhecke_setting(n, e)
        self.shape = nilhecke_shape(n)
        self.basis = standard_tableaux(self.shape)

    def degree(self, t):
        return self.n * (self.n - 1) // 2 - 2 * t.permutation().length()

    def _tableau(self, perm):
        return StandardTableau(self.shape, perm.images)

    def act_psi(self, x, r):
        result = SpechtElement()
        for t, c in x.items():
            perm = t.permutation()
            if not perm.is_right_descent(r):
                result.add_scaled({self._tableau(perm.times_simple(r)): c}, 1)
        return result

    def act_y(self, x, k):
        """Signed sum over the covering transpositions swapping k with another entry."""
        result = SpechtElement()
        for v, c in x.items():
            perm = v.permutation()
            length = perm.length()
            for other in range(1, self.n + 1):
                if other == k:
                    continue
                u = perm.swap_values(other, k)
                if u.length() != length - 1:
                    continue
                sign = 1 if other < k else -1
                result.add_scaled({self._tableau(u): c}, sign)
        return result


def nilhecke_module(n, e=None):
    return NilHeckeModule(n, e)


class CoinvariantAlgebra(object):
    """Z[x_1..x_n] modulo positive degree symmetric polynomials.

    y_r acts by x_r and psi_r by (f - s_r f) / (x_(r+1) - x_r), the sign
    being fixed by psi_r y_(r+1) = y_r psi_r + 1.

    """

    def __init__(self, n):
        self.n = n
        self.xs = sympy.symbols("x1:{}".format(n + 1))
        generators = [
            sum(sympy.Mul(*combo) for combo in itertools.combinations(self.xs, k))
            for k in range(1, n + 1)
        ]
        self.groebner = sympy.groebner(generators, *reversed(self.xs), order="lex")
        self.top = sympy.Mul(*[x ** (n - k) for k, x in enumerate(self.xs, 1)])

    def normal_form(self, f):
        f = sympy.expand(f)
        if f == 0:
            return sympy.Integer(0)
        return sympy.expand(self.groebner.reduce(f)[1])

    def divided_difference(self, f, r):
        x, y = self.xs[r - 1], self.xs[r]
        numerator = sympy.expand(f - f.subs({x: y, y: x}, simultaneous=True))
        if numerator == 0:
            return sympy.Integer(0)
        quotient, remainder = sympy.div(numerator, y - x, *self.xs)
        if remainder != 0:
            raise ArithmeticError("Divided difference of {} is not exact".format(f))
        return sympy.expand(quotient)

    def act_psi(self, f, r):
        return self.divided_difference(f, r)

    def act_y(self, f, k):
        return sympy.expand(self.xs[k - 1] * f)

    def schubert_image(self, t, convention="lexmin"):
        """Image of psi_t: x^delta under psi along the word of d(t)."""
        f = self.top
        for r in t.permutation().reduced_word(convention):
            f = self.act_psi(f, r)
        return f

    def image(self, x):
        return sympy.expand(sum((c * self.schubert_image(t) for t, c in x.items()), sympy.Integer(0)))


def compare_nilhecke(n, e=None, with_coinvariants=True):
    """Mismatches between the engine, the Schubert action and the coinvariant model."""
    schubert = NilHeckeModule(n, e)
    module = get_module(schubert.setting, schubert.shape)
    algebra = CoinvariantAlgebra(n) if with_coinvariants else None
    mismatches = []
    generators = [("psi", r) for r in range(1, n)] + [("y", k) for k in range(1, n + 1)]
    for t in module.basis:
        v = module.vector(t)
        for kind, index in generators:
            label = "{}{}".format(kind, index)
            actual = getattr(module, "act_" + kind)(v, index)
            expected = getattr(schubert, "act_" + kind)(v, index)
            if actual != expected:
                mismatches.append(Mismatch(schubert.shape, t, label, expected, actual))
            if algebra is None:
                continue
            lhs = algebra.normal_form(algebra.image(actual))
            rhs = algebra.normal_form(
                getattr(algebra, "act_" + kind)(algebra.schubert_image(t), index)
            )
            if sympy.expand(lhs - rhs) != 0:
                mismatches.append(Mismatch(schubert.shape, t, label + " coinvariant", rhs, lhs))
    user_logger.debug("DEBUG: nil-Hecke n={} mismatches {}".format(n, len(mismatches)))
    return mismatches


def nilhecke_gram_sign(n, e=None):
    """Common sign of the nonzero nil-Hecke Gram entries (0 if there is none)."""
    setting = nilhecke_setting(n, e)
    gram = get_module(setting, nilhecke_shape(n)).gram_matrix()
    values = set()
    for row in gram.tolist():
        nonzero = [x for x in row if x]
        if len(nonzero) != 1:
            values.add(0)
        values.update(nonzero)
    sign = values.pop() if len(values) == 1 else 0
    half = n * (n - 1) // 2
    return NilHeckeSign(
        n=n,
        sign=sign,
        matches_half_n_n_minus_1=sign == (-1) ** half,
        matches_n_n_minus_2=sign == (-1) ** (n * (n - 2) // 2) if n * (n - 2) % 2 == 0 else None,
    )


def one_dimensional_check(setting, n, characteristic=0):
    """One dimensional simples and whether their words are exactly i^+ and i^-."""
    rows = []
    for shape in multipartitions(setting, n):
        if not is_kleshchev(setting, shape):
            continue
        character = simple_character(setting, shape, characteristic)
        dimension = character.dimension()
        if dimension == 1:
            rows.append(OneDimensionalRow(shape, list(character)[0], dimension))
    realised = {row.word for row in rows}
    return rows, realised == set(one_dimensional_words(setting, n))


# -fin-
