"""Graded Specht modules presented by homogeneous Garnir relations.

A `SpechtModule` rewrites v_{t^lambda} acted on by words in the KLR
generators into the standard basis {v_t}, where v_t is v_{t^lambda} acted on
by psi along the canonical reduced word of d(t). From this it extracts the
homogeneous bilinear form, Gram matrices and graded characters.

"""
from __future__ import division
from __future__ import absolute_import

import functools
import itertools
import sys

from collections import defaultdict, namedtuple

from .combinat import (
    Node,
    StandardTableau,
    Tableau,
    d_after,
    d_before,
    garnir_data,
    residue_sequence,
    standard_tableaux,
    standard_tableaux_of_word,
    tableau_codegree,
    tableau_degree,
)
from .exactalg import ZERO, IntMatrix, LaurentPoly, Permutation
from .logger import user_logger
from .utility import ShapeError, StraighteningError


_MIN_RECURSION_LIMIT = 10000

ExponentData = namedtuple(
    "ExponentData", "degree_exponents codegree_exponents initial_word final_word"
)

Generator = namedtuple("Generator", "kind index")


def e_gen(word):
    return Generator("e", tuple(word))


def y_gen(k):
    return Generator("y", k)


def psi_gen(r):
    return Generator("psi", r)


class SpechtElement(dict):
    """Finite integer combination of standard tableaux."""

    def add_scaled(self, other, scalar=1):
        """self += scalar * other, in place."""
        if not scalar:
            return self
        for t, c in other.items():
            value = self.get(t, 0) + scalar * c
            if value:
                self[t] = value
            else:
                self.pop(t, None)
        return self

    def copy(self):
        return SpechtElement(self)

    def __add__(self, other):
        return self.copy().add_scaled(other, 1)

    def __sub__(self, other):
        return self.copy().add_scaled(other, -1)

    def __neg__(self):
        return SpechtElement({t: -c for t, c in self.items()})

    def __mul__(self, scalar):
        if not scalar:
            return SpechtElement()
        return SpechtElement({t: scalar * c for t, c in self.items()})

    __rmul__ = __mul__

    def reduce_mod(self, p):
        return SpechtElement({t: c % p for t, c in self.items() if c % p})

    def is_zero(self):
        return not self

    def to_json(self):
        return [{"tableau": t.rows(), "coefficient": c} for t, c in sorted(
            self.items(), key=lambda item: item[0].values
        )]


class Character(dict):
    """Graded character: residue word -> LaurentPoly."""

    def add(self, word, poly):
        value = self.get(word, ZERO) + poly
        if value.is_zero():
            self.pop(word, None)
        else:
            self[word] = value
        return self

    def __add__(self, other):
        result = Character(self)
        for word, poly in other.items():
            result.add(word, poly)
        return result

    def __sub__(self, other):
        return self + other.scale(LaurentPoly(-1))

    def scale(self, poly):
        result = Character()
        for word, value in self.items():
            result.add(word, value * poly)
        return result

    def bar(self):
        return Character({word: poly.bar() for word, poly in self.items()})

    def is_bar_invariant(self):
        return all(poly.is_bar_invariant() for poly in self.values())

    def eval1(self):
        return {word: poly.eval1() for word, poly in self.items()}

    def ddq1(self):
        return {word: poly.ddq1() for word, poly in self.items()}

    def dimension(self):
        return sum(poly.eval1() for poly in self.values())

    def total(self):
        """Graded dimension summed over all residue words."""
        return sum(self.values(), ZERO)

    def to_json(self, setting):
        return {setting.format_word(word): poly.to_json() for word, poly in sorted(self.items())}


class GramMatrix(IntMatrix):
    """Gram matrix of the bilinear form on a Specht module.

    Rows and columns are standard tableaux in the basis order; ``words``
    and ``degrees`` hold the (residue word, degree) label of each index.

    """

    def __init__(self, entries, tableaux, words, degrees):
        labels = [str(t) for t in tableaux]
        super(GramMatrix, self).__init__(entries, labels, labels)
        self.tableaux = list(tableaux)
        self.words = list(words)
        self.degrees = list(degrees)

    def submatrix(self, row_indices, col_indices):
        if list(row_indices) == list(col_indices):
            idx = list(row_indices)
            return GramMatrix(
                [[self.entries[i, j] for j in idx] for i in idx],
                [self.tableaux[i] for i in idx],
                [self.words[i] for i in idx],
                [self.degrees[i] for i in idx],
            )
        return IntMatrix(
            [[self.entries[i, j] for j in col_indices] for i in row_indices],
            [self.rows[i] for i in row_indices],
            [self.cols[j] for j in col_indices],
        )

    def transpose(self):
        return GramMatrix(self.entries.T.tolist(), self.tableaux, self.words, self.degrees)

    def block(self, word):
        """Restriction to the weight space of a residue word."""
        idx = [k for k, w in enumerate(self.words) if w == tuple(word)]
        return self.submatrix(idx, idx)

    def block_support_ok(self):
        """True when nonzero entries pair equal words and opposite degrees."""
        for i, j in itertools.product(range(self.shape[0]), repeat=2):
            if self.entries[i, j] and (
                self.words[i] != self.words[j] or self.degrees[i] + self.degrees[j] != 0
            ):
                return False
        return True

    def to_json(self):
        data = super(GramMatrix, self).to_json()
        data["degrees"] = list(self.degrees)
        return data


class _LazyTable(dict):
    """Per-tableau data computed on first lookup."""

    def __init__(self, compute):
        super(_LazyTable, self).__init__()
        self._compute = compute

    def __missing__(self, key):
        value = self[key] = self._compute(key)
        return value


def _memoized(method):
    """Cache on the positional key and count nesting against the depth guard."""
    name = method.__name__

    @functools.wraps(method)
    def wrapper(self, *key):
        cache = self._caches[name]
        if key in cache:
            return cache[key]
        self._depth += 1
        try:
            if self._depth > self.depth_guard:
                raise StraighteningError(
                    "Depth guard {} exceeded in {}{} for {}".format(
                        self.depth_guard, name, key, self.shape
                    )
                )
            value = method(self, *key)
        finally:
            self._depth -= 1
        cache[key] = value
        return value

    return wrapper


class SpechtModule(object):
    """Straightening engine for the graded Specht module S^shape.

    Parameters
    ----------
    setting: combinat.Setting
    shape: combinat.Multipartition
    convention: str
        Reduced word convention for psi_{d(t)}, "lexmin" or "lexmax"
    depth_guard: int, optional
        Maximum nesting of rewrite steps, 10 n l(w_0) by default

    """

    def __init__(self, setting, shape, convention="lexmin", depth_guard=None):
        if shape.level != setting.level:
            raise ShapeError("{} does not have level {}".format(shape, setting.level))
        self.setting = setting
        self.shape = shape
        self.n = shape.size
        self.convention = convention
        self._basis = None
        self.initial = StandardTableau.initial(shape)
        self.initial_word = residue_sequence(setting, self.initial)
        self._words = _LazyTable(lambda t: t.permutation().reduced_word(convention))
        self._by_perm = _LazyTable(lambda perm: StandardTableau(shape, perm.images))
        self._residues = _LazyTable(lambda t: residue_sequence(setting, t))
        self._degrees = _LazyTable(lambda t: tableau_degree(setting, t))
        nodes = shape.nodes()
        self._row_pairs = [
            a
            for a in range(1, self.n)
            if nodes[a - 1][:2] == nodes[a][:2]
        ]
        longest = self.n * (self.n - 1) // 2
        self.depth_guard = depth_guard or 10 * max(self.n, 1) * max(longest, 1)
        self._depth = 0
        self._caches = defaultdict(dict)
        if sys.getrecursionlimit() < _MIN_RECURSION_LIMIT:
            sys.setrecursionlimit(_MIN_RECURSION_LIMIT)

    @property
    def basis(self):
        """Std(shape) in the basis order, listed on first use."""
        if self._basis is None:
            self._basis = standard_tableaux(self.shape)
        return self._basis

    def weight_basis(self, word):
        return standard_tableaux_of_word(self.setting, self.shape, word)

    def __repr__(self):
        return "SpechtModule({}, {!r}, {})".format(self.setting, str(self.shape), self.convention)

    # basis data

    def word(self, t):
        """Canonical reduced word of d(t)."""
        return self._words[t]

    def residues(self, t):
        return self._residues[t]

    def degree(self, t):
        return self._degrees[t]

    def vector(self, t):
        return SpechtElement({t: 1})

    def cache_sizes(self):
        return {name: len(cache) for name, cache in self._caches.items()}

    def _canonical(self, perm):
        return perm.reduced_word(self.convention)

    # generator actions

    def act(self, x, g):
        """Right action of a generator on an element."""
        if g.kind == "e":
            return self.act_e(x, g.index)
        if g.kind == "y":
            return self.act_y(x, g.index)
        if g.kind == "psi":
            return self.act_psi(x, g.index)
        raise ValueError("Unknown generator {!r}".format(g))

    def act_e(self, x, word):
        word = tuple(word)
        return SpechtElement({t: c for t, c in x.items() if self._residues[t] == word})

    def act_psi(self, x, r):
        if not 1 <= r < self.n:
            raise IndexError("psi_{} is not a generator for n={}".format(r, self.n))
        result = SpechtElement()
        for t, c in x.items():
            result.add_scaled(self._psi_basis(t, r), c)
        return result

    def act_y(self, x, k):
        if not 1 <= k <= self.n:
            raise IndexError("y_{} is not a generator for n={}".format(k, self.n))
        result = SpechtElement()
        for t, c in x.items():
            result.add_scaled(self._y_basis(t, k), c)
        return result

    def act_word(self, x, word):
        for r in word:
            x = self.act_psi(x, r)
        return x

    def project(self, x, word):
        return self.act_e(x, word)

    @_memoized
    def _psi_basis(self, t, r):
        perm = t.permutation()
        if not perm.is_right_descent(r):
            return self._reduced(self._words[t] + (r,))
        u = self._by_perm[perm.times_simple(r)]
        result = self._quadratic(u, r)
        # v_t = v_u psi_r minus the braid correction to the canonical word of t
        correction = self._to_canonical(self._words[u] + (r,))
        result.add_scaled(self.act_psi(correction, r), -1)
        return result

    def _quadratic(self, u, r):
        """v_u psi_r psi_r."""
        j = self._residues[u]
        a, b = j[r - 1], j[r]
        v = self.vector(u)
        if a == b:
            return SpechtElement()
        if self.setting.e == 2:
            diff = self.act_y(v, r) - self.act_y(v, r + 1)
            return -(self.act_y(diff, r) - self.act_y(diff, r + 1))
        if self.setting.arrow(a, b):
            return self.act_y(v, r) - self.act_y(v, r + 1)
        if self.setting.arrow(b, a):
            return self.act_y(v, r + 1) - self.act_y(v, r)
        return v

    @_memoized
    def _y_basis(self, t, k):
        if t == self.initial:
            return SpechtElement()
        q = self._words[t][-1]
        u = self._by_perm[t.permutation().times_simple(q)]
        v = self.vector(u)
        j = self._residues[u]
        delta = 1 if j[q - 1] == j[q] else 0
        if k == q + 1:
            result = self.act_psi(self.act_y(v, q), q)
            result.add_scaled(v, delta)
        elif k == q:
            result = self.act_psi(self.act_y(v, q + 1), q)
            result.add_scaled(v, -delta)
        else:
            result = self.act_psi(self.act_y(v, k), q)
        return result

    def _braid_correction(self, x, m):
        """x (psi_m psi_(m+1) psi_m - psi_(m+1) psi_m psi_(m+1))."""
        result = SpechtElement()
        for t, c in x.items():
            j = self._residues[t]
            if j[m - 1] != j[m + 1] or j[m - 1] == j[m]:
                continue
            v = self.vector(t)
            if self.setting.e == 2:
                poly = self.act_y(v, m) + self.act_y(v, m + 2)
                poly.add_scaled(self.act_y(v, m + 1), -2)
                result.add_scaled(poly, c)
            elif self.setting.arrow(j[m - 1], j[m]):
                result.add_scaled(v, -c)
            elif self.setting.arrow(j[m], j[m - 1]):
                result.add_scaled(v, c)
        return result

    @_memoized
    def _reduced(self, word):
        """v_{t^lambda} psi along a reduced word, in the standard basis."""
        perm = Permutation.from_word(self.n, word)
        if perm.length() != len(word):
            raise StraighteningError("{} is not a reduced word".format(word))
        tableau = Tableau(self.shape, perm.images)
        if tableau.is_standard():
            result = self.vector(self._by_perm[perm])
            if word != self._canonical(perm):
                result.add_scaled(self._to_canonical(word), 1)
            return result

        for a in self._row_pairs:
            if perm.is_left_descent(a):
                # psi_a kills v_{t^lambda} when a and a+1 share a row
                shorter = self._canonical(perm.simple_times(a))
                result = SpechtElement(self._to_canonical(word))
                result.add_scaled(self._to_canonical((a,) + shorter), -1)
                return result

        node = self._first_garnir_violation(tableau)
        user_logger.trace("TRACE: Garnir rewrite of {} at {}".format(tableau, node))
        garnir_perm, garnir_word = self._garnir_permutation(node)
        rest = garnir_perm.inverse() * perm
        if garnir_perm.length() + rest.length() != perm.length():
            raise StraighteningError(
                "Garnir tableau at {} is not a prefix of {}".format(node, word)
            )
        rest_word = self._canonical(rest)
        result = self.act_word(self._garnir_element(node), rest_word)
        result.add_scaled(self._to_canonical(word), 1)
        result.add_scaled(self._to_canonical(garnir_word + rest_word), -1)
        return result

    def _first_garnir_violation(self, tableau):
        for node in self.shape.nodes():
            below = Node(node.comp, node.row + 1, node.col)
            if below in self.shape and tableau.value(node) > tableau.value(below):
                return node
        raise StraighteningError("{} is row standard and column standard".format(tableau))

    def _garnir_permutation(self, node):
        data = garnir_data(self.setting, self.shape, node)
        perm = data.garnir_tableau.permutation()
        return perm, self._canonical(perm)

    @_memoized
    def _to_canonical(self, word):
        """v psi along a reduced word minus v psi along the canonical word."""
        if not word:
            return SpechtElement()
        perm = Permutation.from_word(self.n, word)
        canon = self._canonical(perm)
        if word == canon:
            return SpechtElement()
        r, b = canon[-1], word[-1]
        if b == r:
            return self.act_psi(self._to_canonical(word[:-1]), r)
        if abs(r - b) > 1:
            z = perm.times_simple(b).times_simple(r)
            z_word = self._canonical(z)
            result = self.act_psi(self._to_canonical(z_word + (b,)), r)
            inner = self._to_canonical(word[:-1]) - self._to_canonical(z_word + (r,))
            result.add_scaled(self.act_psi(inner, b), 1)
            return result
        z = perm.times_simple(b).times_simple(r).times_simple(b)
        z_word = self._canonical(z)
        result = self.act_psi(self._to_canonical(z_word + (r, b)), r)
        inner = self._to_canonical(word[:-1]) - self._to_canonical(z_word + (b, r))
        result.add_scaled(self.act_psi(inner, b), 1)
        m = min(r, b)
        sign = 1 if b == m else -1
        result.add_scaled(self._braid_correction(self._reduced(z_word), m), sign)
        return result

    @_memoized
    def _word_value(self, word):
        """v_{t^lambda} psi_{r_1} ... psi_{r_k} for an arbitrary word."""
        if not word:
            return self.vector(self.initial)
        return self.act_psi(self._word_value(word[:-1]), word[-1])

    @_memoized
    def _garnir_element(self, node):
        """v_{t^lambda} psi along the canonical word of the Garnir tableau at node."""
        data = garnir_data(self.setting, self.shape, node)
        if len(data.coset_reps) == 1:
            return SpechtElement()
        prefix = self._canonical(data.tableau.permutation())
        garnir_perm, _ = self._garnir_permutation(node)
        weight = residue_sequence(self.setting, data.tableau)
        total = SpechtElement()
        top_word = None
        last = len(data.coset_reps) - 1
        for index, rep in enumerate(data.coset_reps):
            letters = rep.reduced_word(self.convention)
            for mask in itertools.product((False, True), repeat=len(letters)):
                term = prefix + tuple(
                    itertools.chain.from_iterable(
                        data.brick_words[letter - 1]
                        for letter, chosen in zip(letters, mask)
                        if chosen
                    )
                )
                if index == last and all(mask):
                    top_word = term
                    continue
                total.add_scaled(self._word_value(term), 1)
        total = self.project(total, weight)
        top = Permutation.from_word(self.n, top_word)
        if top != garnir_perm or len(top_word) != garnir_perm.length():
            raise StraighteningError("Garnir top term at {} is inconsistent".format(node))
        user_logger.trace(
            "TRACE: Garnir element at {} has {} terms".format(node, len(total))
        )
        result = -total
        result.add_scaled(self._to_canonical(top_word), -1)
        return result

    # bilinear form

    def exponents(self):
        return exponent_sequences(self.setting, self.shape)

    def inner_product(self, s, t, check_residual=True):
        """<psi_s, psi_t>: coefficient of v_{t^lambda} in v_s psi_{d(t)}^* y^lambda."""
        x = self.vector(s)
        for r in reversed(self._words[t]):
            x = self.act_psi(x, r)
        for k, power in enumerate(self.exponents().degree_exponents, 1):
            for _ in range(power):
                x = self.act_y(x, k)
        x = self.project(x, self.initial_word)
        value = x.pop(self.initial, 0)
        if check_residual and x:
            raise StraighteningError(
                "Form of {} and {} left residual {}".format(s, t, dict(x))
            )
        return value

    def gram_matrix(self, word=None, full=False):
        """Gram matrix on the whole basis, or on the weight space of word."""
        basis = self.basis if word is None else self.weight_basis(word)
        entries = [[0] * len(basis) for _ in basis]
        for i, s in enumerate(basis):
            for j, t in enumerate(basis):
                if j < i:
                    entries[i][j] = entries[j][i]
                    continue
                matching = (
                    self._residues[s] == self._residues[t]
                    and self._degrees[s] + self._degrees[t] == 0
                )
                if matching:
                    entries[i][j] = self.inner_product(s, t)
                elif full:
                    entries[i][j] = self.inner_product(s, t, check_residual=False)
        user_logger.debug("DEBUG: {} caches {}".format(self, self.cache_sizes()))
        return GramMatrix(
            entries,
            basis,
            [self._residues[t] for t in basis],
            [self._degrees[t] for t in basis],
        )

    def nilpotency_index(self, r):
        """Smallest N with v y_r^N = 0 for every basis vector."""
        degrees = [self.degree(t) for t in self.basis]
        bound = (max(degrees) - min(degrees)) // 2 + 1
        worst = 0
        for t in self.basis:
            x = self.vector(t)
            steps = 0
            while x:
                if steps > bound:
                    raise StraighteningError("y_{} is not nilpotent on {}".format(r, t))
                x = self.act_y(x, r)
                steps += 1
            worst = max(worst, steps)
        return worst


_MODULES = {}


def get_module(setting, shape, convention="lexmin", depth_guard=None):
    """Shared SpechtModule instance per (setting, shape, convention)."""
    key = (setting, shape, convention, depth_guard)
    if key not in _MODULES:
        _MODULES[key] = SpechtModule(setting, shape, convention, depth_guard)
    return _MODULES[key]


def clear_modules():
    """Drop every shared SpechtModule and its rewrite caches."""
    user_logger.debug("DEBUG: dropping {} shared modules".format(len(_MODULES)))
    _MODULES.clear()


def exponent_sequences(setting, shape):
    """Exponents of y^mu and y_mu with the residue words of t^mu and t_mu."""
    initial = StandardTableau.initial(shape)
    final = StandardTableau.final(shape)
    degree_exponents = tuple(
        d_after(setting, initial.restrict_shape(k), initial.node_of(k))
        for k in range(1, shape.size + 1)
    )
    codegree_exponents = tuple(
        _d_before_step(setting, final, k) for k in range(1, shape.size + 1)
    )
    return ExponentData(
        degree_exponents=degree_exponents,
        codegree_exponents=codegree_exponents,
        initial_word=residue_sequence(setting, initial),
        final_word=residue_sequence(setting, final),
    )


def _d_before_step(setting, t, k):
    return d_before(setting, t.restrict_shape(k), t.node_of(k))


def act(setting, shape, x, g, convention="lexmin", depth_guard=None):
    """Right action of a generator on an element of S^shape."""
    return get_module(setting, shape, convention, depth_guard).act(x, g)


def gram_matrix(setting, shape, characteristic=0, convention="lexmin", depth_guard=None):
    """Integer Gram matrix of S^shape; characteristic only selects the reduction."""
    gram = get_module(setting, shape, convention, depth_guard).gram_matrix()
    if characteristic:
        return GramMatrix(
            [[int(x) % characteristic for x in row] for row in gram.tolist()],
            gram.tableaux,
            gram.words,
            gram.degrees,
        )
    return gram


def gram_block(setting, shape, word, convention="lexmin", depth_guard=None):
    return get_module(setting, shape, convention, depth_guard).gram_matrix(word=word)


def specht_character(setting, shape):
    """sum over Std(shape) of q^deg(t) i^t."""
    character = Character()
    for t in standard_tableaux(shape):
        character.add(residue_sequence(setting, t), LaurentPoly.monomial(tableau_degree(setting, t)))
    return character


def dual_specht_character(setting, shape):
    """sum over Std(shape) of q^codeg(t) i^t."""
    character = Character()
    for t in standard_tableaux(shape):
        character.add(
            residue_sequence(setting, t), LaurentPoly.monomial(tableau_codegree(setting, t))
        )
    return character


def restricted_character(setting, shape, i):
    """Part of Ch S^shape with last residue i, with that residue dropped."""
    character = Character()
    for word, poly in specht_character(setting, shape).items():
        if word and word[-1] == setting.residue(i):
            character.add(word[:-1], poly)
    return character


def simple_character(setting, shape, characteristic=0, gram=None, **engine):
    """Graded character of D^shape over a field of the given characteristic.

    The graded dimension of the i-weight space in degree d is the rank of
    the Gram block pairing degree d rows with degree -d columns.

    """
    if gram is None:
        gram = get_module(setting, shape, **engine).gram_matrix()
    character = Character()
    labels = sorted(set(zip(gram.words, gram.degrees)))
    for word, degree in labels:
        rows = [k for k, label in enumerate(zip(gram.words, gram.degrees)) if label == (word, degree)]
        cols = [
            k for k, label in enumerate(zip(gram.words, gram.degrees)) if label == (word, -degree)
        ]
        if not cols:
            continue
        block = [[gram.entries[i, j] for j in cols] for i in rows]
        dim = IntMatrix(block, rows, cols).rank(characteristic)
        if dim:
            character.add(word, LaurentPoly.monomial(degree, dim))
    return character


# -fin-
