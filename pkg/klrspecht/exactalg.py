"""Exact arithmetic: Laurent polynomials, permutations and integer matrices."""
from __future__ import division
from __future__ import absolute_import

import functools
import itertools
import math

import numpy as np


_CONVENTIONS = ("lexmin", "lexmax")


def _superscript(exponent):
    if exponent == 1:
        return "q"
    return "q^{}".format(exponent)


class LaurentPoly(object):
    """Integer Laurent polynomial in q.

    Stored as a mapping exponent -> coefficient without zero coefficients.
    Instances are immutable and hashable.

    Parameters
    ----------
    terms: dict or int, optional
        Exponent to coefficient mapping, or an integer constant

    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, LaurentPoly):
            terms = terms._terms
        elif not isinstance(terms, dict):
            terms = {0: int(terms)}
        self._terms = {int(k): int(c) for k, c in terms.items() if c != 0}

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """Coefficient times q^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def from_json(cls, data):
        """Inverse of `to_json`."""
        return cls({int(k): c for k, c in data.items()})

    def to_json(self):
        """Exponent -> coefficient association with string keys."""
        return {str(k): self._terms[k] for k in sorted(self._terms)}

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, exponent):
        return self._terms.get(exponent, 0)

    def min_degree(self):
        return min(self._terms) if self._terms else None

    def max_degree(self):
        return max(self._terms) if self._terms else None

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "LaurentPoly({})".format(str(self))

    def __str__(self):
        if not self._terms:
            return "0"
        text = ""
        for exponent, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            size = abs(coeff)
            if exponent == 0:
                body = str(size)
            elif size == 1:
                body = _superscript(exponent)
            else:
                body = "{}{}".format(size, _superscript(exponent))
            if not text:
                text = body if sign == "+" else "-" + body
            else:
                text += " {} {}".format(sign, body)
        return text

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, np.integer)):
            return LaurentPoly(int(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for (k1, c1), (k2, c2) in itertools.product(
            self._terms.items(), other._terms.items()
        ):
            terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            if not self.is_monomial() or abs(self.items()[0][1]) != 1:
                raise ValueError("Only units can be raised to negative powers")
            (exponent, coeff), = self.items()
            return LaurentPoly.monomial(exponent * power, coeff ** abs(power))
        result = LaurentPoly(1)
        for _ in range(power):
            result = result * self
        return result

    def shift(self, exponent):
        """Multiply by q^exponent."""
        return LaurentPoly({k + exponent: c for k, c in self._terms.items()})

    def bar(self):
        """Bar involution q -> q^-1."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def is_bar_invariant(self):
        return self == self.bar()

    def eval1(self):
        """Evaluate at q = 1."""
        return sum(self._terms.values())

    def ddq1(self):
        """Derivative with respect to q evaluated at q = 1."""
        return sum(k * c for k, c in self._terms.items())

    def reduce_mod(self, p):
        """Reduce coefficients into 0..p-1."""
        return LaurentPoly({k: c % p for k, c in self._terms.items()})

    def has_nonnegative_coefficients(self):
        return all(c >= 0 for c in self._terms.values())

    def exact_divide(self, divisor):
        """Quotient of an exact division in Z[q, q^-1].

        Raises
        ------
        ArithmeticError
            If divisor does not divide self

        """
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("Division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        lowest = self.min_degree() - divisor.min_degree()
        top_exp, top_coeff = divisor.items()[-1]
        remainder = self
        quotient = {}
        while not remainder.is_zero():
            r_exp, r_coeff = remainder.items()[-1]
            q_exp = r_exp - top_exp
            if q_exp < lowest or r_coeff % top_coeff != 0:
                raise ArithmeticError("{} is not divisible by {}".format(self, divisor))
            q_coeff = r_coeff // top_coeff
            quotient[q_exp] = q_coeff
            remainder = remainder - divisor * LaurentPoly.monomial(q_exp, q_coeff)
        return LaurentPoly(quotient)


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def qint(k):
    """Quantum integer q + q^3 + ... + q^(2k-1).

    For negative k this is -(q^-1 + q^-3 + ... + q^(2k+1)) so that
    qint(k) = q^k [k] holds for every integer k.

    """
    if k >= 0:
        return LaurentPoly({2 * m - 1: 1 for m in range(1, k + 1)})
    return LaurentPoly({-(2 * m - 1): -1 for m in range(1, -k + 1)})


def sym_qint(k):
    """Balanced quantum integer [k] = (q^k - q^-k) / (q - q^-1)."""
    return qint(k).shift(-k)


@functools.lru_cache(maxsize=None)
def sym_qfactorial(k):
    """[k]! = [1][2]...[k]."""
    result = ONE
    for m in range(1, k + 1):
        result = result * sym_qint(m)
    return result


def sym_qbinomial(d, c):
    """Balanced Gaussian binomial [d choose c]."""
    if c < 0 or c > d:
        return ZERO
    return sym_qfactorial(d).exact_divide(sym_qfactorial(c) * sym_qfactorial(d - c))


def qbinom(d, c):
    """Gaussian binomial built from `qint`, i.e. q^(c(d-c)) [d choose c]."""
    return sym_qbinomial(d, c).shift(c * (d - c))


class Permutation(object):
    """Element of the symmetric group in one-line notation.

    ``images[k - 1]`` is the image of k. Composition is read left to right:
    ``a * b`` applies a first and then b, matching the right action of
    S_n on tableaux.

    """

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(int(x) for x in images)
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("{} is not a permutation".format(self.images))

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, n, r):
        """Simple transposition s_r = (r, r+1)."""
        return cls.identity(n).times_simple(r)

    @classmethod
    def from_word(cls, n, word):
        """Product s_{r_1} s_{r_2} ... s_{r_k} of a word (r_1, ..., r_k)."""
        perm = cls.identity(n)
        for r in word:
            perm = perm.times_simple(r)
        return perm

    @property
    def n(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation({})".format(list(self.images))

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("Cannot compose permutations of different degrees")
        return Permutation(other(x) for x in self.images)

    def inverse(self):
        inv = [0] * self.n
        for k, image in enumerate(self.images, 1):
            inv[image - 1] = k
        return Permutation(inv)

    def positions(self):
        """positions[v - 1] is the position holding value v."""
        return self.inverse().images

    def times_simple(self, r):
        """self * s_r: swap the values r and r+1."""
        swap = {r: r + 1, r + 1: r}
        return Permutation(swap.get(x, x) for x in self.images)

    def simple_times(self, a):
        """s_a * self: swap the entries in positions a and a+1."""
        images = list(self.images)
        images[a - 1], images[a] = images[a], images[a - 1]
        return Permutation(images)

    def swap_values(self, a, b):
        swap = {a: b, b: a}
        return Permutation(swap.get(x, x) for x in self.images)

    def length(self):
        """Coxeter length (number of inversions)."""
        images = self.images
        return sum(
            1
            for i in range(len(images))
            for j in range(i + 1, len(images))
            if images[i] > images[j]
        )

    def is_right_descent(self, r):
        pos = self.positions()
        return pos[r] < pos[r - 1]

    def is_left_descent(self, a):
        return self.images[a - 1] > self.images[a]

    def right_descents(self):
        return [r for r in range(1, self.n) if self.is_right_descent(r)]

    def left_descents(self):
        return [a for a in range(1, self.n) if self.is_left_descent(a)]

    def reduced_word(self, convention="lexmin"):
        """Canonical reduced word.

        ``lexmin`` peels off the smallest left descent at each step and yields
        the lexicographically smallest reduced word; ``lexmax`` peels the
        largest and yields the lexicographically largest one. Both
        conventions are closed under taking prefixes and suffixes.

        """
        if convention not in _CONVENTIONS:
            raise ValueError("Unknown reduced word convention {!r}".format(convention))
        word = []
        perm = self
        while True:
            descents = perm.left_descents()
            if not descents:
                break
            a = descents[0] if convention == "lexmin" else descents[-1]
            word.append(a)
            perm = perm.simple_times(a)
        return tuple(word)


def canonical_reduced_word(perm, convention="lexmin"):
    """Canonical reduced word of a permutation (see `Permutation.reduced_word`)."""
    return perm.reduced_word(convention)


def is_reduced(n, word):
    return Permutation.from_word(n, word).length() == len(word)


def smith_normal_form(matrix):
    """Invariant factors of an integer matrix.

    Pivots are chosen by minimal absolute value; divisibility of the
    remaining block is enforced by adding an offending row to the pivot row.

    Parameters
    ----------
    matrix: array_like
        Integer entries

    Returns
    -------
    divisors: list of int
        d_1 | d_2 | ... of length min(rows, cols), zero divisors last

    """
    work = np.array(matrix, dtype=object)
    if work.size == 0:
        return []
    work = work.copy()
    rows, cols = work.shape
    divisors = []
    for s in range(min(rows, cols)):
        nonzero = np.argwhere(work[s:, s:] != 0)
        if len(nonzero) == 0:
            break
        while True:
            nonzero = np.argwhere(work[s:, s:] != 0)
            i, j = min(nonzero, key=lambda ij: abs(work[s + ij[0], s + ij[1]]))
            i, j = s + i, s + j
            if i != s:
                work[[s, i]] = work[[i, s]]
            if j != s:
                work[:, [s, j]] = work[:, [j, s]]
            pivot = work[s, s]
            clean = True
            for i in range(s + 1, rows):
                if work[i, s] != 0:
                    work[i, :] = work[i, :] - (work[i, s] // pivot) * work[s, :]
                    clean = clean and work[i, s] == 0
            for j in range(s + 1, cols):
                if work[s, j] != 0:
                    work[:, j] = work[:, j] - (work[s, j] // pivot) * work[:, s]
                    clean = clean and work[s, j] == 0
            if not clean:
                continue
            offending = np.argwhere(work[s + 1 :, s + 1 :] % pivot != 0)
            if len(offending):
                i = s + 1 + offending[0][0]
                work[s, :] = work[s, :] + work[i, :]
                continue
            break
        divisors.append(abs(int(work[s, s])))
    divisors.extend([0] * (min(rows, cols) - len(divisors)))
    return divisors


def _modular_rank(rows, p):
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for k in range(rank + 1, len(rows)):
            factor = rows[k][col]
            if factor:
                rows[k] = [(a - factor * b) % p for a, b in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def _integer_rank(rows):
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        top = rows[rank]
        for k in range(rank + 1, len(rows)):
            factor = rows[k][col]
            if factor:
                row = [top[col] * a - factor * b for a, b in zip(rows[k], top)]
                # keep entries small
                content = functools.reduce(math.gcd, row, 0)
                rows[k] = [x // content for x in row] if content > 1 else row
        rank += 1
    return rank


def rank(matrix, p=0):
    """Rank over Q (p = 0) or over the prime field F_p."""
    work = np.array(matrix, dtype=object)
    if work.size == 0:
        return 0
    rows = [[int(x) for x in row] for row in work.tolist()]
    if p:
        return _modular_rank(rows, p)
    return _integer_rank(rows)


def ranks_from_divisors(divisors, p=0):
    """Rank over a field read off the invariant factors."""
    if p:
        return sum(1 for d in divisors if d % p != 0)
    return sum(1 for d in divisors if d != 0)


class LabeledMatrix(object):
    """Dense matrix with row and column labels on a numpy object array."""

    def __init__(self, entries, rows, cols):
        self.rows = list(rows)
        self.cols = list(cols)
        self.entries = np.empty((len(self.rows), len(self.cols)), dtype=object)
        for i, row in enumerate(entries):
            for j, value in enumerate(row):
                self.entries[i, j] = self._element(value)
        if self.entries.shape != (len(self.rows), len(self.cols)):
            raise ValueError("Entries do not match the labels")

    @staticmethod
    def _element(value):
        return value

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, key):
        return self.entries[key]

    def entry(self, row_label, col_label):
        return self.entries[self.rows.index(row_label), self.cols.index(col_label)]

    def tolist(self):
        return self.entries.tolist()

    def submatrix(self, row_indices, col_indices):
        return type(self)(
            [[self.entries[i, j] for j in col_indices] for i in row_indices],
            [self.rows[i] for i in row_indices],
            [self.cols[j] for j in col_indices],
        )

    def transpose(self):
        return type(self)(self.entries.T.tolist(), self.cols, self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, LabeledMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.tolist() == other.tolist()
        )

    def __ne__(self, other):
        return not self.__eq__(other)


class IntMatrix(LabeledMatrix):
    """Integer matrix with labels, Smith normal form and ranks."""

    @staticmethod
    def _element(value):
        return int(value)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * len(cols) for _ in rows], rows, cols)

    @classmethod
    def from_json(cls, data):
        return cls(data["entries"], data["rows"], data["cols"])

    def to_json(self):
        return {
            "rows": [str(label) for label in self.rows],
            "cols": [str(label) for label in self.cols],
            "entries": [[int(x) for x in row] for row in self.tolist()],
        }

    def is_symmetric(self):
        return self.shape[0] == self.shape[1] and np.all(self.entries == self.entries.T)

    def is_zero(self, p=0):
        if p:
            return all(int(x) % p == 0 for x in self.entries.flat)
        return all(int(x) == 0 for x in self.entries.flat)

    def smith_normal_form(self):
        return smith_normal_form(self.entries)

    def rank(self, p=0):
        return rank(self.entries, p)

    def reduce_mod(self, p):
        return IntMatrix([[int(x) % p for x in row] for row in self.tolist()], self.rows, self.cols)

    def dot(self, other):
        product = self.entries.dot(other.entries)
        return IntMatrix(product.tolist(), self.rows, other.cols)


class LaurentMatrix(LabeledMatrix):
    """Matrix of Laurent polynomials with labels."""

    @staticmethod
    def _element(value):
        return LaurentPoly(value)

    @classmethod
    def from_json(cls, data):
        entries = [[LaurentPoly.from_json(x) for x in row] for row in data["entries"]]
        return cls(entries, data["rows"], data["cols"])

    def to_json(self):
        return {
            "rows": [str(label) for label in self.rows],
            "cols": [str(label) for label in self.cols],
            "entries": [[x.to_json() for x in row] for row in self.tolist()],
        }

    def bar(self):
        return LaurentMatrix([[x.bar() for x in row] for row in self.tolist()], self.rows, self.cols)

    def eval1(self):
        return IntMatrix([[x.eval1() for x in row] for row in self.tolist()], self.rows, self.cols)

    def ddq1(self):
        return IntMatrix([[x.ddq1() for x in row] for row in self.tolist()], self.rows, self.cols)

    def dot(self, other):
        if self.cols != other.rows:
            raise ValueError("Inner labels do not agree")
        product = [
            [
                sum((self.entries[i, k] * other.entries[k, j] for k in range(len(self.cols))), ZERO)
                for j in range(len(other.cols))
            ]
            for i in range(len(self.rows))
        ]
        return LaurentMatrix(product, self.rows, other.cols)


# -fin-
