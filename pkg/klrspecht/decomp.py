"""Graded decomposition and adjustment matrices, and degree statistics."""
from __future__ import absolute_import

from collections import OrderedDict, namedtuple

import sympy

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .combinat import (
    Setting,
    beta,
    blocks,
    dominates,
    is_kleshchev,
    is_separated,
    kleshchev_set,
    mullineux,
    multipartitions,
    residue_sequence,
    restricted_partitions,
    standard_tableaux,
    tableau_degree,
)
from .exactalg import ONE, ZERO, LaurentMatrix, LaurentPoly
from .logger import user_logger
from .spechtmod import get_module, simple_character, specht_character
from .utility import DecompositionError

_q = sympy.Symbol("q")
_FIELD = QQ.frac_field(_q)

DegreeStats = namedtuple("DegreeStats", "shape by_word totals prime_totals")
DegreeStats.__doc__ = """Degree statistics of the tableaux of one shape.

Attributes
----------
by_word: dict
    e -> {residue word: sum of deg_e t over the tableaux with that word}
totals: dict
    e -> deg_e(shape)
prime_totals: dict
    p -> Deg_p(shape), the sum of deg_(p^k)(shape) over k >= 1
"""

CheckRow = namedtuple("CheckRow", "name passed detail")


class DecompMatrix(LaurentMatrix):
    """Rows: multipartitions of n. Columns: Kleshchev multipartitions."""


class AdjustMatrix(LaurentMatrix):
    """Rows and columns: Kleshchev multipartitions."""


def _to_sympy(poly):
    return sum((c * _q ** k for k, c in poly.items()), sympy.Integer(0))


def _to_laurent(expr):
    """Exact conversion of a rational function with a monomial denominator."""
    expr = sympy.cancel(expr)
    numerator, denominator = sympy.fraction(expr)
    den = sympy.Poly(denominator, _q)
    if len(den.terms()) != 1:
        raise DecompositionError("{} is not a Laurent polynomial".format(expr))
    ((shift,), scale), = den.terms()
    terms = {}
    for (k,), c in sympy.Poly(numerator, _q).terms():
        c = sympy.Rational(c, scale)
        if c.q != 1:
            raise DecompositionError("{} has non-integral coefficients".format(expr))
        terms[k - shift] = int(c)
    return LaurentPoly(terms)


def solve_characters(columns, targets):
    """Express each target character in the column characters.

    Returns one list of LaurentPoly coefficients per target.

    Raises
    ------
    DecompositionError
        If the columns are dependent, a target is outside their span or a
        coefficient is not a Laurent polynomial with integer coefficients

    """
    if not columns:
        if any(targets):
            raise DecompositionError("Nonzero character with no simple modules to match")
        return [[] for _ in targets]
    words = sorted(set().union(*[set(c) for c in columns], *[set(t) for t in targets]))
    k = len(columns)
    rows = []
    for word in words:
        row = [_FIELD.from_sympy(_to_sympy(col.get(word, ZERO))) for col in columns]
        row += [_FIELD.from_sympy(_to_sympy(target.get(word, ZERO))) for target in targets]
        rows.append(row)
    augmented = DomainMatrix(rows, (len(words), k + len(targets)), _FIELD)
    reduced, pivots = augmented.rref()
    if tuple(pivots[:k]) != tuple(range(k)) or len(pivots) != k:
        raise DecompositionError(
            "Character system is singular or inconsistent (pivots {})".format(pivots)
        )
    entries = reduced.to_Matrix()
    solutions = []
    for j in range(len(targets)):
        solutions.append([_to_laurent(entries[i, k + j]) for i in range(k)])
    return solutions


def _simple_characters(setting, shapes, characteristic, **engine):
    characters = OrderedDict()
    for mu in shapes:
        gram = get_module(setting, mu, **engine).gram_matrix()
        characters[mu] = simple_character(setting, mu, characteristic, gram=gram)
    return characters


def _block_shapes(setting, n, shapes=None):
    grouped = blocks(setting, n)
    if shapes is None:
        return list(grouped.values())
    wanted = {beta(setting, shape) for shape in shapes}
    return [members for root, members in grouped.items() if root in wanted]


def decomposition_matrix(setting, n, characteristic=0, shapes=None, **engine):
    """Graded decomposition matrix, solved block by block.

    Parameters
    ----------
    shapes: list of Multipartition, optional
        Restrict to the blocks containing these shapes

    """
    rows, cols = [], []
    pieces = []
    for members in _block_shapes(setting, n, shapes):
        klesh = [mu for mu in members if is_kleshchev(setting, mu)]
        simples = _simple_characters(setting, klesh, characteristic, **engine)
        spechts = [specht_character(setting, lam) for lam in members]
        solution = solve_characters(list(simples.values()), spechts)
        pieces.append((members, klesh, solution))
        rows.extend(members)
        cols.extend(klesh)
        user_logger.debug(
            "DEBUG: block of {} solved with {} simples".format(members[0], len(klesh))
        )
    entries = [[ZERO] * len(cols) for _ in rows]
    for members, klesh, solution in pieces:
        for lam, coeffs in zip(members, solution):
            for mu, value in zip(klesh, coeffs):
                entries[rows.index(lam)][cols.index(mu)] = value
    dec = DecompMatrix(entries, rows, cols)
    _check_decomposition(dec)
    return dec


def _check_decomposition(dec):
    for mu in dec.cols:
        if dec.entry(mu, mu) != ONE:
            raise DecompositionError("d_({0}),({0}) = {1}, not 1".format(mu, dec.entry(mu, mu)))
    for value in dec.entries.flat:
        if not value.has_nonnegative_coefficients():
            raise DecompositionError("Negative coefficient in decomposition number {}".format(value))


def adjustment_matrix(setting, n, characteristic, shapes=None, **engine):
    """Change of basis from characteristic 0 simples to characteristic p simples."""
    rows = []
    pieces = []
    for members in _block_shapes(setting, n, shapes):
        klesh = [mu for mu in members if is_kleshchev(setting, mu)]
        modular = _simple_characters(setting, klesh, characteristic, **engine)
        ordinary = _simple_characters(setting, klesh, 0, **engine)
        solution = solve_characters(list(modular.values()), list(ordinary.values()))
        pieces.append((klesh, solution))
        rows.extend(klesh)
    entries = [[ZERO] * len(rows) for _ in rows]
    for klesh, solution in pieces:
        for mu, coeffs in zip(klesh, solution):
            for nu, value in zip(klesh, coeffs):
                entries[rows.index(mu)][rows.index(nu)] = value
    adj = AdjustMatrix(entries, rows, rows)
    for value in adj.entries.flat:
        if not value.is_bar_invariant():
            raise DecompositionError("Adjustment entry {} is not bar invariant".format(value))
    return adj


# degree statistics


def _deg_by_word(setting, shape):
    by_word = {}
    for t in standard_tableaux(shape):
        word = residue_sequence(setting, t)
        by_word[word] = by_word.get(word, 0) + tableau_degree(setting, t)
    return by_word


def _content_spread(charge, n):
    return max(charge) - min(charge) + 2 * n


def prime_degree(charge, shape, p):
    """Deg_p(shape) = sum over k >= 1 of deg_(p^k)(shape)."""
    n = shape.size
    total = 0
    zeros = 0
    e = p
    while True:
        layer = sum(_deg_by_word(Setting(e, charge), shape).values())
        total += layer
        if e > n:
            if is_separated(Setting(e, charge), n):
                break
            zeros = zeros + 1 if layer == 0 else 0
            if zeros == 2:
                break
            if e > _content_spread(charge, n):
                if layer:
                    user_logger.warning(
                        "Deg_{} of {} does not stabilise at zero, truncated at e={}".format(
                            p, shape, e
                        )
                    )
                break
        e *= p
    return total


def degree_stats(setting, shape, e_list=None, primes=()):
    """deg_(e,i)(shape) per requested e, the totals deg_e and Deg_p."""
    if e_list is None:
        e_list = [setting.e]
    by_word = OrderedDict()
    totals = OrderedDict()
    for e in e_list:
        words = _deg_by_word(Setting(e, setting.charge), shape)
        by_word[e] = words
        totals[e] = sum(words.values())
    prime_totals = OrderedDict((p, prime_degree(setting.charge, shape, p)) for p in primes)
    return DegreeStats(shape, by_word, totals, prime_totals)


# checks on computed matrices


def chsmu_check(setting, n, dec=None):
    """deg_(e,i)(lambda) against the sum over mu of d'(1) dim D^mu_i."""
    if dec is None:
        dec = decomposition_matrix(setting, n, 0)
    dims = {mu: simple_character(setting, mu, 0).eval1() for mu in dec.cols}
    rows = []
    for lam in dec.rows:
        lhs = _deg_by_word(setting, lam)
        rhs = {}
        for mu in dec.cols:
            slope = dec.entry(lam, mu).ddq1()
            if not slope:
                continue
            for word, dim in dims[mu].items():
                rhs[word] = rhs.get(word, 0) + slope * dim
        lhs = {w: v for w, v in lhs.items() if v}
        rhs = {w: v for w, v in rhs.items() if v}
        detail = "" if lhs == rhs else "degrees {} decomposition {}".format(lhs, rhs)
        rows.append(CheckRow("ChSmu {}".format(lam), lhs == rhs, detail))
    return rows


def unitriangularity_check(dec):
    rows = []
    for lam in dec.rows:
        for mu in dec.cols:
            value = dec.entry(lam, mu)
            if value and not dominates(lam, mu):
                rows.append(CheckRow("dominance", False, "d_{},{} = {}".format(lam, mu, value)))
    return rows or [CheckRow("dominance", True, "")]


def positivity_check(dec):
    """d_(lambda mu)(q) in delta + q N[q], the characteristic 0 shape of the entries."""
    bad = []
    for lam in dec.rows:
        for mu in dec.cols:
            value = dec.entry(lam, mu)
            if lam == mu or not value:
                continue
            if value.min_degree() < 1 or not value.has_nonnegative_coefficients():
                bad.append("d_{},{} = {}".format(lam, mu, value))
    return [CheckRow("positivity", not bad, "; ".join(bad))]


def mullineux_check(setting, dec):
    """d_(M(mu)' mu) = q^defect(mu) and M(mu)' dominates every row in column mu."""
    rows = []
    for mu in dec.cols:
        top = mullineux(setting, mu).conjugate()
        expected = LaurentPoly.monomial(beta(setting, mu).defect(setting))
        value = dec.entry(top, mu) if top in dec.rows else ZERO
        ok = value == expected
        for lam in dec.rows:
            if dec.entry(lam, mu) and not dominates(top, lam):
                ok = False
        rows.append(CheckRow("Mullineux {}".format(mu), ok, "M(mu)'={} d={}".format(top, value)))
    return rows


def block_support_check(setting, dec):
    bad = [
        "{} {}".format(lam, mu)
        for lam in dec.rows
        for mu in dec.cols
        if dec.entry(lam, mu) and beta(setting, lam) != beta(setting, mu)
    ]
    return [CheckRow("block support", not bad, "; ".join(bad))]


def factorisation_check(dec0, decp, adj):
    """dec^p = dec^0 adj^p entrywise."""
    product = dec0.dot(adj)
    ok = product.tolist() == decp.tolist() and product.rows == decp.rows
    return [CheckRow("factorisation", ok, "")]


def kleshchev_column_check(setting, n, characteristic=0, **engine):
    """Shapes with a nonzero simple quotient against the Kleshchev set."""
    nonzero = {
        mu
        for mu in multipartitions(setting, n)
        if not get_module(setting, mu, **engine).gram_matrix().is_zero(characteristic)
    }
    klesh = kleshchev_set(setting, n)
    detail = "nonzero Gram: {}".format(", ".join(sorted(str(mu) for mu in nonzero)))
    rows = [CheckRow("Kleshchev columns", nonzero == klesh, detail)]
    if setting.level == 1:
        restricted = set(restricted_partitions(setting.e, n))
        rows.append(CheckRow("restricted partitions", nonzero == restricted, ""))
    return rows


# -fin-
