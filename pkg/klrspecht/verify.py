"""Relation, oracle and property suites behind the verify and fock-check commands."""
from __future__ import absolute_import

from collections import OrderedDict, namedtuple

from .combinat import (
    beta,
    crystal_edges,
    is_separated,
    kleshchev_set,
    multipartitions,
)
from .decomp import (
    adjustment_matrix,
    block_support_check,
    chsmu_check,
    decomposition_matrix,
    degree_stats,
    factorisation_check,
    kleshchev_column_check,
    mullineux_check,
    positivity_check,
    unitriangularity_check,
)
from .exactalg import LaurentPoly
from .fockspace import DEFAULT_RANK_CAP, check_relations
from .logger import user_logger
from .semisimple import (
    check_matrix_units,
    compare_nilhecke,
    compare_with_engine,
    matrix_units,
    nilhecke_gram_sign,
    seminormal_matrices,
    separated_residue_sequences,
)
from .spechtmod import (
    SpechtElement,
    SpechtModule,
    clear_modules,
    dual_specht_character,
    get_module,
    simple_character,
    specht_character,
)
from .utility import StraighteningError

CheckResult = namedtuple("CheckResult", "suite name passed detail")

LIGHT_SUITES = ("relations", "gram", "words", "semisimple", "nilhecke", "crystal", "degrees")
ALL_SUITES = LIGHT_SUITES + ("decomp", "fock")

# nil-Hecke checks go through sympy Groebner reductions
_NILHECKE_MAX_N = 4
_DEGREE_E_VALUES = (2, 3, 4, None)


class _Collector(object):
    def __init__(self, suite):
        self.suite = suite
        self.results = []

    def add(self, name, passed, detail=""):
        self.results.append(CheckResult(self.suite, name, bool(passed), detail))
        if not passed:
            user_logger.debug("DEBUG: {} / {} failed: {}".format(self.suite, name, detail))

    def extend(self, rows):
        for row in rows:
            self.add(row.name, row.passed, row.detail)


def _shapes_up_to(setting, n):
    return [shape for m in range(n + 1) for shape in multipartitions(setting, m)]


def _delta(j, r):
    return 1 if j[r - 1] == j[r] else 0


def _expected_square(module, v, j, r):
    """v psi_r^2 computed from the residue pair."""
    setting = module.setting
    a, b = j[r - 1], j[r]
    if a == b:
        return SpechtElement()
    if setting.e == 2:
        diff = module.act_y(v, r) - module.act_y(v, r + 1)
        return module.act_y(diff, r + 1) - module.act_y(diff, r)
    if setting.arrow(a, b):
        return module.act_y(v, r) - module.act_y(v, r + 1)
    if setting.arrow(b, a):
        return module.act_y(v, r + 1) - module.act_y(v, r)
    return v.copy()


def _expected_braid(module, v, j, r):
    setting = module.setting
    if j[r - 1] != j[r + 1] or j[r - 1] == j[r]:
        return SpechtElement()
    if setting.e == 2:
        result = module.act_y(v, r) + module.act_y(v, r + 2)
        return result.add_scaled(module.act_y(v, r + 1), -2)
    if setting.arrow(j[r - 1], j[r]):
        return -v
    if setting.arrow(j[r], j[r - 1]):
        return v.copy()
    return SpechtElement()


def _homogeneous(module, x, degree):
    return all(module.degree(t) == degree for t in x)


def module_relation_failures(module):
    """Names of the KLR relations the module action breaks on its basis."""
    failures = []
    n = module.n
    setting = module.setting
    for t in module.basis:
        v = module.vector(t)
        j = module.residues(t)
        deg = module.degree(t)
        if module.act_e(v, j) != v:
            failures.append("e(i^t) on {}".format(t))
        for k in range(1, n + 1):
            yk = module.act_y(v, k)
            if not _homogeneous(module, yk, deg + 2) or any(module.residues(u) != j for u in yk):
                failures.append("y_{} degree or weight on {}".format(k, t))
            for m in range(k + 1, n + 1):
                if module.act_y(yk, m) != module.act_y(module.act_y(v, m), k):
                    failures.append("y_{} y_{} commute on {}".format(k, m, t))
        if n:
            power = setting.lam(j[0])
            x = v
            for _ in range(power):
                x = module.act_y(x, 1)
            if x:
                failures.append("cyclotomic relation on {}".format(t))
        for r in range(1, n):
            psi = module.act_psi(v, r)
            swapped = list(j)
            swapped[r - 1], swapped[r] = swapped[r], swapped[r - 1]
            step = -setting.cartan(j[r - 1], j[r])
            if not _homogeneous(module, psi, deg + step) or any(
                module.residues(u) != tuple(swapped) for u in psi
            ):
                failures.append("psi_{} degree or weight on {}".format(r, t))
            delta = _delta(j, r)
            lhs = module.act_y(psi, r + 1)
            rhs = module.act_psi(module.act_y(v, r), r).add_scaled(v, delta)
            if lhs != rhs:
                failures.append("psi_{0} y_{1} = y_{0} psi_{0} + delta on {2}".format(r, r + 1, t))
            lhs = module.act_psi(module.act_y(v, r + 1), r)
            rhs = module.act_y(psi, r).add_scaled(v, delta)
            if lhs != rhs:
                failures.append("y_{1} psi_{0} = psi_{0} y_{0} + delta on {2}".format(r, r + 1, t))
            for k in range(1, n + 1):
                if k in (r, r + 1):
                    continue
                if module.act_y(psi, k) != module.act_psi(module.act_y(v, k), r):
                    failures.append("psi_{} y_{} commute on {}".format(r, k, t))
            if module.act_psi(psi, r) != _expected_square(module, v, j, r):
                failures.append("quadratic relation at {} on {}".format(r, t))
            for s in range(r + 2, n):
                if module.act_psi(psi, s) != module.act_psi(module.act_psi(v, s), r):
                    failures.append("psi_{} psi_{} commute on {}".format(r, s, t))
            if r + 1 < n:
                nxt = module.act_psi(v, r + 1)
                lhs = module.act_word(psi, (r + 1, r)) - module.act_word(nxt, (r, r + 1))
                if lhs != _expected_braid(module, v, j, r):
                    failures.append("braid relation at {} on {}".format(r, t))
    initial = module.vector(module.initial)
    for k in range(1, n + 1):
        if module.act_y(initial, k):
            failures.append("v y_{} != 0 at the initial tableau".format(k))
    for a in range(1, n):
        nodes = module.shape.nodes()
        if nodes[a - 1][:2] == nodes[a][:2] and module.act_psi(initial, a):
            failures.append("v psi_{} != 0 inside a row".format(a))
    return failures


def relations_suite(setting, n, depth_guard=None, **options):
    out = _Collector("relations")
    for shape in _shapes_up_to(setting, n):
        try:
            module = get_module(setting, shape, depth_guard=depth_guard)
            failures = module_relation_failures(module)
            for r in range(1, shape.size + 1):
                module.nilpotency_index(r)
        except StraighteningError as err:
            out.add("KLR relations on {}".format(shape), False, str(err))
            continue
        out.add("KLR relations on {}".format(shape), not failures, "; ".join(failures[:3]))
    return out.results


def gram_suite(setting, n, characteristic=0, depth_guard=None, **options):
    out = _Collector("gram")
    for shape in _shapes_up_to(setting, n):
        try:
            gram = get_module(setting, shape, depth_guard=depth_guard).gram_matrix()
        except StraighteningError as err:
            out.add("Gram of {}".format(shape), False, str(err))
            continue
        out.add("symmetric Gram of {}".format(shape), gram.is_symmetric())
        out.add("block support of {}".format(shape), gram.block_support_ok())
    return out.results


def words_suite(setting, n, characteristic=0, depth_guard=None, **options):
    """Elementary divisors and simple characters do not depend on the reduced words."""
    out = _Collector("words")
    for shape in _shapes_up_to(setting, n):
        try:
            grams = [
                SpechtModule(setting, shape, convention, depth_guard).gram_matrix()
                for convention in ("lexmin", "lexmax")
            ]
        except StraighteningError as err:
            out.add("conventions on {}".format(shape), False, str(err))
            continue
        divisors = [gram.smith_normal_form() for gram in grams]
        out.add("elementary divisors of {}".format(shape), divisors[0] == divisors[1],
                "{} / {}".format(divisors[0], divisors[1]))
        chars = [simple_character(setting, shape, characteristic, gram=gram) for gram in grams]
        out.add("simple character of {}".format(shape), chars[0] == chars[1])
    return out.results


def semisimple_suite(setting, n, **options):
    out = _Collector("semisimple")
    if not is_separated(setting, n):
        out.add("separated setting", True, "{} is not separated for n={}, skipped".format(setting, n))
        return out.results
    for m in range(1, n + 1):
        try:
            separated_residue_sequences(setting, m)
            out.add("residue words n={}".format(m), True)
        except RuntimeError as err:
            out.add("residue words n={}".format(m), False, str(err))
        rep = seminormal_matrices(setting, m)
        bad = [name for name, ok in rep.check_relations() if not ok]
        out.add("seminormal relations n={}".format(m), not bad, "; ".join(bad[:3]))
        rep, units = matrix_units(setting, m)
        out.add("matrix units n={}".format(m), check_matrix_units(rep, units))
        mismatches = compare_with_engine(setting, m)
        out.add("engine against seminormal n={}".format(m), not mismatches,
                str(mismatches[0]) if mismatches else "")
        for shape in multipartitions(setting, m):
            gram = get_module(setting, shape).gram_matrix()
            identity = all(
                gram.entries[i, k] == (1 if i == k else 0)
                for i in range(gram.shape[0])
                for k in range(gram.shape[1])
            )
            out.add("identity Gram of {}".format(shape), identity)
    return out.results


def nilhecke_suite(setting, n, **options):
    out = _Collector("nilhecke")
    for m in range(1, min(n, _NILHECKE_MAX_N) + 1):
        mismatches = compare_nilhecke(m, setting.e)
        out.add("Schubert and coinvariant actions n={}".format(m), not mismatches,
                str(mismatches[0]) if mismatches else "")
        sign = nilhecke_gram_sign(m, setting.e)
        out.add("anti-diagonal Gram sign n={}".format(m), sign.matches_half_n_n_minus_1,
                "sign {}".format(sign.sign))
    return out.results


def crystal_suite(setting, n, characteristic=0, depth_guard=None, **options):
    out = _Collector("crystal")
    out.extend(kleshchev_column_check(setting, n, characteristic, depth_guard=depth_guard))
    targets = {target for _, _, target in crystal_edges(setting, n) if target.size == n}
    out.add("crystal edges reach the Kleshchev set", targets == kleshchev_set(setting, n) or n == 0)
    return out.results


def degrees_suite(setting, n, characteristic=0, depth_guard=None, **options):
    out = _Collector("degrees")
    for shape in multipartitions(setting, n):
        stats = degree_stats(setting, shape, e_list=list(_DEGREE_E_VALUES))
        negative = [
            "e={} {}".format(e, word)
            for e, words in stats.by_word.items()
            for word, value in words.items()
            if value < 0
        ]
        out.add("deg_(e,i) >= 0 for {}".format(shape), not negative, "; ".join(negative))
        defect = beta(setting, shape).defect(setting)
        dual = specht_character(setting, shape).bar().scale(LaurentPoly.monomial(defect))
        out.add("dual character of {}".format(shape), dual_specht_character(setting, shape) == dual)
    out.extend(chsmu_check(setting, n))
    return out.results


def decomp_suite(setting, n, characteristic=0, depth_guard=None, **options):
    out = _Collector("decomp")
    dec0 = decomposition_matrix(setting, n, 0, depth_guard=depth_guard)
    out.extend(unitriangularity_check(dec0))
    out.extend(positivity_check(dec0))
    out.extend(mullineux_check(setting, dec0))
    out.extend(block_support_check(setting, dec0))
    if characteristic:
        decp = decomposition_matrix(setting, n, characteristic, depth_guard=depth_guard)
        adj = adjustment_matrix(setting, n, characteristic, depth_guard=depth_guard)
        out.extend(unitriangularity_check(decp))
        out.extend(factorisation_check(dec0, decp, adj))
    return out.results


def fock_suite(setting, n, rank_cap=DEFAULT_RANK_CAP, **options):
    out = _Collector("fock")
    for row in check_relations(setting, rank_cap):
        out.add(row.family, row.passed, row.counterexample or "")
    return out.results


SUITES = OrderedDict(
    [
        ("relations", relations_suite),
        ("gram", gram_suite),
        ("words", words_suite),
        ("semisimple", semisimple_suite),
        ("nilhecke", nilhecke_suite),
        ("crystal", crystal_suite),
        ("degrees", degrees_suite),
        ("decomp", decomp_suite),
        ("fock", fock_suite),
    ]
)


def run_suites(setting, n, suites=LIGHT_SUITES, **options):
    """Run the named suites and return their CheckResult rows in order."""
    unknown = [name for name in suites if name not in SUITES]
    if unknown:
        raise ValueError("Unknown verification suite {!r}".format(unknown[0]))
    results = []
    try:
        for name in suites:
            user_logger.debug("DEBUG: running {} suite for {} n={}".format(name, setting, n))
            results.extend(SUITES[name](setting, n, **options))
    finally:
        clear_modules()
    return results


# -fin-
