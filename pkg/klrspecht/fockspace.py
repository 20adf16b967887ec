"""Combinatorial Fock space with the quantum group action and its pairing."""
from __future__ import absolute_import

from collections import namedtuple

from .combinat import (
    Multipartition,
    beta,
    d_after,
    d_before,
    d_residue,
    multipartitions,
    residue,
)
from .exactalg import ONE, Q, ZERO, LaurentPoly, sym_qfactorial
from .logger import user_logger
from .spechtmod import Character, restricted_character, specht_character
from .utility import RankCapError

DEFAULT_RANK_CAP = 6

Operator = namedtuple("Operator", "kind i")
Operator.__doc__ = """Quantum group generator: kind is one of E, F, K, Kinv."""

FockCheck = namedtuple("FockCheck", "family passed counterexample")

_KINDS = ("E", "F", "K", "Kinv")


class FockVector(dict):
    """Finite LaurentPoly combination of multipartitions."""

    @classmethod
    def basis(cls, shape):
        return cls({shape: ONE})

    def add(self, shape, poly):
        value = self.get(shape, ZERO) + poly
        if value.is_zero():
            self.pop(shape, None)
        else:
            self[shape] = value
        return self

    def add_scaled(self, other, poly=ONE):
        for shape, value in other.items():
            self.add(shape, value * poly)
        return self

    def scale(self, poly):
        return FockVector().add_scaled(self, poly)

    def __add__(self, other):
        return FockVector(self).add_scaled(other)

    def __sub__(self, other):
        return FockVector(self).add_scaled(other, LaurentPoly(-1))

    def divide(self, poly):
        """Exact coefficientwise division; ArithmeticError if not exact."""
        return FockVector({shape: value.exact_divide(poly) for shape, value in self.items()})

    def rank(self):
        return max([shape.size for shape in self] or [0])

    def coefficient(self, shape):
        return self.get(shape, ZERO)

    def __str__(self):
        if not self:
            return "0"
        return " + ".join(
            "({})*f[{}]".format(value, shape)
            for shape, value in sorted(self.items(), key=lambda item: item[0].order_key())
        )


class FockSpace(object):
    """Operators E_i, F_i, K_i and K_i^-1 on multipartitions up to a rank cap."""

    def __init__(self, setting, rank_cap=DEFAULT_RANK_CAP):
        self.setting = setting
        self.rank_cap = rank_cap

    def vacuum(self):
        return FockVector.basis(Multipartition.empty(self.setting.level))

    def apply(self, v, op):
        if op.kind not in _KINDS:
            raise ValueError("Unknown Fock space operator {!r}".format(op))
        return getattr(self, op.kind)(v, op.i)

    def _i_nodes(self, nodes, i):
        target = self.setting.residue(i)
        return [node for node in nodes if residue(self.setting, node) == target]

    def E(self, v, i):
        result = FockVector()
        for shape, value in v.items():
            for node in self._i_nodes(shape.removable_nodes(), i):
                exponent = d_after(self.setting, shape, node)
                result.add(shape.remove_node(node), value * LaurentPoly.monomial(exponent))
        return result

    def F(self, v, i):
        result = FockVector()
        for shape, value in v.items():
            nodes = self._i_nodes(shape.addable_nodes(), i)
            if nodes and shape.size + 1 > self.rank_cap:
                raise RankCapError(
                    "F_{} on {} exceeds rank cap {}".format(i, shape, self.rank_cap)
                )
            for node in nodes:
                exponent = -d_before(self.setting, shape, node)
                result.add(shape.add_node(node), value * LaurentPoly.monomial(exponent))
        return result

    def K(self, v, i):
        return FockVector(
            {
                shape: value * LaurentPoly.monomial(d_residue(self.setting, shape, i))
                for shape, value in v.items()
            }
        )

    def Kinv(self, v, i):
        return FockVector(
            {
                shape: value * LaurentPoly.monomial(-d_residue(self.setting, shape, i))
                for shape, value in v.items()
            }
        )

    def power(self, v, kind, i, a):
        for _ in range(a):
            v = getattr(self, kind)(v, i)
        return v

    def divided_power(self, v, kind, i, a):
        return self.power(v, kind, i, a).divide(sym_qfactorial(a))

    def pairing(self, u, v):
        return fock_pairing(self.setting, u, v)

    def basis(self, n):
        return multipartitions(self.setting, n)


def apply_operator(setting, v, op, rank_cap=DEFAULT_RANK_CAP):
    return FockSpace(setting, rank_cap).apply(v, op)


def fock_pairing(setting, u, v):
    """Bilinear form with (f_lambda, f_mu) = delta q^defect(lambda)."""
    total = ZERO
    for shape, value in u.items():
        if shape in v:
            total = total + value * v[shape] * LaurentPoly.monomial(
                beta(setting, shape).defect(setting)
            )
    return total


def weight(setting, shape, residues=None):
    """(Lambda - beta^shape, alpha_i) for every residue i that can occur."""
    if residues is None:
        residues = setting.residues(shape.size)
    content = beta(setting, shape)
    return {
        i: setting.lam(i) - sum(count * setting.cartan(j, i) for j, count in content.items())
        for i in residues
    }


class _Family(object):
    """Collects pass/fail for one relation family, keeping the first failure."""

    def __init__(self, name):
        self.name = name
        self.passed = True
        self.counterexample = None

    def record(self, ok, description):
        if not ok and self.passed:
            self.passed = False
            self.counterexample = description
            user_logger.debug("DEBUG: {} fails at {}".format(self.name, description))

    def result(self):
        return FockCheck(self.name, self.passed, self.counterexample)


def _serre_sum(space, v, kind, i, j, m):
    total = FockVector()
    for a in range(m + 1):
        term = space.divided_power(v, kind, i, m - a)
        term = getattr(space, kind)(term, j)
        term = space.divided_power(term, kind, i, a)
        total.add_scaled(term, LaurentPoly((-1) ** a))
    return total


def check_relations(setting, rank_cap=DEFAULT_RANK_CAP):
    """Quantum group relations, pairing and weights on basis vectors up to rank_cap."""
    space = FockSpace(setting, rank_cap)
    residues = setting.residues(rank_cap)
    families = {
        name: _Family(name)
        for name in (
            "K commutation",
            "EF commutator",
            "Serre",
            "biadjointness",
            "weight",
            "defect shift",
            "branching",
        )
    }
    q_minus = Q - LaurentPoly.monomial(-1)
    shapes = {n: multipartitions(setting, n) for n in range(rank_cap + 1)}

    for n in range(rank_cap + 1):
        below = shapes[n - 1] if n else []
        for shape in shapes[n]:
            f = FockVector.basis(shape)
            room = rank_cap - n
            wt = weight(setting, shape, residues)
            for i in residues:
                k_i = space.K(f, i)
                family = families["weight"]
                family.record(
                    k_i == f.scale(LaurentPoly.monomial(wt[i])), "K_{} f[{}]".format(i, shape)
                )

                e_f = space.E(f, i)
                for j in residues:
                    c = setting.cartan(i, j)
                    conj = space.K(space.E(space.Kinv(f, i), j), i)
                    families["K commutation"].record(
                        conj == space.E(f, j).scale(LaurentPoly.monomial(c)),
                        "K_{} E_{} K_{}^-1 f[{}]".format(i, j, i, shape),
                    )
                    if room >= 1:
                        conj = space.K(space.F(space.Kinv(f, i), j), i)
                        families["K commutation"].record(
                            conj == space.F(f, j).scale(LaurentPoly.monomial(-c)),
                            "K_{} F_{} K_{}^-1 f[{}]".format(i, j, i, shape),
                        )
                        lhs = space.E(space.F(f, j), i) - space.F(space.E(f, i), j)
                        rhs = FockVector()
                        if setting.residue(i) == setting.residue(j):
                            d = d_residue(setting, shape, i)
                            numerator = LaurentPoly.monomial(d) - LaurentPoly.monomial(-d)
                            rhs = f.scale(numerator.exact_divide(q_minus))
                        families["EF commutator"].record(
                            lhs == rhs, "[E_{}, F_{}] f[{}]".format(i, j, shape)
                        )
                    if setting.residue(i) == setting.residue(j):
                        continue
                    m = 1 - c
                    serre = families["Serre"]
                    try:
                        ok = not _serre_sum(space, f, "E", i, j, m)
                        if room >= m + 1:
                            ok = ok and not _serre_sum(space, f, "F", i, j, m)
                    except ArithmeticError:
                        ok = False
                    serre.record(ok, "Serre ({}, {}) on f[{}]".format(i, j, shape))

                for mu in below:
                    lhs = fock_pairing(setting, e_f, FockVector.basis(mu))
                    rhs = fock_pairing(setting, f, space.F(FockVector.basis(mu), i))
                    families["biadjointness"].record(
                        lhs == rhs, "(E_{} f[{}], f[{}])".format(i, shape, mu)
                    )

                if room >= 1:
                    f_f = space.F(f, i)
                    for node in space._i_nodes(shape.addable_nodes(), i):
                        bigger = shape.add_node(node)
                        expected = LaurentPoly.monomial(
                            d_after(setting, bigger, node)
                            + beta(setting, shape).defect(setting)
                            - beta(setting, bigger).defect(setting)
                        )
                        families["defect shift"].record(
                            f_f.coefficient(bigger) == expected,
                            "F_{} f[{}] at {}".format(i, shape, node),
                        )

                induced = Character()
                for smaller, value in e_f.items():
                    induced = induced + specht_character(setting, smaller).scale(value)
                families["branching"].record(
                    induced == restricted_character(setting, shape, i),
                    "E_{} f[{}] against Ch S".format(i, shape),
                )
    results = [families[name].result() for name in sorted(families)]
    user_logger.debug(
        "DEBUG: Fock checks {}".format(", ".join("{}={}".format(r.family, r.passed) for r in results))
    )
    return results


# -fin-
