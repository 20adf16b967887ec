"""Multipartition, tableau and crystal combinatorics.

Everything in this module is an exact integer computation on value
objects: quiver settings, nodes, multipartitions, tableaux, Garnir belts,
good nodes and the Mullineux map.

"""
from __future__ import division
from __future__ import absolute_import

import functools
import itertools

from collections import OrderedDict, namedtuple

from .exactalg import Permutation
from .utility import (
    NotGarnirNodeError,
    NotKleshchevError,
    SettingError,
    ShapeError,
    format_e,
    parse_charge,
    parse_e,
    parse_shape,
)


class Setting(namedtuple("Setting", "e charge")):
    """Quiver setting: quantum characteristic e (None for infinity) and charge.

    Parameters
    ----------
    e: int or str or None
        Quantum characteristic, at least 2, or None / "inf" for e = infinity
    charge: sequence of int
        Multicharge (kappa_1, ..., kappa_l)

    """

    __slots__ = ()

    def __new__(cls, e, charge):
        return super(Setting, cls).__new__(cls, parse_e(e), parse_charge(charge))

    @property
    def level(self):
        return len(self.charge)

    @property
    def finite(self):
        return self.e is not None

    def residue(self, content):
        return content % self.e if self.finite else content

    def lam(self, i):
        """(Lambda, alpha_i): number of charges congruent to i."""
        return sum(1 for k in self.charge if self.residue(k) == self.residue(i))

    def residues(self, n=0):
        """Residues that can occur on multipartitions of size at most n."""
        if self.finite:
            return list(range(self.e))
        return list(range(min(self.charge) - n, max(self.charge) + n + 1))

    def cartan(self, i, j):
        """Cartan pairing (alpha_i, alpha_j)."""
        i, j = self.residue(i), self.residue(j)
        if i == j:
            return 2
        if self.e == 2:
            return -2
        if self.residue(i + 1) == j or self.residue(j + 1) == i:
            return -1
        return 0

    def arrow(self, i, j):
        """True for an edge i -> j of the quiver, i.e. j = i + 1."""
        return self.residue(i + 1) == self.residue(j)

    def conjugate(self):
        """Setting for the conjugate charge (-kappa_l, ..., -kappa_1)."""
        return Setting(self.e, tuple(-k for k in reversed(self.charge)))

    def negate(self, i):
        return self.residue(-i)

    def format_word(self, word):
        return format_residue_word(self, word)

    def __str__(self):
        return "e={} charge={}".format(
            format_e(self.e), ",".join(str(k) for k in self.charge)
        )


class Node(namedtuple("Node", "comp row col")):
    """Node (l, r, c) of a diagram, ordered lexicographically."""

    __slots__ = ()

    def __str__(self):
        return "({},{},{})".format(self.comp, self.row, self.col)


class Multipartition(tuple):
    """An l-tuple of partitions.

    Instances are tuples of tuples of positive parts and are hashable.
    Use `Multipartition.parse` for the "3,2^2,1^2|4,3" shape grammar.

    """

    def __new__(cls, components):
        comps = []
        for comp in components:
            parts = tuple(int(p) for p in comp if int(p) > 0)
            if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
                raise ShapeError("Parts must weakly decrease: {}".format(parts))
            comps.append(parts)
        if not comps:
            raise ShapeError("A multipartition needs at least one component")
        return super(Multipartition, cls).__new__(cls, comps)

    @classmethod
    def parse(cls, text, level=None):
        return cls(parse_shape(text, level))

    @classmethod
    def empty(cls, level):
        return cls([()] * level)

    @property
    def level(self):
        return len(self)

    @property
    def size(self):
        return sum(sum(comp) for comp in self)

    def row_length(self, comp, row):
        parts = self[comp - 1]
        return parts[row - 1] if 1 <= row <= len(parts) else 0

    def __contains__(self, node):
        if not isinstance(node, Node):
            return tuple.__contains__(self, node)
        if not 1 <= node.comp <= self.level or node.row < 1 or node.col < 1:
            return False
        return node.col <= self.row_length(node.comp, node.row)

    def nodes(self):
        """All nodes in the lexicographic node order."""
        return [
            Node(l, r, c)
            for l, parts in enumerate(self, 1)
            for r, length in enumerate(parts, 1)
            for c in range(1, length + 1)
        ]

    def addable_nodes(self):
        nodes = []
        for l, parts in enumerate(self, 1):
            for r in range(1, len(parts) + 2):
                c = self.row_length(l, r) + 1
                if r == 1 or self.row_length(l, r - 1) >= c:
                    nodes.append(Node(l, r, c))
        return nodes

    def removable_nodes(self):
        nodes = []
        for l, parts in enumerate(self, 1):
            for r, length in enumerate(parts, 1):
                if self.row_length(l, r + 1) < length:
                    nodes.append(Node(l, r, length))
        return nodes

    def add_node(self, node):
        if node not in self.addable_nodes():
            raise ShapeError("{} is not addable to {}".format(node, self))
        comps = [list(comp) for comp in self]
        parts = comps[node.comp - 1]
        if node.row > len(parts):
            parts.append(1)
        else:
            parts[node.row - 1] += 1
        return Multipartition(comps)

    def remove_node(self, node):
        if node not in self.removable_nodes():
            raise ShapeError("{} is not removable from {}".format(node, self))
        comps = [list(comp) for comp in self]
        comps[node.comp - 1][node.row - 1] -= 1
        return Multipartition(comps)

    def conjugate(self):
        """(lambda^(l)' | ... | lambda^(1)')."""
        return Multipartition(
            [
                tuple(sum(1 for p in comp if p >= c) for c in range(1, comp[0] + 1))
                if comp
                else ()
                for comp in reversed(self)
            ]
        )

    def order_key(self):
        """Key whose descending order refines dominance."""
        n = self.size
        key = []
        for comp in self:
            key.append(sum(comp))
            key.extend(comp + (0,) * (n - len(comp)))
        return tuple(key)

    def __str__(self):
        return "|".join(",".join(str(p) for p in comp) if comp else "0" for comp in self)

    def __repr__(self):
        return "Multipartition({!r})".format(str(self))


class RootElement(object):
    """Element of the positive root lattice: residue -> multiplicity."""

    __slots__ = ("_items",)

    def __init__(self, counts=None):
        counts = counts or {}
        self._items = tuple(sorted((i, m) for i, m in counts.items() if m))

    def __getitem__(self, i):
        return dict(self._items).get(i, 0)

    def items(self):
        return self._items

    @property
    def height(self):
        return sum(m for _, m in self._items)

    def pairing(self, setting, other):
        """Symmetric form (beta, gamma)."""
        return sum(
            m1 * m2 * setting.cartan(i, j) for i, m1 in self._items for j, m2 in other._items
        )

    def defect(self, setting):
        """(Lambda, beta) - (beta, beta) / 2."""
        lam_beta = sum(m * setting.lam(i) for i, m in self._items)
        return lam_beta - self.pairing(setting, self) // 2

    def __eq__(self, other):
        return isinstance(other, RootElement) and self._items == other._items

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._items)

    def __lt__(self, other):
        return self._items < other._items

    def __str__(self):
        if not self._items:
            return "0"
        return " + ".join(
            "a{}".format(i) if m == 1 else "{}a{}".format(m, i) for i, m in self._items
        )

    __repr__ = __str__


class Tableau(object):
    """Bijective filling of a multipartition by 1..n.

    ``values[k]`` is the entry in the (k+1)-th node of the node order, so
    the filling is t^lambda d with d = Permutation(values).

    """

    __slots__ = ("shape", "values", "_nodes")

    def __init__(self, shape, values):
        self.shape = shape
        self.values = tuple(values)
        self._nodes = None
        if sorted(self.values) != list(range(1, shape.size + 1)):
            raise ShapeError("Filling {} does not match {}".format(self.values, shape))

    @classmethod
    def from_permutation(cls, shape, perm):
        return cls(shape, perm.images)

    @classmethod
    def from_rows(cls, shape, rows):
        """Build from per-component row lists of entries."""
        values = [rows[n.comp - 1][n.row - 1][n.col - 1] for n in shape.nodes()]
        return cls(shape, values)

    def node_map(self):
        if self._nodes is None:
            self._nodes = dict(zip(self.values, self.shape.nodes()))
        return self._nodes

    def node_of(self, k):
        return self.node_map()[k]

    def value(self, node):
        return self.values[self.shape.nodes().index(node)]

    def rows(self):
        rows = [[[] for _ in comp] for comp in self.shape]
        for node, value in zip(self.shape.nodes(), self.values):
            rows[node.comp - 1][node.row - 1].append(value)
        return rows

    def permutation(self):
        """d(t) with t = t^lambda d(t)."""
        return Permutation(self.values)

    def is_standard(self):
        filled = dict(zip(self.shape.nodes(), self.values))
        for node, value in filled.items():
            right = Node(node.comp, node.row, node.col + 1)
            below = Node(node.comp, node.row + 1, node.col)
            if right in filled and filled[right] < value:
                return False
            if below in filled and filled[below] < value:
                return False
        return True

    def swap(self, r):
        """t s_r: exchange the entries r and r+1."""
        swap = {r: r + 1, r + 1: r}
        return Tableau(self.shape, [swap.get(v, v) for v in self.values])

    def restrict_shape(self, m):
        """Shape of t restricted to the entries 1..m."""
        comps = [[0] * len(comp) for comp in self.shape]
        for k in range(1, m + 1):
            node = self.node_of(k)
            comps[node.comp - 1][node.row - 1] += 1
        return Multipartition(comps)

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self.values == other.values
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.shape, self.values))

    def __str__(self):
        return "|".join(
            "/".join(",".join(str(v) for v in row) for row in comp) or "0"
            for comp in self.rows()
        )

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, str(self))


class StandardTableau(Tableau):
    """Standard filling: entries increase along rows and down columns."""

    __slots__ = ()

    def __init__(self, shape, values):
        super(StandardTableau, self).__init__(shape, values)
        if not self.is_standard():
            raise ShapeError("{} is not standard".format(self.values))

    @classmethod
    def initial(cls, shape):
        """t^lambda: entries in node order."""
        return cls(shape, range(1, shape.size + 1))

    @classmethod
    def final(cls, shape):
        """t_lambda: columns of the last component first."""
        order = sorted(shape.nodes(), key=lambda n: (-n.comp, n.col, n.row))
        filling = {node: k for k, node in enumerate(order, 1)}
        return cls(shape, [filling[node] for node in shape.nodes()])


GarnirData = namedtuple(
    "GarnirData",
    "node belt bricks a c tableau k_A brick_words coset_reps garnir_tableau",
)
GarnirData.__doc__ = """Garnir belt data at a Garnir node.

Attributes
----------
node: Node
belt: tuple of Node
bricks, a, c: int
    Brick counts with bricks = a + c
tableau: StandardTableau or Tableau
    t_A, standard whenever the belt is not empty
k_A: int
    t_A(A)
brick_words: tuple of tuple
    Canonical words of the brick transpositions w_1, ..., w_(bricks-1)
coset_reps: tuple of Permutation
    Shuffles of S_a x S_c in S_bricks, ordered by length
garnir_tableau: Tableau
    The non-standard tableau whose relation the belt data rewrites
"""

BoundaryStats = namedtuple("BoundaryStats", "residue after before total")


def residue(setting, node):
    """kappa_l + c - r, reduced mod e when e is finite."""
    if not 1 <= node.comp <= setting.level:
        raise ShapeError("{} is outside level {}".format(node, setting.level))
    return setting.residue(integer_content(setting, node))


def integer_content(setting, node):
    return setting.charge[node.comp - 1] + node.col - node.row


def integer_contents(setting, t):
    """Integer contents of the nodes holding 1, 2, ..., n."""
    return tuple(integer_content(setting, t.node_of(k)) for k in range(1, t.shape.size + 1))


def residue_sequence(setting, t):
    """Residue word i^t."""
    return tuple(setting.residue(c) for c in integer_contents(setting, t))


residue_word = residue_sequence


def format_residue_word(setting, word):
    """Digit string when e <= 10, comma separated otherwise."""
    if setting.finite and setting.e <= 10:
        return "".join(str(i) for i in word)
    return ",".join(str(i) for i in word)


def _check_level(setting, shape):
    if shape.level != setting.level:
        raise ShapeError(
            "{} has level {}, setting has level {}".format(shape, shape.level, setting.level)
        )


@functools.lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


@functools.lru_cache(maxsize=None)
def _multipartitions(level, n):
    shapes = []
    for sizes in itertools.product(range(n + 1), repeat=level):
        if sum(sizes) != n:
            continue
        for comps in itertools.product(*[partitions(m) for m in sizes]):
            shapes.append(Multipartition(comps))
    shapes.sort(key=lambda shape: shape.order_key(), reverse=True)
    return tuple(shapes)


def multipartitions(setting, n):
    """All multipartitions of n, most dominant first."""
    if n < 0:
        raise ShapeError("n must be nonnegative")
    return list(_multipartitions(setting.level, n))


def dominates(lam, mu):
    """Dominance order lam >= mu."""
    if lam.level != mu.level or lam.size != mu.size:
        raise ShapeError("Cannot compare {} and {}".format(lam, mu))
    lam_total = mu_total = 0
    for lam_comp, mu_comp in zip(lam, mu):
        for r in range(max(len(lam_comp), len(mu_comp))):
            lam_total += lam_comp[r] if r < len(lam_comp) else 0
            mu_total += mu_comp[r] if r < len(mu_comp) else 0
            if lam_total < mu_total:
                return False
    return True


def tableau_dominates(s, t):
    """s >= t iff Shape(s restricted to m) dominates Shape(t restricted to m) for all m."""
    if s.shape.size != t.shape.size:
        raise ShapeError("Tableaux of different sizes")
    return all(
        dominates(s.restrict_shape(m), t.restrict_shape(m)) for m in range(1, s.shape.size + 1)
    )


@functools.lru_cache(maxsize=None)
def _standard_tableaux(shape):
    n = shape.size
    fillings = []

    def place(current, filling, k):
        if k == 0:
            fillings.append(dict(filling))
            return
        for node in current.removable_nodes():
            filling[node] = k
            place(current.remove_node(node), filling, k - 1)
            del filling[node]

    place(shape, {}, n)
    nodes = shape.nodes()
    tableaux = [StandardTableau(shape, [f[node] for node in nodes]) for f in fillings]
    tableaux.sort(key=_tableau_order)
    return tuple(tableaux)


def _tableau_order(t):
    perm = t.permutation()
    return perm.length(), perm.reduced_word()


def standard_tableaux(shape):
    """Std(shape), starting with t^lambda and ending with t_lambda."""
    return list(_standard_tableaux(shape))


def standard_tableaux_of_word(setting, shape, word):
    """Tableaux t in Std(shape) with i^t = word, grown one residue at a time."""
    _check_level(setting, shape)
    word = tuple(setting.residue(i) for i in word)
    if len(word) != shape.size:
        return []
    fillings = []

    def grow(current, filling, k):
        if k == len(word):
            fillings.append(dict(filling))
            return
        for node in current.addable_nodes():
            if node in shape and residue(setting, node) == word[k]:
                filling[node] = k + 1
                grow(current.add_node(node), filling, k + 1)
                del filling[node]

    grow(Multipartition.empty(shape.level), {}, 0)
    nodes = shape.nodes()
    tableaux = [StandardTableau(shape, [f[node] for node in nodes]) for f in fillings]
    tableaux.sort(key=_tableau_order)
    return tableaux


def _i_nodes(setting, nodes, i):
    return [node for node in nodes if residue(setting, node) == setting.residue(i)]


def _signed_count(setting, shape, i, keep):
    added = sum(1 for b in _i_nodes(setting, shape.addable_nodes(), i) if keep(b))
    removed = sum(1 for b in _i_nodes(setting, shape.removable_nodes(), i) if keep(b))
    return added - removed


def _require_boundary(shape, node):
    if node not in shape.addable_nodes() and node not in shape.removable_nodes():
        raise ShapeError("{} is neither addable nor removable in {}".format(node, shape))


def d_after(setting, shape, node):
    """d_A: addable minus removable i-nodes B > A."""
    _require_boundary(shape, node)
    i = residue(setting, node)
    return _signed_count(setting, shape, i, lambda b: b > node)


def d_before(setting, shape, node):
    """d^A: addable minus removable i-nodes B < A."""
    _require_boundary(shape, node)
    i = residue(setting, node)
    return _signed_count(setting, shape, i, lambda b: b < node)


def d_residue(setting, shape, i):
    """d_i: addable minus removable i-nodes."""
    return _signed_count(setting, shape, i, lambda b: True)


def d_between(setting, shape, node, upper):
    """d_A^C: addable minus removable i-nodes strictly between A and C."""
    _require_boundary(shape, node)
    i = residue(setting, node)
    return _signed_count(setting, shape, i, lambda b: node < b < upper)


def boundary_stats(setting, shape, node):
    """Residue, d_A, d^A and d_i for an addable or removable node."""
    _check_level(setting, shape)
    i = residue(setting, node)
    return BoundaryStats(
        residue=i,
        after=d_after(setting, shape, node),
        before=d_before(setting, shape, node),
        total=d_residue(setting, shape, i),
    )


def _removal_sequence(t):
    """(shape of t restricted to k, node of k) for k = n, ..., 1."""
    for k in range(t.shape.size, 0, -1):
        yield t.restrict_shape(k), t.node_of(k)


def tableau_degree(setting, t):
    _check_level(setting, t.shape)
    return sum(d_after(setting, shape, node) for shape, node in _removal_sequence(t))


def tableau_codegree(setting, t):
    _check_level(setting, t.shape)
    return sum(d_before(setting, shape, node) for shape, node in _removal_sequence(t))


def beta(setting, shape):
    """beta^lambda: residue content of the diagram."""
    counts = {}
    for node in shape.nodes():
        i = residue(setting, node)
        counts[i] = counts.get(i, 0) + 1
    return RootElement(counts)


def beta_and_defect(setting, shape):
    _check_level(setting, shape)
    root = beta(setting, shape)
    return root, root.defect(setting)


def defect(setting, shape):
    return beta_and_defect(setting, shape)[1]


def tableau_permutation(t, convention="lexmin"):
    """Canonical reduced word of d(t)."""
    return t.permutation().reduced_word(convention)


def blocks(setting, n):
    """Multipartitions of n grouped by beta, in order of first appearance."""
    grouped = OrderedDict()
    for shape in multipartitions(setting, n):
        grouped.setdefault(beta(setting, shape), []).append(shape)
    return grouped


def _belt_counts(setting, shape, node):
    if not setting.finite:
        return 0, 0
    e = setting.e
    top = shape.row_length(node.comp, node.row) - node.col + 1
    return top // e, node.col // e


def garnir_data(setting, shape, node):
    """Garnir belt, bricks, t_A and coset representatives at a Garnir node."""
    _check_level(setting, shape)
    below = Node(node.comp, node.row + 1, node.col)
    if node not in shape or below not in shape:
        raise NotGarnirNodeError("{} is not a Garnir node of {}".format(node, shape))
    initial = StandardTableau.initial(shape)
    e = setting.e or 0
    a, c = _belt_counts(setting, shape, node)
    l, r, col = node
    top_row = [Node(l, r, k) for k in range(col, shape.row_length(l, r) + 1)]
    bottom_row = [Node(l, r + 1, k) for k in range(1, col + 1)]
    top_belt = top_row[: a * e]
    bottom_belt = bottom_row[len(bottom_row) - c * e :] if c else []
    first = initial.value(node)

    refill = (
        bottom_row[: len(bottom_row) - len(bottom_belt)]
        + top_belt
        + bottom_belt
        + top_row[len(top_belt) :]
    )
    filling = dict(zip(initial.shape.nodes(), initial.values))
    for k, strip_node in enumerate(refill):
        filling[strip_node] = first + k
    values = [filling[n] for n in shape.nodes()]
    t_A = StandardTableau(shape, values) if a and c else Tableau(shape, values)
    k_A = t_A.value(node)

    garnir_fill = dict(filling)
    for k, strip_node in enumerate(bottom_row + top_row):
        garnir_fill[strip_node] = first + k
    garnir = Tableau(shape, [garnir_fill[n] for n in shape.nodes()])

    bricks = a + c
    n = shape.size
    brick_words = []
    for m in range(1, bricks):
        perm = Permutation.identity(n)
        for x in range(k_A + e * (m - 1), k_A + m * e):
            perm = perm.swap_values(x, x + e)
        brick_words.append(perm.reduced_word())
    coset_reps = _shuffles(a, bricks)
    return GarnirData(
        node=node,
        belt=tuple(top_belt + bottom_belt),
        bricks=bricks,
        a=a,
        c=c,
        tableau=t_A,
        k_A=k_A,
        brick_words=tuple(brick_words),
        coset_reps=coset_reps,
        garnir_tableau=garnir,
    )


def _shuffles(a, b):
    """Minimal length coset representatives of S_a x S_(b-a) in S_b."""
    if b == 0 or a == 0 or a == b:
        return (Permutation.identity(max(b, 1)),)
    reps = []
    for chosen in itertools.combinations(range(1, b + 1), a):
        rest = [x for x in range(1, b + 1) if x not in chosen]
        reps.append(Permutation(list(chosen) + rest))
    reps.sort(key=lambda perm: (perm.length(), perm.reduced_word()))
    return tuple(reps)


def normal_good_nodes(setting, shape, i):
    """Normal removable i-nodes and the good one (or None).

    A removable i-node A is normal when every addable i-node C > A has
    d_A^C(shape) < 0, that is more removable than addable i-nodes lie between them.

    """
    removable = sorted(_i_nodes(setting, shape.removable_nodes(), i))
    addable = _i_nodes(setting, shape.addable_nodes(), i)
    normal = []
    for node in removable:
        if all(d_between(setting, shape, node, upper) < 0 for upper in addable if upper > node):
            normal.append(node)
    good = min(normal) if normal else None
    return normal, good


def good_node(setting, shape, i):
    return normal_good_nodes(setting, shape, i)[1]


def good_addable(setting, shape, i):
    """The addable i-node A that is good in shape + A, if any."""
    for node in _i_nodes(setting, shape.addable_nodes(), i):
        if good_node(setting, shape.add_node(node), i) == node:
            return node
    return None


def crystal_edges(setting, n):
    """Edges (mu, i, mu + A) of the crystal on ranks below n."""
    edges = []
    layer = [Multipartition.empty(setting.level)]
    for _ in range(n):
        following = []
        for shape in layer:
            for i in setting.residues(n):
                node = good_addable(setting, shape, i)
                if node is None:
                    continue
                target = shape.add_node(node)
                edges.append((shape, i, target))
                if target not in following:
                    following.append(target)
        layer = following
    return edges


@functools.lru_cache(maxsize=None)
def _kleshchev(setting, n):
    layer = {Multipartition.empty(setting.level)}
    for _ in range(n):
        following = set()
        for shape in layer:
            for i in setting.residues(n):
                node = good_addable(setting, shape, i)
                if node is not None:
                    following.add(shape.add_node(node))
        layer = following
    return frozenset(layer)


def kleshchev_set(setting, n):
    """Vertices of rank n in the crystal generated from the empty multipartition."""
    return set(_kleshchev(setting, n))


def good_path(setting, shape):
    """Residues and nodes removed along good nodes, listed from the empty shape up.

    Raises
    ------
    NotKleshchevError
        If the walk gets stuck before reaching the empty multipartition

    """
    _check_level(setting, shape)
    path = []
    current = shape
    while current.size:
        for i in setting.residues(current.size):
            node = good_node(setting, current, i)
            if node is not None:
                path.append((i, node))
                current = current.remove_node(node)
                break
        else:
            raise NotKleshchevError("{} is not a Kleshchev multipartition".format(shape))
    path.reverse()
    return path


def is_kleshchev(setting, shape):
    try:
        good_path(setting, shape)
    except NotKleshchevError:
        return False
    return True


def mullineux(setting, shape):
    """Mullineux conjugate, a Kleshchev multipartition for the conjugate charge."""
    if not is_kleshchev(setting, shape):
        raise NotKleshchevError("{} is not a Kleshchev multipartition".format(shape))
    dual = setting.conjugate()
    current = Multipartition.empty(dual.level)
    for i, _ in good_path(setting, shape):
        node = good_addable(dual, current, dual.negate(i))
        if node is None:
            raise NotKleshchevError("Good path of {} does not transfer".format(shape))
        current = current.add_node(node)
    return current


def conjugate(shape):
    return shape.conjugate()


def conjugate_tableau(t):
    """Transpose every component and reverse the component order."""
    level = t.shape.level
    filled = {}
    for node, value in zip(t.shape.nodes(), t.values):
        filled[Node(level + 1 - node.comp, node.col, node.row)] = value
    shape = t.shape.conjugate()
    return Tableau(shape, [filled[n] for n in shape.nodes()])


def restricted_partitions(e, n):
    """e-restricted partitions of n (all partitions when e is None)."""
    result = []
    for parts in partitions(n):
        padded = parts + (0,)
        if e is None or all(padded[k] - padded[k + 1] < e for k in range(len(parts))):
            result.append(Multipartition([parts]))
    return result


def alpha_in(setting, i, n):
    """(Lambda, alpha_i + alpha_(i+1) + ... + alpha_(i+n-1))."""
    return sum(setting.lam(i + k) for k in range(n))


def is_separated(setting, n):
    """e > n and (Lambda, alpha_(i,n)) <= 1 for all i."""
    if setting.finite and setting.e <= n:
        return False
    return all(alpha_in(setting, i, n) <= 1 for i in setting.residues(n))


def require_separated(setting, n):
    if not is_separated(setting, n):
        raise SettingError("{} is not separated for n={}".format(setting, n))


def one_dimensional_words(setting, n):
    """Residue words i^+ = (i, i+1, ...) and i^- = (i, i-1, ...) with (Lambda, alpha_i) != 0."""
    words = []
    starts = sorted({setting.residue(k) for k in setting.charge})
    for i in starts:
        for sign in (1, -1):
            word = tuple(setting.residue(i + sign * k) for k in range(n))
            if word not in words:
                words.append(word)
    return words


# -fin-
