"""Coxeter systems, rational realizations and the action of expressions on roots.

Expressions are plain tuples of generator labels (integers).  A root vector is
an element of the dual space written in the basis of simple roots; when the
realization carries a radical (type affine A has sum of all simple roots equal
to zero) two root vectors are equal when their difference lies in the span of
the radical.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter
from .rational import fraction_to_str, latex_fraction, row_reduce, to_fraction

INFINITY = math.inf


class RootVector:
    """Finitely supported map label -> Fraction, immutable.

    ``==`` compares coefficients literally; use :meth:`Realization.equal` for
    equality modulo the radical.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs=None):
        items = {}
        for label, c in dict(coeffs or {}).items():
            c = to_fraction(c)
            if c:
                items[label] = c
        self._items = tuple(sorted(items.items()))
        self._hash = None

    @classmethod
    def simple(cls, label):
        return cls({label: 1})

    @classmethod
    def zero(cls):
        return cls()

    def coeff(self, label):
        for a, c in self._items:
            if a == label:
                return c
        return Fraction(0)

    def items(self):
        return self._items

    @property
    def support(self):
        return tuple(a for a, _ in self._items)

    def as_dict(self):
        return dict(self._items)

    def is_zero(self):
        return not self._items

    def __add__(self, other):
        d = self.as_dict()
        for a, c in other._items:
            d[a] = d.get(a, 0) + c
        return RootVector(d)

    def __neg__(self):
        return RootVector({a: -c for a, c in self._items})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = to_fraction(k)
        return RootVector({a: k * c for a, c in self._items})

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RootVector):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __repr__(self):
        return f"RootVector({{{', '.join(f'{a}: {fraction_to_str(c)}' for a, c in self._items)}}})"

    def __str__(self):
        return format_root(self)


def format_root(v, latex=False):
    if v.is_zero():
        return "0"
    parts = []
    for a, c in v.items():
        name = f"\\alpha_{{{a}}}" if latex else f"α_{a}"
        mag = abs(c)
        if mag == 1:
            body = name
        elif latex:
            body = f"{latex_fraction(mag)}{name}"
        else:
            body = f"{fraction_to_str(mag)}{name}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


@dataclass(frozen=True)
class CoxeterSystem:
    index_set: tuple
    coxeter_order: tuple  # rows aligned with index_set; INFINITY for no relation

    def __post_init__(self):
        labels = tuple(self.index_set)
        if len(set(labels)) != len(labels):
            raise InvalidParameter("repeated generator label")
        orders = tuple(tuple(row) for row in self.coxeter_order)
        r = len(labels)
        if len(orders) != r or any(len(row) != r for row in orders):
            raise InvalidParameter("Coxeter matrix shape does not match the index set")
        for i in range(r):
            if orders[i][i] != 1:
                raise InvalidParameter("m(a,a) must be 1")
            for j in range(r):
                if orders[i][j] != orders[j][i]:
                    raise InvalidParameter("Coxeter matrix must be symmetric")
                if i != j and not orders[i][j] >= 2:
                    raise InvalidParameter("m(a,b) must be at least 2 for a != b")
        object.__setattr__(self, "index_set", labels)
        object.__setattr__(self, "coxeter_order", orders)

    @property
    def rank(self):
        return len(self.index_set)

    def position(self, a):
        try:
            return self.index_set.index(a)
        except ValueError:
            raise InvalidParameter(f"unknown generator label {a!r}") from None

    def order(self, a, b):
        return self.coxeter_order[self.position(a)][self.position(b)]


@dataclass(frozen=True)
class Realization:
    """Pairing table ``pairing[a][b] = <alpha_b, coroot_a>`` plus a radical.

    Rows and columns of ``pairing`` follow ``system.index_set``.
    """

    system: CoxeterSystem
    pairing: tuple
    radical: tuple = ()

    def __post_init__(self):
        r = self.system.rank
        table = tuple(tuple(to_fraction(x) for x in row) for row in self.pairing)
        if len(table) != r or any(len(row) != r for row in table):
            raise InvalidParameter("pairing table shape does not match the index set")
        for i in range(r):
            if table[i][i] != 2:
                raise InvalidParameter("pairing diagonal must be 2")
        radical = tuple(v if isinstance(v, RootVector) else RootVector(v) for v in self.radical)
        object.__setattr__(self, "pairing", table)
        object.__setattr__(self, "radical", radical)
        for v in radical:
            for a in v.support:
                self.system.position(a)
        for v in radical:
            for a in self.system.index_set:
                if demazure(self, a, v) != 0 or act_generator(self, a, v) != v:
                    raise InvalidParameter(
                        f"radical vector {v} is not stable under s_{a}; refusing to quotient"
                    )
        rows = [[v.coeff(a) for a in self.system.index_set] for v in radical]
        basis, pivots = row_reduce(rows)
        object.__setattr__(self, "_radical_basis", tuple(tuple(b) for b in basis))
        object.__setattr__(self, "_radical_pivots", tuple(pivots))

    @property
    def index_set(self):
        return self.system.index_set

    def pair(self, a, b):
        """<alpha_b, coroot_a>."""
        s = self.system
        return self.pairing[s.position(a)][s.position(b)]

    def simple_root(self, a):
        self.system.position(a)
        return RootVector.simple(a)

    def dense(self, v):
        return [v.coeff(a) for a in self.index_set]

    def normal_form(self, v):
        """Unique representative of ``v`` modulo the radical (pivot coordinates cleared)."""
        if not self._radical_basis:
            return v
        x = self.dense(v)
        for row, p in zip(self._radical_basis, self._radical_pivots):
            f = x[p]
            if f:
                x = [xi - f * ri for xi, ri in zip(x, row)]
        return RootVector(dict(zip(self.index_set, x)))

    def equal(self, v, w):
        return self.normal_form(v - w).is_zero()

    def display_form(self, v):
        """Representative with fewest negative coefficients, then smallest support; printing only."""
        if len(self.radical) != 1:
            return v
        r = self.radical[0]

        def key(w):
            return (sum(1 for _, c in w.items() if c < 0), len(w.support))

        best = v
        for a, rc in r.items():
            cand = v - r.scale(v.coeff(a) / rc)
            if key(cand) < key(best):
                best = cand
        return best

    def format(self, v, latex=False):
        return format_root(self.display_form(v), latex=latex)


def _check_label(real, a):
    real.system.position(a)


def demazure(real, a, v):
    """Demazure operator on a linear element: the pairing of ``v`` with the coroot of ``a``."""
    row = real.pairing[real.system.position(a)]
    pos = real.system.position
    return sum((c * row[pos(b)] for b, c in v.items()), Fraction(0))


def act_generator(real, a, v):
    """s_a acting on v: v - <v, coroot_a> alpha_a."""
    k = demazure(real, a, v)
    if not k:
        return v
    return v - RootVector({a: k})


def act_expression(real, w, v):
    """Apply the expression ``w`` to ``v``; the rightmost letter acts first."""
    for a in reversed(tuple(w)):
        v = act_generator(real, a, v)
    return v


def generalized_demazure_row(real, w, f):
    """Row whose k-th entry is the Demazure operator of letter k applied to w_{>k} acting on f."""
    w = tuple(w)
    row = [Fraction(0)] * len(w)
    v = f
    for k in range(len(w) - 1, -1, -1):
        row[k] = demazure(real, w[k], v)
        v = act_generator(real, w[k], v)
    return row


def check_expression(real, w):
    w = tuple(w)
    for a in w:
        _check_label(real, a)
    return w


def _geometric_pairing(order):
    if order == 1:
        return Fraction(2)
    if order == 2:
        return Fraction(0)
    if order == 3:
        return Fraction(-1)
    if order == INFINITY:
        return Fraction(-2)
    raise InvalidParameter(
        f"m(a,b) = {order} needs an irrational pairing -2cos(pi/{order}); supply a rational table instead"
    )


def geometric_realization(system, radical=()):
    """Realization with <alpha_b, coroot_a> = -2 cos(pi / m(a,b)) for m in {2, 3, inf}."""
    table = [[_geometric_pairing(m) for m in row] for row in system.coxeter_order]
    return Realization(system, table, tuple(radical))


def type_a_coxeter_system(m):
    if not isinstance(m, int) or m < 2:
        raise InvalidParameter(f"type affine A needs m >= 2, got {m!r}")
    labels = tuple(range(m))

    def order(a, b):
        if a == b:
            return 1
        if m == 2:
            return INFINITY
        if (a - b) % m in (1, m - 1):
            return 3
        return 2

    return CoxeterSystem(labels, tuple(tuple(order(a, b) for b in labels) for a in labels))


@lru_cache(maxsize=None)
def make_type_a_realization(m):
    """Geometric realization of affine A_{m-1} on I_m = {0..m-1}, modulo sum of simple roots."""
    system = type_a_coxeter_system(m)
    return geometric_realization(system, radical=(RootVector({a: 1 for a in range(m)}),))


def _infer_order(p, q):
    prod = p * q
    known = {0: 2, 1: 3, 2: 4, 3: 6}
    if prod in known:
        return known[prod]
    if prod >= 4:
        return INFINITY
    raise InvalidParameter(f"pairing entries {p}, {q} do not match any Coxeter order")


def realization_from_dict(doc):
    """Build a realization from the JSON document shape ``{index_set, pairing, radical}``.

    An optional ``coxeter_matrix`` (integers, ``null`` for infinity) overrides the orders
    otherwise inferred from products of opposite pairing entries.
    """
    try:
        labels = tuple(int(a) for a in doc["index_set"])
        table = [[to_fraction(x) for x in row] for row in doc["pairing"]]
    except (KeyError, TypeError) as exc:
        raise InvalidParameter(f"malformed realization document: {exc}") from exc
    r = len(labels)
    if len(table) != r or any(len(row) != r for row in table):
        raise InvalidParameter("pairing table shape does not match the index set")
    if "coxeter_matrix" in doc:
        orders = [[INFINITY if x is None else int(x) for x in row] for row in doc["coxeter_matrix"]]
    else:
        orders = [
            [1 if i == j else _infer_order(table[i][j], table[j][i]) for j in range(r)]
            for i in range(r)
        ]
    radical = []
    for coeffs in doc.get("radical", []):
        if len(coeffs) != r:
            raise InvalidParameter("radical vector length does not match the index set")
        radical.append(RootVector({a: to_fraction(c) for a, c in zip(labels, coeffs)}))
    system = CoxeterSystem(labels, tuple(tuple(row) for row in orders))
    return Realization(system, tuple(tuple(row) for row in table), tuple(radical))


def realization_to_dict(real):
    labels = real.index_set
    doc = {
        "index_set": list(labels),
        "pairing": [[fraction_to_str(x) for x in row] for row in real.pairing],
        "radical": [[fraction_to_str(v.coeff(a)) for a in labels] for v in real.radical],
    }
    doc["coxeter_matrix"] = [
        [None if x == INFINITY else int(x) for x in row] for row in real.system.coxeter_order
    ]
    return doc


def load_realization(path):
    with open(path) as fh:
        return realization_from_dict(json.load(fh))
