"""Strictly lower triangular matrices and the block products built from them."""

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import (
    Realization,
    RootVector,
    act_expression,
    act_generator,
    check_expression,
    demazure,
    generalized_demazure_row,
)
from .errors import InvalidParameter
from .rational import fraction_to_str, latex_fraction, to_fraction


@dataclass(frozen=True, eq=False)
class TriMatrix:
    """An n x n strictly lower triangular matrix of Fractions.

    ``rows`` is 0-based; :meth:`t` reads entries with the 1-based indices used in
    relations (``t(i, j)`` is the coefficient of X_j X_i in X_i^2).
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.rows)
        n = len(rows)
        for k, row in enumerate(rows):
            if len(row) != n:
                raise InvalidParameter("matrix must be square")
            for j in range(k, n):
                if row[j] != 0:
                    raise InvalidParameter(
                        f"entry ({k + 1},{j + 1}) = {row[j]} is on or above the diagonal"
                    )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash(rows))

    @classmethod
    def zero(cls, n):
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self):
        return len(self.rows)

    def t(self, i, j):
        return self.rows[i - 1][j - 1]

    def lower_entries(self):
        for k in range(self.n):
            for j in range(k):
                yield self.rows[k][j]

    def leading(self, k):
        """Top-left k x k block."""
        return TriMatrix(tuple(row[:k] for row in self.rows[:k]))

    def __eq__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(fraction_to_str(x) for x in row) + "]" for row in self.rows)
        return f"TriMatrix([{body}])"

    def to_dict(self):
        return {"n": self.n, "entries": [[fraction_to_str(x) for x in row] for row in self.rows]}

    @classmethod
    def from_dict(cls, doc):
        try:
            entries = doc["entries"]
            n = int(doc["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed TriMatrix document: {exc}") from exc
        if len(entries) != n:
            raise InvalidParameter("entries do not match n")
        return cls(tuple(tuple(row) for row in entries))

    def to_text(self):
        if self.n == 0:
            return "[]"
        cells = [[fraction_to_str(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def to_latex(self):
        return latex_bmatrix([[latex_fraction(x) for x in row] for row in self.rows])


def latex_bmatrix(cells):
    if not cells:
        return "\\left[\\;\\right]"
    body = " \\\\\n".join("  " + " & ".join(row) for row in cells)
    return "\\left[\\begin{matrix}\n" + body + "\n\\end{matrix}\\right]"


def _rect(c, nrows, ncols):
    c = [tuple(to_fraction(x) for x in row) for row in c]
    if len(c) != nrows or any(len(row) != ncols for row in c):
        shape = (len(c), len(c[0]) if c else 0)
        raise InvalidParameter(f"C has shape {shape}, expected {(nrows, ncols)}")
    return c


def nabla(t, c, s):
    """Block matrix [[T, 0], [C, S]] with C of shape (s.n, t.n)."""
    n, m = t.n, s.n
    c = _rect(c, m, n)
    rows = [row + (Fraction(0),) * m for row in t.rows]
    rows += [c[k] + s.rows[k] for k in range(m)]
    return TriMatrix(tuple(rows))


def t_matrix(real, w):
    """Matrix with entry (k, j) = d_{a_j}(s_{a_{j+1}} ... s_{a_{k-1}} . alpha_{a_k}) for j < k."""
    w = check_expression(real, w)
    n = len(w)
    rows = []
    for k in range(n):
        row = [Fraction(0)] * n
        v = RootVector.simple(w[k])
        for j in range(k - 1, -1, -1):
            row[j] = demazure(real, w[j], v)
            v = act_generator(real, w[j], v)
        rows.append(tuple(row))
    return TriMatrix(tuple(rows))


def q_column(real, w):
    """Column [s_{b_1} ... s_{b_{k-1}} . alpha_{b_k}]_k."""
    w = check_expression(real, w)
    return tuple(act_expression(real, w[:k], RootVector.simple(w[k])) for k in range(len(w)))


def demazure_matrix(real, u, q):
    """Row-stack of generalized Demazure rows of ``u`` over the entries of ``q``."""
    return [generalized_demazure_row(real, u, f) for f in q]


@dataclass(frozen=True, eq=False)
class ExtendedTriMatrix:
    """[Q, T] for an expression, tagged with that expression and its realization."""

    realization: Realization
    source: tuple
    q: tuple
    t: TriMatrix

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "q", tuple(self.q))
        if not (len(self.source) == len(self.q) == self.t.n):
            raise InvalidParameter("source, q and t must have the same length")

    @property
    def n(self):
        return self.t.n

    def __eq__(self, other):
        if not isinstance(other, ExtendedTriMatrix):
            return NotImplemented
        real = self.realization
        return (
            real == other.realization
            and self.source == other.source
            and self.t == other.t
            and all(real.equal(a, b) for a, b in zip(self.q, other.q))
        )

    __hash__ = None

    def to_dict(self):
        labels = self.realization.index_set
        doc = self.t.to_dict()
        doc["source"] = list(self.source)
        doc["q"] = [[fraction_to_str(v.coeff(a)) for a in labels] for v in self.q]
        return doc

    @classmethod
    def from_dict(cls, doc, realization):
        t = TriMatrix.from_dict(doc)
        labels = realization.index_set
        q = []
        for coeffs in doc["q"]:
            if len(coeffs) != len(labels):
                raise InvalidParameter("q row length does not match the realization rank")
            q.append(RootVector({a: to_fraction(c) for a, c in zip(labels, coeffs)}))
        return cls(realization, tuple(int(a) for a in doc["source"]), tuple(q), t)

    def to_text(self):
        real = self.realization
        qs = [real.format(v) for v in self.q]
        cells = [[fraction_to_str(x) for x in row] for row in self.t.rows]
        qw = max((len(s) for s in qs), default=0)
        cw = max((len(c) for row in cells for c in row), default=1)
        lines = []
        for s, row in zip(qs, cells):
            lines.append("[" + s.ljust(qw) + " | " + " ".join(c.rjust(cw) for c in row) + "]")
        return "\n".join(lines) if lines else "[]"

    def to_latex(self):
        real = self.realization
        cells = [
            [real.format(v, latex=True)] + [latex_fraction(x) for x in row]
            for v, row in zip(self.q, self.t.rows)
        ]
        return latex_bmatrix(cells)


def extended_t_matrix(real, w):
    w = check_expression(real, w)
    return ExtendedTriMatrix(real, w, q_column(real, w), t_matrix(real, w))


def bnabla(real, e1, e2):
    """Extended product: T-part is T_u nabla_C T_w with C = d_u(Q_w); Q-part is [Q_u; u . Q_w]."""
    if e1.realization != real or e2.realization != real:
        raise InvalidParameter("extended matrices were built over a different realization")
    u = e1.source
    c = demazure_matrix(real, u, e2.q)
    t = nabla(e1.t, c, e2.t)
    q = e1.q + tuple(act_expression(real, u, f) for f in e2.q)
    return ExtendedTriMatrix(real, u + e2.source, q, t)
