"""Degree-preserving algebra maps A(T) -> A(S) given by a scalar matrix.

A morphism sends X_r to sum_j gamma[j][r] Y_j.  It is well defined exactly when
the images satisfy the defining relations of A(T) inside A(S).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .coxeter import check_expression
from .errors import ConsistencyError, InvalidMove, InvalidParameter
from .nilalg import generator, indices_of, one, zero
from .rational import determinant, fraction_to_str, to_fraction
from .trimat import TriMatrix, nabla, t_matrix


@dataclass(frozen=True)
class MorphismSpec:
    source: TriMatrix
    target: TriMatrix
    gamma: tuple  # target.n rows, source.n columns

    def __post_init__(self):
        m, n = self.target.n, self.source.n
        gamma = tuple(tuple(to_fraction(x) for x in row) for row in self.gamma)
        if len(gamma) != m or any(len(row) != n for row in gamma):
            raise InvalidParameter(f"gamma must have shape ({m}, {n})")
        object.__setattr__(self, "gamma", gamma)

    def image(self, r):
        """gamma(X_r) as an element of A(target)."""
        if not 1 <= r <= self.source.n:
            raise InvalidParameter(f"generator index {r} outside 1..{self.source.n}")
        out = zero(self.target)
        for j in range(self.target.n):
            c = self.gamma[j][r - 1]
            if c:
                out = out + generator(self.target, j + 1) * c
        return out

    @cached_property
    def images(self):
        return tuple(self.image(r) for r in range(1, self.source.n + 1))

    @cached_property
    def valid(self):
        return is_morphism(self)

    def to_dict(self):
        return {
            "gamma": [[fraction_to_str(x) for x in row] for row in self.gamma],
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
        }

    @classmethod
    def from_dict(cls, doc):
        try:
            source = TriMatrix.from_dict(doc["source"])
            target = TriMatrix.from_dict(doc["target"])
            gamma = doc["gamma"]
        except (KeyError, TypeError) as exc:
            raise InvalidParameter(f"malformed MorphismSpec document: {exc}") from exc
        if not gamma and target.n == 0:
            gamma = []
        return cls(source, target, tuple(tuple(row) for row in gamma))


def is_morphism(spec):
    """Check gamma(X_r)^2 = sum_{j<r} t_rj gamma(X_j) gamma(X_r) in A(target) for every r."""
    imgs = spec.images
    t = spec.source
    for r in range(1, t.n + 1):
        g = imgs[r - 1]
        rhs = zero(spec.target)
        for j in range(1, r):
            c = t.t(r, j)
            if c:
                rhs = rhs + imgs[j - 1] * g * c
        if g * g != rhs:
            return False
    return True


def gamma_determinant(spec):
    if spec.source.n != spec.target.n:
        raise InvalidParameter("determinant needs a square gamma")
    return determinant(spec.gamma)


def images_product(spec):
    out = one(spec.target)
    for g in spec.images:
        out = out * g
    return out


def is_isomorphism(spec):
    """Morphism with n = m and invertible gamma; cross-checked against prod gamma(X_i) != 0."""
    if spec.source.n != spec.target.n:
        return False
    if not spec.valid:
        return False
    by_det = gamma_determinant(spec) != 0
    by_product = not images_product(spec).is_zero()
    if by_det != by_product:
        raise ConsistencyError(
            f"invertibility of gamma ({by_det}) disagrees with nonvanishing image product ({by_product})"
        )
    return by_det


def apply(spec, x, verified=False):
    """Image of x under the algebra map; checks the morphism relations unless ``verified``."""
    if x.ambient != spec.source:
        raise InvalidParameter("element does not live in the source algebra")
    if not verified and not spec.valid:
        raise InvalidParameter("gamma does not define a morphism")
    imgs = spec.images
    out = zero(spec.target)
    for mask, c in x.items():
        term = one(spec.target) * c
        for i in indices_of(mask):
            term = term * imgs[i - 1]
        out = out + term
    return out


def compose(second, first):
    """second o first; requires first.target == second.source."""
    if first.target != second.source:
        raise InvalidParameter("morphisms are not composable")
    m, k, n = second.target.n, first.target.n, first.source.n
    gamma = [
        [sum((second.gamma[i][l] * first.gamma[l][j] for l in range(k)), Fraction(0)) for j in range(n)]
        for i in range(m)
    ]
    return MorphismSpec(first.source, second.target, tuple(tuple(r) for r in gamma))


def trivial_morphism(t, s):
    return MorphismSpec(t, s, tuple((0,) * t.n for _ in range(s.n)))


def identity_morphism(t):
    return MorphismSpec(t, t, _identity(t.n))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def natural_injection(t, c, s):
    """X_i -> Z_i from A(T) into A(T nabla_C S)."""
    target = nabla(t, c, s)
    n, m = t.n, s.n
    gamma = _identity(n) + tuple((0,) * n for _ in range(m))
    return MorphismSpec(t, target, gamma)


def natural_projection(t, c, s):
    """Z_j -> 0 for j <= n and Z_{n+j} -> Y_j, from A(T nabla_C S) onto A(S)."""
    source = nabla(t, c, s)
    n, m = t.n, s.n
    gamma = tuple((0,) * n + row for row in _identity(m))
    return MorphismSpec(source, s, gamma)


def nabla_zero_swap(t, s):
    """Z_r -> V_{r+m} (r <= n), Z_{n+r} -> V_r: A(T nabla_0 S) -> A(S nabla_0 T)."""
    n, m = t.n, s.n
    source = nabla(t, [(0,) * n for _ in range(m)], s)
    target = nabla(s, [(0,) * m for _ in range(n)], t)
    gamma = [[0] * (n + m) for _ in range(n + m)]
    for r in range(n):
        gamma[r + m][r] = 1
    for r in range(m):
        gamma[r][n + r] = 1
    return MorphismSpec(source, target, tuple(tuple(row) for row in gamma))


def letters_commute(real, b, c):
    """True when s_b and s_c commute (m(b,c) = 2); a letter never commutes past itself here."""
    return b != c and real.system.order(b, c) == 2


def commuting_swap(real, u, p):
    """Swap letters p, p+1 (1-based) of ``u`` and return (v, transposition morphism T_u -> T_v)."""
    u = check_expression(real, u)
    if not 1 <= p < len(u):
        raise InvalidParameter(f"position {p} has no right neighbour in an expression of length {len(u)}")
    b, c = u[p - 1], u[p]
    if not letters_commute(real, b, c):
        raise InvalidMove(f"s_{b} and s_{c} at positions {p}, {p + 1} do not commute")
    v = u[: p - 1] + (c, b) + u[p + 1 :]
    n = len(u)
    gamma = [list(row) for row in _identity(n)]
    gamma[p - 1][p - 1] = gamma[p][p] = 0
    gamma[p][p - 1] = gamma[p - 1][p] = 1
    spec = MorphismSpec(t_matrix(real, u), t_matrix(real, v), tuple(tuple(r) for r in gamma))
    return v, spec
