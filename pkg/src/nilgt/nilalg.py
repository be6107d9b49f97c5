"""The nil graded algebra A(T) and exact arithmetic in its monomial basis.

A(T) is generated by X_1..X_n with X_1^2 = 0 and X_i^2 = sum_{j<i} t_ij X_j X_i.
Elements are stored in the square-free monomial basis; a basis monomial is a
bit mask whose bit ``i - 1`` stands for X_i.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter, ResourceError
from .rational import fraction_to_str, latex_fraction, to_fraction
from .trimat import TriMatrix

MAX_GENERATORS = 30

INHOMOGENEOUS = "inhomogeneous"

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"


def check_size(n, limit=None):
    limit = MAX_GENERATORS if limit is None else limit
    if n > limit:
        raise ResourceError(f"{n} generators exceed the configured limit of {limit} (basis has 2^n elements)")


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class ExponentMonomial:
    exponents: tuple
    coeff: Fraction = Fraction(1)


class _Reducer:
    """Memoized rewriting for one matrix T."""

    def __init__(self, t):
        check_size(t.n)
        self.t = t
        self.n = t.n
        self.lower = [
            [(j, c) for j, c in enumerate(t.rows[i][:i]) if c] for i in range(t.n)
        ]
        self._basis_cache = {}

    def reduce(self, exponents, strategy=LEFTMOST):
        """Rewrite a monomial (coefficient 1) into the square-free basis."""
        n = self.n
        exponents = tuple(exponents)
        if len(exponents) != n or any(e < 0 for e in exponents):
            raise InvalidParameter(f"exponent vector {exponents} does not fit n = {n}")
        result = {}
        # Every rewrite moves one unit of degree to a smaller index, so it strictly
        # lowers the reversed-lexicographic order; popping the largest key first
        # collects all contributions to a monomial before it is expanded.
        pending = {exponents: Fraction(1)}
        heap = [_heap_key(exponents)]
        while heap:
            key = heapq.heappop(heap)
            exps = _from_heap_key(key)
            coeff = pending.pop(exps)
            if not coeff:
                continue
            i = _violating_index(exps, strategy)
            if i is None:
                mask = mask_of(k + 1 for k, e in enumerate(exps) if e)
                c = result.get(mask, 0) + coeff
                if c:
                    result[mask] = c
                else:
                    result.pop(mask, None)
                continue
            for j, tij in self.lower[i]:
                new = list(exps)
                new[i] -= 1
                new[j] += 1
                new = tuple(new)
                if new in pending:
                    pending[new] += coeff * tij
                else:
                    pending[new] = coeff * tij
                    heapq.heappush(heap, _heap_key(new))
        return result

    def basis_product(self, a, b):
        if not a & b:
            return {a | b: Fraction(1)}
        key = (a, b) if a <= b else (b, a)
        hit = self._basis_cache.get(key)
        if hit is None:
            exps = tuple(((a >> k) & 1) + ((b >> k) & 1) for k in range(self.n))
            hit = self.reduce(exps)
            self._basis_cache[key] = hit
        return hit


def _heap_key(exps):
    return tuple(-e for e in reversed(exps))


def _from_heap_key(key):
    return tuple(-e for e in reversed(key))


def _violating_index(exps, strategy):
    if strategy == LEFTMOST:
        for i, e in enumerate(exps):
            if e >= 2:
                return i
        return None
    if strategy == RIGHTMOST:
        for i in range(len(exps) - 1, -1, -1):
            if exps[i] >= 2:
                return i
        return None
    raise InvalidParameter(f"unknown reduction strategy {strategy!r}")


@lru_cache(maxsize=64)
def _reducer(t):
    return _Reducer(t)


class AlgebraElement:
    """Element of A(T) in the monomial basis (mask -> nonzero Fraction)."""

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient, terms=None):
        if not isinstance(ambient, TriMatrix):
            raise InvalidParameter("ambient must be a TriMatrix")
        check_size(ambient.n)
        full = (1 << ambient.n) - 1
        clean = {}
        for mask, c in dict(terms or {}).items():
            if mask & ~full or mask < 0:
                raise InvalidParameter(f"subset {indices_of(mask)} is outside 1..{ambient.n}")
            c = to_fraction(c)
            if c:
                clean[mask] = clean.get(mask, 0) + c
        self.ambient = ambient
        self._terms = {k: v for k, v in clean.items() if v}

    @property
    def n(self):
        return self.ambient.n

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _monomial_order(kv[0]))

    def coeff(self, indices):
        return self._terms.get(mask_of(indices), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _same(self, other):
        if self.ambient != other.ambient:
            raise InvalidParameter("elements live in algebras with different defining matrices")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + one(self.ambient) * other
        self._same(other)
        d = dict(self._terms)
        for k, v in other._terms.items():
            d[k] = d.get(k, 0) + v
        return AlgebraElement(self.ambient, d)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ambient, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        k = to_fraction(other)
        return AlgebraElement(self.ambient, {m: k * v for m, v in self._terms.items()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InvalidParameter("exponent must be a nonnegative integer")
        result = one(self.ambient)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            if other == 0:
                return not self._terms
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    __hash__ = None

    def degree(self):
        return degree(self)

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {self.to_text()})"

    def to_text(self, name="X"):
        return format_element(self, name=name)

    def to_latex(self, name="X"):
        return format_element(self, name=name, latex=True)

    def to_dict(self):
        return {
            "n": self.n,
            "terms": [
                {"subset": list(indices_of(m)), "coeff": fraction_to_str(c)} for m, c in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, doc, ambient):
        try:
            n = int(doc["n"])
            raw = doc["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed AlgebraElement document: {exc}") from exc
        if n != ambient.n:
            raise InvalidParameter(f"element has n = {n} but the algebra has {ambient.n} generators")
        terms = {}
        for term in raw:
            subset = [int(i) for i in term["subset"]]
            if len(set(subset)) != len(subset) or any(not 1 <= i <= n for i in subset):
                raise InvalidParameter(f"bad subset {subset}")
            m = mask_of(subset)
            terms[m] = terms.get(m, 0) + to_fraction(term["coeff"])
        return cls(ambient, terms)


def _monomial_order(mask):
    idx = indices_of(mask)
    return (len(idx), idx)


def one(t):
    return AlgebraElement(t, {0: 1})


def zero(t):
    return AlgebraElement(t)


def generator(t, i):
    if not 1 <= i <= t.n:
        raise InvalidParameter(f"generator index {i} outside 1..{t.n}")
    return AlgebraElement(t, {1 << (i - 1): 1})


def monomial(t, indices, coeff=1):
    """Square-free monomial X_{i_1}...X_{i_k}; repeated indices are multiplied out."""
    indices = list(indices)
    if len(set(indices)) == len(indices):
        for i in indices:
            if not 1 <= i <= t.n:
                raise InvalidParameter(f"generator index {i} outside 1..{t.n}")
        return AlgebraElement(t, {mask_of(indices): coeff})
    exps = [0] * t.n
    for i in indices:
        exps[i - 1] += 1
    return reduce_monomial(t, ExponentMonomial(tuple(exps), to_fraction(coeff)))


def reduce_monomial(t, m, strategy=LEFTMOST):
    """Rewrite X_1^{e_1}...X_n^{e_n} into the monomial basis.

    The default rewrites X_i^2 at the leftmost index with exponent >= 2; ``strategy``
    may be ``"rightmost"`` for the confluence check.
    """
    if not isinstance(m, ExponentMonomial):
        m = ExponentMonomial(tuple(m))
    red = _reducer(t)
    terms = red.reduce(m.exponents, strategy)
    return AlgebraElement(t, {k: m.coeff * v for k, v in terms.items()})


def multiply(x, y):
    x._same(y)
    red = _reducer(x.ambient)
    out = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            for mask, c in red.basis_product(a, b).items():
                out[mask] = out.get(mask, 0) + ca * cb * c
    return AlgebraElement(x.ambient, out)


def multiply_structure(x, y):
    """Product through the subset structure constants.

    H(J1) H(J2) = H(J1 xor J2) * prod_{i in J1 & J2} H(i)^2 with
    H(i)^2 = sum_{j<i} t_ij H({j, i}); disjoint subsets multiply by union.
    Independent of the exponent rewriting used by :func:`multiply`.
    """
    x._same(y)
    t = x.ambient
    cache = {}

    def hprod(a, b):
        if not a & b:
            return {a | b: Fraction(1)}
        key = (min(a, b), max(a, b))
        if key in cache:
            return cache[key]
        acc = {a ^ b: Fraction(1)}
        common = a & b
        for i in reversed(indices_of(common)):
            square = {mask_of((j, i)): c for j, c in enumerate(t.rows[i - 1][: i - 1], 1) if c}
            acc = lin_mul(acc, square)
        cache[key] = acc
        return acc

    def lin_mul(p, q):
        out = {}
        for a, ca in p.items():
            for b, cb in q.items():
                for m, c in hprod(a, b).items():
                    out[m] = out.get(m, 0) + ca * cb * c
        return {k: v for k, v in out.items() if v}

    return AlgebraElement(t, lin_mul(x._terms, y._terms))


def generator_power(t, i, k):
    if not 1 <= i <= t.n:
        raise InvalidParameter(f"generator index {i} outside 1..{t.n}")
    if not isinstance(k, int) or k < 0:
        raise InvalidParameter("power must be a nonnegative integer")
    # multiplying by the single generator keeps each step cheap; rewriting X_i^k
    # directly would walk through every exponent vector of degree k
    x = generator(t, i)
    out = one(t)
    for _ in range(k):
        out = out * x
        if out.is_zero():
            break
    return out


def full_product(t):
    """X_1 X_2 ... X_n, the top-degree basis monomial."""
    check_size(t.n)
    return AlgebraElement(t, {(1 << t.n) - 1: 1})


def complement(x_mask, n):
    return ((1 << n) - 1) & ~x_mask


def dimension(t):
    check_size(t.n)
    if full_product(t).is_zero():  # pragma: no cover - A(T) is always strongly associated
        raise AssertionError("X_1...X_n vanished")
    return 2 ** t.n


def degree(x):
    """2|J| when every term has |J| generators, ``None`` for zero, else ``"inhomogeneous"``."""
    sizes = {bin(m).count("1") for m in x._terms}
    if not sizes:
        return None
    if len(sizes) > 1:
        return INHOMOGENEOUS
    return 2 * sizes.pop()


def _magnitude(mag, latex, standalone):
    if latex:
        return latex_fraction(mag)
    if standalone or mag.denominator == 1:
        return fraction_to_str(mag)
    return f"({fraction_to_str(mag)})"


def _monomial_name(indices, name, latex):
    if latex:
        return "".join(f"{name}_{{{i}}}" for i in indices)
    return "".join(f"{name}_{i}" for i in indices)


def format_terms(pairs, name="X", latex=False):
    """Render [(indices, coeff)] as a signed sum; ``()`` is the unit monomial."""
    if not pairs:
        return "0"
    out = []
    for k, (indices, c) in enumerate(pairs):
        c = Fraction(c)
        mag = abs(c)
        if indices:
            scalar = "" if mag == 1 else _magnitude(mag, latex, standalone=False)
            body = scalar + _monomial_name(indices, name, latex)
        else:
            body = _magnitude(mag, latex, standalone=True)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


def format_element(x, name="X", latex=False):
    return format_terms([(indices_of(m), c) for m, c in x.items()], name=name, latex=latex)


def relations(t):
    """[(r, [(j, t_rj), ...])] for X_r^2 = sum_j t_rj X_j X_r, zero coefficients dropped."""
    return [(r, [(j, t.t(r, j)) for j in range(1, r) if t.t(r, j)]) for r in range(1, t.n + 1)]


def presentation_lines(t, name="X", latex=False):
    lines = []
    for r, rhs in relations(t):
        if latex:
            lhs = f"{name}_{{{r}}}^2"
        else:
            lhs = f"{name}_{r}^2"
        body = format_terms([((j, r), c) for j, c in rhs], name=name, latex=latex)
        lines.append(f"{lhs} = {body}")
    return lines


def presentation_text(t, name="X"):
    return "\n".join(presentation_lines(t, name=name))


def presentation_latex(t, name="X"):
    lines = presentation_lines(t, name=name, latex=True)
    body = " \\\\\n".join("  " + line.replace(" = ", " &= ", 1) for line in lines)
    return "\\begin{aligned}\n" + body + "\n\\end{aligned}"
