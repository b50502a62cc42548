"""Graded wedge square of a 2-term complex and its induced bracket system.

For V = V0 + V1 the wedge square has exactly three graded pieces:

* degree 0: wedges of two V0 vectors (antisymmetric),
* degree 1: mixed wedges x ^ f, normalized to (V0 index, V1 index),
* degree 2: wedges of two V1 vectors, symmetric under swap because both
  factors are odd.

The unary/binary/ternary brackets induced by d, l3, l5 act on this space;
checking the strong homotopy Leibniz relations at arities up to four is an
exact, finite computation here.
"""

import itertools

from .errors import DegreeOverflow, DimensionMismatch, PreconditionFailed
from .exactlin import rational, skew_canon
from .report import VerificationReport


def wedge_factors(deg_x, idx_x, deg_y, idx_y):
    """Canonical (degree, key, sign) of the wedge of two graded basis factors.

    Swapping a degree-0 past a degree-1 factor costs a sign; two degree-1
    factors commute (odd times odd), so diagonal keys survive in degree 2.
    """
    if deg_x == 0 and deg_y == 0:
        if idx_x == idx_y:
            return None
        (a, b), sign = skew_canon((idx_x, idx_y))
        return (0, (a, b), sign)
    if deg_x == 0 and deg_y == 1:
        return (1, (idx_x, idx_y), 1)
    if deg_x == 1 and deg_y == 0:
        return (1, (idx_y, idx_x), -1)
    if deg_x == 1 and deg_y == 1:
        a, b = min(idx_x, idx_y), max(idx_x, idx_y)
        return (2, (a, b), 1)
    raise DegreeOverflow("wedge factors of degrees %d and %d" % (deg_x, deg_y))


class WedgeElement:
    """Formal rational combination of graded basis wedges."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = rational(coeff)
            if coeff != 0:
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, degree, key, coeff=1):
        return cls({(degree, key): coeff})

    @classmethod
    def from_factors(cls, deg_x, idx_x, deg_y, idx_y, coeff=1):
        canon = wedge_factors(deg_x, idx_x, deg_y, idx_y)
        if canon is None:
            return cls()
        degree, key, sign = canon
        return cls({(degree, key): rational(coeff) * sign})

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, rational(0)) + coeff
        return WedgeElement(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rational(c)
        return WedgeElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, WedgeElement) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def degrees(self):
        return sorted({deg for deg, _ in self.terms})

    def __repr__(self):
        if not self.terms:
            return "WedgeElement(0)"
        return "WedgeElement(%s)" % ", ".join(
            "%s*%s" % (c, (deg, key)) for (deg, key), c in self.items())


def basis_wedges(algebra):
    """Every graded basis wedge of the 2-term complex, listed by degree."""
    out = []
    for i, j in itertools.combinations(range(algebra.dim0), 2):
        out.append((0, (i, j)))
    for i in range(algebra.dim0):
        for a in range(algebra.dim1):
            out.append((1, (i, a)))
    for a in range(algebra.dim1):
        for b in range(a, algebra.dim1):
            out.append((2, (a, b)))
    return out


# ---------------------------------------------------------------------------
# the induced maps on basis wedges
# ---------------------------------------------------------------------------

def _lt1_basis(L, degree, key):
    out = WedgeElement()
    if degree == 0:
        return out
    if degree == 1:
        i, a = key
        for m, c in enumerate(L.d_column(a)):
            if c != 0:
                out = out + WedgeElement.from_factors(0, i, 0, m, c)
        return out
    a, b = key
    for m, c in enumerate(L.d_column(b)):
        if c != 0:
            out = out + WedgeElement.basis(1, (m, a), c)
    for m, c in enumerate(L.d_column(a)):
        if c != 0:
            out = out + WedgeElement.basis(1, (m, b), c)
    return out


def _lt3_basis(L, w1, w2):
    d1, k1 = w1
    d2, k2 = w2
    out = WedgeElement()
    if d1 == 0 and d2 == 0:
        i, j = k1
        k, l = k2
        for m, c in enumerate(L.l3_zero(i, j, l)):
            if c != 0:
                out = out + WedgeElement.from_factors(0, k, 0, m, c)
        for m, c in enumerate(L.l3_zero(i, j, k)):
            if c != 0:
                out = out + WedgeElement.from_factors(0, m, 0, l, c)
        return out
    if d1 == 0 and d2 == 1:
        i, j = k1
        k, a = k2
        for b, c in enumerate(L.l3_one(i, j, a)):
            if c != 0:
                out = out + WedgeElement.basis(1, (k, b), c)
        for m, c in enumerate(L.l3_zero(i, j, k)):
            if c != 0:
                out = out + WedgeElement.basis(1, (m, a), c)
        return out
    if d1 == 1 and d2 == 0:
        i, a = k1
        k, l = k2
        # l3(x_i ^ f_a, z) = l3(x_i, f_a, z) = -l3(x_i, z, f_a)
        for b, c in enumerate(L.l3_one(i, l, a)):
            if c != 0:
                out = out + WedgeElement.basis(1, (k, b), -c)
        for b, c in enumerate(L.l3_one(i, k, a)):
            if c != 0:
                out = out + WedgeElement.basis(1, (l, b), c)
        return out
    if d1 == 1 and d2 == 1:
        i, a = k1
        k, b = k2
        for cidx, c in enumerate(L.l3_one(i, k, a)):
            if c != 0:
                out = out + WedgeElement.from_factors(1, cidx, 1, b, -c)
        return out
    if d1 == 0 and d2 == 2:
        i, j = k1
        a, b = k2
        for cidx, c in enumerate(L.l3_one(i, j, b)):
            if c != 0:
                out = out + WedgeElement.from_factors(1, a, 1, cidx, c)
        for cidx, c in enumerate(L.l3_one(i, j, a)):
            if c != 0:
                out = out + WedgeElement.from_factors(1, cidx, 1, b, c)
        return out
    # every remaining combination feeds two degree-1 arguments into l3
    return out


def _lt5_basis(L, w1, w2, w3):
    d1, k1 = w1
    d2, k2 = w2
    d3, k3 = w3
    out = WedgeElement()
    if d1 != 0 or d2 != 0 or d3 > 1:
        return out
    i, j = k1
    k, l = k2
    if d3 == 0:
        m, n = k3
        for b, c in enumerate(L.l5_basis(i, j, k, l, n)):
            if c != 0:
                out = out + WedgeElement.basis(1, (m, b), c)
        for b, c in enumerate(L.l5_basis(i, j, k, l, m)):
            if c != 0:
                out = out + WedgeElement.basis(1, (n, b), -c)
        return out
    m, a = k3
    for b, c in enumerate(L.l5_basis(i, j, k, l, m)):
        if c != 0:
            out = out + WedgeElement.from_factors(1, b, 1, a, c)
    return out


def induced_bracket(L, n, args):
    """The arity-n induced bracket, multilinear over WedgeElements.

    n = 1, 2, 3 are the unary/binary/ternary maps induced by d, l3, l5;
    higher arities vanish identically on 2-term data.
    """
    if n not in (1, 2, 3):
        raise DimensionMismatch("supported arities are 1, 2, 3")
    if len(args) != n:
        raise DimensionMismatch("arity %d needs %d arguments" % (n, n))
    basis_map = {1: _lt1_basis, 2: _lt3_basis, 3: _lt5_basis}[n]
    out = WedgeElement()
    for combo in itertools.product(*(arg.items() for arg in args)):
        coeff = rational(1)
        keys = []
        for key, c in combo:
            coeff *= c
            keys.append(key)
        term = basis_map(L, *keys) if n > 1 else basis_map(L, *keys[0])
        if not term.is_zero():
            out = out + term.scale(coeff)
    return out


def _induced_or_zero(L, arity, args):
    if arity > 3:
        return WedgeElement()
    return induced_bracket(L, arity, args)


# ---------------------------------------------------------------------------
# the strong homotopy Leibniz relation
# ---------------------------------------------------------------------------

def _unshuffles(count, front_size):
    """(front, inner) index splits of range(count), each block sorted."""
    universe = range(count)
    for front in itertools.combinations(universe, front_size):
        front_set = set(front)
        inner = tuple(x for x in universe if x not in front_set)
        yield front, inner


def _perm_sign(values):
    sign = 1
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            if values[a] > values[b]:
                sign = -sign
    return sign


def _koszul_sign(degrees, values):
    """Parity sign of reordering graded symbols into the given value order."""
    sign = 1
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            if values[a] > values[b] and degrees[values[a]] % 2 \
                    and degrees[values[b]] % 2:
                sign = -sign
    return sign


def relation_terms(n):
    """Static term skeleton of the arity-n relation.

    Yields (i, j, k, front, inner, sign) with 1-based k; ``front`` and
    ``inner`` index the first k-1 arguments, argument k-1 (0-based) closes
    the inner bracket, and the paper's two explicit sign exponents are
    folded into the tuple-independent part of ``sign`` later.
    """
    for j in range(1, n + 1):
        i = n + 1 - j
        for k in range(j, n + 1):
            for front, inner in _unshuffles(k - 1, k - j):
                values = front + inner
                base = (-1) ** ((k + 1 - j) * (j - 1)) * _perm_sign(values)
                yield i, j, k, front, inner, base


def relation_value(L, n, wedges):
    """Left-hand side of the arity-n relation at a tuple of basis wedges.

    Returns None when the tuple is inadmissible: some term's formal degree
    leaves the stored range {0, 1, 2} above, which only happens through
    the 2-term truncation.
    """
    degrees = [deg for deg, _ in wedges]
    elements = [WedgeElement.basis(deg, key) for deg, key in wedges]
    total = WedgeElement()
    for i, j, k, front, inner, base in relation_terms(n):
        inner_idx = inner + (k - 1,)
        s_inner = sum(degrees[m] for m in inner_idx) + (j - 2)
        if s_inner > 2:
            return None
        trailing = tuple(range(k, n))
        outer_degree_sum = sum(degrees[m] for m in front + trailing)
        if s_inner >= 0 and outer_degree_sum + s_inner + (i - 2) > 2:
            return None
        if s_inner < 0 or j > 3 or i > 3:
            continue
        inner_val = _induced_or_zero(L, j, [elements[m] for m in inner_idx])
        if inner_val.is_zero():
            continue
        outer_args = [elements[m] for m in front] + [inner_val] \
            + [elements[m] for m in trailing]
        value = _induced_or_zero(L, i, outer_args)
        if value.is_zero():
            continue
        sign = base * (-1) ** (j * sum(degrees[m] for m in front)) \
            * _koszul_sign(degrees, front + inner)
        total = total + value.scale(sign)
    return total


def verify_lod_relations(L, max_n=3) -> VerificationReport:
    """Check the relations for every admissible basis-wedge tuple, n <= max_n."""
    if not 1 <= max_n <= 4:
        raise DimensionMismatch("max_n must be between 1 and 4")
    rpt = VerificationReport("lod_relations(max_n=%d)" % max_n)
    wedges = basis_wedges(L)
    for n in range(1, max_n + 1):
        for tup in itertools.product(wedges, repeat=n):
            value = relation_value(L, n, tup)
            if value is None:
                continue
            rpt.expect("lod_n%d" % n, tup, value.is_zero(),
                       lhs=value.items(), rhs=[])
    return rpt
