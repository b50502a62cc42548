"""Cochains on a 3-Lie algebra with values in a representation, and delta.

A p-cochain takes p-1 wedge slots and one final algebra slot into the
coefficient space: skew inside each wedge slot, multilinear everywhere,
stored on canonical pair indices with a free final index.  The coboundary
follows the four-part formula with the wedge-slot action on the final slot
read as [X, z] = [x, y, z].
"""

import itertools
import random

from .errors import DimensionMismatch, PreconditionFailed
from .exactlin import ZERO, rational, skew_canon, vec_add, vec_is_zero, vec_scale, \
    vec_sub, vector, zero_vector
from .report import Failure, VerificationReport
from .trilie import FundamentalElement, fundamental_bracket

MAX_DEGREE = 3  # inputs beyond the degrees the constructions use are untested


class Cochain:
    """Coefficient tensor of a p-cochain; keys are ((pairs...), z)."""

    def __init__(self, degree, algebra_dim, space_dim, values=None):
        if degree < 1:
            raise DimensionMismatch("cochain degree must be >= 1")
        self.degree = degree
        self.algebra_dim = algebra_dim
        self.space_dim = space_dim
        table = {}
        for key, value in (values or {}).items():
            pairs, z = key
            pairs = tuple(tuple(p) for p in pairs)
            if len(pairs) != degree - 1:
                raise DimensionMismatch("key %r has wrong slot count" % (key,))
            for a, b in pairs:
                if not 0 <= a < b < algebra_dim:
                    raise DimensionMismatch("non-canonical pair in key %r" % (key,))
            if not 0 <= z < algebra_dim:
                raise DimensionMismatch("final index out of range in %r" % (key,))
            vec = vector(value)
            if len(vec) != space_dim:
                raise DimensionMismatch("value length != space_dim")
            if not vec_is_zero(vec):
                table[(pairs, z)] = vec
        self.values = table

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.algebra_dim == other.algebra_dim
                and self.space_dim == other.space_dim
                and self.values == other.values)

    def __repr__(self):
        return "Cochain(degree=%d, %d nonzero slots)" % (
            self.degree, len(self.values))

    def is_zero(self):
        return not self.values

    def canonical_keys(self):
        """All storage slots for this degree and dimension, sorted."""
        pairs = list(itertools.combinations(range(self.algebra_dim), 2))
        for ps in itertools.product(pairs, repeat=self.degree - 1):
            for z in range(self.algebra_dim):
                yield (ps, z)

    def value(self, pairs, z):
        """Evaluate at index pairs in arbitrary internal order and final z."""
        sign = 1
        canon = []
        for a, b in pairs:
            (ca, cb), s = skew_canon((a, b), self.algebra_dim)
            if s == 0:
                return zero_vector(self.space_dim)
            sign *= s
            canon.append((ca, cb))
        vec = self.values.get((tuple(canon), z))
        if vec is None:
            return zero_vector(self.space_dim)
        return vec if sign == 1 else vec_scale(rational(-1), vec)

    def evaluate(self, slots, z_arg):
        """Multilinear evaluation; slots may be pairs or FundamentalElements,
        z_arg a basis index or a coefficient vector."""
        out = zero_vector(self.space_dim)
        expansions = []
        for slot in slots:
            if isinstance(slot, FundamentalElement):
                expansions.append(slot.items())
            else:
                expansions.append([(tuple(slot), rational(1))])
        if isinstance(z_arg, int):
            z_terms = [(z_arg, rational(1))]
        else:
            z_terms = [(m, c) for m, c in enumerate(z_arg) if c != 0]
        for combo in itertools.product(*expansions):
            coeff = rational(1)
            pairs = []
            for key, c in combo:
                coeff *= c
                pairs.append(key)
            for z, cz in z_terms:
                out = vec_add(out, vec_scale(coeff * cz, self.value(pairs, z)))
        return out

    def __add__(self, other):
        if (self.degree, self.algebra_dim, self.space_dim) != \
                (other.degree, other.algebra_dim, other.space_dim):
            raise DimensionMismatch("cochain shapes differ")
        table = dict(self.values)
        for key, vec in other.values.items():
            table[key] = vec_add(table.get(key, zero_vector(self.space_dim)), vec)
        return Cochain(self.degree, self.algebra_dim, self.space_dim, table)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rational(c)
        return Cochain(self.degree, self.algebra_dim, self.space_dim,
                       {k: vec_scale(c, v) for k, v in self.values.items()})


def _ensure_preconditions(algebra, rep):
    fi = algebra.fundamental_identity_report()
    if not fi.passed:
        raise PreconditionFailed("algebra fails the fundamental identity", fi)
    rr = rep.representation_report(algebra)
    if not rr.passed:
        raise PreconditionFailed("rho is not a representation", rr)


def coboundary_value(algebra, rep, cochain, xs, z):
    """The four-part coboundary formula at explicit ordered pairs xs and z.

    xs is a list of p index pairs (internal order arbitrary), z a basis
    index; used both to fill canonical slots and to test skewness of the
    result under in-pair swaps.
    """
    p = cochain.degree
    if len(xs) != p:
        raise DimensionMismatch("need %d wedge arguments" % p)
    wedges = [FundamentalElement.wedge(a, b) for a, b in xs]
    out = zero_vector(cochain.space_dim)

    # term 1: bracket two wedge slots together
    for j in range(p):
        for k in range(j + 1, p):
            slots = [wedges[m] for m in range(p) if m != j and m != k]
            fk = fundamental_bracket(algebra, wedges[j], wedges[k])
            slots.insert(k - 1, fk)
            term = cochain.evaluate(slots, z)
            out = _add_signed(out, term, (-1) ** (j + 1))

    # term 2: push a wedge slot onto the final slot through ad
    for j in range(p):
        slots = [wedges[m] for m in range(p) if m != j]
        zj = _ad_on_basis(algebra, wedges[j], z)
        term = cochain.evaluate(slots, zj)
        out = _add_signed(out, term, (-1) ** (j + 1))

    # term 3: rho acting on the cochain value
    for j in range(p):
        slots = [wedges[m] for m in range(p) if m != j]
        inner = cochain.evaluate(slots, z)
        term = rep.of_element(wedges[j]).apply(inner)
        out = _add_signed(out, term, (-1) ** (j + 2))

    # term 4: the two boundary terms in the last pair
    xp, yp = xs[p - 1]
    head = wedges[:p - 1]
    t4 = vec_add(
        rep.matrix(yp, z).apply(cochain.evaluate(head, xp)),
        rep.matrix(z, xp).apply(cochain.evaluate(head, yp)))
    out = _add_signed(out, t4, (-1) ** (p + 1))
    return out


def _add_signed(acc, term, sign):
    return vec_add(acc, term) if sign == 1 else vec_sub(acc, term)


def _ad_on_basis(algebra, wedge, z):
    """[X, z] = [x, y, z] extended linearly over the wedge element X."""
    out = zero_vector(algebra.dim)
    for (a, b), c in wedge.items():
        out = vec_add(out, vec_scale(c, algebra.bracket_basis(a, b, z)))
    return out


def coboundary(algebra, rep, cochain) -> Cochain:
    """delta: C^p -> C^{p+1}, computed slot by slot on canonical keys."""
    if cochain.algebra_dim != algebra.dim:
        raise DimensionMismatch("cochain indexed over a different algebra")
    if rep.space_dim != cochain.space_dim or rep.algebra_dim != algebra.dim:
        raise DimensionMismatch("representation space does not match cochain")
    if cochain.degree > MAX_DEGREE:
        raise DimensionMismatch(
            "coboundary input degree capped at %d" % MAX_DEGREE)
    _ensure_preconditions(algebra, rep)
    p = cochain.degree
    out = {}
    pairs = list(itertools.combinations(range(algebra.dim), 2))
    for ps in itertools.product(pairs, repeat=p):
        for z in range(algebra.dim):
            vec = coboundary_value(algebra, rep, cochain, list(ps), z)
            if not vec_is_zero(vec):
                out[(ps, z)] = vec
    return Cochain(p + 1, algebra.dim, cochain.space_dim, out)


def is_cocycle(algebra, rep, cochain) -> VerificationReport:
    """Pass iff delta(cochain) vanishes; nonzero slots are listed."""
    report = VerificationReport("cocycle")
    delta = coboundary(algebra, rep, cochain)
    for key in delta.canonical_keys():
        vec = delta.values.get(key)
        report.expect("cocycle", key, vec is None,
                      lhs=vec, rhs=zero_vector(cochain.space_dim))
    return report


def random_cochain(algebra_dim, space_dim, degree, rng, lo=-3, hi=3) -> Cochain:
    """Random cochain with small integer entries; keeps exact runs fast."""
    pairs = list(itertools.combinations(range(algebra_dim), 2))
    values = {}
    for ps in itertools.product(pairs, repeat=degree - 1):
        for z in range(algebra_dim):
            vec = [rng.randint(lo, hi) for _ in range(space_dim)]
            values[(ps, z)] = vec
    return Cochain(degree, algebra_dim, space_dim, values)


def delta_squared_zero(algebra, rep, degree, trials, seed=0) -> VerificationReport:
    """delta(delta(alpha)) = 0 exactly for seeded random cochains."""
    if degree not in (1, 2):
        raise DimensionMismatch("delta-squared check supports degrees 1 and 2")
    _ensure_preconditions(algebra, rep)
    rng = random.Random(seed)
    report = VerificationReport("delta_squared_zero(p=%d)" % degree)
    for t in range(trials):
        alpha = random_cochain(algebra.dim, rep.space_dim, degree, rng)
        dd = coboundary(algebra, rep, coboundary(algebra, rep, alpha))
        report.checked += 1
        for key, vec in sorted(dd.values.items()):
            report.failures.append(Failure(
                "delta_squared", (t,) + key, vec, zero_vector(rep.space_dim)))
    return report
