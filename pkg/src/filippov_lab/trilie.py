"""3-Lie algebras over the rationals, verified by exhaustive basis evaluation.

A 3-Lie algebra is stored through its structure constants on canonical
triples i < j < k; total skew-symmetry is structural, and evaluation at any
other index order decodes the permutation sign.  The fundamental identity,
the Leibniz property of the bracket on wedges, and the two representation
conditions are all checked tuple by tuple with both sides reported.
"""

import itertools

from .errors import DimensionMismatch, PreconditionFailed
from .exactlin import (
    Matrix, ZERO, basis_vector, rational, skew_canon, vec_add, vec_is_zero,
    vec_scale, vec_sub, vector, zero_vector, commutator,
)
from .report import VerificationReport


def default_labels(dim, stem="e"):
    return tuple("%s%d" % (stem, i + 1) for i in range(dim))


class ThreeLieAlgebra:
    """Structure constants of a totally skew trilinear bracket.

    ``bracket`` maps canonical triples (i, j, k) with i < j < k to the
    coefficient vector of [e_i, e_j, e_k].  Dimensions below 3 admit no
    canonical triple, so they carry the zero bracket by construction.
    """

    def __init__(self, dim, bracket=None, labels=None):
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else default_labels(dim)
        if len(self.labels) != dim:
            raise DimensionMismatch("need %d basis labels" % dim)
        table = {}
        for key, value in (bracket or {}).items():
            i, j, k = key
            if not (0 <= i < j < k < dim):
                raise DimensionMismatch(
                    "non-canonical bracket key %r for dim %d" % (key, dim))
            vec = vector(value)
            if len(vec) != dim:
                raise DimensionMismatch("bracket value length != dim")
            if not vec_is_zero(vec):
                table[(i, j, k)] = vec
        self.bracket = table
        self._fi_report = None

    def __eq__(self, other):
        return (isinstance(other, ThreeLieAlgebra) and self.dim == other.dim
                and self.bracket == other.bracket)

    def __repr__(self):
        return "ThreeLieAlgebra(dim=%d, %d nonzero triples)" % (
            self.dim, len(self.bracket))

    def bracket_basis(self, i, j, k):
        """[e_i, e_j, e_k] with the sign of sorting (i, j, k)."""
        canon, sign = skew_canon((i, j, k), self.dim)
        if sign == 0:
            return zero_vector(self.dim)
        vec = self.bracket.get(canon)
        if vec is None:
            return zero_vector(self.dim)
        return vec if sign == 1 else vec_scale(rational(-1), vec)

    def bracket_map(self, a, b, c):
        """Trilinear bracket where each argument is a basis index or vector."""
        args = [basis_vector(self.dim, x) if isinstance(x, int) else x
                for x in (a, b, c)]
        out = zero_vector(self.dim)
        for (i, j, k), vec in self.bracket.items():
            coeff = _det3(args, i, j, k)
            if coeff != 0:
                out = vec_add(out, vec_scale(coeff, vec))
        return out

    def ad(self, i, j) -> Matrix:
        """Matrix of z -> [e_i, e_j, z]."""
        cols = [self.bracket_basis(i, j, k) for k in range(self.dim)]
        return Matrix.from_columns(cols) if self.dim else Matrix(0, 0, [])

    def fundamental_identity_report(self):
        """Cached result of check_fundamental_identity(self)."""
        if self._fi_report is None:
            self._fi_report = check_fundamental_identity(self)
        return self._fi_report


def _det3(args, i, j, k):
    u, v, w = args
    return (u[i] * (v[j] * w[k] - v[k] * w[j])
            - u[j] * (v[i] * w[k] - v[k] * w[i])
            + u[k] * (v[i] * w[j] - v[j] * w[i]))


def check_fundamental_identity(algebra) -> VerificationReport:
    """Evaluate the fundamental identity on basis 5-tuples.

    Skewness makes tuples with x1 < x2 and x3 < x4 < x5 exhaustive; every
    failing tuple is reported with both sides.
    """
    report = VerificationReport("fundamental_identity")
    n = algebra.dim
    for x1, x2 in itertools.combinations(range(n), 2):
        for x3, x4, x5 in itertools.combinations(range(n), 3):
            inner = algebra.bracket_basis(x3, x4, x5)
            lhs = algebra.bracket_map(x1, x2, inner)
            rhs = vec_add(
                vec_add(
                    algebra.bracket_map(algebra.bracket_basis(x1, x2, x3), x4, x5),
                    algebra.bracket_map(x3, algebra.bracket_basis(x1, x2, x4), x5)),
                algebra.bracket_map(x3, x4, algebra.bracket_basis(x1, x2, x5)))
            report.expect_equal(
                "fundamental_identity", (x1, x2, x3, x4, x5), lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# fundamental objects
# ---------------------------------------------------------------------------

class FundamentalElement:
    """Formal rational combination of basis wedges e_i ^ e_j (i < j)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = rational(coeff)
            if coeff != 0:
                i, j = key
                if not i < j:
                    raise ValueError("non-canonical wedge key %r" % (key,))
                clean[(i, j)] = coeff
        self.terms = clean

    @classmethod
    def wedge(cls, i, j, coeff=1):
        """e_i ^ e_j for arbitrary index order (zero when i == j)."""
        (a, b), sign = skew_canon((i, j))
        if sign == 0:
            return cls()
        return cls({(a, b): rational(coeff) * sign})

    @classmethod
    def wedge_vec_basis(cls, vec, j):
        """(sum_i vec_i e_i) ^ e_j expanded into canonical wedges."""
        out = cls()
        for i, c in enumerate(vec):
            if c != 0:
                out = out + cls.wedge(i, j, c)
        return out

    @classmethod
    def wedge_basis_vec(cls, i, vec):
        out = cls()
        for j, c in enumerate(vec):
            if c != 0:
                out = out + cls.wedge(i, j, c)
        return out

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return FundamentalElement(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rational(c)
        return FundamentalElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FundamentalElement) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "FundamentalElement(0)"
        bits = ["%s*(e%d^e%d)" % (c, i + 1, j + 1)
                for (i, j), c in self.items()]
        return "FundamentalElement(%s)" % " + ".join(bits)


def fundamental_bracket(algebra, x, y) -> FundamentalElement:
    """[x1^x2, y1^y2]_F = [x1,x2,y1]^y2 + y1^[x1,x2,y2], extended bilinearly."""
    out = FundamentalElement()
    for (x1, x2), cx in x.items():
        for (y1, y2), cy in y.items():
            c = cx * cy
            v = algebra.bracket_basis(x1, x2, y1)
            out = out + FundamentalElement.wedge_vec_basis(v, y2).scale(c)
            w = algebra.bracket_basis(x1, x2, y2)
            out = out + FundamentalElement.wedge_basis_vec(y1, w).scale(c)
    return out


def check_leibniz_fundamental(algebra) -> VerificationReport:
    """Left Leibniz identity for [.,.]_F on all basis wedge triples.

    [X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]]; gated on the fundamental identity.
    """
    fi = algebra.fundamental_identity_report()
    if not fi.passed:
        raise PreconditionFailed("not a 3-Lie algebra", fi)
    report = VerificationReport("leibniz_fundamental")
    pairs = list(itertools.combinations(range(algebra.dim), 2))
    wedges = [(p, FundamentalElement({p: 1})) for p in pairs]
    for (kx, x), (ky, y), (kz, z) in itertools.product(wedges, repeat=3):
        lhs = fundamental_bracket(algebra, x, fundamental_bracket(algebra, y, z))
        rhs = (fundamental_bracket(algebra, fundamental_bracket(algebra, x, y), z)
               + fundamental_bracket(algebra, y, fundamental_bracket(algebra, x, z)))
        report.expect_equal("leibniz", (kx, ky, kz),
                            lhs.items(), rhs.items())
    return report


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

class Representation:
    """Skew family of square matrices rho(e_i, e_j) acting on a vector space."""

    def __init__(self, algebra_dim, space_dim, rho=None):
        self.algebra_dim = algebra_dim
        self.space_dim = space_dim
        table = {}
        for key, mat in (rho or {}).items():
            i, j = key
            if not 0 <= i < j < algebra_dim:
                raise DimensionMismatch("non-canonical pair %r" % (key,))
            if mat.rows != space_dim or mat.cols != space_dim:
                raise DimensionMismatch("rho value must be %dx%d" % (space_dim, space_dim))
            if not mat.is_zero():
                table[(i, j)] = mat
        self.rho = table
        self._rep_cache = None

    @classmethod
    def zero(cls, algebra_dim, space_dim):
        return cls(algebra_dim, space_dim, {})

    @classmethod
    def adjoint(cls, algebra):
        """rho = ad, acting on the algebra's own coefficient space."""
        rho = {(i, j): algebra.ad(i, j)
               for i, j in itertools.combinations(range(algebra.dim), 2)}
        return cls(algebra.dim, algebra.dim, rho)

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.algebra_dim == other.algebra_dim
                and self.space_dim == other.space_dim
                and self.rho == other.rho)

    def matrix(self, i, j) -> Matrix:
        """rho(e_i, e_j) for arbitrary index order."""
        if i == j:
            return Matrix.zero(self.space_dim, self.space_dim)
        key, sign = skew_canon((i, j), self.algebra_dim)
        mat = self.rho.get(key)
        if mat is None:
            return Matrix.zero(self.space_dim, self.space_dim)
        return mat if sign == 1 else -mat

    def of_element(self, element: FundamentalElement) -> Matrix:
        out = Matrix.zero(self.space_dim, self.space_dim)
        for (i, j), c in element.items():
            out = out + self.matrix(i, j).scale(c)
        return out

    def pair_with_vector(self, x, vec) -> Matrix:
        """rho(e_x, v) by linearity in the second slot."""
        out = Matrix.zero(self.space_dim, self.space_dim)
        for m, c in enumerate(vec):
            if c != 0 and m != x:
                out = out + self.matrix(x, m).scale(c)
        return out

    def representation_report(self, algebra):
        """Cached result of check_representation(algebra, self)."""
        cached = self._rep_cache
        if cached is not None and cached[0] is algebra:
            return cached[1]
        rep = check_representation(algebra, self)
        self._rep_cache = (algebra, rep)
        return rep


def check_representation(algebra, rep) -> VerificationReport:
    """Both defining conditions of a 3-Lie representation, on basis tuples.

    (i)  [rho(X), rho(Y)] = rho([X, Y]_F) on canonical wedge pairs;
    (ii) rho(x, [y1,y2,y3]) = rho(y2,y3)rho(x,y1) - rho(y1,y3)rho(x,y2)
         + rho(y1,y2)rho(x,y3) on all basis x and canonical triples.
    """
    if rep.algebra_dim != algebra.dim:
        raise DimensionMismatch("representation indexed over a different algebra")
    report = VerificationReport("representation")
    pairs = list(itertools.combinations(range(algebra.dim), 2))
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        lhs = commutator(rep.matrix(i, j), rep.matrix(k, l))
        bracket = fundamental_bracket(
            algebra, FundamentalElement({(i, j): 1}), FundamentalElement({(k, l): 1}))
        rhs = rep.of_element(bracket)
        report.expect_equal("commutator", (i, j, k, l), lhs, rhs)
    for x in range(algebra.dim):
        for y1, y2, y3 in itertools.combinations(range(algebra.dim), 3):
            lhs = rep.pair_with_vector(x, algebra.bracket_basis(y1, y2, y3))
            rhs = (rep.matrix(y2, y3) @ rep.matrix(x, y1)
                   - rep.matrix(y1, y3) @ rep.matrix(x, y2)
                   + rep.matrix(y1, y2) @ rep.matrix(x, y3))
            report.expect_equal("structure", (x, y1, y2, y3), lhs, rhs)
    return report
