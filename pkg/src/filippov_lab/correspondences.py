"""Constructions between 3-Lie data and 2-term structures.

Covers the four dictionaries: skeletal 2-term structures vs quadruples
(algebra, space, representation, 3-cocycle); strict 2-term structures vs
crossed modules; symplectic 3-Lie algebras vs 3-pre-Lie brackets; and the
strict structure on g* -> g induced by a symplectic form.
"""

import itertools

from .cohomology import Cochain, is_cocycle
from .errors import (
    DimensionMismatch, InvalidCrossedModule, InvalidQuadruple,
    InvalidSymplectic, NotSkeletal, NotStrict, PreconditionFailed,
)
from .exactlin import (
    Matrix, det, invert, rational, skew_canon, solve_linear, vec_add,
    vec_is_zero, vec_scale, vec_sub, vector, zero_vector,
)
from .homotopy import ThreeLie2Algebra, verify_two_term
from .report import VerificationReport
from .trilie import Representation, ThreeLieAlgebra, default_labels


# ---------------------------------------------------------------------------
# skeletal <-> quadruple
# ---------------------------------------------------------------------------

class SkeletalQuadruple:
    """(g, V, rho, Theta): algebra, coefficient space, representation, 3-cocycle."""

    def __init__(self, algebra, space_dim, rho, theta):
        if rho.algebra_dim != algebra.dim or rho.space_dim != space_dim:
            raise DimensionMismatch("rho must act on the stated space")
        if theta.degree != 3 or theta.algebra_dim != algebra.dim \
                or theta.space_dim != space_dim:
            raise DimensionMismatch("Theta must be a degree-3 cochain into V")
        self.algebra = algebra
        self.space_dim = space_dim
        self.rho = rho
        self.theta = theta

    def __eq__(self, other):
        return (isinstance(other, SkeletalQuadruple)
                and self.algebra == other.algebra
                and self.space_dim == other.space_dim
                and self.rho == other.rho and self.theta == other.theta)


def theta_triple_skew_report(theta) -> VerificationReport:
    """Skewness of Theta across its trailing (pair, final) block.

    A degree-3 cochain is only skew inside each pair; serving as the
    quintic bracket of a 2-term structure additionally requires skewness
    over the last three arguments jointly.
    """
    rpt = VerificationReport("theta_triple_skew")
    n = theta.algebra_dim
    for i, j in itertools.combinations(range(n), 2):
        for a, b in itertools.combinations(range(n), 2):
            for c in range(n):
                canon, sign = skew_canon((a, b, c))
                actual = theta.value([(i, j), (a, b)], c)
                if sign == 0:
                    expected = zero_vector(theta.space_dim)
                else:
                    k, l, m = canon
                    expected = vec_scale(
                        sign, theta.value([(i, j), (k, l)], m))
                rpt.expect_equal("triple_skew", (i, j, a, b, c),
                                 actual, expected)
    return rpt


def build_skeletal(quadruple) -> ThreeLie2Algebra:
    """d = 0, l3 from the bracket and rho, l5 = Theta.

    Raises InvalidQuadruple naming the failed invariant: the algebra must
    satisfy the fundamental identity, rho both representation conditions,
    and Theta must be a triple-skew 3-cocycle.
    """
    q = quadruple
    fi = q.algebra.fundamental_identity_report()
    if not fi.passed:
        raise InvalidQuadruple("algebra fails the fundamental identity", fi)
    rr = q.rho.representation_report(q.algebra)
    if not rr.passed:
        raise InvalidQuadruple("rho is not a representation", rr)
    sk = theta_triple_skew_report(q.theta)
    if not sk.passed:
        raise InvalidQuadruple("Theta is not skew over its last three slots", sk)
    cc = is_cocycle(q.algebra, q.rho, q.theta)
    if not cc.passed:
        raise InvalidQuadruple("Theta is not a 3-cocycle", cc)

    n0, n1 = q.algebra.dim, q.space_dim
    l3_001 = {}
    for (i, j), mat in q.rho.rho.items():
        for a in range(n1):
            col = mat.column(a)
            if not vec_is_zero(col):
                l3_001[(i, j, a)] = col
    l5 = {}
    for i, j in itertools.combinations(range(n0), 2):
        for k, l, m in itertools.combinations(range(n0), 3):
            vec = q.theta.value([(i, j), (k, l)], m)
            if not vec_is_zero(vec):
                l5[(i, j, k, l, m)] = vec
    return ThreeLie2Algebra(
        n0, n1, Matrix.zero(n0, n1), dict(q.algebra.bracket), l3_001, l5,
        labels0=q.algebra.labels, labels1=default_labels(n1, "v"))


def extract_quadruple(two_term) -> SkeletalQuadruple:
    """Inverse of build_skeletal on skeletal verified structures."""
    L = two_term
    if not L.is_skeletal():
        raise NotSkeletal("d != 0")
    vt = verify_two_term(L)
    if not vt.passed:
        raise PreconditionFailed("not a 2-term 3-Lie-infinity algebra", vt)
    algebra = ThreeLieAlgebra(L.dim0, dict(L.l3_000), labels=L.labels0)
    rho = {}
    for i, j in itertools.combinations(range(L.dim0), 2):
        cols = [L.l3_one(i, j, a) for a in range(L.dim1)]
        mat = Matrix.from_columns(cols) if L.dim1 else Matrix(0, 0, [])
        if not mat.is_zero():
            rho[(i, j)] = mat
    rep = Representation(L.dim0, L.dim1, rho)
    # spread each l5 slot over the three pair/final splittings of its
    # trailing triple, so the cochain is triple-skew as a multilinear map
    theta_vals = {}
    for (i, j, k, l, m), vec in L.l5.items():
        theta_vals[(((i, j), (k, l)), m)] = vec
        theta_vals[(((i, j), (k, m)), l)] = vec_scale(rational(-1), vec)
        theta_vals[(((i, j), (l, m)), k)] = vec
    theta = Cochain(3, L.dim0, L.dim1, theta_vals)
    return SkeletalQuadruple(algebra, L.dim1, rep, theta)


# ---------------------------------------------------------------------------
# crossed modules <-> strict
# ---------------------------------------------------------------------------

class CrossedModule:
    """(g, h, mu, alpha): two algebras, a homomorphism, an action by derivations."""

    def __init__(self, g, h, mu, alpha):
        if mu.rows != h.dim or mu.cols != g.dim:
            raise DimensionMismatch("mu must map g into h")
        if alpha.algebra_dim != h.dim or alpha.space_dim != g.dim:
            raise DimensionMismatch("alpha must be indexed by h acting on g")
        self.g = g
        self.h = h
        self.mu = mu
        self.alpha = alpha

    def __eq__(self, other):
        return (isinstance(other, CrossedModule) and self.g == other.g
                and self.h == other.h and self.mu == other.mu
                and self.alpha == other.alpha)


def verify_crossed_module(cm) -> VerificationReport:
    """mu a bracket homomorphism, alpha a representation by derivations,
    and the three compatibility equations, all on basis tuples."""
    rpt = VerificationReport("crossed_module")
    g, h, mu, alpha = cm.g, cm.h, cm.mu, cm.alpha
    mucols = [mu.column(a) for a in range(g.dim)]

    rpt.absorb(g.fundamental_identity_report(), prefix="g")
    rpt.absorb(h.fundamental_identity_report(), prefix="h")

    # mu homomorphism: mu([f,g,h]_g) = [mu f, mu g, mu h]_h
    for a, b, c in itertools.combinations(range(g.dim), 3):
        lhs = mu.apply(g.bracket_basis(a, b, c))
        rhs = h.bracket_map(mucols[a], mucols[b], mucols[c])
        rpt.expect_equal("mu_homomorphism", (a, b, c), lhs, rhs)

    rpt.absorb(alpha.representation_report(h), prefix="alpha_representation")

    # each alpha(x, y) is a derivation of the g-bracket
    for x, y in itertools.combinations(range(h.dim), 2):
        mat = alpha.matrix(x, y)
        for a, b, c in itertools.combinations(range(g.dim), 3):
            lhs = mat.apply(g.bracket_basis(a, b, c))
            rhs = vec_add(
                vec_add(g.bracket_map(mat.column(a), b, c),
                        g.bracket_map(a, mat.column(b), c)),
                g.bracket_map(a, b, mat.column(c)))
            rpt.expect_equal("alpha_derivation", (x, y, a, b, c), lhs, rhs)

    # cmc1: mu(alpha(x,y)(f)) = [x, y, mu f]_h
    for x, y in itertools.combinations(range(h.dim), 2):
        mat = alpha.matrix(x, y)
        for f in range(g.dim):
            lhs = mu.apply(mat.column(f))
            rhs = h.bracket_map(x, y, mucols[f])
            rpt.expect_equal("cmc1", (x, y, f), lhs, rhs)

    # cmc2: alpha(mu f, mu g)(h) = [f, g, h]_g
    for f in range(g.dim):
        for s in range(g.dim):
            mat = _alpha_of_vectors(alpha, mucols[f], mucols[s])
            for t in range(g.dim):
                lhs = mat.column(t)
                rhs = g.bracket_basis(f, s, t)
                rpt.expect_equal("cmc2", (f, s, t), lhs, rhs)

    # cmc3: alpha(x, mu f)(g) = -alpha(x, mu g)(f)
    for x in range(h.dim):
        for f in range(g.dim):
            matf = alpha.pair_with_vector(x, mucols[f])
            for s in range(g.dim):
                mats = alpha.pair_with_vector(x, mucols[s])
                lhs = matf.column(s)
                rhs = vec_scale(rational(-1), mats.column(f))
                rpt.expect_equal("cmc3", (x, f, s), lhs, rhs)

    return rpt


def _alpha_of_vectors(alpha, u, v):
    out = Matrix.zero(alpha.space_dim, alpha.space_dim)
    for i, ci in enumerate(u):
        if ci == 0:
            continue
        for j, cj in enumerate(v):
            if cj == 0 or i == j:
                continue
            out = out + alpha.matrix(i, j).scale(ci * cj)
    return out


def build_strict_from_crossed_module(cm) -> ThreeLie2Algebra:
    """V1 = g, V0 = h, d = mu, l3 from the h-bracket and alpha, l5 = 0."""
    vr = verify_crossed_module(cm)
    if not vr.passed:
        raise InvalidCrossedModule("crossed-module equations fail", vr)
    l3_001 = {}
    for (i, j), mat in cm.alpha.rho.items():
        for a in range(cm.g.dim):
            col = mat.column(a)
            if not vec_is_zero(col):
                l3_001[(i, j, a)] = col
    return ThreeLie2Algebra(
        cm.h.dim, cm.g.dim, cm.mu, dict(cm.h.bracket), l3_001, {},
        labels0=cm.h.labels, labels1=cm.g.labels)


def extract_crossed_module(two_term) -> CrossedModule:
    """Inverse of build_strict_from_crossed_module on strict verified data.

    The g-bracket is recovered as l3(df, dg, h), well defined by the
    derived identity 3dd.
    """
    L = two_term
    if not L.is_strict():
        raise NotStrict("l5 != 0")
    vt = verify_two_term(L)
    if not vt.passed:
        raise PreconditionFailed("not a 2-term 3-Lie-infinity algebra", vt)
    h = ThreeLieAlgebra(L.dim0, dict(L.l3_000), labels=L.labels0)
    dcols = [L.d_column(a) for a in range(L.dim1)]
    g_bracket = {}
    for a, b, c in itertools.combinations(range(L.dim1), 3):
        vec = L.l3_one_map(dcols[a], dcols[b], c)
        if not vec_is_zero(vec):
            g_bracket[(a, b, c)] = vec
    g = ThreeLieAlgebra(L.dim1, g_bracket, labels=L.labels1)
    alpha = {}
    for i, j in itertools.combinations(range(L.dim0), 2):
        cols = [L.l3_one(i, j, a) for a in range(L.dim1)]
        mat = Matrix.from_columns(cols) if L.dim1 else Matrix(0, 0, [])
        if not mat.is_zero():
            alpha[(i, j)] = mat
    rep = Representation(L.dim0, L.dim1, alpha)
    return CrossedModule(g, h, L.d, rep)


def adjoint_crossed_module(algebra) -> CrossedModule:
    """g = h, mu = id, alpha = ad: a crossed module for any 3-Lie algebra."""
    return CrossedModule(algebra, algebra, Matrix.identity(algebra.dim),
                         Representation.adjoint(algebra))


# ---------------------------------------------------------------------------
# symplectic structures and 3-pre-Lie algebras
# ---------------------------------------------------------------------------

class SymplecticThreeLie:
    """3-Lie algebra with a bilinear form, omega(e_i, e_j) = omega[i, j]."""

    def __init__(self, algebra, omega):
        if omega.rows != algebra.dim or omega.cols != algebra.dim:
            raise DimensionMismatch("omega must be dim x dim")
        self.algebra = algebra
        self.omega = omega

    def omega_value(self, u, v):
        return sum((ci * self.omega[i, j] * cj
                    for i, ci in enumerate(u) if ci != 0
                    for j, cj in enumerate(v) if cj != 0),
                   rational(0))


def check_symplectic(s) -> VerificationReport:
    """Skewness, nondegeneracy, and the 4-argument compatibility identity."""
    rpt = VerificationReport("symplectic")
    A, omega = s.algebra, s.omega
    fi = A.fundamental_identity_report()
    if not fi.passed:
        raise PreconditionFailed("underlying algebra fails the fundamental identity", fi)
    rpt.expect_equal("skew", (), omega.transpose(), -omega)
    rpt.expect("nondegenerate", (), det(omega) != 0,
               lhs=det(omega), rhs="nonzero")
    n = A.dim
    for x, y, z, w in itertools.product(range(n), repeat=4):
        value = (s.omega_value(A.bracket_basis(x, y, z), _basis(n, w))
                 - s.omega_value(A.bracket_basis(x, y, w), _basis(n, z))
                 + s.omega_value(A.bracket_basis(x, z, w), _basis(n, y))
                 - s.omega_value(A.bracket_basis(y, z, w), _basis(n, x)))
        rpt.expect_equal("compatibility", (x, y, z, w), value, rational(0))
    return rpt


def _basis(n, i):
    return tuple(rational(1) if j == i else rational(0) for j in range(n))


class ThreePreLie:
    """Trilinear bracket skew in its first two slots only."""

    def __init__(self, dim, bracket=None, labels=None):
        self.dim = dim
        self.labels = tuple(labels) if labels else default_labels(dim)
        table = {}
        for (i, j, k), val in (bracket or {}).items():
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise DimensionMismatch("bad 3-pre-Lie key %r" % ((i, j, k),))
            vec = vector(val)
            if len(vec) != dim:
                raise DimensionMismatch("bracket value length != dim")
            if not vec_is_zero(vec):
                table[(i, j, k)] = vec
        self.bracket = table

    def __eq__(self, other):
        return (isinstance(other, ThreePreLie) and self.dim == other.dim
                and self.bracket == other.bracket)

    def bracket_basis(self, i, j, k):
        """{e_i, e_j, e_k}; only the first two slots are skew."""
        if i == j:
            return zero_vector(self.dim)
        (a, b), sign = skew_canon((i, j), self.dim)
        vec = self.bracket.get((a, b, k))
        if vec is None:
            return zero_vector(self.dim)
        return vec if sign == 1 else vec_scale(rational(-1), vec)

    def bracket_map(self, a, b, c):
        from .homotopy import _as_vec, _det2
        u = _as_vec(a, self.dim)
        v = _as_vec(b, self.dim)
        w = _as_vec(c, self.dim)
        out = zero_vector(self.dim)
        for (i, j, k), vec in self.bracket.items():
            coeff = _det2(u, v, i, j) * w[k]
            if coeff != 0:
                out = vec_add(out, vec_scale(coeff, vec))
        return out

    def commutator_basis(self, i, j, k):
        """{i,j,k} + {j,k,i} + {k,i,j}: the induced fully skew bracket."""
        return vec_add(vec_add(self.bracket_basis(i, j, k),
                               self.bracket_basis(j, k, i)),
                       self.bracket_basis(k, i, j))

    def left_multiplication(self, i, j) -> Matrix:
        """Matrix of z -> {e_i, e_j, z}."""
        cols = [self.bracket_basis(i, j, k) for k in range(self.dim)]
        return Matrix.from_columns(cols) if self.dim else Matrix(0, 0, [])


def induced_pre_lie(s) -> ThreePreLie:
    """Solve omega({x,y,z}, w) = -omega(z, [x,y,w]) slotwise.

    Nondegeneracy makes the linear system uniquely solvable; the spec
    treats a singular solve here as an internal error.
    """
    rep = check_symplectic(s)
    if not rep.passed:
        raise InvalidSymplectic("not a symplectic 3-Lie algebra", rep)
    A, omega = s.algebra, s.omega
    n = A.dim
    omega_t = omega.transpose()
    bracket = {}
    for i, j in itertools.combinations(range(n), 2):
        for k in range(n):
            rhs = tuple(
                -s.omega_value(_basis(n, k), A.bracket_basis(i, j, l))
                for l in range(n))
            u = solve_linear(omega_t, rhs)
            if not vec_is_zero(u):
                bracket[(i, j, k)] = u
    return ThreePreLie(n, bracket, labels=A.labels)


def verify_pre_lie(p) -> VerificationReport:
    """The two 5-argument identities, with the 3-commutator expanded."""
    rpt = VerificationReport("pre_lie")
    n = p.dim
    for xs in itertools.product(range(n), repeat=5):
        x1, x2, x3, x4, x5 = xs
        comm12_3 = p.commutator_basis(x1, x2, x3)
        comm12_4 = p.commutator_basis(x1, x2, x4)
        lhs = p.bracket_map(x1, x2, p.bracket_basis(x3, x4, x5))
        rhs = vec_add(
            vec_add(p.bracket_map(comm12_3, x4, x5),
                    p.bracket_map(x3, comm12_4, x5)),
            p.bracket_map(x3, x4, p.bracket_basis(x1, x2, x5)))
        rpt.expect_equal("d2", xs, lhs, rhs)

        lhs3 = p.bracket_map(comm12_3, x4, x5)
        rhs3 = vec_add(
            vec_add(p.bracket_map(x1, x2, p.bracket_basis(x3, x4, x5)),
                    p.bracket_map(x2, x3, p.bracket_basis(x1, x4, x5))),
            p.bracket_map(x3, x1, p.bracket_basis(x2, x4, x5)))
        rpt.expect_equal("d3", xs, lhs3, rhs3)
    return rpt


def pre_lie_commutator(p) -> ThreeLieAlgebra:
    """Total skew-symmetrization of the 3-pre-Lie bracket; a 3-Lie algebra."""
    vr = verify_pre_lie(p)
    if not vr.passed:
        raise PreconditionFailed("not a 3-pre-Lie algebra", vr)
    bracket = {}
    for i, j, k in itertools.combinations(range(p.dim), 3):
        vec = p.commutator_basis(i, j, k)
        if not vec_is_zero(vec):
            bracket[(i, j, k)] = vec
    return ThreeLieAlgebra(p.dim, bracket, labels=p.labels)


def left_multiplication_rep(p) -> Representation:
    """L_{x,y} z = {x,y,z} as a representation of the commutator algebra."""
    rho = {}
    for i, j in itertools.combinations(range(p.dim), 2):
        mat = p.left_multiplication(i, j)
        if not mat.is_zero():
            rho[(i, j)] = mat
    return Representation(p.dim, p.dim, rho)


def build_strict_from_symplectic(s) -> ThreeLie2Algebra:
    """Strict structure on g* -> g with d the inverse of omega-sharp.

    omega-sharp sends x to omega(x, .), so its matrix against the dual
    basis is omega transposed; l3 on two vectors and a covector is the
    dual of the induced left multiplication, (L*_{x,y} xi)(z) = -xi({x,y,z}).
    """
    pre = induced_pre_lie(s)
    A = s.algebra
    n = A.dim
    d = invert(s.omega.transpose())
    l3_001 = {}
    for i, j in itertools.combinations(range(n), 2):
        dual = -pre.left_multiplication(i, j).transpose()
        for a in range(n):
            col = dual.column(a)
            if not vec_is_zero(col):
                l3_001[(i, j, a)] = col
    return ThreeLie2Algebra(
        n, n, d, dict(A.bracket), l3_001, {},
        labels0=A.labels,
        labels1=tuple("%s*" % lab for lab in A.labels))
