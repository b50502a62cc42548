"""Shared corpus and generators for the test suite.

The corpus deliberately mixes hand-pinned structures (the rank-one
3-bracket on Q^3 with its crossed module, abelian algebras, a
4-dimensional symplectic algebra found by search) with randomized
instances produced by transporting a known-good structure along random
invertible basis changes, which preserves every axiom exactly.
"""

import itertools
import random
from fractions import Fraction

import pytest

from filippov_lab import (
    Cochain, CrossedModule, Homomorphism, Representation, SkeletalQuadruple,
    SymplecticThreeLie, ThreeLie2Algebra, ThreeLieAlgebra, TwoHomomorphism,
    adjoint_crossed_module, build_strict_from_crossed_module, coboundary,
    check_fundamental_identity, check_symplectic,
)
from filippov_lab.exactlin import Matrix, det, invert, kernel_basis
from filippov_lab.homotopy import two_homomorphism_rhs


# ---------------------------------------------------------------------------
# pinned structures
# ---------------------------------------------------------------------------

def rank_one_algebra(dim=3):
    """[e1, e2, e3] = e1, zero elsewhere; the paper's running example."""
    value = tuple(Fraction(1 if i == 0 else 0) for i in range(dim))
    return ThreeLieAlgebra(dim, {(0, 1, 2): value})


def example56_crossed_module():
    g = rank_one_algebra()
    h = rank_one_algebra()
    e13 = Matrix.from_rows([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    e11 = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    e12 = Matrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    alpha = Representation(3, 3, {(0, 1): e13, (1, 2): e11, (0, 2): -e12})
    return CrossedModule(g, h, Matrix.identity(3), alpha)


@pytest.fixture(scope="session")
def example56():
    return example56_crossed_module()


@pytest.fixture(scope="session")
def example56_algebra():
    return rank_one_algebra()


@pytest.fixture(scope="session")
def example56_strict(example56):
    return build_strict_from_crossed_module(example56)


@pytest.fixture(scope="session")
def abelian2():
    return ThreeLieAlgebra(2, {})


@pytest.fixture(scope="session")
def algebra_corpus():
    """3-Lie algebras known to satisfy the fundamental identity."""
    return [
        ThreeLieAlgebra(1, {}),
        ThreeLieAlgebra(2, {}),
        ThreeLieAlgebra(3, {}),
        rank_one_algebra(3),
        rank_one_algebra(4),
        ThreeLieAlgebra(4, {(0, 1, 2): (0, 0, 0, 1)}),
        # the 4-dimensional cross-product algebra
        ThreeLieAlgebra(4, {
            (1, 2, 3): (1, 0, 0, 0),
            (0, 2, 3): (0, -1, 0, 0),
            (0, 1, 3): (0, 0, 1, 0),
            (0, 1, 2): (0, 0, 0, -1),
        }),
    ]


# ---------------------------------------------------------------------------
# randomized generators
# ---------------------------------------------------------------------------

def rand_matrix(rng, rows, cols, lo=-2, hi=2):
    return Matrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)]
                             for _ in range(rows)])


def rand_invertible(rng, n, lo=-2, hi=2):
    while True:
        m = rand_matrix(rng, n, n, lo, hi)
        if det(m) != 0:
            return m


def conjugate_algebra(algebra, p):
    """Bracket transported along the invertible map p."""
    q = invert(p)
    bracket = {}
    for i, j, k in itertools.combinations(range(algebra.dim), 3):
        vec = p.apply(algebra.bracket_map(q.column(i), q.column(j),
                                          q.column(k)))
        if any(vec):
            bracket[(i, j, k)] = vec
    return ThreeLieAlgebra(algebra.dim, bracket)


def conjugate_representation(rep, p):
    """rho'(x, y) = p rho(x, y) p^{-1}: a representation again."""
    q = invert(p)
    rho = {}
    for key, mat in rep.rho.items():
        new = p @ mat @ q
        if not new.is_zero():
            rho[key] = new
    return Representation(rep.algebra_dim, rep.space_dim, rho)


def conjugate_crossed_module(cm, p, q):
    """Transport (g, h, mu, alpha) along invertible p: g -> g, q: h -> h."""
    g2 = conjugate_algebra(cm.g, p)
    h2 = conjugate_algebra(cm.h, q)
    mu2 = q @ cm.mu @ invert(p)
    qinv = invert(q)
    alpha2 = {}
    for x, y in itertools.combinations(range(cm.h.dim), 2):
        mat = _alpha_vectors(cm.alpha, qinv.column(x), qinv.column(y))
        mat = p @ mat @ invert(p)
        if not mat.is_zero():
            alpha2[(x, y)] = mat
    return CrossedModule(g2, h2, mu2,
                         Representation(cm.h.dim, cm.g.dim, alpha2))


def _alpha_vectors(rep, u, v):
    out = Matrix.zero(rep.space_dim, rep.space_dim)
    for i, ci in enumerate(u):
        if ci == 0:
            continue
        for j, cj in enumerate(v):
            if cj != 0 and i != j:
                out = out + rep.matrix(i, j).scale(ci * cj)
    return out


def transport_two_term(L, p0, p1):
    """Transported 2-term structure; (p0, p1, 0) is then an isomorphism."""
    q0, q1 = invert(p0), invert(p1)
    d = p0 @ L.d @ q1
    l3_000, l3_001, l5 = {}, {}, {}
    for i, j, k in itertools.combinations(range(L.dim0), 3):
        vec = p0.apply(L.l3_zero_map(q0.column(i), q0.column(j), q0.column(k)))
        if any(vec):
            l3_000[(i, j, k)] = vec
    for i, j in itertools.combinations(range(L.dim0), 2):
        for a in range(L.dim1):
            vec = p1.apply(L.l3_one_map(q0.column(i), q0.column(j),
                                        q1.column(a)))
            if any(vec):
                l3_001[(i, j, a)] = vec
        for k, l, m in itertools.combinations(range(L.dim0), 3):
            vec = p1.apply(L.l5_map(q0.column(i), q0.column(j), q0.column(k),
                                    q0.column(l), q0.column(m)))
            if any(vec):
                l5[(i, j, k, l, m)] = vec
    return ThreeLie2Algebra(L.dim0, L.dim1, d, l3_000, l3_001, l5)


def conjugation_homomorphism(L, rng):
    """A random isomorphism out of L, with zero trilinear correction."""
    p0 = rand_invertible(rng, L.dim0)
    p1 = rand_invertible(rng, L.dim1)
    return Homomorphism(L, transport_two_term(L, p0, p1), p0, p1, {})


def translate_homomorphism(phi, tau):
    """The homomorphism on the far end of the 2-homomorphism (phi, tau)."""
    src, tgt = phi.source, phi.target
    psi0 = phi.phi0 + tgt.d @ tau
    psi1 = phi.phi1 + tau @ src.d
    psi2 = {}
    for i, j, k in itertools.combinations(range(src.dim0), 3):
        vec = tuple(a - b for a, b in zip(
            phi.phi2_basis(i, j, k),
            two_homomorphism_rhs(phi, tau, i, j, k)))
        if any(vec):
            psi2[(i, j, k)] = vec
    return Homomorphism(src, tgt, psi0, psi1, psi2)


def random_two_homomorphism(phi, rng):
    tau = rand_matrix(rng, phi.target.dim1, phi.source.dim0)
    return TwoHomomorphism(phi, translate_homomorphism(phi, tau), tau)


# ---------------------------------------------------------------------------
# triple-skew cocycles, exactly
# ---------------------------------------------------------------------------

def l5_style_cochain(slot_values, n, vdim):
    """Triple-skew 3-cochain from values on (pair, canonical triple) slots."""
    vals = {}
    for (pq, (k, l, m)), vec in slot_values.items():
        vals[((pq, (k, l)), m)] = vec
        vals[((pq, (k, m)), l)] = tuple(-c for c in vec)
        vals[((pq, (l, m)), k)] = vec
    return Cochain(3, n, vdim, vals)


def triple_skew_cocycle_basis(algebra, rep):
    """Exact basis of triple-skew 3-cocycles, via the kernel of delta."""
    n, vdim = algebra.dim, rep.space_dim
    slots = [(pq, tr) for pq in itertools.combinations(range(n), 2)
             for tr in itertools.combinations(range(n), 3)]
    pairs = list(itertools.combinations(range(n), 2))
    all_keys = sorted((ps, z) for ps in itertools.product(pairs, repeat=3)
                      for z in range(n))
    cols = []
    for slot in slots:
        for m in range(vdim):
            unit = {slot: tuple(Fraction(1 if mm == m else 0)
                                for mm in range(vdim))}
            dc = coboundary(algebra, rep, l5_style_cochain(unit, n, vdim))
            flat = []
            for key in all_keys:
                vec = dc.values.get(key)
                flat.extend(vec if vec else (Fraction(0),) * vdim)
            cols.append(flat)
    if not cols:
        return []
    kernel = kernel_basis(Matrix.from_columns(cols))
    basis = []
    for v in kernel:
        slot_values = {}
        for si, slot in enumerate(slots):
            vec = tuple(v[si * vdim + mm] for mm in range(vdim))
            if any(vec):
                slot_values[slot] = vec
        basis.append(l5_style_cochain(slot_values, n, vdim))
    return basis


# ---------------------------------------------------------------------------
# symplectic search
# ---------------------------------------------------------------------------

def search_symplectic_dim4():
    """Smallest-entry search for a nontrivial 4-dimensional symplectic pair.

    Brackets range over single canonical triples valued in a signed basis
    vector; forms range over skew matrices with entries in {-1, 0, 1}.
    Deterministic: first hit in lexicographic order wins.
    """
    n = 4
    triples = list(itertools.combinations(range(n), 3))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for tr in triples:
        for target in range(n):
            for sign in (1, -1):
                vec = tuple(Fraction(sign if i == target else 0)
                            for i in range(n))
                algebra = ThreeLieAlgebra(n, {tr: vec})
                if not check_fundamental_identity(algebra).passed:
                    continue
                for entries in itertools.product((0, 1, -1), repeat=len(pairs)):
                    rows = [[Fraction(0)] * n for _ in range(n)]
                    for (i, j), e in zip(pairs, entries):
                        rows[i][j] = Fraction(e)
                        rows[j][i] = Fraction(-e)
                    omega = Matrix.from_rows(rows)
                    if det(omega) == 0:
                        continue
                    cand = SymplecticThreeLie(algebra, omega)
                    if check_symplectic(cand).passed:
                        return cand
    raise AssertionError("search space exhausted without a hit")


@pytest.fixture(scope="session")
def symplectic_dim4():
    return search_symplectic_dim4()


@pytest.fixture(scope="session")
def symplectic_abelian2(abelian2):
    return SymplecticThreeLie(abelian2, Matrix.from_rows([[0, 1], [-1, 0]]))


@pytest.fixture()
def rng():
    return random.Random(20260810)
