import itertools
import random
from fractions import Fraction

import pytest

from filippov_lab import (
    FundamentalElement, Representation, ThreeLieAlgebra,
    check_fundamental_identity, check_leibniz_fundamental,
    check_representation, fundamental_bracket,
)
from filippov_lab.errors import DimensionMismatch, PreconditionFailed
from filippov_lab.exactlin import Matrix

from conftest import rank_one_algebra


def wedge(i, j):
    return FundamentalElement.wedge(i, j)


def test_fundamental_identity_example56(example56_algebra):
    assert check_fundamental_identity(example56_algebra).passed


def test_fundamental_identity_abelian():
    assert check_fundamental_identity(ThreeLieAlgebra(5, {})).passed


def test_fundamental_identity_dim4_two_entry_table_fails():
    # [e1,e2,e3] = e1 and [e1,e2,e4] = e4; direct evaluation finds the
    # failing 5-tuple (e2,e3,e1,e2,e4): lhs 0 vs rhs e4
    a = ThreeLieAlgebra(4, {(0, 1, 2): (1, 0, 0, 0),
                            (0, 1, 3): (0, 0, 0, 1)})
    report = check_fundamental_identity(a)
    assert not report.passed
    failing = {f.inputs for f in report.failures}
    assert (1, 2, 0, 1, 3) in failing
    f = next(f for f in report.failures if f.inputs == (1, 2, 0, 1, 3))
    assert f.lhs == (0, 0, 0, 0)
    assert f.rhs == (0, 0, 0, Fraction(1))


def test_corpus_passes_fundamental_identity(algebra_corpus):
    for a in algebra_corpus:
        assert check_fundamental_identity(a).passed


def test_bracket_permutation_signs(example56_algebra):
    a = example56_algebra
    for triple in itertools.permutations(range(3)):
        canon, sign = __import__("filippov_lab").skew_canon(triple)
        assert a.bracket_basis(*triple) == \
            tuple(sign * c for c in a.bracket_basis(*canon))


def test_ad_example56(example56_algebra):
    # oracle: expand [e2,e3,e_k] from the single structure constant
    ad = example56_algebra.ad(1, 2)
    assert ad.column(0) == (Fraction(1), 0, 0)
    assert ad.column(1) == (0, 0, 0)
    assert ad.column(2) == (0, 0, 0)


def test_ad_skew_and_abelian(example56_algebra):
    assert example56_algebra.ad(1, 1).is_zero()
    assert ThreeLieAlgebra(3, {}).ad(0, 2).is_zero()


def test_ad_derivation_iff_fundamental_identity(algebra_corpus):
    # the equivalence, checked both ways on passing and failing tables
    def ad_all_derivations(a):
        for i, j in itertools.combinations(range(a.dim), 2):
            m = a.ad(i, j)
            for x, y, z in itertools.combinations(range(a.dim), 3):
                lhs = m.apply(a.bracket_basis(x, y, z))
                rhs = tuple(
                    p + q + r for p, q, r in zip(
                        a.bracket_map(m.column(x), y, z),
                        a.bracket_map(x, m.column(y), z),
                        a.bracket_map(x, y, m.column(z))))
                if lhs != rhs:
                    return False
        return True

    for a in algebra_corpus:
        assert ad_all_derivations(a)
    bad = ThreeLieAlgebra(4, {(0, 1, 2): (1, 0, 0, 0),
                              (0, 1, 3): (0, 0, 0, 1)})
    assert not check_fundamental_identity(bad).passed
    assert not ad_all_derivations(bad)


def test_fundamental_bracket_example56(example56_algebra):
    a = example56_algebra
    # [e1^e2, e2^e3]_F = [e1,e2,e2]^e3 + e2^[e1,e2,e3] = e2^e1
    out = fundamental_bracket(a, wedge(0, 1), wedge(1, 2))
    assert out == wedge(0, 1).scale(-1)
    # reversed arguments: [e2,e3,e1]^e2 + e1^[e2,e3,e2] = e1^e2
    out = fundamental_bracket(a, wedge(1, 2), wedge(0, 1))
    assert out == wedge(0, 1)


def test_fundamental_bracket_self_abelian():
    a = ThreeLieAlgebra(3, {})
    x = wedge(0, 1)
    assert fundamental_bracket(a, x, x).is_zero()


def test_fundamental_bracket_bilinear(example56_algebra, rng):
    a = example56_algebra
    pairs = list(itertools.combinations(range(3), 2))
    for _ in range(20):
        c1 = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        c2 = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        x1, x2, y = (FundamentalElement({p: 1}) for p in
                     rng.sample(pairs, 3))
        combo = x1.scale(c1) + x2.scale(c2)
        lhs = fundamental_bracket(a, combo, y)
        rhs = fundamental_bracket(a, x1, y).scale(c1) \
            + fundamental_bracket(a, x2, y).scale(c2)
        assert lhs == rhs
        lhs = fundamental_bracket(a, y, combo)
        rhs = fundamental_bracket(a, y, x1).scale(c1) \
            + fundamental_bracket(a, y, x2).scale(c2)
        assert lhs == rhs


def test_leibniz_fundamental_corpus(algebra_corpus):
    for a in algebra_corpus:
        assert check_leibniz_fundamental(a).passed


def test_leibniz_fundamental_gate():
    bad = ThreeLieAlgebra(4, {(0, 1, 2): (1, 0, 0, 0),
                              (0, 1, 3): (0, 0, 0, 1)})
    with pytest.raises(PreconditionFailed):
        check_leibniz_fundamental(bad)


def test_zero_representation_passes(algebra_corpus):
    for a in algebra_corpus:
        assert check_representation(a, Representation.zero(a.dim, 2)).passed


def test_adjoint_representation_passes(algebra_corpus):
    for a in algebra_corpus:
        assert check_representation(a, Representation.adjoint(a)).passed


def test_example56_alpha_is_representation(example56):
    assert check_representation(example56.h, example56.alpha).passed


def test_representation_dimension_guard(example56_algebra):
    rep = Representation.zero(4, 2)
    with pytest.raises(DimensionMismatch):
        check_representation(example56_algebra, rep)


def test_broken_representation_detected(example56_algebra):
    # perturb ad by a matrix that is not in the commutant
    base = Representation.adjoint(example56_algebra)
    rho = dict(base.rho)
    bump = Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    rho[(0, 1)] = rho.get((0, 1), Matrix.zero(3, 3)) + bump
    assert not check_representation(
        example56_algebra, Representation(3, 3, rho)).passed


def test_dim_below_three_forces_zero_bracket():
    with pytest.raises(DimensionMismatch):
        ThreeLieAlgebra(2, {(0, 1, 2): (1, 0)})
    assert ThreeLieAlgebra(2, {}).bracket == {}
