import itertools
import random
from fractions import Fraction

import pytest

from filippov_lab import (
    Homomorphism, Representation, ThreeLie2Algebra, ThreeLieAlgebra,
    TwoHomomorphism, build_skeletal, build_strict_from_crossed_module,
    compose_homomorphisms, horizontal_compose, identity_homomorphism,
    identity_two_homomorphism, verify_homomorphism, verify_two_homomorphism,
    verify_two_term, vertical_compose, SkeletalQuadruple, Cochain,
)
from filippov_lab.errors import (
    ChainHomotopyError, ChainMapError, EndpointMismatch,
)
from filippov_lab.exactlin import Matrix
from filippov_lab.homotopy import two_homomorphism_rhs

from conftest import (
    conjugation_homomorphism, rand_matrix, random_two_homomorphism,
    rank_one_algebra, translate_homomorphism, transport_two_term,
    rand_invertible,
)


def perturb_l3_001(L, key, entry, amount=1):
    l3_001 = {k: list(v) for k, v in L.l3_001.items()}
    vec = l3_001.setdefault(key, [0] * L.dim1)
    vec[entry] = vec[entry] + amount
    return ThreeLie2Algebra(L.dim0, L.dim1, L.d, dict(L.l3_000),
                            {k: tuple(v) for k, v in l3_001.items()},
                            dict(L.l5))


def test_example56_strict_passes(example56_strict):
    report = verify_two_term(example56_strict)
    assert report.passed
    # all seven condition families plus the derived identity were exercised
    assert report.checked > 100


def test_skeletal_zero_data_passes():
    # rho = 0, Theta = 0 over an abelian V0: every condition is 0 = 0
    a = ThreeLieAlgebra(3, {})
    q = SkeletalQuadruple(a, 2, Representation.zero(3, 2), Cochain(3, 3, 2, {}))
    L = build_skeletal(q)
    assert L.is_skeletal()
    assert verify_two_term(L).passed


def test_perturbed_l3_001_fails_at_e_or_f(example56_strict):
    L = perturb_l3_001(example56_strict, (0, 1, 0), 1)
    report = verify_two_term(L)
    assert not report.passed
    assert set(report.failing_conditions()) & {"e", "f", "a", "c"}


def test_every_single_entry_l3_001_perturbation_detected(example56_strict):
    L = example56_strict
    for i, j in itertools.combinations(range(L.dim0), 2):
        for a in range(L.dim1):
            for entry in range(L.dim1):
                assert not verify_two_term(
                    perturb_l3_001(L, (i, j, a), entry)).passed


def test_3dd_holds_on_strict(example56_strict):
    L = example56_strict
    dcols = [L.d_column(a) for a in range(L.dim1)]
    for a, b, c in itertools.product(range(L.dim1), repeat=3):
        t1 = L.l3_one_map(dcols[a], dcols[b], c)
        t2 = tuple(-x for x in L.l3_one_map(dcols[a], dcols[c], b))
        t3 = L.l3_one_map(dcols[b], dcols[c], a)
        assert t1 == t2 == t3


def test_identity_homomorphism_verifies(example56_strict):
    phi = identity_homomorphism(example56_strict)
    assert verify_homomorphism(phi).passed


def test_zero_homomorphism_verifies(example56_strict):
    L = example56_strict
    zero = Homomorphism(L, L, Matrix.zero(3, 3), Matrix.zero(3, 3), {})
    assert verify_homomorphism(zero).passed


def test_chain_map_enforced(example56_strict):
    L = example56_strict
    with pytest.raises(ChainMapError):
        Homomorphism(L, L, Matrix.zero(3, 3), Matrix.identity(3), {})


def test_conjugation_isomorphisms_verify(example56_strict, rng):
    for _ in range(5):
        phi = conjugation_homomorphism(example56_strict, rng)
        assert verify_two_term(phi.target).passed
        assert verify_homomorphism(phi).passed


def test_phi2_solved_from_homo1_decided_exactly(example56_strict, rng):
    # with d' invertible, solve homo1 for phi2 and let the verifier decide
    from filippov_lab.exactlin import invert, vec_sub
    L = example56_strict
    phi = conjugation_homomorphism(L, rng)
    tgt = phi.target
    dinv = invert(tgt.d)
    cols = [phi.phi0.column(i) for i in range(3)]
    phi2 = {}
    for i, j, k in itertools.combinations(range(3), 3):
        rhs = vec_sub(phi.phi0.apply(L.l3_zero(i, j, k)),
                      tgt.l3_zero_map(cols[i], cols[j], cols[k]))
        phi2[(i, j, k)] = dinv.apply(rhs)
    candidate = Homomorphism(L, tgt, phi.phi0, phi.phi1, phi2)
    report = verify_homomorphism(candidate)
    assert {f.condition for f in report.failures} <= {"homo2", "homo3"}
    assert all(f.condition != "homo1" for f in report.failures)


def test_composition_neutral_identities(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    assert compose_homomorphisms(phi, identity_homomorphism(phi.source)) == phi
    assert compose_homomorphisms(identity_homomorphism(phi.target), phi) == phi


def test_composites_verify(example56_strict, rng):
    for _ in range(5):
        phi = conjugation_homomorphism(example56_strict, rng)
        tau = rand_matrix(rng, phi.target.dim1, phi.source.dim0)
        psi = translate_homomorphism(phi, tau)
        outer = conjugation_homomorphism(phi.target, rng)
        comp = compose_homomorphisms(outer, psi)
        assert verify_homomorphism(comp).passed


def test_composition_associative(example56_strict, rng):
    f = conjugation_homomorphism(example56_strict, rng)
    g = conjugation_homomorphism(f.target, rng)
    h = conjugation_homomorphism(g.target, rng)
    tau = rand_matrix(rng, f.target.dim1, f.source.dim0)
    f2 = translate_homomorphism(f, tau)
    lhs = compose_homomorphisms(h, compose_homomorphisms(g, f2))
    rhs = compose_homomorphisms(compose_homomorphisms(h, g), f2)
    assert lhs == rhs


def test_endpoint_mismatch_raises(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    with pytest.raises(EndpointMismatch):
        compose_homomorphisms(phi, phi)


def test_translate_passes_verify(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    for _ in range(5):
        tau = rand_matrix(rng, phi.target.dim1, phi.source.dim0)
        psi = translate_homomorphism(phi, tau)
        assert verify_homomorphism(psi).passed
        t = TwoHomomorphism(phi, psi, tau)
        assert verify_two_homomorphism(t).passed


def test_two_homomorphism_zero_tau(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    t = identity_two_homomorphism(phi)
    assert verify_two_homomorphism(t).passed


def test_two_homomorphism_zero_tau_with_different_phi2_fails(
        example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    phi2 = dict(phi.phi2)
    phi2[(0, 1, 2)] = (Fraction(1), 0, 0)
    psi = Homomorphism(phi.source, phi.target, phi.phi0, phi.phi1, phi2)
    t = TwoHomomorphism(phi, psi, Matrix.zero(3, 3))
    report = verify_two_homomorphism(t)
    assert not report.passed
    assert "coherence" in report.failing_conditions()


def test_chain_homotopy_enforced(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    tau = rand_matrix(rng, 3, 3)
    if (phi.target.d @ tau).is_zero():
        tau = Matrix.identity(3)
    with pytest.raises(ChainHomotopyError):
        TwoHomomorphism(phi, phi, tau)


def test_vertical_composition(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    t1 = random_two_homomorphism(phi, rng)
    t2 = random_two_homomorphism(t1.target, rng)
    composite = vertical_compose(t1, t2)
    assert composite.tau == t1.tau + t2.tau
    assert verify_two_homomorphism(composite).passed
    # unit and associativity
    unit = identity_two_homomorphism(phi)
    assert vertical_compose(unit, t1).tau == t1.tau
    t3 = random_two_homomorphism(t2.target, rng)
    lhs = vertical_compose(vertical_compose(t1, t2), t3)
    rhs = vertical_compose(t1, vertical_compose(t2, t3))
    assert lhs.tau == rhs.tau and lhs.source == rhs.source \
        and lhs.target == rhs.target


def test_vertical_endpoint_guard(example56_strict, rng):
    phi = conjugation_homomorphism(example56_strict, rng)
    t1 = random_two_homomorphism(phi, rng)
    with pytest.raises(EndpointMismatch):
        vertical_compose(t1, t1)


def test_horizontal_composition(example56_strict, rng):
    inner_phi = conjugation_homomorphism(example56_strict, rng)
    outer_phi = conjugation_homomorphism(inner_phi.target, rng)
    for _ in range(4):
        t1 = random_two_homomorphism(inner_phi, rng)
        t2 = random_two_homomorphism(outer_phi, rng)
        h = horizontal_compose(t1, t2)
        assert h.source == compose_homomorphisms(t2.source, t1.source)
        assert h.target == compose_homomorphisms(t2.target, t1.target)
        assert verify_two_homomorphism(h).passed
        # both whiskerings agree
        alt = t2.tau @ t1.target.phi0 + t2.source.phi1 @ t1.tau
        assert h.tau == alt


def test_horizontal_tau_zero_reduces_to_whisker(example56_strict, rng):
    inner_phi = conjugation_homomorphism(example56_strict, rng)
    outer_phi = conjugation_homomorphism(inner_phi.target, rng)
    t2 = random_two_homomorphism(outer_phi, rng)
    t1 = identity_two_homomorphism(inner_phi)
    h = horizontal_compose(t1, t2)
    assert h.tau == t2.tau @ inner_phi.phi0


def test_horizontal_identities_give_identity(example56_strict, rng):
    inner_phi = conjugation_homomorphism(example56_strict, rng)
    outer_phi = conjugation_homomorphism(inner_phi.target, rng)
    h = horizontal_compose(identity_two_homomorphism(inner_phi),
                           identity_two_homomorphism(outer_phi))
    assert h.tau.is_zero()
    assert h.source == compose_homomorphisms(outer_phi, inner_phi)
    assert h.source == h.target


def test_two_homomorphism_rhs_matches_paper_cyclic_block(
        example56_strict, rng):
    # the c.p. block written out and the normalized implementation agree
    phi = conjugation_homomorphism(example56_strict, rng)
    tgt = phi.target
    tau = rand_matrix(rng, 3, 3)
    for xs in itertools.product(range(3), repeat=3):
        taus = [tau.column(x) for x in xs]
        dts = [tgt.d.apply(t) for t in taus]
        cols = [phi.phi0.column(x) for x in xs]
        acc = tuple(Fraction(0) for _ in range(3))
        from filippov_lab.exactlin import vec_add, vec_sub
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            acc = vec_add(acc, tgt.l3_one_map(cols[a], cols[b], taus[c]))
            acc = vec_sub(acc, tgt.l3_one_map(dts[a], cols[c], taus[b]))
        acc = vec_sub(acc, tau.apply(
            phi.source.l3_zero(xs[0], xs[1], xs[2])))
        acc = vec_add(acc, tgt.l3_one_map(dts[0], dts[1], taus[2]))
        assert acc == two_homomorphism_rhs(phi, tau, *xs)
