from __future__ import annotations

import random
from fractions import Fraction

import pytest

from a2cocycles.algebra import AlgebraError, Braiding, DeformationParams
from a2cocycles.cocycle import Bifunctional
from a2cocycles.coproduct import nichols_hopf
from a2cocycles.hochschild import (
    COBOUNDARY_MONOMIALS,
    EXPONENTIAL,
    PURE,
    HochschildCocycle,
    balanced_beta_family,
    beta_coboundary,
    check_hochschild_cocycle,
    classify_purity,
    coboundary_preimage,
    eta_basis,
    exponential,
    is_coboundary,
    purity_case,
    verify_witness,
    witness_construct,
)

from conftest import rand_fraction

X2, X1 = (1, 0, 0), (0, 0, 1)
COLS = [(2, 0, 0), (1, 0, 1), (0, 1, 0), (0, 0, 2), (2, 1, 1), (1, 2, 0), (1, 1, 2), (0, 2, 1)]


def exp_first_rows(br, e, b):
    """Published first rows of e^eta in the column order COLS."""
    q = br.q
    e1, e2, e12, e112, e122 = e
    b212, b221, b211, b121, b221211, b212121, b221212, b121211 = b
    zero = br.zero()
    r1 = [e2, -b221, -b212, -b211, zero, -b221212, -b221211, -b212121]
    r2 = [
        e122 - q * q * b221 + b212,
        -q * b211 - b121,
        e112 - q * q * b121,
        e1,
        b212121 - q * b221211,
        e12 - q * q * b212121,
        -b121211,
        -q * b121211,
    ]
    return {X2: r1, X1: r2}


@pytest.fixture(scope="module")
def br():
    return Braiding(3, 1, 1)


def test_eta_basis_cocycles_are_not_coboundaries(br):
    for name, eta in eta_basis(br).items():
        assert check_hochschild_cocycle(eta), name
        assert not is_coboundary(eta), name


def test_beta_are_coboundary_cocycles(br):
    for b in COBOUNDARY_MONOMIALS:
        beta = beta_coboundary(br, b)
        assert check_hochschild_cocycle(beta)
        assert coboundary_preimage(beta) is not None


def test_non_invariant_monomial_rejected(br):
    with pytest.raises(AlgebraError):
        beta_coboundary(br, (1, 0, 0))


@pytest.mark.parametrize("qe", [1, 2])
def test_exponential_first_rows(qe):
    br = Braiding(3, qe, qe)
    rng = random.Random(qe)
    basis = nichols_hopf(br).basis
    for _ in range(4):
        e = [br.scalar(rand_fraction(rng)) for _ in range(5)]
        b = [br.scalar(rand_fraction(rng)) for _ in range(8)]
        E = exponential(HochschildCocycle.from_vectors(br, e, b))
        rows = exp_first_rows(br, e, b)
        for g in (X2, X1):
            assert [E(g, c) for c in COLS] == rows[g]
            assert all(E(g, c).is_zero() for c in basis if c not in COLS and c != (0, 0, 0))


def test_exponential_truncates_at_five(br):
    eta = HochschildCocycle.from_vectors(br, [1, 2, 3, 4, 5], [1, -1, 2, -2, 3, -3, 4, -4])
    assert exponential(eta, 5) == exponential(eta, 6)
    assert exponential(eta, 4) != exponential(eta, 5)


def test_exponential_of_zero_is_counit(br):
    assert exponential(Bifunctional(br)) == Bifunctional.counit(br)


@pytest.mark.parametrize("qe", [1, 2])
@pytest.mark.parametrize(
    "lam,tag",
    [
        ([1, 0, 0, 0, 0], EXPONENTIAL),
        ([0, 1, 0, 0, 0], EXPONENTIAL),
        ([0, 0, 1, 0, 0], EXPONENTIAL),
        ([0, 0, 0, 0, 0], EXPONENTIAL),
        ([1, 1, 0, 0, 0], PURE),
        ([0, 1, 1, 0, 0], PURE),
        ([0, 0, 0, 1, 0], PURE),
        ([0, 0, 0, 0, 1], PURE),
        ([1, 1, 1, 1, 1], PURE),
    ],
)
def test_classifier_verdicts(qe, lam, tag):
    br = Braiding(3, qe, qe)
    verdict = classify_purity(br, DeformationParams.from_values(3, lam))
    assert verdict.tag == tag
    if tag == EXPONENTIAL:
        assert verdict.verified is True


@pytest.mark.parametrize("qe", [1, 2])
def test_balanced_parameters_are_exponential(qe):
    br = Braiding(3, qe, qe)
    q = br.q
    for l112, l122 in [(1, 1), (2, 5), (Fraction(-1, 2), 3)]:
        l112, l122 = br.scalar(l112), br.scalar(l122)
        lam = DeformationParams(
            l112 * l112 / (3 * l122), l122 * l122 / (3 * l112), (q * q - q) * l112 * l122 / 3, l112, l122
        )
        assert purity_case(br, lam) == "b"
        verdict = classify_purity(br, lam)
        assert verdict.tag == EXPONENTIAL and verdict.verified


def test_witness_has_a_free_parameter(br):
    q = br.q
    lam = DeformationParams.from_values(3, [Fraction(1, 3), Fraction(1, 3), (q * q - q) / 3, 1, 1])
    for a in (0, 1, Fraction(-7, 4)):
        alpha, eta = witness_construct(br, lam, a)
        assert verify_witness(br, lam, alpha, eta)
        assert balanced_beta_family(br, eta)
    alpha, eta = witness_construct(br, lam, 0)
    shift = -eta.beta["221211"]
    alpha, eta = witness_construct(br, lam, shift)
    assert all(eta.beta[k].is_zero() for k in ("221211", "212121", "221212", "121211"))
    assert verify_witness(br, lam, alpha, eta)


def test_witness_requires_exponential_case(br):
    from a2cocycles.algebra import InvalidParameters

    with pytest.raises(InvalidParameters):
        witness_construct(br, DeformationParams.from_values(3, [1, 1, 0, 0, 0]))


def test_hochschild_requires_atypical_shape():
    with pytest.raises(AlgebraError):
        eta_basis(Braiding(4, 1, 1))
