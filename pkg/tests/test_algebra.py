from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2cocycles.algebra import (
    AlgebraElement,
    Braiding,
    DeformationParams,
    InvalidParameters,
    RealizationConstraints,
    cleft,
    eps0,
    eps0_closed,
    free,
    lift_to_free,
    mono_degree,
    mono_name,
    mul_closed_generic,
    nichols,
    pre_nichols,
    project,
    rewrite_word,
    validate_params,
)

from conftest import rand_fraction


def atypical_cleft(rng, qe=1):
    br = Braiding(3, qe, qe)
    lam = DeformationParams.from_values(3, [rand_fraction(rng) for _ in range(5)])
    return br, lam, cleft(br, lam)


def test_braiding_entries_and_bicharacter():
    br = Braiding(4, 1, 3)
    q = br.q
    assert br.q12 * br.q21 * q == br.one()
    assert br.entry(1, 1) == q and br.entry(2, 2) == q
    assert br.bichar((1, 0), (0, 1)) == br.q12
    assert br.bichar((0, 1), (1, 0)) == br.q21
    assert br.bichar((2, 1), (1, 1)) == q**2 * br.q12**2 * br.q21 * q
    assert not br.is_atypical_shape()
    assert Braiding(3, 2, 2).is_atypical_shape()


def test_mono_degree_counts_generators():
    assert mono_degree((1, 2, 3)) == (5, 3)
    assert mono_name((2, 1, 0)) == "x2^2*x12"
    assert mono_name((0, 0, 0)) == "1"


def test_validate_rejects_serre_deformation_off_shape():
    br = Braiding(4, 1, 1)
    with pytest.raises(InvalidParameters):
        validate_params(br, DeformationParams.from_values(4, [0, 0, 0, 1, 0]))
    br = Braiding(3, 1, 0)
    with pytest.raises(InvalidParameters):
        validate_params(br, DeformationParams.from_values(3, [0, 0, 0, 0, 1]))


def test_validate_power_parameters_need_trivial_character():
    # q12 = zeta_12 has order 12, so q12^3 != 1 and lambda1 must vanish
    br = Braiding(3, 4, 1, order=12)
    with pytest.raises(InvalidParameters):
        validate_params(br, DeformationParams.from_values(12, [1, 0, 0, 0, 0]))
    flags = RealizationConstraints(chi2_N_trivial=False)
    with pytest.raises(InvalidParameters):
        validate_params(Braiding(3), DeformationParams.from_values(3, [0, 1, 0, 0, 0]), flags)


@pytest.mark.parametrize("N,k", [(3, 1), (4, 1), (4, 0), (5, 2)])
def test_prenichols_satisfies_quantum_serre(N, k):
    br = Braiding(N, 1, k)
    ctx = pre_nichols(br)
    q, q12 = br.q, br.q12
    x12 = ctx.word((1, 2)) - ctx.word((2, 1)).scale(q12)
    x1, x2 = ctx.word((1,)), ctx.word((2,))
    assert x1 * x12 == (x12 * x1).scale(q * q12)
    assert x12 * x2 == (x2 * x12).scale(q * q12)


def test_cleft_relations(rng):
    br, lam, E = atypical_cleft(rng)
    l1, l2, l12, l112, l122 = lam.as_tuple()
    q, q12 = br.q, br.q12
    y1, y2 = E.word((1,)), E.word((2,))
    y12 = y1 * y2 - (y2 * y1).scale(q12)
    one = E.one()
    assert y1 * y1 * y1 == one.scale(l1)
    assert y2 * y2 * y2 == one.scale(l2)
    assert y12 * y12 * y12 == one.scale(l12)
    assert y1 * y12 - (y12 * y1).scale(q * q12) == one.scale(l112)
    assert y12 * y2 - (y2 * y12).scale(q * q12) == one.scale(l122)


def test_cleft_is_associative_on_basis(rng):
    br, lam, E = atypical_cleft(rng)
    basis = E.basis()
    picks = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(150)]
    for a, b, c in picks:
        A, B, C = E.monomial(a), E.monomial(b), E.monomial(c)
        assert (A * B) * C == A * (B * C)


@pytest.mark.parametrize("strategy", ["rightmost", "random"])
def test_confluence_on_short_words(strategy, rng):
    br, lam, E = atypical_cleft(rng)
    for n in range(1, 7):
        for w in itertools.product((1, 2), repeat=n):
            assert rewrite_word(E, w, strategy, rng) == rewrite_word(E, w)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from((1, 2)), min_size=1, max_size=12), st.integers(0, 2**31))
def test_confluence_random_words(w, seed):
    br = Braiding(3, 1, 1)
    lam = DeformationParams.from_values(3, [Fraction(2, 3), -1, Fraction(5, 4), 3, Fraction(-1, 2)])
    E = cleft(br, lam)
    assert rewrite_word(E, w, "random", random.Random(seed)) == rewrite_word(E, w)


def test_free_projection_is_algebra_map(rng):
    br, lam, E = atypical_cleft(rng)
    F = free(br)
    u, v = F.word((1, 2, 2, 1)), F.word((2, 1, 1))
    assert project(u * v, E) == project(u, E) * project(v, E)


def test_lift_to_free_then_project_is_identity():
    br = Braiding(4, 1, 1)
    B = pre_nichols(br)
    F = free(br)
    for m in [(1, 2, 1), (0, 3, 2), (2, 1, 0)]:
        x = B.monomial(m)
        assert project(lift_to_free(x, F), B) == x


@pytest.mark.parametrize("N,k", [(3, 1), (3, 0), (4, 1), (5, 1)])
def test_closed_product_and_eps0_match_rewriting(N, k):
    br = Braiding(N, 1, k)
    lam = DeformationParams.from_values(N, [Fraction(2, 3), Fraction(-5, 7), Fraction(11, 2), 0, 0])
    E = cleft(br, lam)
    rng = random.Random(N * 10 + k)
    basis = E.basis()
    pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(120)]
    for n, m in pairs:
        prod = E.monomial(n) * E.monomial(m)
        assert mul_closed_generic(E, n, m) == prod
        assert eps0_closed(E, n, m) == eps0(prod)


def test_nichols_nilpotency():
    br = Braiding(4, 1, 3)
    B = nichols(br)
    for letter in ((1,), (2,)):
        assert not (B.word(letter * 4)).terms
    x12 = B.word((1, 2)) - B.word((2, 1)).scale(br.q12)
    assert not (x12 * x12 * x12 * x12).terms


def test_element_json_round_trip(rng):
    br, lam, E = atypical_cleft(rng)
    x = E.monomial((1, 2, 1)).scale(Fraction(3, 2)) + E.monomial((2, 0, 0))
    assert AlgebraElement.from_json(E, x.to_json()) == x
