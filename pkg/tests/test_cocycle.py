from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from a2cocycles.algebra import Braiding, DeformationParams
from a2cocycles.cocycle import (
    UNIT,
    Bifunctional,
    CocycleTable,
    Functional,
    alpha_from_params,
    alpha_inverse_closed,
    bifunctional_convolve,
    expected_first_rows,
    functional_convolve,
    functional_inverse,
    orbit_act,
    reconstruction_failures,
    sigma_table,
)
from a2cocycles.coproduct import nichols_hopf
from a2cocycles.section import ATYPICAL, GENERIC, LiftSetting, build_section

from conftest import rand_fraction


def atypical_table(rng, qe=1):
    br = Braiding(3, qe, qe)
    lam = DeformationParams.from_values(3, [rand_fraction(rng) for _ in range(5)])
    S = LiftSetting(br, lam, ATYPICAL)
    return br, lam, S, sigma_table(S)


def test_table_is_normalized(rng):
    br, lam, S, T = atypical_table(rng)
    for b in T.basis():
        e = 1 if b == UNIT else 0
        assert T(b, UNIT) == e
        assert T(UNIT, b) == e


def test_first_rows_match_published_atypical(rng):
    br, lam, S, T = atypical_table(rng)
    got = {(g, b): v for g, row in T.first_rows().items() for b, v in row.items()}
    assert got == expected_first_rows(br, lam, ATYPICAL)


@pytest.mark.parametrize("N", [3, 4])
def test_first_rows_match_published_generic(N):
    br = Braiding(N, 1, 1)
    lam = DeformationParams.from_values(N, [Fraction(3, 2), Fraction(-2, 5), 7])
    T = sigma_table(LiftSetting(br, lam, GENERIC))
    got = {(g, b): v for g, row in T.first_rows().items() for b, v in row.items()}
    assert got == expected_first_rows(br, lam, GENERIC)


def test_zero_lambda_gives_trivial_table():
    br = Braiding(4, 1, 1)
    T = sigma_table(LiftSetting(br, DeformationParams.zero(4), GENERIC))
    assert T.values == Bifunctional.counit(br)


def test_reconstruction_identity_atypical(rng):
    br, lam, S, T = atypical_table(rng, qe=2)
    assert not reconstruction_failures(S, build_section(S), T)


def test_table_json_round_trip(rng):
    br, lam, S, T = atypical_table(rng)
    back = CocycleTable.from_json(json.loads(json.dumps(T.to_json())))
    assert back.values == T.values
    assert back.params == T.params


def test_functional_convolution_unit_and_associativity(rng):
    br = Braiding(3, 1, 1)
    basis = nichols_hopf(br).basis
    f, g, h = (
        Functional(br, {b: br.scalar(rand_fraction(rng)) for b in rng.sample(basis, 6)})
        for _ in range(3)
    )
    eps = Functional.counit(br)
    assert functional_convolve(eps, f) == f == functional_convolve(f, eps)
    assert functional_convolve(functional_convolve(f, g), h) == functional_convolve(f, functional_convolve(g, h))


@pytest.mark.parametrize("qe", [1, 2])
def test_alpha_inverse_closed_form(qe):
    br = Braiding(3, qe, qe)
    r = random.Random(qe)
    for _ in range(10):
        c = [rand_fraction(r) for _ in range(8)]
        a = alpha_from_params(br, c)
        inv = functional_inverse(a)
        assert inv == alpha_inverse_closed(br, c)
        assert functional_convolve(a, inv) == Functional.counit(br)


def test_orbit_by_counit_is_identity(rng):
    br, lam, S, T = atypical_table(rng)
    assert orbit_act(Functional.counit(br), T).values == T.values


def test_orbit_equals_two_convolutions(rng):
    br, lam, S, T = atypical_table(rng)
    hopf = nichols_hopf(br)
    alpha = alpha_from_params(br, [rand_fraction(rng) for _ in range(8)])
    inv = functional_inverse(alpha)
    aa = Bifunctional(br, {(x, y): alpha(x) * alpha(y) for x in hopf.basis for y in hopf.basis})
    inv_m = Bifunctional(
        br,
        {
            (x, y): sum((c * inv(m) for m, c in hopf.product(x, y).items()), br.zero())
            for x in hopf.basis
            for y in hopf.basis
        },
    )
    expected = bifunctional_convolve(bifunctional_convolve(aa, T.values), inv_m)
    assert orbit_act(alpha, T).values == expected
