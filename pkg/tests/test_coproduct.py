from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from a2cocycles.algebra import Braiding, DeformationParams, cleft, free, lift_word_expansion, nichols, pre_nichols
from a2cocycles.coproduct import (
    TensorElement,
    coproduct,
    delta_atypical,
    delta_closed,
    delta_free,
    delta_multiplicative,
    delta_two,
    delta_two_right,
    nichols_hopf,
    reduced_delta,
    tensor_mul,
)


def oracle_delta(ctx, m):
    """Coproduct of the lift of m computed letter by letter."""
    out = None
    for w, c in lift_word_expansion(ctx.braiding, m).items():
        t = delta_multiplicative(ctx, w).scale(c)
        out = t if out is None else out + t
    return out


def monomials(bound):
    return itertools.product(range(bound + 1), repeat=3)


@pytest.mark.parametrize("N,k", [(3, 1), (4, 1), (4, 2), (5, 1)])
def test_delta_closed_matches_multiplicative_oracle(N, k):
    br = Braiding(N, 1, k)
    ctx = pre_nichols(br)
    for m in monomials(3):
        assert delta_closed(br, m) == oracle_delta(ctx, m)


def test_delta_closed_matches_free_oracle_up_to_four():
    br = Braiding(5, 1, 1)
    B = pre_nichols(br)
    F = free(br)
    for m in monomials(4):
        if sum(m) > 6:
            continue
        lifted = None
        for w, c in lift_word_expansion(br, m).items():
            t = delta_free(br, w).scale(c)
            lifted = t if lifted is None else lifted + t
        assert lifted.project(B, B) == delta_closed(br, m)


def test_free_coproduct_is_multiplicative():
    br = Braiding(3, 1, 1)
    F = free(br)
    u, v = F.word((1, 2, 1)), F.word((2, 2, 1, 1))
    assert delta_free(br, u * v) == tensor_mul(delta_free(br, u), delta_free(br, v))


@pytest.mark.parametrize("qe", [1, 2])
def test_atypical_delta_matches_free_after_projection(qe):
    br = Braiding(3, qe, qe)
    lam = DeformationParams.from_values(3, [Fraction(2, 3), -1, Fraction(5, 4), 3, Fraction(-1, 2)])
    E, B = cleft(br, lam), nichols(br)
    for m in monomials(2):
        lifted = None
        for w, c in lift_word_expansion(br, m).items():
            t = delta_free(br, w).scale(c)
            lifted = t if lifted is None else lifted + t
        assert delta_atypical(br, m).project(E, B) == lifted.project(E, B)


@pytest.mark.parametrize("N", [3, 4])
def test_nichols_coassociative_and_counital(N):
    br = Braiding(N, 1, 1)
    hopf = nichols_hopf(br)
    unit = (0, 0, 0)
    for b in hopf.basis:
        assert delta_two(br, b) == delta_two_right(br, b)
        d = hopf.delta[b]
        assert {v: c for (u, v), c in d.items() if u == unit} == {b: br.one()}
        assert {u: c for (u, v), c in d.items() if v == unit} == {b: br.one()}


def test_generators_are_primitive():
    br = Braiding(4, 1, 3)
    B = pre_nichols(br)
    for g in ((1, 0, 0), (0, 0, 1)):
        assert not reduced_delta(B.monomial(g)).terms


def test_coproduct_of_pre_nichols_element_is_linear():
    br = Braiding(4, 1, 1)
    B = pre_nichols(br)
    x = B.monomial((1, 1, 0)).scale(3) + B.monomial((0, 2, 1))
    expected = delta_closed(br, (1, 1, 0)).scale(3) + delta_closed(br, (0, 2, 1))
    assert coproduct(x) == expected
    assert isinstance(coproduct(x), TensorElement)
