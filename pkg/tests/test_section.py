from __future__ import annotations

from fractions import Fraction

import pytest

from a2cocycles.algebra import Braiding, DeformationParams, eps0
from a2cocycles.section import (
    ATYPICAL,
    GENERIC,
    LiftSetting,
    build_section,
    check_H1,
    check_H2,
    check_weights,
    verify_comodule,
)

LAM5 = [Fraction(2, 3), Fraction(-5, 7), Fraction(11, 2), Fraction(3, 4), Fraction(-1, 9)]


def generic_setting(N, k=1):
    br = Braiding(N, 1, k)
    return LiftSetting(br, DeformationParams.from_values(N, LAM5[:3]), GENERIC)


def atypical_setting(qe=1):
    br = Braiding(3, qe, qe)
    return LiftSetting(br, DeformationParams.from_values(3, LAM5), ATYPICAL)


SETTINGS = [
    pytest.param(lambda: generic_setting(3), id="generic3"),
    pytest.param(lambda: generic_setting(4, 0), id="generic4"),
    pytest.param(lambda: generic_setting(5), id="generic5"),
    pytest.param(lambda: atypical_setting(1), id="atypical-q"),
    pytest.param(lambda: atypical_setting(2), id="atypical-q2"),
]


@pytest.mark.parametrize("make", SETTINGS)
def test_section_is_comodule_map_with_counit(make):
    S = make()
    gamma = build_section(S)
    assert gamma.verified
    assert verify_comodule(S, gamma)
    assert check_weights(S, gamma)
    for b in S.B.basis():
        assert eps0(gamma(b)) == (1 if b == (0, 0, 0) else 0)


@pytest.mark.parametrize("make", SETTINGS)
def test_general_section_equals_closed_form(make):
    S = make()
    assert build_section(S, "general").values == build_section(S, "closed").values


@pytest.mark.parametrize("make", SETTINGS)
def test_hypotheses_hold(make):
    S = make()
    for b in S.B.basis():
        assert check_H1(S, b)
        assert check_H2(S, b)


def test_atypical_section_published_values():
    S = atypical_setting()
    br, E = S.braiding, S.E
    q = br.q
    l1, l2, l12, l112, l122 = S.params.as_tuple()
    gamma = build_section(S)

    def y(m, c=1):
        return E.monomial(m, c)

    assert gamma((0, 2, 0)) == y((0, 2, 0)) - y((1, 0, 0), (q * q - q) * l112)
    assert gamma((0, 2, 1)) == y((0, 2, 1)) + y((2, 0, 0), 3 * q * q * l1) - y((1, 0, 1), (q * q - q) * l112)
    assert gamma((0, 1, 2)) == y((0, 1, 2)) - y((1, 0, 0), (q * q - q) * l1)
    assert gamma((1, 2, 2)) == (
        y((1, 2, 2)) - y((2, 1, 0), (q - q * q) * l1) - y((2, 0, 2), (q * q - q) * l112)
    )
    assert gamma((1, 1, 1)) == y((1, 1, 1))


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        build_section(generic_setting(3), "fancy")
