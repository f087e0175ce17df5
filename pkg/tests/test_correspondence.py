from fractions import Fraction

import pytest

from wedge.boson import BosonState
from wedge.correspondence import equivariance_check, oscillator_expand, sigma, sigma_inv
from wedge.errors import UnsupportedElement
from wedge.fermion import FockVector
from wedge.gl_infinity import BandMatrix, GlElement, Periodic, delta0
from wedge.maya import SemiInfiniteMonomial, from_charge_partition
from wedge.partitions import StripDirection, enumerate_strips, partitions_up_to

LAM = (4, 4, 3, 3, 2, 2, 1)


def test_sigma_relabels():
    assert sigma(FockVector.basis(0, LAM)) == BosonState.basis(0, LAM)
    assert sigma(FockVector()) == BosonState()
    v = FockVector.basis(1, (2,), 2) - FockVector.basis(-1, (), 3)
    assert sigma(v) == BosonState.basis(1, (2,), 2) - BosonState.basis(-1, (), 3)
    assert sigma_inv(sigma(v)) == v


def test_oscillator_expand_examples():
    out = oscillator_expand(4, from_charge_partition(0, LAM))
    assert [(T.shape, s) for T, s in out] == [
        ((4, 4, 3, 3, 1), 1),
        ((4, 4, 3, 1, 1, 1, 1), 1),
        ((4, 2, 2, 2, 2, 2, 1), 1),
    ]
    assert oscillator_expand(1, SemiInfiniteMonomial(0, (1,))) == [(SemiInfiniteMonomial(0, ()), 1)]
    assert oscillator_expand(-1, SemiInfiniteMonomial(0, ())) == [(SemiInfiniteMonomial(0, (1,)), 1)]
    with pytest.raises(ValueError):
        oscillator_expand(0, SemiInfiniteMonomial(0, ()))


def test_oscillator_expand_matches_strips():
    for m in (-2, 0, 2):
        for lam in partitions_up_to(7):
            S = SemiInfiniteMonomial(m, lam)
            for k in range(1, 6):
                down = sorted((T.shape, s) for T, s in oscillator_expand(k, S))
                assert down == sorted((nu, (-1) ** h) for nu, h in enumerate_strips(lam, k, StripDirection.REMOVE))
                up = sorted((T.shape, s) for T, s in oscillator_expand(-k, S))
                assert up == sorted((nu, (-1) ** h) for nu, h in enumerate_strips(lam, k, StripDirection.ADD))
                assert all(T.charge == m for T, _ in oscillator_expand(k, S))


def test_equivariance_examples():
    r = equivariance_check(GlElement.elementary(-1, 3), FockVector.basis(0, LAM))
    assert r.equal and r.sigma_then_bosonic == BosonState.basis(0, (4, 2, 2, 2, 2, 2, 1))
    r = equivariance_check(delta0(0, {1: 1}), FockVector.basis(0, (1,)))
    assert r.equal and r.fermionic_then_sigma == BosonState.basis(0)
    v = FockVector.basis(2, (3, 1), Fraction(1, 2))
    r = equivariance_check(GlElement.scalar(Fraction(-7, 3)), v)
    assert r.equal and r.fermionic_then_sigma == sigma(v) * Fraction(-7, 3)


def test_equivariance_on_combinations():
    X = GlElement.elementary(2, -1, 3) + delta0(Fraction(1, 2), {-2: 1, 3: -1, 0: 2})
    v = FockVector.basis(0, (3, 2)) - FockVector.basis(1, (1, 1), Fraction(2, 5)) + FockVector.basis(-2)
    assert equivariance_check(X, v).equal


def test_charge_operator_agrees():
    for m in range(-2, 3):
        for lam in partitions_up_to(6):
            r = equivariance_check(delta0(0, {0: 1}), FockVector.basis(m, lam))
            assert r.equal and r.fermionic_then_sigma == m * BosonState.basis(m, lam)


def test_propagates_unsupported():
    X = GlElement(0, BandMatrix(periodic=Periodic(3, {(0, 1, 2): 1})))
    with pytest.raises(UnsupportedElement):
        equivariance_check(X, FockVector.vacuum())
