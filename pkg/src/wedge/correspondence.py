"""The isomorphism ``sigma: F -> B`` and checks that it intertwines the actions.

Both spaces are keyed by ``(integer, partition)``, so ``sigma`` itself is
only a relabeling.  What is being tested is that two unrelated operator
implementations agree.  On the fermionic side, ``fermion`` uses Maya-diagram
sign counting.  On the bosonic side, ``boson`` uses ``count_m`` /
``p_down`` / ``p_up_star`` and the Murnaghan-Nakayama rule.  Keep the two
paths separate.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import boson, fermion
from .boson import BosonState
from .fermion import FockVector
from .gl_infinity import GlElement
from .maya import SemiInfiniteMonomial


def sigma(v: FockVector) -> BosonState:
    """``v_S -> z^charge s_lambda(S)``."""
    return BosonState._from_clean(dict(v.terms))


def sigma_inv(w: BosonState) -> FockVector:
    return FockVector._from_clean(dict(w.terms))


def oscillator_expand(k: int, S: SemiInfiniteMonomial) -> list[tuple[SemiInfiniteMonomial, int]]:
    """Evaluate ``sum_l f_l f*_{l+k} v_S`` term by term.

    ``f*_{l+k}`` needs ``l + k`` in ``S`` and ``f_l`` needs ``l`` outside it,
    so only ``l`` between the tail and the largest member (widened by ``|k|``)
    can contribute.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    key = (S.charge, S.shape)
    out = []
    for ell in range(S.tail_start - abs(k) - 1, S.max_member + abs(k) + 2):
        hit = fermion.pair_basis(ell, ell + k, key)
        if hit is not None:
            sign, (charge, shape) = hit
            out.append((SemiInfiniteMonomial(charge, shape), sign))
    out.sort(key=lambda pair: pair[0].shape, reverse=True)
    return out


@dataclass(frozen=True)
class EquivarianceReport:
    element: GlElement
    input: FockVector
    fermionic_then_sigma: BosonState
    sigma_then_bosonic: BosonState

    @property
    def equal(self) -> bool:
        return self.fermionic_then_sigma == self.sigma_then_bosonic


def equivariance_check(X: GlElement, v: FockVector) -> EquivarianceReport:
    """Compare ``sigma(rho(X) v)`` with ``xi(X) sigma(v)``."""
    left = sigma(fermion.rho_apply(X, v))
    right = boson.xi_apply(X, sigma(v))
    return EquivarianceReport(X, v, left, right)
