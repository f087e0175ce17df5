"""The bosonic space ``C[z, z^-1] (x) Lambda`` in the Schur basis.

States are keyed by ``(zexp, partition)`` for ``z^zexp s_partition``.  The
operators ``b_i`` / ``b*_i`` use only the partition operators ``count_m``,
``p_down`` and ``p_up_star``; multiplication by ``p_k`` and its adjoint use
border-strip enumeration.  Nothing here looks at Maya diagrams.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedElement
from .gl_infinity import GlElement
from .linear import LinearCombination
from .partitions import (
    Partition,
    StripDirection,
    count_m,
    enumerate_strips,
    is_insertable,
    is_removable,
    p_down,
    p_up_star,
)

Key = tuple[int, Partition]

_ONE = Fraction(1)


class BosonState(LinearCombination):
    """Finite combination of ``z^m s_lambda``."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key):
        zexp, parts = key
        return int(zexp), parts if isinstance(parts, Partition) else Partition(parts)

    @classmethod
    def basis(cls, zexp: int, partition=(), coeff=1) -> "BosonState":
        return cls({(zexp, partition): coeff})


@lru_cache(maxsize=None)
def _strips(lam: Partition, k: int, direction: StripDirection):
    return tuple((Fraction(-1 if h % 2 else 1), nu) for nu, h in enumerate_strips(lam, k, direction))


def p_mul(k: int, w: BosonState) -> BosonState:
    """Multiplication by the power sum ``p_k`` (Murnaghan-Nakayama)."""
    if k < 1:
        raise ValueError("k must be positive")
    return w.apply(lambda key: tuple((s, (key[0], nu)) for s, nu in _strips(key[1], k, StripDirection.ADD)))


def p_perp(k: int, w: BosonState) -> BosonState:
    """The adjoint of multiplication by ``p_k``, i.e. ``k d/dp_k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return w.apply(lambda key: tuple((s, (key[0], nu)) for s, nu in _strips(key[1], k, StripDirection.REMOVE)))


@lru_cache(maxsize=None)
def raise_basis(i: int, key: Key):
    """``b_i (z^m s_lam)`` as ``(sign, key)`` or ``None``."""
    m, lam = key
    if not is_insertable(m, i, lam):
        return None
    sign = -1 if count_m(m, i, lam) % 2 else 1
    return sign, (m + 1, p_down(m, i, lam))


@lru_cache(maxsize=None)
def lower_basis(i: int, key: Key):
    """``b*_i (z^m s_lam)`` as ``(sign, key)`` or ``None``."""
    m, lam = key
    if not is_removable(m, i, lam):
        return None
    sign = -1 if count_m(m, i, lam) % 2 else 1
    return sign, (m - 1, p_up_star(m, i, lam))


@lru_cache(maxsize=None)
def pair_basis(i: int, j: int, key: Key):
    """``b_i b*_j`` on one basis state, without normal ordering."""
    first = lower_basis(j, key)
    if first is None:
        return None
    second = raise_basis(i, first[1])
    if second is None:
        return None
    return first[0] * second[0], second[1]


def _single(result):
    return () if result is None else ((Fraction(result[0]), result[1]),)


def b(i: int, w: BosonState) -> BosonState:
    return w.apply(lambda key: _single(raise_basis(i, key)))


def b_star(i: int, w: BosonState) -> BosonState:
    return w.apply(lambda key: _single(lower_basis(i, key)))


def _xi_E_basis(i: int, j: int, key: Key):
    out = _single(pair_basis(i, j, key))
    if i == j and i <= 0:
        out += ((-_ONE, key),)
    return out


def xi_E(i: int, j: int, w: BosonState) -> BosonState:
    return w.apply(lambda key: _xi_E_basis(i, j, key))


def oscillator(k: int, w: BosonState) -> BosonState:
    """Image of ``(0, t^k)``: ``p_k^perp`` for ``k > 0``, ``p_-k`` for ``k < 0``, ``z d/dz`` for 0."""
    if k > 0:
        return p_perp(k, w)
    if k < 0:
        return p_mul(-k, w)
    return w.apply(lambda key: ((Fraction(key[0]), key),))


def xi_apply(X: GlElement, w: BosonState) -> BosonState:
    """Bosonic action of ``X``; periodic parts must reduce to period one."""
    out = w * X.central
    matrix = X.matrix
    if matrix.periodic is not None:
        periodic = matrix.periodic.reduced()
        if periodic.period != 1:
            raise UnsupportedElement(f"no bosonic action for a {periodic.period}-periodic matrix")
        for (m, _, _), c in periodic.entries.items():
            out = out + oscillator(m, w) * c
    for (i, j), c in matrix.finite.items():
        out = out + xi_E(i, j, w) * c
    return out


def inner(w1: BosonState, w2: BosonState) -> Fraction:
    """Schur functions orthonormal, distinct powers of ``z`` orthogonal."""
    small, large = (w1, w2) if len(w1) <= len(w2) else (w2, w1)
    return sum((c * large.coefficient(k) for k, c in small.items()), Fraction(0))
