"""The infinite wedge space and the action of the extended gl(infinity) on it.

Basis vectors ``v_S`` are keyed by ``(charge, partition)``.  Every operator
here works directly on the Maya diagram: membership tests and the sign
``(-1)^count(j, S)``.  The partition operators used on the bosonic side are
deliberately not called from this module, so comparing the two
representations is a real check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .gl_infinity import GlElement
from .linear import LinearCombination
from .maya import SemiInfiniteMonomial
from .partitions import Partition

Key = tuple[int, Partition]

_ONE = Fraction(1)


class FockVector(LinearCombination):
    """Finite combination of ``v_S``, keys ``(charge, partition)``."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key):
        charge, parts = key
        return int(charge), parts if isinstance(parts, Partition) else Partition(parts)

    @classmethod
    def basis(cls, charge: int, partition=(), coeff=1) -> "FockVector":
        return cls({(charge, partition): coeff})

    @classmethod
    def vacuum(cls, charge: int = 0) -> "FockVector":
        return cls.basis(charge)

    def charges(self) -> set[int]:
        return {k[0] for k in self._terms}


def _monomial(key: Key) -> SemiInfiniteMonomial:
    return SemiInfiniteMonomial(key[0], key[1])


def _key(S: SemiInfiniteMonomial) -> Key:
    return S.charge, S.shape


@lru_cache(maxsize=None)
def create_basis(j: int, key: Key):
    """``f_j v_S`` as ``(sign, key)``, or ``None`` when ``j`` is already in ``S``."""
    S = _monomial(key)
    if j in S:
        return None
    sign = -1 if S.count(j) % 2 else 1
    return sign, _key(S.with_inserted(j))


@lru_cache(maxsize=None)
def annihilate_basis(j: int, key: Key):
    """``f*_j v_S`` as ``(sign, key)``, or ``None`` when ``j`` is not in ``S``."""
    S = _monomial(key)
    if j not in S:
        return None
    sign = -1 if S.count(j) % 2 else 1
    return sign, _key(S.with_removed(j))


@lru_cache(maxsize=None)
def pair_basis(i: int, j: int, key: Key):
    """``f_i f*_j v_S`` (no normal ordering) as ``(sign, key)`` or ``None``."""
    first = annihilate_basis(j, key)
    if first is None:
        return None
    second = create_basis(i, first[1])
    if second is None:
        return None
    return first[0] * second[0], second[1]


def _single(result):
    return () if result is None else ((Fraction(result[0]), result[1]),)


def f(j: int, v: FockVector) -> FockVector:
    return v.apply(lambda key: _single(create_basis(j, key)))


def f_star(j: int, v: FockVector) -> FockVector:
    return v.apply(lambda key: _single(annihilate_basis(j, key)))


def _rho_E_basis(i: int, j: int, key: Key):
    out = _single(pair_basis(i, j, key))
    if i == j and i <= 0:
        out += ((-_ONE, key),)
    return out


def rho_E(i: int, j: int, v: FockVector) -> FockVector:
    """Action of ``(0, E_ij)``; diagonal entries with ``i <= 0`` are normal ordered."""
    return v.apply(lambda key: _rho_E_basis(i, j, key))


@lru_cache(maxsize=None)
def _family_basis(N: int, m: int, i: int, j: int, key: Key):
    """Action of ``sum_k E[N(k - m) + i, N k + j]`` on one basis vector.

    The column ``N k + j`` is scanned over a window outside of which every
    term vanishes: above it the column is not in ``S``, below it row and
    column both lie in the filled tail.
    """
    S = _monomial(key)
    bound = max(abs(S.tail_start), abs(S.max_member)) + 1
    reach = bound + N * (abs(m) + 1)
    acc: dict = {}
    for k in range(-((reach + j) // N) - 1, (reach - j) // N + 2):
        col = N * k + j
        if abs(col) > reach:
            continue
        row = col - N * m + i - j
        for c, new_key in _rho_E_basis(row, col, key):
            s = acc.get(new_key, 0) + c
            if s:
                acc[new_key] = s
            else:
                acc.pop(new_key, None)
    return tuple((c, k) for k, c in acc.items())


def rho_apply(X: GlElement, v: FockVector) -> FockVector:
    """Infinite wedge action of ``X = (a, finite + periodic)``."""
    out = v * X.central
    matrix = X.matrix
    for (i, j), c in matrix.finite.items():
        out = out + rho_E(i, j, v) * c
    if matrix.periodic is not None:
        N = matrix.periodic.period
        for (m, i, j), c in matrix.periodic.entries.items():
            out = out + v.apply(lambda key: _family_basis(N, m, i, j, key)) * c
    return out


def energy(key: Key) -> int:
    return key[1].weight
