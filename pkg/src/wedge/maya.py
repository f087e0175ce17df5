"""Semi-infinite monomials (Maya diagrams) and their charge/partition encoding.

A monomial ``S = (s_1 > s_2 > ...)`` with ``s_j = m - j + 1`` eventually is
stored as the pair ``(charge, shape)``, with ``s_j = shape_j + charge - j + 1``.
All other views are derived:

* ``plus``  -- members of ``S`` that are positive,
* ``minus`` -- non-positive integers missing from ``S``,

both as strictly decreasing tuples.  ``charge == len(plus) - len(minus)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from .partitions import Partition


@dataclass(frozen=True)
class SemiInfiniteMonomial:
    charge: int
    shape: Partition

    def __post_init__(self):
        if not isinstance(self.shape, Partition):
            object.__setattr__(self, "shape", Partition(self.shape))

    # -- sequence view -----------------------------------------------------

    def s(self, j: int) -> int:
        """The 1-based entry ``s_j``."""
        return self.shape.part(j) + self.charge - j + 1

    @property
    def tail_start(self) -> int:
        """Every integer ``<= tail_start`` is a member; ``s_{L+1} == tail_start``."""
        return self.charge - len(self.shape)

    @cached_property
    def head(self) -> tuple[int, ...]:
        """``(s_1, ..., s_L)`` with ``L`` the length of the shape."""
        return tuple(self.s(j) for j in range(1, len(self.shape) + 1))

    @cached_property
    def _head_set(self) -> frozenset:
        return frozenset(self.head)

    def __contains__(self, n: int) -> bool:
        return n <= self.tail_start or n in self._head_set

    @cached_property
    def plus(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.max_member, 0, -1) if n in self)

    @cached_property
    def minus(self) -> tuple[int, ...]:
        return tuple(n for n in range(0, self.tail_start, -1) if n not in self)

    @property
    def max_member(self) -> int:
        return self.head[0] if self.head else self.tail_start

    @property
    def energy(self) -> int:
        return self.shape.weight

    def count(self, j: int) -> int:
        """Number of members strictly greater than ``j``."""
        return sum(1 for s in self.head if s > j) + max(0, self.tail_start - j)

    # -- single-element edits ---------------------------------------------

    @classmethod
    def from_exceptional(cls, plus: Iterable[int], minus: Iterable[int]) -> "SemiInfiniteMonomial":
        """Rebuild from the positive members and the non-positive holes."""
        plus = sorted(set(plus), reverse=True)
        minus = set(minus)
        if any(n <= 0 for n in plus) or any(n > 0 for n in minus):
            raise ValueError("plus must be positive and minus non-positive")
        charge = len(plus) - len(minus)
        lowest = min(minus) if minus else 1
        seq = plus + [n for n in range(0, lowest - 1, -1) if n not in minus]
        return cls(charge, Partition._trusted(s - charge + j for j, s in enumerate(seq)))

    @classmethod
    def from_prefix(cls, prefix: Iterable[int]) -> "SemiInfiniteMonomial":
        """``S`` consisting of ``prefix`` followed by every integer below its last entry."""
        prefix = list(prefix)
        if not prefix:
            raise ValueError("prefix must be non-empty")
        if any(b >= a for a, b in zip(prefix, prefix[1:])):
            raise ValueError(f"prefix {prefix} is not strictly decreasing")
        members = set(prefix)
        last = prefix[-1]
        plus = [n for n in prefix if n > 0]
        minus = [n for n in range(0, last, -1) if n not in members]
        return cls.from_exceptional(plus, minus)

    def with_inserted(self, j: int) -> "SemiInfiniteMonomial":
        if j in self:
            raise ValueError(f"{j} is already a member")
        if j > 0:
            return self.from_exceptional(self.plus + (j,), self.minus)
        return self.from_exceptional(self.plus, (n for n in self.minus if n != j))

    def with_removed(self, j: int) -> "SemiInfiniteMonomial":
        if j not in self:
            raise ValueError(f"{j} is not a member")
        if j > 0:
            return self.from_exceptional((n for n in self.plus if n != j), self.minus)
        return self.from_exceptional(self.plus, self.minus + (j,))

    def prefix_text(self) -> str:
        """``"s_1,...,s_{L+1},..."`` stopping at the first tail-regular entry."""
        return ",".join(str(s) for s in self.head + (self.tail_start,)) + ",..."


def from_charge_partition(m: int, lam: Partition) -> SemiInfiniteMonomial:
    return SemiInfiniteMonomial(int(m), Partition(lam))


def to_charge_partition(S: SemiInfiniteMonomial) -> tuple[int, Partition]:
    return len(S.plus) - len(S.minus), S.shape


def count(j: int, S: SemiInfiniteMonomial) -> int:
    return S.count(j)


@dataclass(frozen=True)
class CodeWindow:
    lo: int
    hi: int
    letters: str


def default_window(S: SemiInfiniteMonomial) -> tuple[int, int]:
    lo = min(S.minus, default=1) - 1
    hi = max(S.plus, default=0) + 1
    return lo, hi


def code(S: SemiInfiniteMonomial, lo: int | None = None, hi: int | None = None) -> CodeWindow:
    """R/U word for ``n = lo..hi``: ``U`` for members, ``R`` for non-members."""
    dlo, dhi = default_window(S)
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    if lo > hi:
        raise ValueError("empty code window")
    return CodeWindow(lo, hi, "".join("U" if n in S else "R" for n in range(lo, hi + 1)))


class FrobeniusCut(NamedTuple):
    """Diagonal cut of a Young diagram, stored as doubled half-integers.

    ``u_twice[i] == 2 * u_{i+1}`` where ``u_i`` counts the boxes of row ``i``
    right of the diagonal, the diagonal box itself contributing one half;
    ``v_twice`` is the same for columns below the diagonal.
    """

    u_twice: tuple[int, ...]
    v_twice: tuple[int, ...]

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.u_twice)

    @property
    def v(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.v_twice)


def frobenius(lam: Partition) -> FrobeniusCut:
    lam = Partition(lam)
    conj = lam.conjugate()
    d = sum(1 for i, p in enumerate(lam, 1) if p >= i)
    return FrobeniusCut(
        tuple(2 * (lam[i] - i - 1) + 1 for i in range(d)),
        tuple(2 * (conj[i] - i - 1) + 1 for i in range(d)),
    )
