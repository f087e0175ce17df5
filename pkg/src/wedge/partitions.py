"""Partitions, skew shapes, border strips and the charge-indexed partition operators.

Rows and columns of Young diagrams are 1-based; box ``(i, j)`` belongs to
the diagram of ``lam`` iff ``1 <= j <= lam[i-1]``.  Every formula indexed
by ``k >= 1`` reads parts past the length of a partition as zero.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import ContainmentError, DomainError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition((2, 1, 0)) == Partition((2, 1))``.

    >>> Partition((4, 4, 3, 3, 2, 2, 1)).weight
    19
    >>> Partition([3, 1, 0, 0])
    Partition(3, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts {parts} contain a negative entry")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # caller guarantees a weakly decreasing sequence; only zeros are stripped
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple.__new__(cls, parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse ``"4,4,3"``; ``""`` and ``"[]"`` denote the empty partition."""
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1].strip()
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition text {text!r}: {exc}") from None

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def to_text(self) -> str:
        return ",".join(map(str, self))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, k: int) -> int:
        """The 1-based part ``lam_k``, zero beyond the length."""
        return self[k - 1] if 1 <= k <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._trusted(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def contains(self, other: "Partition") -> bool:
        """True iff ``other`` is a subdiagram of ``self``."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def boxes(self) -> frozenset:
        return frozenset((i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1))


EMPTY = Partition()


def measures(lam: Partition) -> tuple[int, int]:
    """Return ``(weight, length)``."""
    return lam.weight, lam.length


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield tuple.__new__(Partition, parts)


def partitions_up_to(max_weight: int) -> list[Partition]:
    """All partitions of weight ``0..max_weight``, by weight then decreasing lex."""
    return [lam for n in range(max_weight + 1) for lam in partitions_of(n)]


# ---------------------------------------------------------------------------
# skew shapes and border strips


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition
    boxes: frozenset


class StripStats(NamedTuple):
    is_border_strip: bool
    size: int
    height: int


class StripDirection(enum.Enum):
    ADD = "add"
    REMOVE = "remove"


def skew(outer: Partition, inner: Partition) -> SkewShape:
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ContainmentError(f"{inner!r} is not contained in {outer!r}")
    boxes = frozenset(
        (i, j) for i in range(1, len(outer) + 1) for j in range(inner.part(i) + 1, outer[i - 1] + 1)
    )
    return SkewShape(outer, inner, boxes)


def strip_stats(theta) -> StripStats:
    """Border-strip test, size and height of a skew shape (or a bare box set).

    The empty shape reports ``(False, 0, 0)``.
    """
    boxes = theta.boxes if isinstance(theta, SkewShape) else frozenset(theta)
    if not boxes:
        return StripStats(False, 0, 0)
    height = len({r for r, _ in boxes}) - 1

    start = next(iter(boxes))
    seen = {start}
    queue = deque([start])
    while queue:
        r, c = queue.popleft()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in boxes and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    connected = len(seen) == len(boxes)

    has_square = any(
        (r + 1, c) in boxes and (r, c + 1) in boxes and (r + 1, c + 1) in boxes for r, c in boxes
    )
    return StripStats(connected and not has_square, len(boxes), height)


# ---------------------------------------------------------------------------
# charge-indexed operators on partitions


def count_m(m: int, i: int, lam: Partition) -> int:
    """``#{k >= 1 : lam_k > i - m + k - 1}``."""
    offset = i - m - 1
    window = len(lam) + max(0, m - i + 1)
    return sum(1 for k in range(1, window + 1) if lam.part(k) > offset + k)


def is_insertable(m: int, i: int, lam: Partition) -> bool:
    """Membership of ``lam`` in the set where the lowering operator is defined:
    ``lam_k != i - m + k - 1`` for every ``k``."""
    offset = i - m - 1
    window = max(len(lam), m - i + 1)
    return all(lam.part(k) != offset + k for k in range(1, window + 1))


def is_removable(m: int, i: int, lam: Partition) -> bool:
    """Complement of :func:`is_insertable`: some ``lam_k == i - m + k - 1``."""
    return not is_insertable(m, i, lam)


def p_down(m: int, i: int, lam: Partition) -> Partition:
    """Shift the first ``c`` rows down by one box and insert a new row.

    With ``c = count_m(m, i, lam)`` the result is
    ``(lam_1 - 1, ..., lam_c - 1, i - m + c - 1, lam_{c+1}, lam_{c+2}, ...)``.
    """
    if not is_insertable(m, i, lam):
        raise DomainError(f"p_down({m}, {i}) undefined on {lam!r}")
    c = count_m(m, i, lam)
    parts = [lam.part(k) - 1 for k in range(1, c + 1)]
    parts.append(i - m + c - 1)
    parts.extend(lam[c:])
    return Partition._trusted(parts)


def p_up_star(m: int, i: int, lam: Partition) -> Partition:
    """Grow the first ``c`` rows by one box and delete row ``c + 1``."""
    if not is_removable(m, i, lam):
        raise DomainError(f"p_up_star({m}, {i}) undefined on {lam!r}")
    c = count_m(m, i, lam)
    parts = [lam.part(k) + 1 for k in range(1, c + 1)]
    parts.extend(lam[c + 1:])
    return Partition._trusted(parts)


def enumerate_strips(lam: Partition, k: int, direction: StripDirection) -> list[tuple[Partition, int]]:
    """All ``(nu, height)`` with ``nu/lam`` (ADD) or ``lam/nu`` (REMOVE) a border strip of size ``k``.

    Each strip is produced once, from the row index ``r`` whose value
    ``j = lam_r - r + 1`` is lifted by :func:`p_up_star` and reinserted at
    ``j - k`` (REMOVE) or ``j + k`` (ADD) by :func:`p_down`.  The height is
    the difference of the two counts.  Output is in decreasing
    lexicographic order of ``nu``.
    """
    if k < 1:
        raise ValueError("strip length must be positive")
    lam = Partition(lam)
    rows = len(lam) if direction is StripDirection.REMOVE else len(lam) + k
    step = -k if direction is StripDirection.REMOVE else k
    out = []
    for r in range(1, rows + 1):
        j = lam.part(r) - r + 1
        mu = p_up_star(0, j, lam)
        i = j + step
        if not is_insertable(-1, i, mu):
            continue
        nu = p_down(-1, i, mu)
        alpha, beta = count_m(0, j, lam), count_m(-1, i, mu)
        height = beta - alpha if direction is StripDirection.REMOVE else alpha - beta
        out.append((nu, height))
    out.sort(reverse=True)
    return out
