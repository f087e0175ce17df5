"""Brute-force symmetric polynomials, used as an oracle for the MN rule.

Nothing in this module touches border strips.  Schur polynomials come from
the Jacobi-Trudi determinant ``det(h_{lam_i - i + j})`` expanded over
permutations.

``verify_expansion`` needs ``n >= |lam| + k`` variables, and at weight 14 a
dense expansion has tens of millions of monomials.  It therefore compares
the two sides one monomial coefficient at a time.  Both sides are
symmetric and homogeneous, so it is enough to check exponent vectors that
are partitions.  The coefficient of ``x^alpha`` in ``h_r1 ... h_rL`` is the
number of non-negative integer matrices with row sums ``r`` and column sums
``alpha``, so the determinant expansion carries over term by term.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from .errors import InsufficientVariables
from .partitions import Partition, partitions_of

Exponent = tuple[int, ...]


class DensePolynomial:
    """Polynomial in ``x_1 .. x_nvars`` with integer coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def constant(cls, nvars: int, c: int) -> "DensePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "DensePolynomial":
        """``x_i`` with ``i`` 1-based."""
        return cls(nvars, {tuple(int(k == i - 1) for k in range(nvars)): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exp: Exponent) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "DensePolynomial"):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in different numbers of variables")
        return None

    def __eq__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DensePolynomial(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return DensePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DensePolynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return DensePolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def swap(self, a: int, b: int) -> "DensePolynomial":
        """Substitute ``x_a <-> x_b`` (1-based)."""
        def sw(e):
            e = list(e)
            e[a - 1], e[b - 1] = e[b - 1], e[a - 1]
            return tuple(e)

        return DensePolynomial(self.nvars, {sw(e): c for e, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{p}" if p > 1 else f"x{i + 1}" for i, p in enumerate(e) if p)
            out.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(out)


def complete_poly(n: int, r: int) -> DensePolynomial:
    """``h_r`` in ``n`` variables, by enumerating weakly increasing index tuples."""
    if r < 0:
        return DensePolynomial(n)
    acc: dict[Exponent, int] = {}
    for idx in combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in idx:
            e[i] += 1
        acc[tuple(e)] = acc.get(tuple(e), 0) + 1
    return DensePolynomial(n, acc)


def power_sum_poly(n: int, k: int) -> DensePolynomial:
    if k < 1:
        raise ValueError("k must be positive")
    return DensePolynomial(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})


def _sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _jt_rows(lam: Partition) -> tuple:
    """``(sign, rows)`` for every Leibniz term of ``det(h_{lam_i - i + j})`` with no ``h_negative``.

    Rows are filled bottom up (the most constrained first) and a branch is
    abandoned as soon as an index goes negative; ``(1^14)`` has 8192
    survivors out of 14! permutations.
    """
    L = len(lam)
    perm = [0] * L
    used = [False] * L
    out = []

    def extend(i):
        if i < 0:
            out.append((_sign(perm), tuple(lam[r] - r + perm[r] for r in range(L))))
            return
        for col in range(max(0, i - lam[i]), L):
            if not used[col]:
                used[col] = True
                perm[i] = col
                extend(i - 1)
                used[col] = False

    extend(L - 1)
    return tuple(out)


@lru_cache(maxsize=None)
def _jt_multisets(lam: Partition) -> tuple:
    """Leibniz terms merged by the multiset of ``h`` indices (zeros dropped)."""
    acc: dict[tuple[int, ...], int] = {}
    for sign, rows in _jt_rows(lam):
        key = tuple(sorted((r for r in rows if r), reverse=True))
        acc[key] = acc.get(key, 0) + sign
    return tuple((rows, c) for rows, c in acc.items() if c)


def schur_poly(n: int, lam) -> DensePolynomial:
    lam = Partition(lam)
    if len(lam) > n:
        return DensePolynomial(n)
    h = {}
    total = DensePolynomial(n)
    for sign, rows in _jt_rows(lam):
        term = DensePolynomial.constant(n, sign)
        for r in rows:
            if r not in h:
                h[r] = complete_poly(n, r)
            term = term * h[r]
        total = total + term
    return total


@lru_cache(maxsize=None)
def _tables(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Non-negative integer matrices with the given row and column sums (both sorted)."""
    if sum(rows) != sum(cols):
        return 0
    if not cols:
        return 1
    first, rest = cols[0], cols[1:]
    total = 0
    for take in _compositions_bounded(first, rows):
        left = tuple(sorted((r - t for r, t in zip(rows, take) if r - t), reverse=True))
        total += _tables(left, rest)
    return total


def _compositions_bounded(total: int, bounds: tuple[int, ...]):
    if not bounds:
        if total == 0:
            yield ()
        return
    head, tail = bounds[0], bounds[1:]
    room = sum(tail)
    for t in range(max(0, total - room), min(head, total) + 1):
        for rest in _compositions_bounded(total - t, tail):
            yield (t,) + rest


@lru_cache(maxsize=None)
def _schur_coefficient(lam: Partition, alpha: tuple[int, ...]) -> int:
    return sum(c * _tables(rows, alpha) for rows, c in _jt_multisets(lam))


def schur_coefficient(lam, alpha: Iterable[int]) -> int:
    """Coefficient of ``x^alpha`` in ``s_lam``.

    Setting further variables to zero does not change it, so the number of
    variables is irrelevant as long as it is at least ``len(alpha)``.
    """
    key = tuple(sorted((a for a in alpha if a), reverse=True))
    if any(a < 0 for a in key):
        return 0
    return _schur_coefficient(Partition(lam), key)


def verify_expansion(n: int, k: int, lam, claim) -> bool:
    """Whether ``p_k s_lam == sum c_nu s_nu`` holds in ``n`` variables."""
    lam = Partition(lam)
    if n < lam.weight + k:
        raise InsufficientVariables(f"need at least {lam.weight + k} variables, got {n}")
    rhs: dict[Partition, int] = {}
    for nu, c in claim:
        nu = Partition(nu)
        rhs[nu] = rhs.get(nu, 0) + int(c)
    degrees = {lam.weight + k} | {nu.weight for nu in rhs}
    for d in degrees:
        for alpha in partitions_of(d):
            if len(alpha) > n:
                continue
            padded = tuple(alpha) + (0,) * (n - len(alpha))
            left = 0
            if d == lam.weight + k:
                for i in range(n):
                    if padded[i] >= k:
                        shifted = padded[:i] + (padded[i] - k,) + padded[i + 1:]
                        left += schur_coefficient(lam, shifted)
            right = sum(c * schur_coefficient(nu, padded) for nu, c in rhs.items() if nu.weight == d)
            if left != right:
                return False
    return True
