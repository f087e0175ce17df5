"""Band infinite matrices, the central extension of gl(infinity) and loop algebras.

A :class:`BandMatrix` is a finite-support part plus an optional ``N``-periodic
part.  A periodic entry ``(m, i, j) -> c`` with ``1 <= i, j <= N`` stands for

    c * sum_k E[N(k - m) + i, N k + j]

which is exactly the image of ``c t^m (x) e_ij`` under the loop embedding.
For ``N = 1`` the entry ``(m, 1, 1)`` is the shift ``Lambda_m = sum_j E[j, j + m]``.

The class is closed under products: finite times anything is finite, and
two periodic parts multiply as loop-algebra elements after both are
re-expanded to the least common period.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping

from .errors import SizeMismatch


def _clean(d: Mapping) -> dict:
    return {k: Fraction(v) for k, v in d.items() if v != 0}


def _accumulate(acc: dict, key, value):
    s = acc.get(key, 0) + value
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


@dataclass(frozen=True)
class Periodic:
    period: int
    entries: Mapping[tuple[int, int, int], Fraction]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        entries = _clean(self.entries)
        for m, i, j in entries:
            if not (1 <= i <= self.period and 1 <= j <= self.period):
                raise ValueError(f"periodic entry {(m, i, j)} outside 1..{self.period}")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def _by_residue(self) -> dict:
        index: dict = {}
        for (m, i, j), c in self.entries.items():
            index.setdefault((i, j), {})[m] = c
        return index

    @cached_property
    def _by_row_residue(self) -> dict:
        index: dict = {}
        for (m, i, j), c in self.entries.items():
            index.setdefault(i, []).append((m, j, c))
        return index

    @cached_property
    def _by_col_residue(self) -> dict:
        index: dict = {}
        for (m, i, j), c in self.entries.items():
            index.setdefault(j, []).append((m, i, c))
        return index

    def entry(self, row: int, col: int) -> Fraction:
        N = self.period
        i = (row - 1) % N + 1
        j = (col - 1) % N + 1
        fam = self._by_residue.get((i, j))
        if not fam:
            return Fraction(0)
        k = (col - j) // N
        m = k - (row - i) // N
        return fam.get(m, Fraction(0))

    def expanded(self, period: int) -> "Periodic":
        """The same matrix written with a multiple of the current period."""
        N1 = self.period
        if period % N1:
            raise ValueError(f"{period} is not a multiple of {N1}")
        q = period // N1
        out: dict = {}
        for (m, i, j), c in self.entries.items():
            for s in range(q):
                row = N1 * (s - m) + i
                I = (row - 1) % period + 1
                M = (I - row) // period
                out[(M, I, s * N1 + j)] = c
        return Periodic(period, out)

    def reduced(self) -> "Periodic":
        """Smallest period representing the same matrix."""
        N = self.period
        for d in range(1, N + 1):
            if N % d:
                continue
            candidate: dict = {}
            for (m, i, j), c in self.entries.items():
                row = N * (-m) + i
                J = (j - 1) % d + 1
                k = (j - J) // d
                I = (row - 1) % d + 1
                M = k - (row - I) // d
                candidate[(M, I, J)] = c
            trial = Periodic(d, candidate)
            if trial.expanded(N) == self:
                return trial
        return self

    def bandwidth(self) -> int:
        N = self.period
        return max((abs(N * m + j - i) for m, i, j in self.entries), default=0)


@dataclass(frozen=True)
class BandMatrix:
    finite: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    periodic: Periodic | None = None

    def __post_init__(self):
        object.__setattr__(self, "finite", _clean(self.finite))
        if self.periodic is not None and not self.periodic.entries:
            object.__setattr__(self, "periodic", None)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "BandMatrix":
        return cls()

    @classmethod
    def elementary(cls, i: int, j: int, coeff=1) -> "BandMatrix":
        return cls({(i, j): coeff})

    @classmethod
    def shift(cls, k: int, coeff=1) -> "BandMatrix":
        """``coeff * Lambda_k = coeff * sum_j E[j, j + k]``."""
        return cls(periodic=Periodic(1, {(k, 1, 1): coeff}))

    @classmethod
    def identity(cls) -> "BandMatrix":
        return cls.shift(0)

    # -- inspection ---------------------------------------------------------

    def entry(self, row: int, col: int) -> Fraction:
        value = self.finite.get((row, col), Fraction(0))
        if self.periodic is not None:
            value += self.periodic.entry(row, col)
        return value

    def bandwidth(self) -> int:
        finite = max((abs(r - c) for r, c in self.finite), default=0)
        return max(finite, self.periodic.bandwidth() if self.periodic else 0)

    def is_zero(self) -> bool:
        return not self.finite and self.periodic is None

    def reduced(self) -> "BandMatrix":
        if self.periodic is None:
            return self
        return BandMatrix(self.finite, self.periodic.reduced())

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "BandMatrix") -> "BandMatrix":
        if not isinstance(other, BandMatrix):
            return NotImplemented
        finite = dict(self.finite)
        for k, v in other.finite.items():
            _accumulate(finite, k, v)
        return BandMatrix(finite, _add_periodic(self.periodic, other.periodic))

    def __neg__(self) -> "BandMatrix":
        return self.scaled(-1)

    def __sub__(self, other: "BandMatrix") -> "BandMatrix":
        return self + (-other)

    def scaled(self, a) -> "BandMatrix":
        a = Fraction(a)
        periodic = None
        if self.periodic is not None:
            periodic = Periodic(self.periodic.period, {k: a * v for k, v in self.periodic.entries.items()})
        return BandMatrix({k: a * v for k, v in self.finite.items()}, periodic)

    # -- products -----------------------------------------------------------

    def __matmul__(self, other: "BandMatrix") -> "BandMatrix":
        if not isinstance(other, BandMatrix):
            return NotImplemented
        finite: dict = {}
        _finite_times_finite(finite, self.finite, other.finite)
        if other.periodic is not None:
            _finite_times_periodic(finite, self.finite, other.periodic)
        if self.periodic is not None:
            _periodic_times_finite(finite, self.periodic, other.finite)
        periodic = None
        if self.periodic is not None and other.periodic is not None:
            periodic = _periodic_times_periodic(self.periodic, other.periodic)
        return BandMatrix(finite, periodic)

    def commutator(self, other: "BandMatrix") -> "BandMatrix":
        return self @ other - other @ self

    def straddling_entries(self):
        """Nonzero entries ``(row, col, value)`` with row and col on opposite sides of 0.

        Rows ``<= 0`` with columns ``> 0`` come first, then the reverse.
        """
        for (r, c), v in self.finite.items():
            if (r <= 0) != (c <= 0):
                yield r, c, v
        if self.periodic is None:
            return
        N = self.periodic.period
        for (m, i, j), v in self.periodic.entries.items():
            # rows N(p - m) + i <= 0 < columns N p + j
            for p in range(-((j - 1) // N), m + (-i) // N + 1):
                yield N * (p - m) + i, N * p + j, v
            # rows > 0 >= columns
            for p in range(m - ((i - 1) // N), (-j) // N + 1):
                yield N * (p - m) + i, N * p + j, v


def _add_periodic(a: Periodic | None, b: Periodic | None) -> Periodic | None:
    if a is None:
        return b
    if b is None:
        return a
    N = lcm(a.period, b.period)
    a, b = a.expanded(N), b.expanded(N)
    out = dict(a.entries)
    for k, v in b.entries.items():
        _accumulate(out, k, v)
    return Periodic(N, out)


def _finite_times_finite(acc, A, B):
    rows_of_B: dict = {}
    for (r, c), v in B.items():
        rows_of_B.setdefault(r, []).append((c, v))
    for (r, x), a in A.items():
        for c, b in rows_of_B.get(x, ()):
            _accumulate(acc, (r, c), a * b)


def _finite_times_periodic(acc, A, P: Periodic):
    N = P.period
    for (r, x), a in A.items():
        I = (x - 1) % N + 1
        base = (x - I) // N
        for m, J, c in P._by_row_residue.get(I, ()):
            k = base + m
            _accumulate(acc, (r, N * k + J), a * c)


def _periodic_times_finite(acc, P: Periodic, B):
    N = P.period
    for (x, col), b in B.items():
        J = (x - 1) % N + 1
        k = (x - J) // N
        for m, I, c in P._by_col_residue.get(J, ()):
            _accumulate(acc, (N * (k - m) + I, col), c * b)


def _periodic_times_periodic(P: Periodic, Q: Periodic) -> Periodic:
    N = lcm(P.period, Q.period)
    P, Q = P.expanded(N), Q.expanded(N)
    out: dict = {}
    for (m, i, j), a in P.entries.items():
        for n, l, b in Q._by_row_residue.get(j, ()):
            _accumulate(out, (m + n, i, l), a * b)
    return Periodic(N, out)


# ---------------------------------------------------------------------------
# the 2-cocycle and the extended algebra


def cocycle(A: BandMatrix, B: BandMatrix) -> Fraction:
    """``sum_{i<=0<k} a_ik b_ki - sum_{i>0>=k} a_ik b_ki``, summed exactly.

    Only entries of ``A`` straddling the origin can contribute, and a band
    matrix has finitely many of those.
    """
    total = Fraction(0)
    for r, c, a in A.straddling_entries():
        b = B.entry(c, r)
        if b:
            total += a * b if r <= 0 else -a * b
    return total


def trace_form(A: BandMatrix, B: BandMatrix) -> Fraction:
    """``tr([J, A] B) / 2`` for finite-support matrices, ``J = diag(+1 on i <= 0, -1 on i > 0)``.

    ``[J, A]`` has entries ``(J_i - J_k) a_ik``, built here without storing ``J``.
    """
    if A.periodic is not None or B.periodic is not None:
        raise ValueError("trace form is only evaluated on finite-support matrices")
    sign = lambda i: 1 if i <= 0 else -1  # noqa: E731
    JA = {(i, k): (sign(i) - sign(k)) * a for (i, k), a in A.finite.items() if sign(i) != sign(k)}
    prod: dict = {}
    _finite_times_finite(prod, JA, B.finite)
    return sum((v for (r, c), v in prod.items() if r == c), Fraction(0)) / 2


@dataclass(frozen=True)
class GlElement:
    """An element ``(central, matrix)`` of the centrally extended algebra."""

    central: Fraction = Fraction(0)
    matrix: BandMatrix = field(default_factory=BandMatrix)

    def __post_init__(self):
        object.__setattr__(self, "central", Fraction(self.central))

    @classmethod
    def elementary(cls, i: int, j: int, coeff=1) -> "GlElement":
        return cls(Fraction(0), BandMatrix.elementary(i, j, coeff))

    @classmethod
    def scalar(cls, a) -> "GlElement":
        return cls(Fraction(a), BandMatrix())

    def __add__(self, other: "GlElement") -> "GlElement":
        return GlElement(self.central + other.central, self.matrix + other.matrix)

    def __sub__(self, other: "GlElement") -> "GlElement":
        return GlElement(self.central - other.central, self.matrix - other.matrix)

    def scaled(self, a) -> "GlElement":
        return GlElement(self.central * Fraction(a), self.matrix.scaled(a))


def bracket_hat(X: GlElement, Y: GlElement) -> GlElement:
    """``[(a, x), (b, y)] = (c(x, y), [x, y])``."""
    return GlElement(cocycle(X.matrix, Y.matrix), X.matrix.commutator(Y.matrix))


def delta0(a, laurent: Mapping[int, object]) -> GlElement:
    """Oscillator embedding ``(a, sum_m c_m t^m) -> (a, sum_m c_m Lambda_m)``."""
    entries = {(int(m), 1, 1): c for m, c in laurent.items()}
    return GlElement(Fraction(a), BandMatrix(periodic=Periodic(1, entries)))


# ---------------------------------------------------------------------------
# loop algebra gl_N[t, t^-1]


Matrix = tuple  # n x n tuple of tuples of Fractions


def _as_matrix(rows, n: int) -> Matrix:
    rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SizeMismatch(f"expected a {n}x{n} matrix")
    return rows


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def elementary_matrix(n: int, i: int, j: int, coeff=1) -> Matrix:
    """``coeff * e_ij`` with 1-based ``i, j``."""
    return tuple(
        tuple(Fraction(coeff) if (r, c) == (i, j) else Fraction(0) for c in range(1, n + 1))
        for r in range(1, n + 1)
    )


@dataclass(frozen=True)
class LoopElement:
    """``sum_m t^m (x) x_m`` in ``gl_n[t, t^-1]``; zero matrices are dropped."""

    n: int
    terms: Mapping[int, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix size must be positive")
        clean = {}
        for power, mat in self.terms.items():
            mat = _as_matrix(mat, self.n)
            if any(x for row in mat for x in row):
                clean[int(power)] = mat
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, n: int, power: int, matrix) -> "LoopElement":
        return cls(n, {power: matrix})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LoopElement") -> "LoopElement":
        if self.n != other.n:
            raise SizeMismatch("loop elements of different sizes")
        terms = dict(self.terms)
        for p, mat in other.terms.items():
            terms[p] = tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(terms[p], mat)) if p in terms else mat
        return LoopElement(self.n, terms)

    def bracket(self, other: "LoopElement") -> "LoopElement":
        if self.n != other.n:
            raise SizeMismatch("loop elements of different sizes")
        out = LoopElement(self.n)
        for p, x in self.terms.items():
            for q, y in other.terms.items():
                out = out + LoopElement(self.n, {p + q: mat_sub(mat_mul(x, y), mat_mul(y, x))})
        return out


def iota(N: int, x: LoopElement) -> BandMatrix:
    """``t^m (x) e_ij -> sum_k E[N(k - m) + i, N k + j]``, extended linearly."""
    if x.n != N:
        raise SizeMismatch(f"loop element has size {x.n}, expected {N}")
    entries = {}
    for m, mat in x.terms.items():
        for i in range(N):
            for j in range(N):
                if mat[i][j]:
                    entries[(m, i + 1, j + 1)] = mat[i][j]
    return BandMatrix(periodic=Periodic(N, entries))


def cocycle_closed_form(x: LoopElement, y: LoopElement) -> Fraction:
    """``sum_m m tr(x_m y_{-m})``: the cocycle pulled back along the loop embedding."""
    if x.n != y.n:
        raise SizeMismatch("loop elements of different sizes")
    total = Fraction(0)
    for m, a in x.terms.items():
        b = y.terms.get(-m)
        if b is not None and m:
            total += m * mat_trace(mat_mul(a, b))
    return total
