"""Finite-dimensional Lie algebras, the Killing form and the loop-algebra cocycle.

Loop elements over ``g`` are plain mappings ``{power: coefficient vector}``
with vectors expressed in the algebra's basis.  The pullback check compares
``u(X, Y) = sum_i i * kappa(x_i, y_-i)`` with the gl(infinity) cocycle of the
images under ``iota_dim . (1 (x) ad)``, evaluated by the direct sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, NamedTuple, Sequence

from ._linalg import determinant, solve_in_span
from .gl_infinity import LoopElement, cocycle, iota, mat_mul, mat_sub

LoopVector = Mapping[int, Sequence]


@dataclass(frozen=True)
class StructureLieAlgebra:
    """``[x_a, x_b] = sum_c structure[a][b][c] x_c``.

    Antisymmetry and the Jacobi identity are checked on construction.
    """

    labels: tuple[str, ...]
    structure: tuple

    def __post_init__(self):
        n = len(self.labels)
        c = tuple(tuple(tuple(Fraction(x) for x in self.structure[a][b]) for b in range(n)) for a in range(n))
        object.__setattr__(self, "structure", c)
        for a, b in product(range(n), repeat=2):
            if any(c[a][b][k] != -c[b][a][k] for k in range(n)):
                raise ValueError(f"structure constants not antisymmetric at {(a, b)}")
        for a, b, d in product(range(n), repeat=3):
            # [[a,b],d] + [[b,d],a] + [[d,a],b] == 0
            for k in range(n):
                total = sum(
                    c[a][b][e] * c[e][d][k] + c[b][d][e] * c[e][a][k] + c[d][a][e] * c[e][b][k]
                    for e in range(n)
                )
                if total:
                    raise ValueError(f"Jacobi identity fails on {(a, b, d)}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def from_matrices(cls, labels, matrices) -> "StructureLieAlgebra":
        """Structure constants of the matrix Lie algebra spanned by ``matrices``."""
        mats = [tuple(tuple(Fraction(x) for x in row) for row in m) for m in matrices]
        flat = [[x for row in m for x in row] for m in mats]
        n = len(mats)
        structure = []
        for a in range(n):
            row = []
            for b in range(n):
                br = mat_sub(mat_mul(mats[a], mats[b]), mat_mul(mats[b], mats[a]))
                row.append(solve_in_span(flat, [x for r in br for x in r]))
            structure.append(row)
        return cls(tuple(labels), tuple(map(tuple, structure)))

    def basis_vector(self, label: str) -> tuple[Fraction, ...]:
        idx = self.labels.index(label)
        return tuple(Fraction(int(k == idx)) for k in range(self.dim))

    def ad(self, x: Sequence) -> tuple:
        """Matrix of ``ad x`` in the basis: column ``b`` holds ``[x, x_b]``."""
        n = self.dim
        c = self.structure
        return tuple(
            tuple(sum(Fraction(x[a]) * c[a][b][k] for a in range(n)) for b in range(n)) for k in range(n)
        )

    def gram(self) -> tuple:
        n = self.dim
        basis = [self.basis_vector(label) for label in self.labels]
        return tuple(tuple(killing(self, basis[a], basis[b]) for b in range(n)) for a in range(n))

    def is_semisimple(self) -> bool:
        """Cartan's criterion: the Killing form is nondegenerate."""
        return determinant(self.gram()) != 0


def killing(g: StructureLieAlgebra, x: Sequence, y: Sequence) -> Fraction:
    """``tr(ad x ad y)``."""
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError("coefficient vectors must have length dim g")
    ax, ay = g.ad(x), g.ad(y)
    return sum((ax[i][k] * ay[k][i] for i in range(g.dim) for k in range(g.dim)), Fraction(0))


def u_cocycle(g: StructureLieAlgebra, X: LoopVector, Y: LoopVector) -> Fraction:
    """``sum_i i * kappa(x_i, y_{-i})``."""
    return sum((i * killing(g, x, Y[-i]) for i, x in X.items() if -i in Y), Fraction(0))


def ad_image(g: StructureLieAlgebra, X: LoopVector) -> LoopElement:
    """``1 (x) ad``: ``sum t^i (x) x_i -> sum t^i (x) ad(x_i)`` in ``gl_dim[t, t^-1]``."""
    return LoopElement(g.dim, {i: g.ad(x) for i, x in X.items()})


class UniversalCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def verify_universal(g: StructureLieAlgebra, X: LoopVector, Y: LoopVector) -> UniversalCheck:
    lhs = u_cocycle(g, X, Y)
    rhs = cocycle(iota(g.dim, ad_image(g, X)), iota(g.dim, ad_image(g, Y)))
    return UniversalCheck(lhs, rhs, lhs == rhs)


def _e(n, i, j):
    return [[int((r, c) == (i, j)) for c in range(n)] for r in range(n)]


def sl2() -> StructureLieAlgebra:
    """Basis ``(e, f, h)``."""
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]
    g = StructureLieAlgebra.from_matrices(("e", "f", "h"), [e, f, h])
    assert g.is_semisimple()
    return g


def sl3() -> StructureLieAlgebra:
    """Off-diagonal ``e_ij`` and ``h1 = e11 - e22``, ``h2 = e22 - e33``."""
    labels, mats = [], []
    for i, j in product(range(3), repeat=2):
        if i != j:
            labels.append(f"e{i + 1}{j + 1}")
            mats.append(_e(3, i, j))
    for k in range(2):
        labels.append(f"h{k + 1}")
        mats.append([[int(r == c == k) - int(r == c == k + 1) for c in range(3)] for r in range(3)])
    g = StructureLieAlgebra.from_matrices(labels, mats)
    assert g.is_semisimple()
    return g
