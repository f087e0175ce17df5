"""Exhaustive verification sweeps behind ``wedge verify``.

Each suite returns a :class:`SweepResult` counting the individual identities
checked.  The counts depend only on the bounds, so they are reproducible.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import boson, fermion
from .boson import BosonState
from .correspondence import equivariance_check, oscillator_expand
from .fermion import FockVector
from .gl_infinity import (
    BandMatrix,
    GlElement,
    LoopElement,
    cocycle,
    cocycle_closed_form,
    delta0,
    elementary_matrix,
    iota,
    trace_form,
)
from .maya import SemiInfiniteMonomial
from .partitions import StripDirection, enumerate_strips, partitions_up_to
from .symfunc import verify_expansion
from .universal import sl2, sl3, verify_universal

MAX_SAMPLES = 5


@dataclass
class SweepResult:
    checked: int = 0
    failures: int = 0
    samples: list = field(default_factory=list)

    def record(self, ok: bool, describe=None):
        self.checked += 1
        if not ok:
            self.failures += 1
            if describe is not None and len(self.samples) < MAX_SAMPLES:
                self.samples.append(describe() if callable(describe) else describe)

    def merge(self, other: "SweepResult") -> "SweepResult":
        self.checked += other.checked
        self.failures += other.failures
        self.samples.extend(other.samples[: MAX_SAMPLES - len(self.samples)])
        return self

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_obj(self) -> dict:
        out = {"checked": self.checked, "failures": self.failures}
        if self.samples:
            out["examples"] = list(self.samples)
        return out


def workers() -> int:
    """Parallelism bound from ``WEDGE_THREADS`` (default 1)."""
    raw = os.environ.get("WEDGE_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"WEDGE_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"WEDGE_THREADS must be a positive integer, got {raw!r}")
    return n


def basis_keys(label_max: int, weight_max: int):
    return [(m, lam) for m in range(-label_max, label_max + 1) for lam in partitions_up_to(weight_max)]


# -- Murnaghan-Nakayama -----------------------------------------------------


def mn_suite(weight_max: int = 8, k_max: int = 6) -> SweepResult:
    """``p_k s_lam`` against the polynomial oracle, then adjointness of ``p_k`` and ``p_k^perp``."""
    res = SweepResult()
    shapes = partitions_up_to(weight_max)
    for lam in shapes:
        for k in range(1, k_max + 1):
            out = boson.p_mul(k, BosonState.basis(0, lam))
            claim = [(key[1], int(c)) for key, c in out.items()]
            res.record(verify_expansion(lam.weight + k, k, lam, claim), lambda: f"p_{k} s_{tuple(lam)}")
    for k in range(1, k_max + 1):
        for lam in shapes:
            up = boson.p_mul(k, BosonState.basis(0, lam))
            for nu in shapes:
                down = boson.p_perp(k, BosonState.basis(0, nu))
                ok = up.coefficient((0, nu)) == down.coefficient((0, lam))
                res.record(ok, lambda: f"<p_{k} s_{tuple(lam)}, s_{tuple(nu)}>")
    return res


# -- anticommutation and commutation relations ------------------------------


def _apply(op, key, coeff=Fraction(1)):
    hit = op(key)
    return {} if hit is None else {hit[1]: coeff * hit[0]}


def _compose(first, second, key) -> dict:
    """``second(first(key))`` on a basis key, as ``{key: coeff}``."""
    hit = first(key)
    if hit is None:
        return {}
    hit2 = second(hit[1])
    return {} if hit2 is None else {hit2[1]: Fraction(hit[0] * hit2[0])}


def _sum(*parts) -> dict:
    acc: dict = {}
    for coeff, d in parts:
        for k, c in d.items():
            acc[k] = acc.get(k, 0) + coeff * c
    return {k: c for k, c in acc.items() if c}


def _relations(keys, create, annihilate, pair, pair_max, quad_max, res, tag):
    pair_range = range(-pair_max, pair_max + 1)
    for key in keys:
        for i, j in product(pair_range, repeat=2):
            cre_i = lambda k, i=i: create(i, k)  # noqa: E731
            cre_j = lambda k, j=j: create(j, k)  # noqa: E731
            ann_i = lambda k, i=i: annihilate(i, k)  # noqa: E731
            ann_j = lambda k, j=j: annihilate(j, k)  # noqa: E731
            mixed = _sum((1, _compose(ann_j, cre_i, key)), (1, _compose(cre_i, ann_j, key)))
            expect = {key: Fraction(1)} if i == j else {}
            res.record(mixed == expect, lambda: f"{tag} mixed anticommutator ({i},{j}) on {key}")
            both = _sum((1, _compose(cre_j, cre_i, key)), (1, _compose(cre_i, cre_j, key)))
            res.record(not both, lambda: f"{tag} creation anticommutator ({i},{j}) on {key}")
            both = _sum((1, _compose(ann_j, ann_i, key)), (1, _compose(ann_i, ann_j, key)))
            res.record(not both, lambda: f"{tag} annihilation anticommutator ({i},{j}) on {key}")

    quad_range = range(-quad_max, quad_max + 1)
    for key in keys:
        for i, j, l, k in product(quad_range, repeat=4):
            A = lambda x, i=i, j=j: pair(i, j, x)  # noqa: E731
            B = lambda x, l=l, k=k: pair(l, k, x)  # noqa: E731
            lhs = _sum((1, _compose(B, A, key)), (-1, _compose(A, B, key)))
            rhs = _sum(
                (int(j == l), _apply(lambda x: pair(i, k, x), key)),
                (-int(i == k), _apply(lambda x: pair(l, j, x), key)),
            )
            res.record(lhs == rhs, lambda: f"{tag} commutator ({i},{j},{l},{k}) on {key}")


def relations_suite(charge_max: int = 2, weight_max: int = 6, pair_max: int = 8, quad_max: int = 5) -> SweepResult:
    """Both sides: ``{a_i, a*_j} = delta_ij`` and friends, and the ``gl`` commutator of pairs."""
    res = SweepResult()
    keys = basis_keys(charge_max, weight_max)
    _relations(
        keys, fermion.create_basis, fermion.annihilate_basis, fermion.pair_basis, pair_max, quad_max, res, "fermion"
    )
    _relations(keys, boson.raise_basis, boson.lower_basis, boson.pair_basis, pair_max, quad_max, res, "boson")
    return res


# -- cocycle ----------------------------------------------------------------


def sign_table(i: int, j: int, k: int, l: int) -> int:
    """``c(E_ij, E_kl)`` read off by cases."""
    if i == l and j == k:
        if i <= 0 < j:
            return 1
        if j <= 0 < i:
            return -1
    return 0


def cocycle_suite(
    index_max: int = 4, triple_max: int = 4, osc_max: int = 4, loop_size_max: int = 4, loop_power_max: int = 5
) -> SweepResult:
    res = SweepResult()
    idx = range(-index_max, index_max + 1)
    elems = {(i, j): BandMatrix.elementary(i, j) for i, j in product(idx, repeat=2)}
    for (i, j), A in elems.items():
        for (k, l), B in elems.items():
            value = cocycle(A, B)
            res.record(value == sign_table(i, j, k, l), lambda: f"sign table E{i},{j} E{k},{l}")
            res.record(value == trace_form(A, B), lambda: f"trace form E{i},{j} E{k},{l}")

    res.merge(_triples_elementary(triple_max))

    shifts = [BandMatrix.shift(a) for a in range(-osc_max, osc_max + 1)]
    for A, B, C in product(shifts, repeat=3):
        res.record(_cyclic_sum(A, B, C) == 0, "oscillator triple")

    for N in range(1, loop_size_max + 1):
        units = [elementary_matrix(N, a, b) for a in range(1, N + 1) for b in range(1, N + 1)]
        powers = range(-loop_power_max, loop_power_max + 1)
        for m, n in product(powers, repeat=2):
            for x, y in product(units, repeat=2):
                X, Y = LoopElement.monomial(N, m, x), LoopElement.monomial(N, n, y)
                ok = cocycle(iota(N, X), iota(N, Y)) == cocycle_closed_form(X, Y)
                res.record(ok, lambda: f"loop cocycle N={N} m={m} n={n}")
    return res


def _cyclic_sum(A: BandMatrix, B: BandMatrix, C: BandMatrix) -> Fraction:
    return cocycle(A.commutator(B), C) + cocycle(B.commutator(C), A) + cocycle(C.commutator(A), B)


def _triples_elementary(bound: int) -> SweepResult:
    """The cocycle identity on every triple of elementary matrices in the window.

    ``[E_ij, E_kl]`` is computed once per pair; most brackets vanish, and
    a zero bracket contributes zero to the cyclic sum.
    """
    res = SweepResult()
    idx = range(-bound, bound + 1)
    cells = list(product(idx, repeat=2))
    elems = {c: BandMatrix.elementary(*c) for c in cells}
    brackets = {(a, b): elems[a].commutator(elems[b]) for a in cells for b in cells}
    for a, b, c in product(cells, repeat=3):
        ab, bc, ca = brackets[(a, b)], brackets[(b, c)], brackets[(c, a)]
        total = Fraction(0)
        if not ab.is_zero():
            total += cocycle(ab, elems[c])
        if not bc.is_zero():
            total += cocycle(bc, elems[a])
        if not ca.is_zero():
            total += cocycle(ca, elems[b])
        res.record(total == 0, lambda: f"triple {a} {b} {c}")
    return res


# -- pullback of the cocycle to loop algebras -------------------------------


def universal_suite(power_max: int = 3, algebras=("sl2", "sl3")) -> SweepResult:
    builders = {"sl2": sl2, "sl3": sl3}
    res = SweepResult()
    for name in algebras:
        g = builders[name]()
        basis = [g.basis_vector(label) for label in g.labels]
        powers = range(-power_max, power_max + 1)
        for m, n in product(powers, repeat=2):
            for a, x in enumerate(basis):
                for b, y in enumerate(basis):
                    check = verify_universal(g, {m: x}, {n: y})
                    res.record(check.equal, lambda: f"{name} t^{m} {g.labels[a]}, t^{n} {g.labels[b]}")
    return res


# -- correspondence ---------------------------------------------------------


def correspondence_elements(index_max: int = 6, osc_max: int | None = None, scalars=(Fraction(1), Fraction(-5, 2))):
    osc_max = index_max if osc_max is None else osc_max
    idx = range(-index_max, index_max + 1)
    out = [GlElement.elementary(i, j) for i, j in product(idx, repeat=2)]
    out += [delta0(0, {k: 1}) for k in range(-osc_max, osc_max + 1) if k]
    out.append(delta0(0, {0: 1}))
    out += [GlElement.scalar(a) for a in scalars]
    return out


def _equivariance_chunk(args) -> SweepResult:
    elements, keys = args
    res = SweepResult()
    for X in elements:
        for key in keys:
            report = equivariance_check(X, FockVector.basis(*key))
            res.record(report.equal, lambda: f"element {X} on v{key}")
    return res


def correspondence_suite(
    charge_max: int = 2, weight_max: int = 8, index_max: int = 6, osc_max: int | None = None
) -> SweepResult:
    elements = correspondence_elements(index_max, osc_max)
    keys = basis_keys(charge_max, weight_max)
    n = workers()
    if n == 1:
        return _equivariance_chunk((elements, keys))
    chunks = [(elements[s::n], keys) for s in range(n)]
    res = SweepResult()
    with ProcessPoolExecutor(max_workers=n) as pool:
        for part in pool.map(_equivariance_chunk, chunks):
            res.merge(part)
    return res


def oscillator_suite(charge_max: int = 2, weight_max: int = 8, k_max: int = 6) -> SweepResult:
    """The fermionic expansion of ``sum f_l f*_{l+k}`` against the border-strip enumeration."""
    res = SweepResult()
    for m, lam in basis_keys(charge_max, weight_max):
        S = SemiInfiniteMonomial(m, lam)
        for k in range(1, k_max + 1):
            for signed, direction in ((k, StripDirection.REMOVE), (-k, StripDirection.ADD)):
                got = sorted((T.shape, T.charge, sign) for T, sign in oscillator_expand(signed, S))
                want = sorted((nu, m, -1 if h % 2 else 1) for nu, h in enumerate_strips(lam, k, direction))
                res.record(got == want, lambda: f"k={signed} on {(m, tuple(lam))}")
    return res


SUITES = {
    "mn": mn_suite,
    "relations": relations_suite,
    "cocycle": cocycle_suite,
    "universal": universal_suite,
    "correspondence": correspondence_suite,
    "oscillator": oscillator_suite,
}

