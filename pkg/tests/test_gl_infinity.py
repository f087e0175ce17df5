from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_bracket, window_cocycle
from wedge.errors import SizeMismatch
from wedge.gl_infinity import (
    BandMatrix,
    GlElement,
    LoopElement,
    Periodic,
    bracket_hat,
    cocycle,
    cocycle_closed_form,
    delta0,
    elementary_matrix,
    iota,
    trace_form,
)
from wedge.universal import killing, sl2, sl3, u_cocycle, verify_universal
from wedge.verify import sign_table

E = BandMatrix.elementary
L = BandMatrix.shift


class TestEntries:
    def test_shift(self):
        assert L(2).entry(5, 7) == 1 and L(2).entry(5, 6) == 0

    def test_periodic_entry(self):
        P = iota(2, LoopElement.monomial(2, 1, elementary_matrix(2, 1, 2)))
        # t (x) e_12 -> sum_k E[2(k-1)+1, 2k+2]
        assert P.entry(1, 4) == 1
        assert P.entry(2, 4) == 0
        assert P.entry(-1, 2) == 1

    def test_identity_from_loop(self):
        one = iota(2, LoopElement.monomial(2, 0, [[1, 0], [0, 1]]))
        assert all(one.entry(r, c) == (r == c) for r, c in product(range(-5, 6), repeat=2))
        assert one.reduced() == BandMatrix.identity()

    def test_expand_reduce(self):
        P = Periodic(1, {(3, 1, 1): 2, (-1, 1, 1): 1})
        for N in (2, 3, 6):
            Q = P.expanded(N)
            assert Q.reduced() == P
            assert all(Q.entry(r, c) == P.entry(r, c) for r, c in product(range(-8, 9), repeat=2))

    def test_bandwidth(self):
        assert L(-3).bandwidth() == 3
        assert (E(0, 5) + L(1)).bandwidth() == 5


class TestCocycle:
    def test_examples(self):
        assert cocycle(E(0, 1), E(1, 0)) == 1
        assert cocycle(E(1, 0), E(0, 1)) == -1
        assert cocycle(L(2), L(-2)) == 2

    def test_sign_table(self):
        idx = range(-4, 5)
        for i, j, k, l in product(idx, repeat=4):
            assert cocycle(E(i, j), E(k, l)) == sign_table(i, j, k, l)

    def test_trace_form(self):
        idx = range(-3, 4)
        for (i, j), (k, l) in product(product(idx, repeat=2), repeat=2):
            A = E(i, j, 2) + E(j, i, -1)
            B = E(k, l) + E(l, l, 3)
            assert cocycle(A, B) == trace_form(A, B)

    def test_trace_form_rejects_periodic(self):
        with pytest.raises(ValueError):
            trace_form(L(1), E(0, 0))

    def test_matches_window_sum(self):
        mats = [
            L(2) + E(0, 1, 3),
            iota(3, LoopElement(3, {1: elementary_matrix(3, 2, 1), -2: elementary_matrix(3, 1, 3, 5)})),
            E(-2, 3) - L(-1),
            iota(2, LoopElement(2, {0: [[1, 2], [0, -1]], 1: [[0, 1], [1, 0]]})),
        ]
        for A, B in product(mats, repeat=2):
            assert cocycle(A, B) == window_cocycle(A, B, 30)

    def test_antisymmetric(self):
        mats = [L(k) for k in range(-3, 4)] + [E(i, j) for i, j in product(range(-2, 3), repeat=2)]
        for A, B in product(mats, repeat=2):
            assert cocycle(A, B) == -cocycle(B, A)

    def test_cocycle_identity_on_shifts(self):
        shifts = [L(a) for a in range(-4, 5)]
        for A, B, C in product(shifts, repeat=3):
            s = cocycle(A.commutator(B), C) + cocycle(B.commutator(C), A) + cocycle(C.commutator(A), B)
            assert s == 0


class TestBracket:
    def test_examples(self):
        X = bracket_hat(GlElement.elementary(0, 1), GlElement.elementary(1, 0))
        assert X.central == 1 and X.matrix == E(0, 0) - E(1, 1)
        Y = bracket_hat(delta0(0, {2: 1}), delta0(0, {-2: 1}))
        assert Y.central == 2 and Y.matrix.is_zero()
        Z = bracket_hat(GlElement.scalar(3), delta0(5, {1: 2}))
        assert Z.central == 0 and Z.matrix.is_zero()

    def test_products_match_entries(self):
        mats = [
            E(0, 1) + E(2, -1, 3),
            L(1) + E(0, 0),
            iota(2, LoopElement(2, {1: [[0, 1], [2, 0]], -1: [[1, 0], [0, 3]]})),
            iota(3, LoopElement(3, {0: elementary_matrix(3, 1, 3)})),
        ]
        for A, B in product(mats, repeat=2):
            C = A.commutator(B)
            assert {k: v for k, v in dense_bracket(A, B, 8).items() if max(map(abs, k)) <= 4} == {
                (r, c): C.entry(r, c) for r, c in product(range(-4, 5), repeat=2) if C.entry(r, c)
            }

    def test_jacobi(self):
        idx = range(-2, 3)
        elems = [GlElement.elementary(i, j) for i, j in product(idx, repeat=2)]
        for X, Y, Z in product(elems[::2], elems[1::2], elems[::3]):
            total = (
                bracket_hat(bracket_hat(X, Y), Z) + bracket_hat(bracket_hat(Y, Z), X) + bracket_hat(bracket_hat(Z, X), Y)
            )
            assert total.central == 0 and total.matrix.is_zero()


class TestLoops:
    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            iota(3, LoopElement.monomial(2, 0, [[1, 0], [0, 1]]))

    def test_iota_is_a_homomorphism(self):
        for N in range(1, 4):
            units = [elementary_matrix(N, a, b) for a in range(1, N + 1) for b in range(1, N + 1)]
            for p, q in product(range(-3, 4), repeat=2):
                for x, y in product(units, repeat=2):
                    X, Y = LoopElement.monomial(N, p, x), LoopElement.monomial(N, q, y)
                    lhs = iota(N, X.bracket(Y)).reduced()
                    rhs = iota(N, X).commutator(iota(N, Y)).reduced()
                    assert lhs == rhs

    def test_closed_form(self):
        for N in range(1, 4):
            units = [elementary_matrix(N, a, b) for a in range(1, N + 1) for b in range(1, N + 1)]
            for m, n in product(range(-3, 4), repeat=2):
                for x, y in product(units, repeat=2):
                    X, Y = LoopElement.monomial(N, m, x), LoopElement.monomial(N, n, y)
                    assert cocycle(iota(N, X), iota(N, Y)) == cocycle_closed_form(X, Y)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 3),
        st.dictionaries(st.integers(-3, 3), st.integers(-2, 2), max_size=3),
        st.dictionaries(st.integers(-3, 3), st.integers(-2, 2), max_size=3),
        st.randoms(use_true_random=False),
    )
    def test_closed_form_bilinear(self, N, cx, cy, rnd):
        def loop(coeffs):
            terms = {}
            for p, c in coeffs.items():
                terms[p] = [[Fraction(c * rnd.randint(-2, 2)) for _ in range(N)] for _ in range(N)]
            return LoopElement(N, terms)

        X, Y = loop(cx), loop(cy)
        assert cocycle(iota(N, X), iota(N, Y)) == cocycle_closed_form(X, Y)


class TestUniversal:
    def test_killing_values(self):
        g = sl2()
        e, f, h = (g.basis_vector(x) for x in "efh")
        assert killing(g, h, h) == 8
        assert killing(g, e, f) == 4
        assert killing(g, h, e) == 0

    def test_u_spot_value(self):
        g = sl2()
        h = g.basis_vector("h")
        assert u_cocycle(g, {1: h}, {-1: h}) == 8
        assert verify_universal(g, {1: h}, {-1: h}) == (8, 8, True)

    def test_nondegenerate(self):
        assert sl2().is_semisimple()
        assert sl3().is_semisimple() and sl3().dim == 8

    def test_sl2_pairs(self):
        g = sl2()
        basis = [g.basis_vector(x) for x in g.labels]
        for m, n in product(range(-3, 4), repeat=2):
            for x, y in product(basis, repeat=2):
                assert verify_universal(g, {m: x}, {n: y}).equal

    def test_mixed_loop_elements(self):
        g = sl2()
        e, f, h = (g.basis_vector(x) for x in "efh")
        X = {1: tuple(a + 2 * b for a, b in zip(e, h)), -2: f}
        Y = {-1: tuple(3 * a - b for a, b in zip(f, h)), 2: e}
        assert verify_universal(g, X, Y).equal

    def test_rejects_non_lie_structure(self):
        from wedge.universal import StructureLieAlgebra

        with pytest.raises(ValueError):
            StructureLieAlgebra(("a", "b"), (((0, 0), (1, 0)), ((1, 0), (0, 0))))
