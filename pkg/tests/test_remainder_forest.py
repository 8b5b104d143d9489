"""Tests for the accumulating remainder tree and forest."""

import pytest

from pointless.arith.quad_ring import QuadDisc
from pointless.oracle import naive_chain
from pointless.remainder_forest import QuadMatrix, TreeInput, qmat_mul, remainder_forest, remainder_tree


def random_matrix(rng, d, rows, cols, bound=10):
    entries = [
        [d(int(rng.integers(-bound, bound + 1)), int(rng.integers(-bound, bound + 1))) for _ in range(cols)]
        for _ in range(rows)
    ]
    return QuadMatrix.from_entries(entries)


def random_input(rng, d, b, r, karatsuba=False):
    m = [1] + [int(x) for x in rng.integers(1, 51, size=b - 1)]
    A = [random_matrix(rng, d, r, r) for _ in range(b)]
    return TreeInput(V=random_matrix(rng, d, 1, r), A=A, m=m, d=d, karatsuba=karatsuba)


def same_outputs(xs, ys):
    return len(xs) == len(ys) and all(x.equals(y) for x, y in zip(xs, ys))


class TestQmatMul:
    def test_identity(self, gaussian, rng):
        R = random_matrix(rng, gaussian, 3, 3)
        ident = QuadMatrix.identity(3)
        assert qmat_mul(ident, ident, gaussian).equals(ident)
        assert qmat_mul(R, ident, gaussian).equals(R)

    def test_alpha_squared(self, gaussian):
        a = QuadMatrix.from_entries([[gaussian.alpha]])
        assert qmat_mul(a, a, gaussian).equals(QuadMatrix.from_entries([[-1]]))

    @pytest.mark.parametrize("D", [-1, 5, -3, 2])
    def test_scalar_case_matches_quadint(self, D, rng):
        d = QuadDisc(D)
        for karatsuba in (False, True):
            for _ in range(250):
                x = d(*(int(v) for v in rng.integers(-10**6, 10**6, size=2)))
                y = d(*(int(v) for v in rng.integers(-10**6, 10**6, size=2)))
                prod = qmat_mul(QuadMatrix.from_entries([[x]]), QuadMatrix.from_entries([[y]]), d, karatsuba)
                assert prod.entries(d)[0][0] == x * y

    def test_karatsuba_matches_schoolbook(self, rng):
        for D in (-1, 5):
            d = QuadDisc(D)
            R, S = random_matrix(rng, d, 8, 8, 1000), random_matrix(rng, d, 8, 8, 1000)
            assert qmat_mul(R, S, d, karatsuba=True).equals(qmat_mul(R, S, d))


class TestRemainderTree:
    def test_single_scalar(self, gaussian):
        inp = TreeInput(
            V=QuadMatrix.row([3]),
            A=[QuadMatrix.from_entries([[4]]), QuadMatrix.identity(1)],
            m=[1, 5],
            d=gaussian,
        )
        out = remainder_tree(inp)
        assert out[1].equals(QuadMatrix.row([2]))
        assert out[0].equals(QuadMatrix.row([0]))

    def test_identity_chain(self, gaussian, rng):
        V = random_matrix(rng, gaussian, 1, 4, 1000)
        m = [1, 7, 11, 13, 1, 17, 19, 23]
        inp = TreeInput(V=V, A=[QuadMatrix.identity(4)] * 8, m=m, d=gaussian)
        for n, C in enumerate(remainder_tree(inp)):
            assert C.equals(V.reduce(m[n]))

    def test_matches_direct_products(self, gaussian, rng):
        for karatsuba in (False, True):
            inp = random_input(rng, gaussian, 8, 2, karatsuba)
            out = remainder_tree(inp)
            for n in range(8):
                assert out[n].equals(naive_chain(inp, n))

    def test_matches_direct_products_golden_field(self, rng):
        d = QuadDisc(5)
        inp = random_input(rng, d, 64, 3)
        out = remainder_tree(inp)
        for n in range(64):
            assert out[n].equals(naive_chain(inp, n))

    def test_input_validation(self, gaussian):
        one = QuadMatrix.identity(1)
        with pytest.raises(ValueError):
            TreeInput(V=QuadMatrix.row([1]), A=[one] * 3, m=[1, 1, 1], d=gaussian)
        with pytest.raises(ValueError):
            TreeInput(V=QuadMatrix.row([1]), A=[one] * 2, m=[2, 1], d=gaussian)
        with pytest.raises(ValueError):
            TreeInput(V=QuadMatrix.row([1]), A=[one] * 2, m=[1], d=gaussian)


class TestRemainderForest:
    def test_kappa_zero_is_the_tree(self, gaussian, rng):
        inp = random_input(rng, gaussian, 16, 2)
        assert same_outputs(remainder_forest(inp, 0), remainder_tree(inp))

    @pytest.mark.parametrize("kappa", [1, 2, 3, 4])
    def test_every_kappa_agrees(self, gaussian, rng, kappa):
        inp = random_input(rng, gaussian, 16, 2)
        assert same_outputs(remainder_forest(inp, kappa), remainder_tree(inp))

    def test_random_instances(self, rng):
        for D in (-1, 5, 3):
            d = QuadDisc(D)
            for b in (2, 8, 32, 64):
                inp = random_input(rng, d, b, 2, karatsuba=D != 5)
                tree = remainder_tree(inp)
                levels = inp.levels
                for kappa in range(1, levels + 1):
                    assert same_outputs(remainder_forest(inp, kappa), tree)

    def test_kappa_out_of_range(self, gaussian, rng):
        inp = random_input(rng, gaussian, 8, 1)
        with pytest.raises(ValueError):
            remainder_forest(inp, 4)
        with pytest.raises(ValueError):
            remainder_forest(inp, -1)
