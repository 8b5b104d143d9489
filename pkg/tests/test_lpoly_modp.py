"""Tests for L_p(T) mod p from the Hasse-Witt matrix."""

import pytest

from pointless.arith.finite_fields import ExtensionField, PrimeField
from pointless.arith.quad_ring import SPLIT, ResidueMap
from pointless.dataclass import INERT_CASE, SPLIT_CASE, LPoly
from pointless.hasse_witt import assemble_W
from pointless.jacobian import reduce_conic_model
from pointless.lifting import naive_lift
from pointless.lpoly_modp import b_relations, lpoly_inert, lpoly_split
from pointless.oracle import naive_Up


def diag(field, values):
    return [[field(values[i]) if i == j else field.zero for j in range(3)] for i in range(3)]


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestSplit:
    def test_zero(self):
        F = PrimeField(101)
        md = lpoly_split(diag(F, [0, 0, 0]), 101)
        assert md.case == SPLIT_CASE
        assert md.coeffs == (0, 0, 0)

    def test_identity(self):
        F = PrimeField(101)
        assert lpoly_split(diag(F, [1, 1, 1]), 101).coeffs == (98, 3, 100)

    def test_diagonal(self):
        F = PrimeField(101)
        assert lpoly_split(diag(F, [1, 2, 3]), 101).coeffs == (95, 11, 95)


class TestInert:
    def test_zero(self):
        F = ExtensionField(7, (1, 0, 1))
        md = lpoly_inert(diag(F, [0, 0, 0]), 7)
        assert md.case == INERT_CASE
        assert md.coeffs == (0, 0, 0)

    def test_identity(self):
        F = ExtensionField.quadratic(7)
        assert lpoly_inert(diag(F, [1, 1, 1]), 7).coeffs == (4, 3, 6)

    def test_norms_on_the_diagonal(self):
        F = ExtensionField(7, (1, 0, 1))
        W = diag(F, [1, 1, 1])
        W[0][0] = F.gen()
        # t * t^7 = -t^2 = 1
        assert lpoly_inert(W, 7).coeffs == (4, 3, 6)

    def test_coefficients_are_rational(self, rng):
        p = 23
        F = ExtensionField.quadratic(p)
        for _ in range(50):
            W = [[F(tuple(int(c) for c in rng.integers(0, p, size=2))) for _ in range(3)] for _ in range(3)]
            md = lpoly_inert(W, p)
            assert all(0 <= c < p for c in md.coeffs)


class TestBRelations:
    def test_zero(self):
        assert b_relations(0, 0, 0, 101) == (0, 0, 0)

    def test_small_triple(self):
        assert b_relations(1, 2, 3, 101) == (3, 99, 92)

    def test_matches_symbolic_product(self, rng):
        for p in (101, 103, 1009):
            for _ in range(100):
                a1, a2, a3 = (int(x) for x in rng.integers(-10**4, 10**4, size=3))
                L = LPoly(p, a1, a2, a3).coefficients()
                L_minus = [c * (-1) ** i for i, c in enumerate(L)]
                prod = convolve(L, L_minus)
                assert all(prod[k] == 0 for k in range(1, 13, 2))
                assert b_relations(a1, a2, a3, p) == tuple(prod[k] % p for k in (2, 4, 6))


@pytest.mark.parametrize("p", [11, 17, 19, 23, 29, 37, 41, 43, 47, 53])
def test_reduces_the_counted_lpoly(c2_model, p):
    """The Hasse-Witt data from h^((p-1)/2) agrees with point counts on the conic model."""
    model = c2_model
    red = ResidueMap(model.d, p)
    ups = [naive_Up(model.h, p, beta, red) for beta in model.translates]
    W = assemble_W(ups, red.field)
    md = lpoly_split(W, p) if red.kind == SPLIT else lpoly_inert(W, p)
    lp = naive_lift(reduce_conic_model(model.conic, p), p)
    assert lp.reduces_to(md)
