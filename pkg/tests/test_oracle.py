"""Tests for the brute-force references."""

import gmpy2
import pytest

from pointless.arith.finite_fields import ExtensionField, poly_eval
from pointless.arith.quad_ring import QuadIntPoly, ResidueMap
from pointless.errors import GuardExceededError
from pointless.jacobian import reduce_conic_model
from pointless.oracle import conic_count, naive_chain, naive_count, naive_power, naive_Up
from pointless.recurrence import build_tree_input
from pointless.remainder_forest import QuadMatrix, qmat_mul


def count_by_field_elements(h, F):
    """#C(F) for y^2 = h(x) with one FpExt evaluation per element."""
    total = 0
    for index in range(F.order):
        x = F.element(index)
        value = F.zero
        for c in reversed(h):
            value = value * x + c
        total += 1 if not value else (2 if value.is_square() else 0)
    lead = F(h[-1])
    if (len(h) - 1) % 2:
        return total + 1
    return total + (2 if lead.is_square() else 0)


class TestNaiveCount:
    def test_line(self):
        for p in (3, 7, 11):
            assert naive_count((0, 1), p, 1).count == p + 1

    def test_prime_field_by_legendre(self):
        p = 13
        h = (3, 1, 0, 5, 0, 0, 0, 2, 7)  # lead 7 is a non-residue mod 13
        expected = sum(1 + int(gmpy2.legendre(poly_eval(h, x, p), p)) for x in range(p))
        assert naive_count(h, p, 1).count == expected

    @pytest.mark.parametrize("k", [2, 3])
    def test_extensions_by_field_elements(self, k):
        p = 5
        F = ExtensionField.quadratic(p) if k == 2 else ExtensionField.cubic(p)
        for h in ((1, 2, 0, 1, 0, 0, 0, 3, 2), (4, 0, 1, 0, 0, 0, 0, 1)):
            assert naive_count(h, p, k).count == count_by_field_elements(h, F)

    def test_chunks_do_not_change_the_count(self):
        h = (1, 2, 0, 1, 0, 0, 0, 3, 2)
        assert naive_count(h, 7, 2, chunk=5).count == naive_count(h, 7, 2).count

    def test_weil_bound(self, c2_conic):
        for p in (11, 17, 19):
            raw = reduce_conic_model(c2_conic, p)
            for k in (1, 2, 3):
                assert naive_count(raw, p, k).weil_ok()

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            naive_count((1, 0, 1), 101, 3, guard=1000)


class TestConicCount:
    @pytest.mark.parametrize("p", [11, 17])
    def test_matches_hyperelliptic_model(self, c2_conic, p):
        raw = reduce_conic_model(c2_conic, p)
        for k in (1, 2):
            assert conic_count(c2_conic, p, k).count == naive_count(raw, p, k).count

    def test_guard(self, c2_conic):
        with pytest.raises(GuardExceededError):
            conic_count(c2_conic, 101, 2, guard=10**6)


class TestNaiveUp:
    def test_p_three_reads_h_itself(self, gaussian):
        h = QuadIntPoly([3, 1, 0, 0, 0, 0, 0, 0, 1], gaussian)
        red = ResidueMap(gaussian, 13)
        up = naive_Up(h, 13, 0, red)
        power = naive_power(h, 6, 13, 13, red)
        assert up.values == (power[12], power[11], power[10])
        # e = 1 at p = 3, so U is (h_2, h_1, h_0)
        red3 = ResidueMap(gaussian, 3)
        assert naive_Up(h, 3, 0, red3).values == (0, 1, 0)

    def test_shift(self, gaussian):
        h = QuadIntPoly([3, 1, 0, 0, 0, 0, 0, 0, 1], gaussian)
        red = ResidueMap(gaussian, 5)
        assert naive_Up(h, 5, 2, red).values == naive_Up(h.shift(2), 5, 0, red).values

    def test_guard(self, c2_h):
        red = ResidueMap(c2_h.d, 2003)
        with pytest.raises(GuardExceededError):
            naive_Up(c2_h, 2003, 0, red)


class TestNaiveChain:
    def test_conventions(self, c2_h):
        inp = build_tree_input(c2_h, 20)
        assert naive_chain(inp, 0).equals(QuadMatrix.row([0] * 8))
        assert naive_chain(inp, 1).equals(qmat_mul(inp.V, inp.A[0], inp.d).reduce(3))

    def test_guard(self, c2_h):
        inp = build_tree_input(c2_h, 20)
        with pytest.raises(GuardExceededError):
            naive_chain(inp, 3, guard=8)
