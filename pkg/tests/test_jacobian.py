"""Tests for the F_p models and the Jacobian group law."""

import numpy as np
import pytest
from sympy import factorint

from pointless.arith.finite_fields import poly_is_squarefree, poly_mul, poly_roots, poly_scale, smallest_non_residue
from pointless.arith.quad_ring import ResidueMap
from pointless.errors import ExceptionalPrimeError, NotMultipleError
from pointless.forms import TernaryForm
from pointless.jacobian import (
    BALANCED,
    ODD,
    BabyStepTable,
    BalancedJacobian,
    CurveFp,
    JacElement,
    OddJacobian,
    bsgs_annihilator,
    check_octic,
    fp_model,
    fp_model_from_split,
    jacobian_for,
    normalize_octic,
    order_from_multiple,
    reduce_conic_model,
    scalar_mul,
    split_octic,
    twist_model,
)
from pointless.jacobian.curve import conic_point
from pointless.lifting import naive_lift
from pointless.oracle import conic_count, naive_count


def random_monic(rng, p, degree, extra=(1,)):
    while True:
        h = tuple(int(c) for c in rng.integers(0, p, size=degree)) + (1,)
        h = poly_mul(h, extra, p) if extra != (1,) else h
        if poly_is_squarefree(h, p):
            return h


def odd_curve(rng, p):
    return CurveFp(p=p, h=random_monic(rng, p, 7), kind=ODD)


def balanced_curve(rng, p):
    return CurveFp(p=p, h=random_monic(rng, p, 8), kind=BALANCED)


def group_order(curve):
    return naive_lift(curve.h, curve.p).value_at(1)


CURVES = [(kind, p) for kind in (ODD, BALANCED) for p in (7, 11, 13)]


@pytest.fixture(params=CURVES, ids=lambda c: f"{c[0]}-{c[1]}")
def curve(request):
    kind, p = request.param
    rng = np.random.default_rng(p)
    return odd_curve(rng, p) if kind == ODD else balanced_curve(rng, p)


class TestCurveFp:
    def test_degree_is_checked(self):
        with pytest.raises(ValueError):
            CurveFp(p=7, h=(1, 0, 0, 0, 0, 0, 0, 0, 1), kind=ODD)

    def test_monic_is_checked(self):
        with pytest.raises(ValueError):
            CurveFp(p=7, h=(1, 0, 0, 0, 0, 0, 0, 2), kind=ODD)

    def test_jacobian_for(self, rng):
        assert isinstance(jacobian_for(odd_curve(rng, 11)), OddJacobian)
        assert isinstance(jacobian_for(balanced_curve(rng, 11)), BalancedJacobian)


class TestNormalize:
    def test_degree_seven(self, rng):
        p = 13
        raw = poly_scale(random_monic(rng, p, 7), 5, p)
        h, kind = normalize_octic(raw, p)
        assert kind == ODD and len(h) == 8 and h[-1] == 1
        for k in (1, 2):
            assert naive_count(h, p, k).count == naive_count(raw, p, k).count

    def test_rational_root_gives_odd_model(self, rng):
        p = 11
        raw = poly_scale(random_monic(rng, p, 7, extra=(4, 1)), 3, p)
        assert poly_roots(raw, p)
        h, kind = normalize_octic(raw, p)
        assert kind == ODD and len(h) == 8
        for k in (1, 2):
            assert naive_count(h, p, k).count == naive_count(raw, p, k).count

    def test_no_root_gives_balanced_model(self, rng):
        p = 11
        while True:
            raw = random_monic(rng, p, 8)
            if not poly_roots(raw, p):
                break
        for scale in (4, smallest_non_residue(p)):
            scaled = poly_scale(raw, scale, p)
            h, kind = normalize_octic(scaled, p)
            assert kind == BALANCED and h[-1] == 1
            for k in (1, 2):
                assert naive_count(h, p, k).count == naive_count(scaled, p, k).count

    def test_bad_reduction(self):
        p = 7
        with pytest.raises(ExceptionalPrimeError) as exc:
            check_octic(poly_mul((1, 1), (1, 1, 0, 0, 0, 0, 1), p), p)
        assert exc.value.reason == "bad-reduction"
        with pytest.raises(ExceptionalPrimeError):
            check_octic((1, 0, 0, 0, 0, 0, 1), p)


class TestConicModels:
    def test_conic_point(self):
        g = TernaryForm(2, [1, 0, 0, 1, 0, 1])
        for p in (3, 5, 7, 11, 101):
            P = conic_point(g, p)
            assert any(x % p for x in P)
            assert g(*P) % p == 0

    def test_fp_model_matches_conic_counts(self, c2_conic):
        C = fp_model(c2_conic, 11)
        assert C.kind in (ODD, BALANCED)
        for k in (1, 2):
            assert naive_count(C.h, 11, k).count == conic_count(c2_conic, 11, k).count

    def test_split_model_is_the_same_curve(self, c2_model):
        p = 17
        red = ResidueMap(c2_model.d, p)
        C = fp_model_from_split(c2_model, red)
        raw = reduce_conic_model(c2_model.conic, p)
        for k in (1, 2):
            assert naive_count(C.h, p, k).count == naive_count(raw, p, k).count

    def test_split_octic_needs_a_split_prime(self, c2_model):
        with pytest.raises(ValueError):
            split_octic(c2_model.h, ResidueMap(c2_model.d, 11))


class TestTwist:
    @pytest.mark.parametrize("p", [7, 11, 13])
    def test_trace_changes_sign(self, rng, p):
        for C in (odd_curve(rng, p), balanced_curve(rng, p)):
            T = twist_model(C)
            assert naive_count(T.h, p, 1).count == 2 * (p + 1) - naive_count(C.h, p, 1).count
            assert naive_count(T.h, p, 2).count == naive_count(C.h, p, 2).count

    def test_twice_is_the_original_curve(self, rng):
        p = 11
        C = balanced_curve(rng, p)
        TT = twist_model(twist_model(C))
        for k in (1, 2, 3):
            assert naive_count(TT.h, p, k).count == naive_count(C.h, p, k).count


class TestGroupLaw:
    def test_identity_and_inverse(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(1)
        assert G.neg(G.identity) == G.identity
        for _ in range(20):
            a = G.random_element(rng)
            assert G.is_identity(G.sub(a, a))
            assert G.add(a, G.identity) == a
            assert G.add(G.identity, a) == a
            assert G.is_identity(G.add(a, G.neg(a)))

    def test_associative_and_commutative(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(2)
        for _ in range(30):
            a, b, c = (G.random_element(rng) for _ in range(3))
            assert G.add(a, b) == G.add(b, a)
            assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))

    def test_elements_are_valid(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(3)
        for _ in range(30):
            a = G.random_element(rng)
            assert G.is_valid(a)
            b = G.add(a, G.random_element(rng))
            assert G.is_valid(b)

    def test_group_order_annihilates(self, curve):
        G = jacobian_for(curve)
        order = group_order(curve)
        rng = np.random.default_rng(4)
        for _ in range(15):
            assert G.is_identity(scalar_mul(G, order, G.random_element(rng)))

    def test_random_elements_are_reproducible(self, curve):
        G = jacobian_for(curve)
        first = [G.random_element(np.random.default_rng(5)) for _ in range(3)]
        second = [G.random_element(np.random.default_rng(5)) for _ in range(3)]
        assert first == second

    def test_larger_prime(self, rng):
        for C in (odd_curve(rng, 10007), balanced_curve(rng, 10007)):
            G = jacobian_for(C)
            for _ in range(10):
                a, b, c = (G.random_element(rng) for _ in range(3))
                assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
                assert G.is_identity(G.add(a, G.neg(a)))

    def test_two_torsion(self, rng):
        p = 13
        r = 5
        h = random_monic(rng, p, 6, extra=(-r % p, 1))
        G = jacobian_for(CurveFp(p=p, h=h, kind=ODD))
        a = JacElement((-r % p, 1), ())
        assert G.is_valid(a)
        assert G.neg(a) == a
        assert G.is_identity(G.add(a, a))
        assert order_from_multiple(G, a, 6).order == 2


class TestScalarMul:
    def test_small_multiples(self, curve):
        G = jacobian_for(curve)
        a = G.random_element(np.random.default_rng(6))
        assert scalar_mul(G, 0, a) == G.identity
        assert scalar_mul(G, 1, a) == a
        assert scalar_mul(G, 2, a) == G.add(a, a)
        assert scalar_mul(G, -3, a) == G.neg(scalar_mul(G, 3, a))

    def test_distributes(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(7)
        for _ in range(10):
            a = G.random_element(rng)
            m, n = (int(x) for x in rng.integers(0, 5000, size=2))
            assert scalar_mul(G, m + n, a) == G.add(scalar_mul(G, m, a), scalar_mul(G, n, a))


class TestOrders:
    def test_identity(self, curve):
        G = jacobian_for(curve)
        assert bsgs_annihilator(G, G.identity, 5, curve.p, 10) == 0
        result = order_from_multiple(G, G.identity, 12)
        assert result.order == 1
        assert result.factorization == {2: 2, 3: 1}

    def test_progression_through_the_group_order(self, curve):
        G = jacobian_for(curve)
        p = curve.p
        order = group_order(curve)
        rng = np.random.default_rng(8)
        for _ in range(5):
            a = G.random_element(rng)
            c = order - 3 * p
            j = bsgs_annihilator(G, a, c, p, 10)
            assert j is not None and j <= 3
            assert G.is_identity(scalar_mul(G, c + j * p, a))

    def test_shared_table(self, curve):
        G = jacobian_for(curve)
        p = curve.p
        order = group_order(curve)
        a = G.random_element(np.random.default_rng(9))
        table = BabyStepTable(G, scalar_mul(G, p, a), 4)
        c = order - 5 * p
        j = bsgs_annihilator(G, a, c, p, 12, table=table, ca=scalar_mul(G, c, a))
        assert j == bsgs_annihilator(G, a, c, p, 12)

    def test_disjoint_progression(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(10)
        a = G.random_element(rng)
        while G.is_identity(a):
            a = G.random_element(rng)
        o = order_from_multiple(G, a, group_order(curve)).order
        assert bsgs_annihilator(G, a, 1, o, 20) is None

    def test_exact_order(self, curve):
        G = jacobian_for(curve)
        order = group_order(curve)
        rng = np.random.default_rng(11)
        for _ in range(5):
            a = G.random_element(rng)
            o = order_from_multiple(G, a, order).order
            assert order % o == 0
            assert G.is_identity(scalar_mul(G, o, a))
            for q in factorint(o):
                assert not G.is_identity(scalar_mul(G, o // q, a))

    def test_not_a_multiple(self, curve):
        G = jacobian_for(curve)
        rng = np.random.default_rng(12)
        a = G.random_element(rng)
        while G.is_identity(a):
            a = G.random_element(rng)
        with pytest.raises(NotMultipleError):
            order_from_multiple(G, a, 1)
