"""Tests for the hyperelliptic model over O_K."""

import pytest

from pointless.arith.quad_ring import QuadDisc, QuadIntPoly
from pointless.errors import ConfigurationError, ModelError
from pointless.forms import TernaryForm
from pointless.model_builder import (
    build_model,
    choose_translates,
    discriminant,
    find_field,
    intersect_line,
    model_from_coefficients,
    normalize,
    parametrize,
    pullback,
)

from .conftest import C2_H_PAIRS

SPHERE = TernaryForm(2, [1, 0, 0, 1, 0, 1])
Z4 = TernaryForm(4, [0] * 14 + [1])
X4 = TernaryForm(4, [1] + [0] * 14)


def _reference_psi(d):
    return (
        QuadIntPoly([-1, 0, 1], d),
        QuadIntPoly([0, 2], d),
        QuadIntPoly([d.alpha, 0, d.alpha], d),
    )


class TestIntersectLine:
    def test_sphere_meets_x_zero_over_gaussian_field(self, gaussian):
        d, P0 = intersect_line(SPHERE, (1, 0, 0))
        assert d.D == -1
        assert P0 == (gaussian(0), gaussian.alpha, gaussian(1))

    def test_real_quadratic_field(self):
        d, P0 = intersect_line(TernaryForm(2, [1, 0, 0, 1, 0, -2]), (1, 0, 0))
        assert d.D == 2
        assert P0 == (d(0), d.alpha, d(1))

    def test_rational_intersection(self):
        with pytest.raises(ModelError) as exc:
            intersect_line(TernaryForm(2, [0, 1, 0, 0, 0, -1]), (0, 0, 1))
        assert exc.value.reason == "square-discriminant"

    def test_tangent_line(self):
        # X = 0 is tangent to XZ - Y^2 = 0 at (0 : 0 : 1)
        with pytest.raises(ModelError) as exc:
            intersect_line(TernaryForm(2, [0, 0, 1, -1, 0, 0]), (1, 0, 0))
        assert exc.value.reason == "degenerate-line"

    def test_point_lies_on_conic(self):
        for coeffs in ([1, 0, 0, 1, 0, 1], [1, 1, 0, 2, 0, 3], [2, 0, 1, 3, 1, 5]):
            g = TernaryForm(2, coeffs)
            d, P0, _ = find_field(g)
            assert not g(*P0)


class TestParametrize:
    def test_parametrization_lies_on_conic(self, gaussian):
        _, P0 = intersect_line(SPHERE, (1, 0, 0))
        psi = parametrize(SPHERE, P0, (0, 0, 1))
        assert not SPHERE(*psi)
        assert max(q.degree for q in psi) == 2

    def test_point_on_aux_line(self, gaussian):
        _, P0 = intersect_line(SPHERE, (1, 0, 0))
        with pytest.raises(ModelError) as exc:
            parametrize(SPHERE, P0, (1, 0, 0))
        assert exc.value.reason == "point-on-line"

    def test_displayed_parametrization_lies_on_conic(self, gaussian):
        assert not SPHERE(*_reference_psi(gaussian))


class TestPullback:
    def test_displayed_curve(self, gaussian, c2_conic, c2_h):
        assert pullback(c2_conic.f, _reference_psi(gaussian)) == c2_h

    def test_pure_powers(self, gaussian):
        psi = _reference_psi(gaussian)
        assert pullback(Z4, psi) == QuadIntPoly([1, 0, 4, 0, 6, 0, 4, 0, 1], gaussian)
        assert pullback(X4, psi) == QuadIntPoly([1, 0, -4, 0, 6, 0, -4, 0, 1], gaussian)


class TestNormalize:
    def test_unchanged_when_already_normal(self, c2_h):
        assert normalize(c2_h) == c2_h

    def test_translates_off_a_root_at_zero(self, gaussian):
        h = QuadIntPoly([0, 1, 0, 0, 0, 0, 0, 0, 1], gaussian)
        assert normalize(h) == h.shift(1)

    def test_degree_seven_is_reversed(self, gaussian):
        h = QuadIntPoly([1, 0, 0, 0, 0, 0, 0, 1], gaussian)
        expected = QuadIntPoly([0, 1, 0, 0, 0, 0, 0, 0, 1], gaussian).shift(1)
        assert normalize(h) == expected

    def test_rejects_low_degree(self, gaussian):
        with pytest.raises(ModelError) as exc:
            normalize(QuadIntPoly([1, 0, 0, 0, 0, 0, 1], gaussian))
        assert exc.value.reason == "not-genus-3"

    def test_rejects_repeated_roots(self, gaussian):
        square = QuadIntPoly([1, 0, 1], gaussian) ** 4
        with pytest.raises(ModelError):
            normalize(square)


class TestDiscriminant:
    def test_quadratic(self, gaussian):
        # b^2 - 4ac
        assert discriminant(QuadIntPoly([1, 3, 2], gaussian)) == gaussian(1)
        assert discriminant(QuadIntPoly([1, 0, 1], gaussian)) == gaussian(-4)

    def test_cubic(self, gaussian):
        # x^3 - x has roots 0, 1, -1: product of squared differences is 4
        assert discriminant(QuadIntPoly([0, -1, 0, 1], gaussian)) == gaussian(4)

    def test_c2_is_squarefree(self, c2_h):
        assert discriminant(c2_h)


class TestTranslates:
    def test_c2(self, c2_h):
        assert choose_translates(c2_h) == (0, 1, 2)

    def test_skips_roots(self, gaussian):
        h = QuadIntPoly([-1, 1], gaussian) * QuadIntPoly([3, 0, 0, 0, 0, 0, 0, 1], gaussian)
        assert choose_translates(h) == (0, 2, 3)


class TestBuildModel:
    def test_c2_from_conic(self, c2_conic):
        model = build_model(c2_conic)
        assert model.d.D == -1
        assert model.h.degree == 8
        assert model.h[0]
        assert discriminant(model.h)
        assert pullback(c2_conic.f, model.psi) == model.h
        assert not c2_conic.g(*model.psi)
        assert len(set(model.translates)) == 3

    def test_from_coefficients(self, c2_model):
        assert c2_model.translates == (0, 1, 2)
        assert c2_model.h0 == c2_model.d(3, 2)
        assert c2_model.translated(1)(0) == c2_model.h(1)

    def test_from_coefficients_checks_degree(self):
        with pytest.raises(ModelError):
            model_from_coefficients(-1, C2_H_PAIRS[:-2])

    def test_from_coefficients_checks_translates(self):
        with pytest.raises(ConfigurationError):
            model_from_coefficients(-1, C2_H_PAIRS, (0, 0, 1))

    def test_from_coefficients_checks_constant_term(self):
        pairs = [0, 0] + C2_H_PAIRS[2:]
        with pytest.raises(ConfigurationError):
            model_from_coefficients(-1, pairs)
