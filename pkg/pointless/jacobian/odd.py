from ..arith.finite_fields import poly_divmod, poly_mod, poly_monic, poly_mul, poly_neg, poly_sub
from .base import JacElement, Jacobian, cantor_compose

_IDENTITY = JacElement((1,), ())


class OddJacobian(Jacobian):
    """Cantor's algorithm for y^2 = h(x), h monic of degree 7."""

    @property
    def identity(self) -> JacElement:
        return _IDENTITY

    def _reduce(self, u, v) -> JacElement:
        p, h = self.p, self.h
        while len(u) - 1 > 3:
            u = poly_monic(poly_divmod(poly_sub(h, poly_mul(v, v, p), p), u, p)[0], p)
            v = poly_mod(poly_neg(v, p), u, p)
        return JacElement(u, v)

    def _add(self, a: JacElement, b: JacElement) -> JacElement:
        u, v, _ = cantor_compose(a, b, self.h, self.p)
        return self._reduce(u, v)

    def neg(self, a: JacElement) -> JacElement:
        return JacElement(a.u, poly_mod(poly_neg(a.v, self.p), a.u, self.p))

    def _wrap(self, u, v, rng) -> JacElement:
        return JacElement(u, v)
