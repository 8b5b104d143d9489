"""
Balanced divisor arithmetic for y^2 = h(x), h monic of degree 8.

The two points at infinity are rational. A class is stored as
div(u, v) + n inf+ + m inf- - D_inf with D_inf = 2 inf+ + inf-,
deg u <= 3, n >= 0 and m = 3 - deg u - n >= 0; m is implicit.
The identity is (1, 0, 2).
"""

from ..arith.finite_fields import (
    Poly,
    poly_add,
    poly_deg,
    poly_divmod,
    poly_mod,
    poly_monic,
    poly_mul,
    poly_neg,
    poly_sub,
)
from ..errors import ReductionError
from .base import JacElement, Jacobian, cantor_compose
from .curve import CurveFp

IDENTITY_OFFSET = 2
_MAX_REDUCTION_STEPS = 64


def sqrt_part(h: Poly, p: int) -> Poly:
    """Monic V of degree 4 with deg(h - V^2) <= 3."""
    inv2 = pow(2, -1, p)
    v = [0, 0, 0, 0, 1]
    for i in range(1, 5):
        acc = h[8 - i]
        for j in range(1, i):
            acc -= v[4 - j] * v[4 - i + j]
        v[4 - i] = acc * inv2 % p
    return tuple(v)


class BalancedJacobian(Jacobian):
    def __init__(self, curve: CurveFp):
        super().__init__(curve)
        if len(self.h) != 9 or self.h[-1] != 1:
            raise ValueError("balanced arithmetic needs a monic degree-8 model")
        self.vplus = sqrt_part(self.h, self.p)
        self.excess = poly_sub(self.h, poly_mul(self.vplus, self.vplus, self.p), self.p)
        self._identity = JacElement((1,), (), IDENTITY_OFFSET)

    @property
    def identity(self) -> JacElement:
        return self._identity

    def _pole_plus(self, w: Poly) -> int:
        """Pole order of y - w at inf+ (negative for a zero)."""
        diff = poly_sub(w, self.vplus, self.p)
        if diff:
            return poly_deg(diff)
        return poly_deg(self.excess) - 4

    def _step(self, u: Poly, n: int, w: Poly):
        p = self.p
        num = poly_sub(poly_mul(w, w, p), self.h, p)
        u2 = poly_monic(poly_divmod(num, u, p)[0], p)
        n2 = n + self._pole_plus(w) - poly_deg(u2)
        v2 = poly_mod(poly_neg(w, p), u2, p)
        return u2, v2, n2

    def _reduce(self, u: Poly, v: Poly, n: int) -> JacElement:
        p, vplus = self.p, self.vplus
        for _ in range(_MAX_REDUCTION_STEPS):
            du = poly_deg(u)
            m = 3 - du - n
            if du <= 3 and n >= 0 and m >= 0:
                return JacElement(u, v, n)
            if du >= 5:
                w = v
            elif n < 0:
                # moves weight onto inf+
                w = poly_sub(poly_mod(poly_add(v, vplus, p), u, p), vplus, p)
            else:
                w = poly_add(vplus, poly_mod(poly_sub(v, vplus, p), u, p), p)
            u, v, n = self._step(u, n, w)
        raise ReductionError(f"balanced reduction did not terminate for u = {u}")

    def _add(self, a: JacElement, b: JacElement) -> JacElement:
        u, v, deg_d = cantor_compose(a, b, self.h, self.p)
        return self._reduce(u, v, a.n + b.n + deg_d - IDENTITY_OFFSET)

    def neg(self, a: JacElement) -> JacElement:
        m = 3 - a.degree - a.n
        v = poly_mod(poly_neg(a.v, self.p), a.u, self.p)
        return self._reduce(a.u, v, m + 1)

    def _wrap(self, u, v, rng) -> JacElement:
        n = int(rng.integers(0, 3 - (len(u) - 1) + 1))
        return JacElement(u, v, n)
