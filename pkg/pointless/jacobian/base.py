from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..arith.finite_fields import (
    Poly,
    poly_add,
    poly_divmod,
    poly_is_irreducible,
    poly_mod,
    poly_mul,
    poly_neg,
    poly_sqrt_mod,
    poly_xgcd,
)
from ..errors import NotASquareError
from .curve import CurveFp

# degree d of a random u is drawn with weight 1/d
_DEGREES = (1, 2, 3)
_DEGREE_WEIGHTS = np.array([1.0, 1 / 2, 1 / 3]) / (1 + 1 / 2 + 1 / 3)


@dataclass(frozen=True)
class JacElement:
    """
    Mumford representation (u, v) of a divisor class, plus the balancing
    integer n for even-degree models (0 and unused for odd-degree models).
    """

    u: Poly
    v: Poly
    n: int = 0

    @property
    def degree(self) -> int:
        return len(self.u) - 1


def cantor_compose(a: JacElement, b: JacElement, h: Poly, p: int) -> Tuple[Poly, Poly, int]:
    """
    Semi-reduced (u, v) with div(u, v) = div(a) + div(b) - div(gcd part).

    Returns:
        (u, v, deg d) where d is the removed common factor.
    """
    u1, v1, u2, v2 = a.u, a.v, b.u, b.v
    d1, e1, e2 = poly_xgcd(u1, u2, p)
    d, c1, c2 = poly_xgcd(d1, poly_add(v1, v2, p), p)
    s1 = poly_mul(c1, e1, p)
    s2 = poly_mul(c1, e2, p)
    u = poly_divmod(poly_mul(u1, u2, p), poly_mul(d, d, p), p)[0]
    num = poly_add(
        poly_add(poly_mul(poly_mul(s1, u1, p), v2, p), poly_mul(poly_mul(s2, u2, p), v1, p), p),
        poly_mul(c2, poly_add(poly_mul(v1, v2, p), h, p), p),
        p,
    )
    v = poly_mod(poly_divmod(num, d, p)[0], u, p)
    return u, v, len(d) - 1


class Jacobian(ABC):
    """
    Jac(C)(F_p) for a genus-3 curve y^2 = h(x).

    Attributes:
        curve: The model over F_p.
        ops: Number of group additions performed so far.
    """

    def __init__(self, curve: CurveFp):
        self.curve = curve
        self.p = curve.p
        self.h = curve.h
        self.ops = 0

    @property
    @abstractmethod
    def identity(self) -> JacElement:
        pass

    @abstractmethod
    def _add(self, a: JacElement, b: JacElement) -> JacElement:
        pass

    @abstractmethod
    def neg(self, a: JacElement) -> JacElement:
        pass

    @abstractmethod
    def _wrap(self, u: Poly, v: Poly, rng: np.random.Generator) -> JacElement:
        """Class of the effective divisor div(u, v) in the model's representation."""

    def add(self, a: JacElement, b: JacElement) -> JacElement:
        self.ops += 1
        return self._add(a, b)

    def sub(self, a: JacElement, b: JacElement) -> JacElement:
        return self.add(a, self.neg(b))

    def is_identity(self, a: JacElement) -> bool:
        return a == self.identity

    def is_valid(self, a: JacElement) -> bool:
        """u monic of degree <= 3 dividing v^2 - h, deg v < deg u."""
        p = self.p
        if not a.u or a.u[-1] != 1 or len(a.u) > 4 or len(a.v) >= len(a.u):
            return False
        return not poly_mod(poly_add(poly_mul(a.v, a.v, p), poly_neg(self.h, p), p), a.u, p)

    def random_element(self, rng: np.random.Generator) -> JacElement:
        """
        u monic irreducible of degree 1, 2 or 3 and v a square root of h mod u.
        """
        p = self.p
        while True:
            d = int(rng.choice(_DEGREES, p=_DEGREE_WEIGHTS))
            u = tuple(int(c) for c in rng.integers(0, p, size=d)) + (1,)
            if not poly_is_irreducible(u, p):
                continue
            try:
                v = poly_sqrt_mod(self.h, u, p)
            except NotASquareError:
                continue
            if rng.integers(2):
                v = poly_mod(poly_neg(v, p), u, p)
            return self._wrap(u, v, rng)
