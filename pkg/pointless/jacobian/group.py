"""Generic-group algorithms on a Jacobian: scalar multiplication, BSGS, element orders."""

from typing import Dict, Optional

from sympy import factorint

from ..dataclass import OrderResult
from ..errors import NotMultipleError
from .base import JacElement, Jacobian


def scalar_mul(G: Jacobian, k: int, a: JacElement) -> JacElement:
    """k * a by double-and-add; negative k goes through the inverse."""
    if k < 0:
        return scalar_mul(G, -k, G.neg(a))
    result = G.identity
    base = a
    while k:
        if k & 1:
            result = G.add(result, base)
        k >>= 1
        if k:
            base = G.add(base, base)
    return result


class BabyStepTable:
    """
    The multiples t * P for 0 <= t < size, keyed by element.

    One table serves every progression with the same step, so it is built once
    per random element and shared across candidates.
    """

    def __init__(self, G: Jacobian, P: JacElement, size: int):
        if size < 1:
            raise ValueError("baby-step table needs at least one entry")
        self.size = size
        self.steps: Dict[JacElement, int] = {}
        current = G.identity
        for t in range(size):
            self.steps.setdefault(current, t)
            current = G.add(current, P)
        # size * P, the giant stride
        self.stride = current

    def lookup(self, element: JacElement) -> Optional[int]:
        return self.steps.get(element)


def bsgs_annihilator(
    G: Jacobian,
    a: JacElement,
    c: int,
    step: int,
    J: int,
    table: Optional[BabyStepTable] = None,
    ca: Optional[JacElement] = None,
) -> Optional[int]:
    """
    Least j in [0, J) with (c + j * step) * a = 0.

    Args:
        G: The Jacobian.
        a: The element.
        c: Start of the progression.
        step: Common difference, usually p.
        J: Number of terms.
        table: Baby steps of step * a; built on the fly when omitted.
        ca: c * a if the caller already has it.

    Returns:
        j, or None when no term of the progression annihilates a.
    """
    if J < 1:
        raise ValueError("progression must have at least one term")
    if table is None:
        table = BabyStepTable(G, scalar_mul(G, step, a), max(1, int(J**0.5) + 1))
    target = G.neg(ca if ca is not None else scalar_mul(G, c, a))
    s = table.size
    neg_stride = G.neg(table.stride)
    for i in range(-(-J // s)):
        t = table.lookup(target)
        if t is not None:
            j = i * s + t
            return j if j < J else None
        target = G.add(target, neg_stride)
    return None


def order_from_multiple(G: Jacobian, a: JacElement, m: int) -> OrderResult:
    """
    Exact order of a from a known multiple m.

    Raises:
        NotMultipleError: If m * a is not the identity.
    """
    if m < 1 or not G.is_identity(scalar_mul(G, m, a)):
        raise NotMultipleError(f"{m} does not annihilate {a}")
    factors = factorint(m)
    order = m
    for q, e in factors.items():
        for _ in range(e):
            if G.is_identity(scalar_mul(G, order // q, a)):
                order //= q
            else:
                break
    return OrderResult(order=order, multiple=m, factorization=dict(factors))
