"""Hyperelliptic models of the curve over F_p."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import gmpy2

from ..arith.finite_fields import (
    Poly,
    poly_add,
    poly_eval,
    poly_is_squarefree,
    poly_mul,
    poly_reverse,
    poly_roots,
    poly_scale,
    poly_shift,
    poly_sub,
    poly_trim,
    smallest_non_residue,
    sqrt_mod_p,
)
from ..arith.quad_ring import SPLIT, ResidueMap
from ..errors import ExceptionalPrimeError, NonResidueError
from ..forms import ConicQuartic, TernaryForm

ODD = "odd"
BALANCED = "balanced"


@dataclass(frozen=True)
class CurveFp:
    """
    y^2 = h(x) over F_p with h monic squarefree of degree 7 (odd) or 8 (balanced).

    Attributes:
        raw: The octic the model was normalized from; same point counts.
    """

    p: int
    h: Poly
    kind: str
    raw: Optional[Poly] = None

    def __post_init__(self):
        deg = len(self.h) - 1
        expected = {ODD: 7, BALANCED: 8}.get(self.kind)
        if expected is None or deg != expected:
            raise ValueError(f"a {self.kind} model needs degree {expected}, got {deg}")
        if self.h[-1] != 1:
            raise ValueError("model must be monic")


def _form_on_polys(form: TernaryForm, polys: Sequence[Poly], p: int) -> Poly:
    powers = []
    for poly in polys:
        pw = [(1,)]
        for _ in range(form.degree):
            pw.append(poly_mul(pw[-1], poly, p))
        powers.append(pw)
    total: Poly = ()
    for (a, b, c), coeff in form.terms():
        term = poly_mul(poly_mul(powers[0][a], powers[1][b], p), powers[2][c], p)
        total = poly_add(total, poly_scale(term, coeff, p), p)
    return total


def conic_point(g: TernaryForm, p: int) -> Tuple[int, int, int]:
    """
    An F_p-point on g = 0: (0, 0, 1) if it lies on the conic, else scan
    X in {0, 1} and Y in F_p, solving the quadratic in Z.
    """
    a, b, c, d, e, f = (x % p for x in g.coeffs)
    if f == 0:
        return (0, 0, 1)
    inv2f = int(gmpy2.invert(2 * f, p))
    for X in (0, 1):
        for Y in range(p):
            if X == 0 and Y == 0:
                continue
            B = (c * X + e * Y) % p
            C = (a * X * X + b * X * Y + d * Y * Y) % p
            try:
                r = sqrt_mod_p(B * B - 4 * f * C, p)
            except NonResidueError:
                continue
            return (X, Y, (r - B) * inv2f % p)
    raise ExceptionalPrimeError("bad-reduction", f"no point on the conic modulo {p}")


def conic_parametrization(g: TernaryForm, p: int) -> Tuple[Poly, Poly, Poly]:
    """psi over F_p by projection from a rational point of g = 0."""
    P0 = conic_point(g, p)
    aux = next(l for l in ((0, 0, 1), (0, 1, 0), (1, 0, 0)) if sum(x * y for x, y in zip(P0, l)) % p)
    l0, l1, l2 = aux
    if l0:
        Q1, Q2 = (-l1, l0, 0), (-l2, 0, l0)
    else:
        Q1, Q2 = (1, 0, 0), (0, l2, -l1)
    Q = [poly_trim((b, a), p) for a, b in zip(Q1, Q2)]
    P = [poly_trim((c,), p) for c in P0]
    gQ = _form_on_polys(g, Q, p)
    S = [poly_add(x, y, p) for x, y in zip(P, Q)]
    # polar(P0, Q) = g(P0 + Q) - g(P0) - g(Q), and g(P0) = 0
    pol = poly_sub(_form_on_polys(g, S, p), gQ, p)
    return tuple(poly_sub(poly_mul(gQ, Pi, p), poly_mul(pol, Qi, p), p) for Pi, Qi in zip(P, Q))


def reduce_conic_model(cq: ConicQuartic, p: int) -> Poly:
    """
    The octic f(psi) over F_p.

    Raises:
        ExceptionalPrimeError: "bad-reduction" if the octic has degree <= 6 or
            is not squarefree.
    """
    psi = conic_parametrization(cq.g, p)
    raw = _form_on_polys(cq.f, psi, p)
    check_octic(raw, p)
    return raw


def check_octic(raw: Poly, p: int):
    """
    Raises:
        ExceptionalPrimeError: "bad-reduction" if raw has degree < 7 or is not squarefree.
    """
    if len(raw) - 1 < 7:
        raise ExceptionalPrimeError("bad-reduction", f"octic of degree {len(raw) - 1} modulo {p}")
    if not poly_is_squarefree(raw, p):
        raise ExceptionalPrimeError("bad-reduction", f"octic is not squarefree modulo {p}")


def _monic_odd(h: Poly, p: int) -> Poly:
    """c^-8 h(c x) for c the leading coefficient of the degree-7 h."""
    c = h[-1]
    scaled = [h[i] * pow(c, i, p) for i in range(len(h))]
    return poly_scale(scaled, pow(c, -8, p), p)


def normalize_octic(raw: Poly, p: int) -> Tuple[Poly, str]:
    """
    Monic model of y^2 = raw(x): degree 7 when a Weierstrass point is rational,
    otherwise degree 8 with rational points at infinity.

    Raises:
        ExceptionalPrimeError: "bad-reduction" when no monic model exists.
    """
    check_octic(raw, p)
    if len(raw) == 8:
        return _monic_odd(raw, p), ODD
    roots = poly_roots(raw, p)
    if roots:
        r = roots[0]
        return _monic_odd(poly_reverse(poly_shift(raw, r, p), 8, p), p), ODD
    lead = raw[-1]
    if gmpy2.legendre(lead, p) == 1:
        return poly_scale(raw, pow(lead, -1, p), p), BALANCED
    for x0 in range(p):
        value = poly_eval(raw, x0, p)
        if value and gmpy2.legendre(value, p) == 1:
            moved = poly_reverse(poly_shift(raw, x0, p), 8, p)
            return poly_scale(moved, pow(value, -1, p), p), BALANCED
    raise ExceptionalPrimeError("bad-reduction", f"no monic model modulo {p}")


def fp_model(cq: ConicQuartic, p: int) -> CurveFp:
    """
    Monic hyperelliptic model of the curve modulo p.

    Raises:
        ExceptionalPrimeError: "bad-reduction" if no squarefree model results.
    """
    raw = reduce_conic_model(cq, p)
    h, kind = normalize_octic(raw, p)
    return CurveFp(p=p, h=h, kind=kind, raw=raw)


def split_octic(h, reduction: ResidueMap) -> Poly:
    """h mod P as an F_p polynomial."""
    if reduction.kind != SPLIT:
        raise ValueError("only split primes reduce h to F_p")
    return poly_trim([reduction.reduce(c).value for c in h.coeffs], reduction.p)


def fp_model_from_split(model, reduction: ResidueMap) -> CurveFp:
    """
    Monic model from h mod P for a split prime, where O_K/P = F_p.

    Args:
        model: A HyperModel; only its h is used.
        reduction: The residue map of a split prime.
    """
    raw = split_octic(model.h, reduction)
    h, kind = normalize_octic(raw, reduction.p)
    return CurveFp(p=reduction.p, h=h, kind=kind, raw=raw)


def twist_model(C: CurveFp) -> CurveFp:
    """
    Quadratic twist y^2 = s h(x) with s the smallest non-residue, renormalized.
    """
    p = C.p
    s = smallest_non_residue(p)
    source = C.raw if C.raw is not None else C.h
    twisted = poly_scale(source, s, p)
    h, kind = normalize_octic(twisted, p)
    return CurveFp(p=p, h=h, kind=kind, raw=twisted)
