"""
Hyperelliptic model over O_K for a double cover of a conic.

A rational line meets the conic g = 0 in two points defined over
K = Q(sqrt(D)). Projecting from one of them parametrizes the conic over K,
and pulling the quartic f back along the parametrization gives y^2 = h(x)
with h in O_K[x] of degree 8.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import gmpy2
from sympy.ntheory.factor_ import core

from .arith.quad_ring import QuadDisc, QuadInt, QuadIntPoly
from .errors import ConfigurationError, ModelError
from .forms import ConicQuartic, TernaryForm
from .utils import log

Line = Tuple[int, int, int]
PointK = Tuple[QuadInt, QuadInt, QuadInt]
Psi = Tuple[QuadIntPoly, QuadIntPoly, QuadIntPoly]

# X=0, Y=0, Z=0, X+-Y=0, X+-Z=0, Y+-Z=0
LINE_SCAN: Tuple[Line, ...] = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (1, -1, 0),
    (1, 0, 1),
    (1, 0, -1),
    (0, 1, 1),
    (0, 1, -1),
)

AUX_LINES: Tuple[Line, ...] = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


@dataclass(frozen=True)
class HyperModel:
    """
    y^2 = h(x) over O_K together with the data it was built from.

    Attributes:
        d: The discriminant parameter of K.
        h: Degree-8 polynomial with h(0) != 0 and nonzero discriminant.
        translates: Three distinct integers beta with h(beta) != 0.
        psi: Parametrization of the conic with f(psi) = h, when built from a conic.
        conic: The (g, f) presentation, when known.
        line: The rational line used to find the field K.
    """

    d: QuadDisc
    h: QuadIntPoly
    translates: Tuple[int, int, int]
    psi: Optional[Psi] = None
    conic: Optional[ConicQuartic] = None
    line: Optional[Line] = None

    @property
    def h0(self) -> QuadInt:
        return self.h[0]

    def translated(self, beta: int) -> QuadIntPoly:
        """h(x + beta)."""
        return self.h.shift(beta)


def line_basis(line: Line) -> Tuple[Line, Line]:
    """Two integer points spanning the kernel of the linear form `line`."""
    l0, l1, l2 = line
    if l0:
        return (-l1, l0, 0), (-l2, 0, l0)
    if not (l1 or l2):
        raise ValueError("the zero form does not define a line")
    return (1, 0, 0), (0, l2, -l1)


def _on_line(P: PointK, line: Line) -> bool:
    return not sum((c * l for c, l in zip(P, line)), QuadInt(0, 0, P[0].d))


def _remove_content(coords: Sequence[QuadInt]) -> List[QuadInt]:
    g = 0
    for c in coords:
        g = gmpy2.gcd(g, c.content())
    g = int(g)
    if g <= 1:
        return list(coords)
    return [c.divexact(g) for c in coords]


def intersect_line(g: TernaryForm, line: Line) -> Tuple[QuadDisc, PointK]:
    """
    Field of definition and one point of the intersection of g = 0 with a line.

    Returns:
        (d, P0) with d the squarefree part of the discriminant of g restricted
        to the line and P0 a point with coordinates in O_K.

    Raises:
        ModelError: "degenerate-line" if the line is tangent to or contained in
            the conic, "square-discriminant" if the intersection is rational.
    """
    P1, P2 = line_basis(line)
    A, C = g(*P1), g(*P2)
    B = g.polar(P1, P2)
    disc = B * B - 4 * A * C
    if disc == 0:
        raise ModelError("degenerate-line", f"line {line} is tangent to or contained in the conic")
    if disc > 0 and gmpy2.is_square(disc):
        raise ModelError("square-discriminant", f"line {line} meets the conic in rational points")
    D = int(core(abs(disc))) * (1 if disc > 0 else -1)
    d = QuadDisc(D)
    k = int(gmpy2.isqrt(abs(disc) // abs(D)))
    s = d.sqrt_d * k - B
    t = 2 * A
    P0 = _remove_content([s * a + t * b for a, b in zip(P1, P2)])
    return d, tuple(P0)


def parametrize(g: TernaryForm, P0: PointK, aux_line: Line) -> Psi:
    """
    Rational parametrization of g = 0 over K by projection from P0.

    The line through P0 and Q(x) = x Q1 + Q2 on aux_line meets the conic again
    at g(Q) P0 - polar(P0, Q) Q.

    Raises:
        ModelError: "point-on-line" if P0 lies on aux_line.
    """
    d = P0[0].d
    if _on_line(P0, aux_line):
        raise ModelError("point-on-line", f"{P0} lies on {aux_line}")
    Q1, Q2 = line_basis(aux_line)
    Q = [QuadIntPoly([b, a], d) for a, b in zip(Q1, Q2)]
    P = [QuadIntPoly([c], d) for c in P0]
    gQ = g(*Q)
    pol = g.polar(P, Q)
    psi = [gQ * Pi - pol * Qi for Pi, Qi in zip(P, Q)]
    content = 0
    for poly in psi:
        content = gmpy2.gcd(content, poly.content())
    content = int(content)
    if content > 1:
        psi = [poly.divexact_int(content) for poly in psi]
    return tuple(psi)


def pullback(f: TernaryForm, psi: Psi) -> QuadIntPoly:
    """h(x) = f(psi_1(x), psi_2(x), psi_3(x))."""
    return f(*psi)


def _sylvester(a: QuadIntPoly, b: QuadIntPoly) -> List[List[QuadInt]]:
    m, n = a.degree, b.degree
    zero = QuadInt(0, 0, a.d)
    size = m + n
    rows = []
    high_a = list(reversed(a.coeffs))
    high_b = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([zero] * i + high_a + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + high_b + [zero] * (size - i - n - 1))
    return rows


def _bareiss_det(M: List[List[QuadInt]], d: QuadDisc) -> QuadInt:
    """Fraction-free determinant with exact division in O_K."""
    M = [row[:] for row in M]
    n = len(M)
    sign = 1
    prev = QuadInt(1, 0, d)
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return QuadInt(0, 0, d)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]).divexact(prev)
            M[i][k] = QuadInt(0, 0, d)
        prev = pivot
    return M[n - 1][n - 1] * sign


def discriminant(h: QuadIntPoly) -> QuadInt:
    """
    disc(h) = (-1)^(n(n-1)/2) Res(h, h') / lead(h) for n = deg h >= 1.
    """
    n = h.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    if n == 1:
        return QuadInt(1, 0, h.d)
    res = _bareiss_det(_sylvester(h, h.deriv()), h.d)
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res.divexact(h.leading)


def _scan_integers():
    yield 0
    c = 1
    while True:
        yield c
        yield -c
        c += 1


def _translate_off_zero(h: QuadIntPoly, psi: Optional[Psi]):
    """Replace h(x) by h(x - c) for the first c in 0, 1, -1, 2, ... with h(-c) != 0."""
    for c in _scan_integers():
        if h(-c):
            if c == 0:
                return h, psi
            log.debug(f"translating model by x -> x - {c}")
            if psi is not None:
                psi = tuple(q.shift(-c) for q in psi)
            return h.shift(-c), psi


def normalize_model(h: QuadIntPoly, psi: Optional[Psi] = None) -> Tuple[QuadIntPoly, Optional[Psi]]:
    """
    Normalize h, applying the same substitutions to the parametrization.

    Reversal x^8 h(1/x) corresponds to psi_i -> x^2 psi_i(1/x) since f is
    homogeneous of degree 4.
    """
    if h.degree < 7:
        raise ModelError("not-genus-3", f"degree {h.degree} < 7")
    if not discriminant(h):
        raise ModelError("not-genus-3", "h is not squarefree")
    if h.degree == 7:
        h, psi = _translate_off_zero(h, psi)
        h = h.reverse(8)
        if psi is not None:
            psi = tuple(q.reverse(2) for q in psi)
    h, psi = _translate_off_zero(h, psi)
    return h, psi


def normalize(h: QuadIntPoly) -> QuadIntPoly:
    """
    Degree exactly 8 with nonzero constant term.

    Raises:
        ModelError: "not-genus-3" if deg h < 7 or h is not squarefree.
    """
    return normalize_model(h)[0]


def choose_translates(h: QuadIntPoly) -> Tuple[int, int, int]:
    """First three beta = 0, 1, 2, ... with N(h(beta)) != 0."""
    out = []
    beta = 0
    while len(out) < 3:
        if h(beta).norm() != 0:
            out.append(beta)
        beta += 1
    return tuple(out)


def find_field(g: TernaryForm) -> Tuple[QuadDisc, PointK, Line]:
    """Scan LINE_SCAN for the first line with a non-square discriminant."""
    square_seen = False
    for line in LINE_SCAN:
        try:
            d, P0 = intersect_line(g, line)
        except ModelError as exc:
            log.debug(f"line {line} skipped: {exc.reason}")
            square_seen = square_seen or exc.reason == "square-discriminant"
            continue
        return d, P0, line
    if square_seen:
        raise ModelError("square-discriminant", "every scanned line meets the conic in rational points")
    raise ModelError("degenerate-line", "every scanned line is degenerate")


def build_model(cq: ConicQuartic) -> HyperModel:
    """
    Construct the hyperelliptic model of w^2 = f on g = 0.

    Raises:
        ModelError: If no suitable line exists or the pulled back curve is not of genus 3.
    """
    d, P0, line = find_field(cq.g)
    aux = next(l for l in AUX_LINES if not _on_line(P0, l))
    psi = parametrize(cq.g, P0, aux)
    h = pullback(cq.f, psi)
    h, psi = normalize_model(h, psi)
    translates = choose_translates(h)
    log.info(f"model over Q(sqrt({d.D})) from line {line}, translates {translates}")
    return HyperModel(d=d, h=h, translates=translates, psi=psi, conic=cq, line=line)


def model_from_coefficients(
    D: int,
    h_pairs: Sequence[int],
    translates: Optional[Sequence[int]] = None,
    conic: Optional[ConicQuartic] = None,
) -> HyperModel:
    """
    A HyperModel from explicit (c0, c1) pairs for h_0..h_8.

    Raises:
        ModelError: "not-genus-3" if deg h != 8 or disc(h) = 0.
        ConfigurationError: If h(0) = 0 or the translates are unusable.
    """
    d = QuadDisc(D)
    h = QuadIntPoly.from_pairs(list(h_pairs), d)
    if h.degree != 8:
        raise ModelError("not-genus-3", f"expected degree 8, got {h.degree}")
    if not h[0]:
        raise ConfigurationError("h(0) must be nonzero")
    if not discriminant(h):
        raise ModelError("not-genus-3", "h is not squarefree")
    if translates is None:
        translates = choose_translates(h)
    translates = tuple(int(b) for b in translates)
    if len(translates) != 3 or len(set(translates)) != 3:
        raise ConfigurationError(f"need three distinct translates, got {translates}")
    for beta in translates:
        if h(beta).norm() == 0:
            raise ConfigurationError(f"h({beta}) = 0")
    return HyperModel(d=d, h=h, translates=translates, conic=conic)
