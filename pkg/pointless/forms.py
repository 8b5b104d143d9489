"""Homogeneous ternary forms and the (g, f) curve presentation."""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

Monomial = Tuple[int, int, int]


def monomials(degree: int) -> List[Monomial]:
    """Exponent triples of X^a Y^b Z^c, lexicographic with X >= Y >= Z."""
    out = []
    for a in range(degree, -1, -1):
        for b in range(degree - a, -1, -1):
            out.append((a, b, degree - a - b))
    return out


class TernaryForm:
    """
    A homogeneous integer form in X, Y, Z.

    Args:
        degree: Total degree.
        coeffs: One integer per monomial, in the order given by `monomials`.
    """

    def __init__(self, degree: int, coeffs: Sequence[int]):
        expected = (degree + 1) * (degree + 2) // 2
        if len(coeffs) != expected:
            raise ValueError(f"A degree-{degree} form needs {expected} coefficients, got {len(coeffs)}")
        self.degree = degree
        self.coeffs = tuple(int(c) for c in coeffs)

    def terms(self) -> Iterator[Tuple[Monomial, int]]:
        for mono, c in zip(monomials(self.degree), self.coeffs):
            if c:
                yield mono, c

    def __call__(self, X, Y, Z):
        """Evaluate on elements of any commutative ring supporting + and *."""
        powers = []
        for v in (X, Y, Z):
            pw = [v**0]
            for _ in range(self.degree):
                pw.append(pw[-1] * v)
            powers.append(pw)
        total = 0
        for (a, b, c), coeff in self.terms():
            total = total + powers[0][a] * powers[1][b] * powers[2][c] * coeff
        return total

    def polar(self, P: Sequence, Q: Sequence):
        """g(P + Q) - g(P) - g(Q); the symmetric bilinear form for quadrics."""
        S = [a + b for a, b in zip(P, Q)]
        return self(*S) - self(*P) - self(*Q)

    def __eq__(self, other):
        return isinstance(other, TernaryForm) and (self.degree, self.coeffs) == (other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"TernaryForm(degree={self.degree}, coeffs={list(self.coeffs)})"


def gram_matrix(g: TernaryForm) -> Tuple[Tuple[int, int, int], ...]:
    """Twice the symmetric matrix of a quadratic form, as integers."""
    if g.degree != 2:
        raise ValueError("Gram matrix is only defined for quadratic forms")
    a, b, c, d, e, f = g.coeffs
    return ((2 * a, b, c), (b, 2 * d, e), (c, e, 2 * f))


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True)
class ConicQuartic:
    """
    The curve w^2 = f(X, Y, Z) on the conic g(X, Y, Z) = 0.

    Attributes:
        g: Nondegenerate quadratic form.
        f: Quartic form.
    """

    g: TernaryForm
    f: TernaryForm

    def __post_init__(self):
        if self.g.degree != 2 or self.f.degree != 4:
            raise ValueError("expected a quadratic g and a quartic f")
        if _det3(gram_matrix(self.g)) == 0:
            raise ValueError("the conic g = 0 is degenerate")

    @classmethod
    def from_coefficients(cls, g: Sequence[int], f: Sequence[int]) -> "ConicQuartic":
        return cls(TernaryForm(2, g), TernaryForm(4, f))
