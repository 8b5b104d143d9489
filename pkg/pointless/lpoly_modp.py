"""L_p(T) mod p (split primes) or L_p(T) L_p(-T) mod p (inert primes) from W."""

from typing import Tuple

from .dataclass import INERT_CASE, SPLIT_CASE, ModPLData
from .errors import NotRationalError
from .hasse_witt import Matrix3, mat_mul


def charpoly_coeffs(W: Matrix3):
    """Coefficients of T, T^2, T^3 in det(I - T W)."""
    trace = W[0][0] + W[1][1] + W[2][2]
    minors = (
        (W[0][0] * W[1][1] - W[0][1] * W[1][0])
        + (W[0][0] * W[2][2] - W[0][2] * W[2][0])
        + (W[1][1] * W[2][2] - W[1][2] * W[2][1])
    )
    det = (
        W[0][0] * (W[1][1] * W[2][2] - W[1][2] * W[2][1])
        - W[0][1] * (W[1][0] * W[2][2] - W[1][2] * W[2][0])
        + W[0][2] * (W[1][0] * W[2][1] - W[1][1] * W[2][0])
    )
    return -trace, minors, -det


def lpoly_split(W: Matrix3, p: int) -> ModPLData:
    """(a1, a2, a3) mod p from det(I - T W) for W over F_p."""
    coeffs = tuple(int(c) % p for c in charpoly_coeffs(W))
    return ModPLData(p=p, case=SPLIT_CASE, coeffs=coeffs)


def frobenius_matrix(W: Matrix3) -> Matrix3:
    return [[x.frobenius() for x in row] for row in W]


def lpoly_inert(W: Matrix3, p: int) -> ModPLData:
    """
    (b1, b2, b3) mod p from det(I - T W W^(p)) for W over F_{p^2}.

    Raises:
        NotRationalError: If a coefficient is not in the prime field.
    """
    M = mat_mul(W, frobenius_matrix(W))
    coeffs = []
    for c in charpoly_coeffs(M):
        if not c.is_prime_field():
            raise NotRationalError(f"coefficient {c} of det(I - T W W^(p)) is not in F_{p}")
        coeffs.append(c.to_int() % p)
    return ModPLData(p=p, case=INERT_CASE, coeffs=tuple(coeffs))


def b_relations(a1: int, a2: int, a3: int, p: int) -> Tuple[int, int, int]:
    """T^2, T^4, T^6 coefficients of L_p(T) L_p(-T) mod p."""
    return (
        (2 * a2 - a1 * a1) % p,
        (a2 * a2 - 2 * a1 * a3) % p,
        (-a3 * a3) % p,
    )
