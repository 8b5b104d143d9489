"""
Step matrices for the coefficients of h^((p-1)/2).

For v_k = [h^e_{k-7}, ..., h^e_k] with e = (p - 1)/2, the coefficients obey
v_k (2 k h_0) = v_{k-1} M_k modulo p, and V_0 M_1 ... M_{p-1} is the product
the remainder tree evaluates at index (p - 1)/2 for every prime p at once.
"""

from typing import List, Tuple

from sympy import sieve

from .arith.quad_ring import QuadInt, QuadIntPoly
from .remainder_forest import QuadMatrix, TreeInput, qmat_mul

DIM = 8


def build_Mk(h: QuadIntPoly, k: int) -> QuadMatrix:
    """
    M_k: subdiagonal 2 k h_0, last column (8 - i - 2k) h_{8-i} in row i (0-based).
    """
    if h.degree != 8:
        raise ValueError(f"expected degree 8, got {h.degree}")
    zero = QuadInt(0, 0, h.d)
    rows = [[zero] * DIM for _ in range(DIM)]
    for i in range(DIM):
        rows[i][DIM - 1] = h[8 - i] * (8 - i - 2 * k)
    for i in range(DIM - 1):
        rows[i + 1][i] = rows[i + 1][i] + h[0] * (2 * k)
    return QuadMatrix.from_entries(rows)


def build_Aj(h: QuadIntPoly, j: int, karatsuba: bool = False) -> QuadMatrix:
    """A_j = M_{2j+1} M_{2j+2}."""
    return qmat_mul(build_Mk(h, 2 * j + 1), build_Mk(h, 2 * j + 2), h.d, karatsuba)


def initial_vector() -> QuadMatrix:
    """V_0 = [0, 0, 0, 0, 0, 0, 0, 1]."""
    return QuadMatrix.row([0] * (DIM - 1) + [1])


def tree_width(N: int) -> int:
    """Smallest power of two >= floor(N/2)."""
    half = max(N // 2, 1)
    return 1 << (half - 1).bit_length()


def build_moduli(N: int) -> Tuple[int, List[int]]:
    """
    (b, [m_0, ..., m_{b-1}]) with m_n = 2n + 1 for primes 2n + 1 < N, else 1.

    Raises:
        ValueError: If N < 5.
    """
    if N < 5:
        raise ValueError(f"N must be at least 5, got {N}")
    b = tree_width(N)
    m = [1] * b
    for p in sieve.primerange(3, N):
        m[(p - 1) // 2] = p
    return b, m


def build_tree_input(h: QuadIntPoly, N: int, karatsuba: bool = False) -> TreeInput:
    """Tree input for one translate of h, identity-padded to width b."""
    b, m = build_moduli(N)
    real = min(N // 2, b - 1)
    ident = QuadMatrix.identity(DIM)
    A = [build_Aj(h, j, karatsuba) if j < real else ident for j in range(b)]
    return TreeInput(V=initial_vector(), A=A, m=m, d=h.d, karatsuba=karatsuba)
