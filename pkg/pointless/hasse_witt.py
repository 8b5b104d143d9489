"""Hasse-Witt matrix from the remainder tree outputs of three translates."""

from typing import List, Sequence

from .arith.quad_ring import QuadInt, ResidueMap
from .dataclass import UpVector
from .errors import ExceptionalPrimeError

Matrix3 = List[List]


def compute_Up(C: Sequence[QuadInt], h0: QuadInt, p: int, reduction: ResidueMap, beta: int = 0) -> UpVector:
    """
    U_p = (h^e_{p-1}, h^e_{p-2}, h^e_{p-3}) mod P, e = (p - 1)/2.

    C is the tree output V_0 M_1 ... M_{p-1} mod p for the (translated) model
    with constant term h0; v_{p-1} = -h0^(-e) C.

    Raises:
        ExceptionalPrimeError: "bad-h0" if p divides N(h0).
    """
    if h0.norm() % p == 0:
        raise ExceptionalPrimeError("bad-h0", f"p = {p} divides N(h(0))")
    scale = -(reduction.reduce(h0) ** (-((p - 1) // 2)))
    v = [reduction.reduce(c) * scale for c in C]
    return UpVector(p=p, beta=beta, values=(v[7], v[6], v[5]))


def translation_matrix(beta: int, field) -> Matrix3:
    """T(beta) = [[1, beta, beta^2], [0, 1, 2 beta], [0, 0, 1]]."""
    b = field(beta)
    return [
        [field.one, b, b * b],
        [field.zero, field.one, b * 2],
        [field.zero, field.zero, field.one],
    ]


def mat_mul(A: Matrix3, B: Matrix3) -> Matrix3:
    n, m, k = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(1, m)), A[i][0] * B[0][j]) for j in range(k)] for i in range(n)]


def translated_row(W: Matrix3, beta: int, field) -> List:
    """First row of T(beta) W T(-beta), i.e. U_p of h(x + beta)."""
    row = mat_mul([translation_matrix(beta, field)[0]], W)
    return mat_mul(row, translation_matrix(-beta, field))[0]


def _solve(A: Matrix3, B: Matrix3) -> Matrix3:
    """X with A X = B by Gaussian elimination, first nonzero pivot."""
    n = len(A)
    rows = [list(A[i]) + list(B[i]) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [row[n:] for row in rows]


def assemble_W(ups: Sequence[UpVector], field) -> Matrix3:
    """
    The Hasse-Witt matrix W with first row of T(beta_i) W T(-beta_i) equal to U(beta_i).

    Since U(beta) T(beta) = (1, beta, beta^2) W, W solves a Vandermonde system.

    Raises:
        ExceptionalPrimeError: "translates-collide" if two translates agree mod p.
    """
    if len(ups) != 3:
        raise ValueError("need exactly three translates")
    p = ups[0].p
    betas = [u.beta for u in ups]
    if len({b % p for b in betas}) != 3:
        raise ExceptionalPrimeError("translates-collide", f"translates {betas} collide mod {p}")
    vander = []
    rhs = []
    for u in ups:
        b = field(u.beta)
        vander.append([field.one, b, b * b])
        rhs.append(mat_mul([list(u.values)], translation_matrix(u.beta, field))[0])
    return _solve(vander, rhs)
