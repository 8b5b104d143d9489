"""
Brute-force references: point counts by enumeration, h^e by repeated
multiplication and matrix chains by direct products.

These are slow on purpose and guarded; they back the tests and the small-prime
path of the engine.
"""

from typing import List, Sequence

import numpy as np

from .arith.finite_fields import ExtensionField, FieldElement, Poly, PrimeField
from .arith.quad_ring import QuadIntPoly, ResidueMap
from .dataclass import CountResult, UpVector
from .errors import GuardExceededError
from .forms import ConicQuartic, TernaryForm
from .remainder_forest import QuadMatrix, TreeInput, qmat_mul

DEFAULT_COUNT_GUARD = 10**8
DEFAULT_UP_GUARD = 2000
DEFAULT_CHAIN_GUARD = 256
DEFAULT_CHUNK = 1 << 22


class _VectorField:
    """
    F_{p^k} = F_p[t]/(m(t)) acting on arrays of shape (k, n) of int64 coordinates.
    """

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        if k == 1:
            self.modulus = (0, 1)
        elif k == 2:
            self.modulus = ExtensionField.quadratic(p).modulus
        elif k == 3:
            self.modulus = ExtensionField.cubic(p).modulus
        else:
            raise ValueError(f"unsupported extension degree {k}")
        squares = np.arange(p, dtype=np.int64) ** 2 % p
        chi = -np.ones(p, dtype=np.int64)
        chi[squares] = 1
        chi[0] = 0
        self.chi_table = chi

    def elements(self, start: int, stop: int) -> np.ndarray:
        """Elements with index in [start, stop), coordinates the base-p digits."""
        return self.digits(np.arange(start, stop, dtype=np.int64))

    def digits(self, idx: np.ndarray) -> np.ndarray:
        out = np.empty((self.k, idx.size), dtype=np.int64)
        for i in range(self.k):
            idx, out[i] = np.divmod(idx, self.p)
        return out

    def constant(self, c: int, n: int) -> np.ndarray:
        out = np.zeros((self.k, n), dtype=np.int64)
        out[0] = c % self.p
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, k = self.p, self.k
        prod = np.zeros((2 * k - 1,) + a.shape[1:], dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p
        for i in range(2 * k - 2, k - 1, -1):
            lead = prod[i]
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - lead * self.modulus[j]) % p
        return prod[:k]

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def norm(self, a: np.ndarray) -> np.ndarray:
        """Determinant of multiplication by a on the basis 1, t, ..., t^(k-1)."""
        p, k = self.p, self.k
        if k == 1:
            return a[0] % p
        cols = [a]
        t = np.zeros_like(a)
        t[1] = 1
        for _ in range(k - 1):
            cols.append(self.mul(cols[-1], t))
        m = [[cols[j][i] for j in range(k)] for i in range(k)]
        if k == 2:
            return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p
        minor = lambda r, c: (m[(r + 1) % 3][(c + 1) % 3] * m[(r + 2) % 3][(c + 2) % 3]
                              - m[(r + 1) % 3][(c + 2) % 3] * m[(r + 2) % 3][(c + 1) % 3]) % p
        return sum(m[0][c] * minor(0, c) % p for c in range(3)) % p

    def chi(self, a: np.ndarray) -> np.ndarray:
        """Quadratic character of F_{p^k}, which is chi_p of the norm."""
        return self.chi_table[self.norm(a)]

    def eval_poly(self, h: Sequence[int], x: np.ndarray) -> np.ndarray:
        acc = self.constant(h[-1], x.shape[1])
        for c in reversed(h[:-1]):
            acc = self.mul(acc, x)
            acc[0] = (acc[0] + c) % self.p
        return acc


def _check_guard(size: int, guard: int, what: str):
    if size > guard:
        raise GuardExceededError(f"{what} needs {size} evaluations, guard is {guard}")


def naive_count(h: Poly, p: int, k: int, guard: int = DEFAULT_COUNT_GUARD, chunk: int = DEFAULT_CHUNK) -> CountResult:
    """
    N_k = #C(F_{p^k}) for the smooth model of y^2 = h(x).

    Affine points contribute 1 + chi(h(x)); at infinity an odd-degree model has
    one point and an even-degree model 1 + chi(lead).

    Raises:
        GuardExceededError: If p^k exceeds guard.
    """
    q = p**k
    _check_guard(q, guard, f"counting over F_{p}^{k}")
    h = [int(c) % p for c in h]
    while h and h[-1] == 0:
        h.pop()
    if not h:
        raise ValueError("zero polynomial")
    F = _VectorField(p, k)
    total = q
    for start in range(0, q, chunk):
        x = F.elements(start, min(start + chunk, q))
        total += int(F.chi(F.eval_poly(h, x)).sum())
    if (len(h) - 1) % 2:
        total += 1
    else:
        # lead lies in F_p, so its character over F_{p^k} is chi_p(lead)^k
        total += 1 + int(F.chi_table[h[-1]]) ** k
    return CountResult(p=p, k=k, count=total)


def _form_values(F: _VectorField, form: TernaryForm, X, Y, Z) -> np.ndarray:
    powers = []
    for coord in (X, Y, Z):
        pw = [F.constant(1, coord.shape[1])]
        for _ in range(form.degree):
            pw.append(F.mul(pw[-1], coord))
        powers.append(pw)
    acc = F.constant(0, X.shape[1])
    for (a, b, c), coeff in form.terms():
        term = F.mul(F.mul(powers[0][a], powers[1][b]), powers[2][c])
        acc = F.add(acc, term * (coeff % F.p) % F.p)
    return acc


def _conic_chart(F: _VectorField, cq: ConicQuartic, X, Y, Z) -> int:
    on_conic = ~np.any(_form_values(F, cq.g, X, Y, Z), axis=0)
    if not on_conic.any():
        return 0
    values = _form_values(F, cq.f, X[:, on_conic], Y[:, on_conic], Z[:, on_conic])
    return int(on_conic.sum() + F.chi(values).sum())


def conic_count(cq: ConicQuartic, p: int, k: int, guard: int = DEFAULT_COUNT_GUARD, chunk: int = DEFAULT_CHUNK) -> CountResult:
    """
    #C(F_{p^k}) for w^2 = f(X, Y, Z) over g(X, Y, Z) = 0, enumerating the conic
    chart by chart: (X : Y : 1), (X : 1 : 0) and (1 : 0 : 0).

    Raises:
        GuardExceededError: If p^(2k) exceeds guard.
    """
    q = p**k
    _check_guard(q * q, guard, f"enumerating the plane over F_{p}^{k}")
    F = _VectorField(p, k)
    total = 0
    for start in range(0, q * q, chunk):
        stop = min(start + chunk, q * q)
        xs, ys = np.divmod(np.arange(start, stop, dtype=np.int64), q)
        X = F.digits(xs)
        Y = F.digits(ys)
        total += _conic_chart(F, cq, X, Y, F.constant(1, xs.size))
    X = F.elements(0, q)
    total += _conic_chart(F, cq, X, F.constant(1, q), F.constant(0, q))
    total += _conic_chart(F, cq, F.constant(1, 1), F.constant(0, 1), F.constant(0, 1))
    return CountResult(p=p, k=k, count=total)


def _to_components(values: Sequence[FieldElement], degree: int) -> np.ndarray:
    out = np.zeros((degree, len(values)), dtype=np.int64)
    for j, v in enumerate(values):
        coeffs = (v.value,) if degree == 1 else v.coeffs
        for i, c in enumerate(coeffs):
            out[i, j] = c
    return out


def _truncated_mul(a: np.ndarray, b: np.ndarray, length: int, p: int, s: int) -> np.ndarray:
    """Product of truncated series with coefficients in F_p or F_p[t]/(t^2 - s)."""

    def conv(x, y):
        return np.convolve(x, y)[:length] % p

    if a.shape[0] == 1:
        out = np.zeros((1, length), dtype=np.int64)
        c = conv(a[0], b[0])
        out[0, : c.size] = c
        return out
    re = (conv(a[0], b[0]) + s * conv(a[1], b[1])) % p
    im = (conv(a[0], b[1]) + conv(a[1], b[0])) % p
    out = np.zeros((2, length), dtype=np.int64)
    out[0, : re.size] = re
    out[1, : im.size] = im
    return out


def naive_power(h: QuadIntPoly, e: int, p: int, length: int, reduction: ResidueMap) -> List[FieldElement]:
    """Coefficients 0 .. length - 1 of h^e mod P, by square-and-multiply on truncated series."""
    field = reduction.field
    degree = 1 if isinstance(field, PrimeField) else field.degree
    s = field.s if degree == 2 else 0
    base = _to_components(reduction.reduce_many(h.coeffs), degree)[:, :length]
    base = np.pad(base, ((0, 0), (0, length - base.shape[1])))
    result = np.zeros((degree, length), dtype=np.int64)
    result[0, 0] = 1
    while e:
        if e & 1:
            result = _truncated_mul(result, base, length, p, s)
        e >>= 1
        if e:
            base = _truncated_mul(base, base, length, p, s)
    if degree == 1:
        return [field(int(c)) for c in result[0]]
    return [field(tuple(int(c) for c in result[:, j])) for j in range(length)]


def naive_Up(h: QuadIntPoly, p: int, beta: int, reduction: ResidueMap, guard: int = DEFAULT_UP_GUARD) -> UpVector:
    """
    (h^e_{p-1}, h^e_{p-2}, h^e_{p-3}) of h(x + beta)^e mod P, e = (p - 1)/2.

    Raises:
        GuardExceededError: If p exceeds guard.
    """
    _check_guard(p, guard, "expanding h^((p-1)/2)")
    coeffs = naive_power(h.shift(beta), (p - 1) // 2, p, p, reduction)
    return UpVector(p=p, beta=beta, values=(coeffs[p - 1], coeffs[p - 2], coeffs[p - 3]))


def naive_chain(inp: TreeInput, n: int, guard: int = DEFAULT_CHAIN_GUARD) -> QuadMatrix:
    """
    C_n = V A_0 ... A_{n-1} mod m_n by direct exact products.

    Raises:
        GuardExceededError: If the tree width exceeds guard.
    """
    _check_guard(inp.width, guard, "the direct matrix chain")
    if not 0 <= n < inp.width:
        raise ValueError(f"index {n} outside [0, {inp.width})")
    acc = inp.V
    for j in range(n):
        acc = qmat_mul(acc, inp.A[j], inp.d, inp.karatsuba)
    return acc.reduce(inp.m[n])
