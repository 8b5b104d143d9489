"""
Accumulating remainder tree and remainder forest over O_K.

Matrices over O_K are stored as a pair of integer matrices (c0, c1) so that
every product reduces to a handful of big-integer matrix products.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Sequence

import gmpy2
import numpy as np

from .arith.quad_ring import QuadDisc, QuadInt
from .utils import log

_to_mpz = np.vectorize(gmpy2.mpz, otypes=[object])


class QuadMatrix(NamedTuple):
    """R = c0 + c1 * alpha with c0, c1 integer matrices of object dtype."""

    c0: np.ndarray
    c1: np.ndarray

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence]) -> "QuadMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        c0 = np.zeros((rows, cols), dtype=object)
        c1 = np.zeros((rows, cols), dtype=object)
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                if isinstance(x, QuadInt):
                    c0[i, j], c1[i, j] = x.c0, x.c1
                else:
                    c0[i, j] = int(x)
        return cls(_to_mpz(c0), _to_mpz(c1))

    @classmethod
    def identity(cls, r: int) -> "QuadMatrix":
        return cls.from_entries([[int(i == j) for j in range(r)] for i in range(r)])

    @classmethod
    def row(cls, values: Sequence) -> "QuadMatrix":
        return cls.from_entries([list(values)])

    @property
    def shape(self):
        return self.c0.shape

    def entries(self, d: QuadDisc) -> List[List[QuadInt]]:
        rows, cols = self.shape
        return [[QuadInt(self.c0[i, j], self.c1[i, j], d) for j in range(cols)] for i in range(rows)]

    def vector(self, d: QuadDisc) -> List[QuadInt]:
        """The single row of a 1 x r matrix."""
        return self.entries(d)[0]

    def reduce(self, m: int) -> "QuadMatrix":
        """Componentwise reduction into [0, m)."""
        return QuadMatrix(self.c0 % m, self.c1 % m)

    def __add__(self, other):
        return QuadMatrix(self.c0 + other.c0, self.c1 + other.c1)

    def equals(self, other: "QuadMatrix") -> bool:
        return (
            self.shape == other.shape
            and bool(np.all(self.c0 == other.c0))
            and bool(np.all(self.c1 == other.c1))
        )


def qmat_mul(R: QuadMatrix, S: QuadMatrix, d: QuadDisc, karatsuba: bool = False) -> QuadMatrix:
    """
    Exact product over O_K.

    With karatsuba the three integer products R0 S0, R1 S1 and
    (R0 + R1)(S0 + S1) replace the four direct ones.
    """
    P0 = R.c0.dot(S.c0)
    P1 = R.c1.dot(S.c1)
    if karatsuba:
        P2 = (R.c0 + R.c1).dot(S.c0 + S.c1)
        if d.residue_class == 1:
            return QuadMatrix(P0 + d.q * P1, P2 - P0)
        return QuadMatrix(P0 + d.D * P1, P2 - P0 - P1)
    cross = R.c0.dot(S.c1) + R.c1.dot(S.c0)
    if d.residue_class == 1:
        return QuadMatrix(P0 + d.q * P1, cross + P1)
    return QuadMatrix(P0 + d.D * P1, cross)


@dataclass
class TreeInput:
    """
    V, A_0..A_{b-1} and m_0..m_{b-1} with b a power of two and m_0 = 1.

    A_{b-1} never enters any output.
    """

    V: QuadMatrix
    A: List[QuadMatrix]
    m: List[int]
    d: QuadDisc
    karatsuba: bool = False

    def __post_init__(self):
        b = len(self.A)
        if b == 0 or b & (b - 1):
            raise ValueError(f"tree width must be a power of two, got {b}")
        if len(self.m) != b:
            raise ValueError("need one modulus per matrix")
        if self.m[0] != 1:
            raise ValueError("m_0 must be 1")
        if any(int(x) < 1 for x in self.m):
            raise ValueError("moduli must be positive")

    @property
    def width(self) -> int:
        return len(self.A)

    @property
    def levels(self) -> int:
        return self.width.bit_length() - 1


def _tree(
    V: QuadMatrix,
    A: Sequence[QuadMatrix],
    m: Sequence[int],
    d: QuadDisc,
    karatsuba: bool,
    need_root: bool = False,
):
    """
    C_j = V A_0 ... A_{j-1} mod m_j for a block whose width is a power of two.

    Returns:
        (outputs, root) with root = A_0 ... A_{w-1} when need_root, else None.
    """
    w = len(A)
    levels = w.bit_length() - 1
    mods = [[gmpy2.mpz(x) for x in m]]
    mats = [list(A)]
    for _ in range(levels):
        below_m, below_a = mods[0], mats[0]
        mods.insert(0, [below_m[2 * j] * below_m[2 * j + 1] for j in range(len(below_m) // 2)])
        # the right spine is only needed for the root product
        count = len(below_a) // 2
        level = []
        for j in range(count):
            wanted = need_root or j != count - 1
            level.append(qmat_mul(below_a[2 * j], below_a[2 * j + 1], d, karatsuba) if wanted else None)
        mats.insert(0, level)
    root = mats[0][0] if need_root else None

    current = [V.reduce(mods[0][0])]
    for i in range(1, levels + 1):
        nxt = []
        for j in range(len(mods[i])):
            parent = current[j // 2]
            if j % 2 == 0:
                nxt.append(parent.reduce(mods[i][j]))
            else:
                nxt.append(qmat_mul(parent, mats[i][j - 1], d, karatsuba).reduce(mods[i][j]))
        current = nxt
    return current, root


def remainder_tree(inp: TreeInput) -> List[QuadMatrix]:
    """
    C_n = V A_0 ... A_{n-1} mod m_n for 0 <= n < b.

    Entry 0 is V mod m_0, the zero vector.
    """
    out, _ = _tree(inp.V, inp.A, inp.m, inp.d, inp.karatsuba)
    return out


def remainder_forest(inp: TreeInput, kappa: int) -> List[QuadMatrix]:
    """
    remainder_tree computed as 2^kappa consecutive subtrees.

    Block t starts from V_t = V A_0 ... A_{start(t)-1}, carried between blocks
    modulo the product of all moduli not yet processed.

    Raises:
        ValueError: If kappa is outside [0, levels].
    """
    if not 0 <= kappa <= inp.levels:
        raise ValueError(f"kappa must lie in [0, {inp.levels}], got {kappa}")
    if kappa == 0:
        return remainder_tree(inp)
    blocks = 1 << kappa
    size = inp.width // blocks
    block_mods = []
    for t in range(blocks):
        prod = gmpy2.mpz(1)
        for x in inp.m[t * size : (t + 1) * size]:
            prod *= x
        block_mods.append(prod)
    # suffix[t] = product of the moduli of blocks t, t+1, ...
    suffix = [gmpy2.mpz(1)] * (blocks + 1)
    for t in range(blocks - 1, -1, -1):
        suffix[t] = suffix[t + 1] * block_mods[t]

    out: List[QuadMatrix] = []
    carry = inp.V.reduce(suffix[0])
    for t in range(blocks):
        lo, hi = t * size, (t + 1) * size
        last = t == blocks - 1
        outputs, root = _tree(
            carry.reduce(block_mods[t]),
            inp.A[lo:hi],
            inp.m[lo:hi],
            inp.d,
            inp.karatsuba,
            need_root=not last,
        )
        out.extend(outputs)
        if not last:
            carry = qmat_mul(carry, root, inp.d, inp.karatsuba).reduce(suffix[t + 1])
        log.debug(f"forest block {t + 1}/{blocks} done")
    return out
