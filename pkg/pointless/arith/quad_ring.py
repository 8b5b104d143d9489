"""
Exact arithmetic in O_K = Z[alpha], K = Q(sqrt(D)), and its reductions.

alpha = sqrt(D) when D = 2, 3 (mod 4) and alpha = (1 + sqrt(D))/2 when
D = 1 (mod 4), so that every element is a unique pair c0 + c1*alpha.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Sequence, Union

import gmpy2

from ..errors import InvalidDiscriminantError
from .finite_fields import ExtensionField, FieldElement, PrimeField, sqrt_mod_p

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"

IntLike = Union[int, "QuadInt"]


@dataclass(frozen=True)
class QuadDisc:
    """The discriminant parameter D: not a square, not divisible by 4."""

    D: int

    def __post_init__(self):
        D = int(self.D)
        object.__setattr__(self, "D", D)
        if D % 4 == 0:
            raise InvalidDiscriminantError(f"D = {D} is divisible by 4")
        if D >= 0 and gmpy2.is_square(D):
            raise InvalidDiscriminantError(f"D = {D} is a perfect square")

    @property
    def residue_class(self) -> int:
        return self.D % 4

    @property
    def q(self) -> int:
        """(D - 1)/4 for D = 1 (mod 4), the constant in alpha^2 = alpha + q."""
        if self.residue_class != 1:
            raise AttributeError("q is only defined for D = 1 (mod 4)")
        return (self.D - 1) // 4

    @property
    def alpha(self) -> "QuadInt":
        return QuadInt(0, 1, self)

    @property
    def sqrt_d(self) -> "QuadInt":
        """sqrt(D) as an element of O_K."""
        if self.residue_class == 1:
            return QuadInt(-1, 2, self)
        return QuadInt(0, 1, self)

    def __call__(self, c0: int = 0, c1: int = 0) -> "QuadInt":
        return QuadInt(c0, c1, self)


def _mul_components(a0, a1, b0, b1, d: QuadDisc):
    if d.residue_class == 1:
        t = a1 * b1
        return a0 * b0 + d.q * t, a0 * b1 + a1 * b0 + t
    return a0 * b0 + d.D * a1 * b1, a0 * b1 + a1 * b0


class QuadInt:
    """c0 + c1*alpha with arbitrary-precision integer components."""

    __slots__ = ("c0", "c1", "d")

    def __init__(self, c0: int, c1: int, d: QuadDisc):
        self.c0 = int(c0)
        self.c1 = int(c1)
        self.d = d

    def _coerce(self, other) -> Optional["QuadInt"]:
        if isinstance(other, QuadInt):
            if other.d != self.d:
                raise ValueError("Mixing elements of different quadratic rings")
            return other
        if isinstance(other, int) or type(other) is type(gmpy2.mpz(0)):
            return QuadInt(int(other), 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.c0 + o.c0, self.c1 + o.c1, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.c0 - o.c0, self.c1 - o.c1, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadInt(-self.c0, -self.c1, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(*_mul_components(self.c0, self.c1, o.c0, o.c1, self.d), self.d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in O_K")
        result, base = QuadInt(1, 0, self.d), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        return o is not None and (o.c0, o.c1) == (self.c0, self.c1)

    def __hash__(self):
        return hash((self.c0, self.c1, self.d.D))

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __repr__(self):
        if not self.c1:
            return f"{self.c0}"
        return f"({self.c0}{self.c1:+d}a)"

    def conj(self) -> "QuadInt":
        if self.d.residue_class == 1:
            return QuadInt(self.c0 + self.c1, -self.c1, self.d)
        return QuadInt(self.c0, -self.c1, self.d)

    def norm(self) -> int:
        return qi_norm(self, self.d)

    def content(self) -> int:
        return gcd(self.c0, self.c1)

    def divexact(self, other: IntLike) -> "QuadInt":
        """
        self / other for an exact divisor in O_K.

        Raises:
            ArithmeticError: If other does not divide self.
            ZeroDivisionError: If other is zero.
        """
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in O_K")
        num = self * o.conj()
        q0, r0 = divmod(num.c0, n)
        q1, r1 = divmod(num.c1, n)
        if r0 or r1:
            raise ArithmeticError(f"{o} does not divide {self}")
        return QuadInt(q0, q1, self.d)


def qi_mul(a: QuadInt, b: QuadInt, d: QuadDisc) -> QuadInt:
    """Product in O_K using alpha^2 = D or alpha^2 = alpha + (D-1)/4."""
    return QuadInt(*_mul_components(a.c0, a.c1, b.c0, b.c1, d), d)


def qi_norm(a: QuadInt, d: QuadDisc) -> int:
    """N_{K/Q}(a) = a * conj(a)."""
    if d.residue_class == 1:
        return a.c0 * a.c0 + a.c0 * a.c1 - d.q * a.c1 * a.c1
    return a.c0 * a.c0 - d.D * a.c1 * a.c1


def split_type(d: QuadDisc, p: int) -> str:
    """Splitting of the odd prime p in K, from the Kronecker symbol (D/p)."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    k = gmpy2.kronecker(d.D, p)
    return SPLIT if k == 1 else INERT if k == -1 else RAMIFIED


def reduce_split(a: QuadInt, d: QuadDisc, p: int, gamma: int) -> int:
    """Image of a under O_K -> F_p, sqrt(D) -> gamma."""
    if d.residue_class == 1:
        image = (1 + gamma) * int(gmpy2.invert(2, p))
    else:
        image = gamma
    return (a.c0 + a.c1 * image) % p


def _alpha_image_inert(d: QuadDisc, field: ExtensionField):
    p = field.p
    # sqrt(D) = y t with y^2 = D / s
    y = sqrt_mod_p(d.D * int(gmpy2.invert(field.s, p)), p)
    root = field((0, y))
    if d.residue_class == 1:
        return (root + 1) * int(gmpy2.invert(2, p))
    return root


def reduce_inert(a: QuadInt, d: QuadDisc, p: int, field: Optional[ExtensionField] = None):
    """
    Image of a under O_K/(p) -> F_{p^2} for an inert prime p.

    Args:
        a: Element to reduce.
        d: The discriminant parameter.
        p: An inert odd prime.
        field: Target F_p[t]/(t^2 - s); defaults to s = smallest non-residue.
    """
    field = field or ExtensionField.quadratic(p)
    return a.c0 + _alpha_image_inert(d, field) * a.c1


class ResidueMap:
    """
    Reduction modulo a prime ideal above p.

    Attributes:
        p: The rational prime.
        kind: SPLIT or INERT.
        gamma: The chosen square root of D modulo p (split primes only).
        field: PrimeField(p) for split primes, F_{p^2} for inert primes.
    """

    def __init__(self, d: QuadDisc, p: int, field: Optional[ExtensionField] = None):
        self.d = d
        self.p = p
        self.kind = split_type(d, p)
        self.gamma = None
        if self.kind == SPLIT:
            self.gamma = sqrt_mod_p(d.D, p)
            self.field = PrimeField(p)
            self._image = reduce_split(d.alpha, d, p, self.gamma)
        elif self.kind == INERT:
            self.field = field or ExtensionField.quadratic(p)
            self._image = _alpha_image_inert(d, self.field)
        else:
            raise ValueError(f"{p} is ramified in Q(sqrt({d.D}))")

    def reduce(self, a: IntLike) -> FieldElement:
        if isinstance(a, QuadInt):
            return self.field(a.c0) + self._image * a.c1
        return self.field(int(a))

    def reduce_many(self, values: Iterable[IntLike]) -> List[FieldElement]:
        return [self.reduce(a) for a in values]

    def __repr__(self):
        return f"ResidueMap(D={self.d.D}, p={self.p}, kind={self.kind})"


def residue_map(d: QuadDisc, p: int, field: Optional[ExtensionField] = None) -> ResidueMap:
    return ResidueMap(d, p, field)


class QuadIntPoly:
    """Polynomial over O_K; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs: Sequence[IntLike], d: QuadDisc):
        cs = [c if isinstance(c, QuadInt) else QuadInt(int(c), 0, d) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.d = d

    @classmethod
    def from_pairs(cls, pairs: Sequence[int], d: QuadDisc) -> "QuadIntPoly":
        """From the flat list c0(h_0), c1(h_0), c0(h_1), ..."""
        if len(pairs) % 2:
            raise ValueError("expected an even number of integers")
        return cls([QuadInt(pairs[i], pairs[i + 1], d) for i in range(0, len(pairs), 2)], d)

    def to_pairs(self, length: Optional[int] = None) -> List[int]:
        n = len(self.coeffs) if length is None else length
        out = []
        for i in range(n):
            c = self[i]
            out.extend((c.c0, c.c1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> QuadInt:
        return self.coeffs[-1] if self.coeffs else QuadInt(0, 0, self.d)

    def __getitem__(self, i: int) -> QuadInt:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return QuadInt(0, 0, self.d)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other) -> Optional["QuadIntPoly"]:
        if isinstance(other, QuadIntPoly):
            return other
        if isinstance(other, (QuadInt, int)):
            return QuadIntPoly([other], self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return QuadIntPoly([self[i] + o[i] for i in range(n)], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return QuadIntPoly([self[i] - o[i] for i in range(n)], self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadIntPoly([-c for c in self.coeffs], self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return QuadIntPoly([], self.d)
        out = [QuadInt(0, 0, self.d)] * (len(self) + len(o) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return QuadIntPoly(out, self.d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = QuadIntPoly([1], self.d), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QuadIntPoly) else other
        return o is not None and o.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "QuadIntPoly([" + ", ".join(repr(c) for c in self.coeffs) + f"], D={self.d.D})"

    def __call__(self, x: IntLike) -> QuadInt:
        acc = QuadInt(0, 0, self.d)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: IntLike) -> "QuadIntPoly":
        """h(x + c)."""
        out = QuadIntPoly([], self.d)
        step = QuadIntPoly([c, 1], self.d)
        for coeff in reversed(self.coeffs):
            out = out * step + coeff
        return out

    def reverse(self, n: int) -> "QuadIntPoly":
        """x^n h(1/x) for deg h <= n."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        return QuadIntPoly([self[n - i] for i in range(n + 1)], self.d)

    def deriv(self) -> "QuadIntPoly":
        return QuadIntPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.d)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c.content())
        return g

    def divexact_int(self, n: int) -> "QuadIntPoly":
        out = []
        for c in self.coeffs:
            if c.c0 % n or c.c1 % n:
                raise ArithmeticError(f"{n} does not divide {c}")
            out.append(QuadInt(c.c0 // n, c.c1 // n, self.d))
        return QuadIntPoly(out, self.d)
