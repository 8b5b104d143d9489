"""
Arithmetic in F_p, F_{p^2}, F_{p^3} and polynomials over F_p.

Field elements are small value objects with operator overloading so that the
same elimination code runs over the prime field and its extensions.
Polynomials over F_p are plain tuples of ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import gmpy2

from ..errors import NonResidueError, NotASquareError

Poly = Tuple[int, ...]

_INT_TYPES = (int, type(gmpy2.mpz(0)))


@lru_cache(maxsize=4096)
def smallest_non_residue(p: int) -> int:
    """Smallest positive quadratic non-residue modulo the odd prime p."""
    z = 2
    while gmpy2.legendre(z, p) != -1:
        z += 1
    return z


def sqrt_mod_p(a: int, p: int) -> int:
    """
    Square root modulo an odd prime.

    Tonelli-Shanks with the smallest non-residue as auxiliary element. Of the
    two roots the smaller one in [0, p) is returned.

    Args:
        a: The residue.
        p: An odd prime.

    Returns:
        gamma in [0, p) with gamma^2 = a (mod p).

    Raises:
        NonResidueError: If a is not a square modulo p.
    """
    a %= p
    if a == 0:
        return 0
    if gmpy2.legendre(a, p) != 1:
        raise NonResidueError(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        r = int(gmpy2.powmod(a, (p + 1) // 4, p))
        return min(r, p - r)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_non_residue(p)
    m = s
    c = gmpy2.powmod(z, q, p)
    t = gmpy2.powmod(a, q, p)
    r = gmpy2.powmod(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = gmpy2.powmod(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    r = int(r)
    return min(r, p - r)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


class PrimeField:
    """The prime field F_p."""

    degree = 1

    def __init__(self, p: int):
        p = int(p)
        if p < 3 or not gmpy2.is_prime(p):
            raise ValueError(f"Expected an odd prime, got {p}")
        self.p = p
        self.order = p

    def __call__(self, value) -> "Fp":
        if isinstance(value, Fp):
            return value
        return Fp(int(value), self)

    @property
    def zero(self) -> "Fp":
        return Fp(0, self)

    @property
    def one(self) -> "Fp":
        return Fp(1, self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Fp:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = int(value) % field.p
        self.field = field

    def _coerce(self, other) -> Optional["Fp"]:
        if isinstance(other, Fp):
            if other.field.p != self.field.p:
                raise ValueError("Mixing elements of different prime fields")
            return other
        if isinstance(other, _INT_TYPES):
            return Fp(int(other), self.field)
        return None

    def __add__(self, other):
        if isinstance(other, FpExt):
            return other + self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, FpExt):
            return -(other - self)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o.value - self.value, self.field)

    def __mul__(self, other):
        if isinstance(other, FpExt):
            return other * self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.field)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return Fp(int(gmpy2.invert(self.value, self.field.p)), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(int(gmpy2.powmod(self.value, e, self.field.p)), self.field)

    def __eq__(self, other):
        if isinstance(other, FpExt):
            return other == self
        o = self._coerce(other) if not isinstance(other, Fp) else other
        return o is not None and o.field.p == self.field.p and o.value == self.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value} mod {self.field.p})"

    def frobenius(self) -> "Fp":
        return self

    def is_prime_field(self) -> bool:
        return True

    def to_int(self) -> int:
        return self.value

    def is_square(self) -> bool:
        return self.value == 0 or gmpy2.legendre(self.value, self.field.p) == 1

    def sqrt(self) -> "Fp":
        return Fp(sqrt_mod_p(self.value, self.field.p), self.field)


class ExtensionField:
    """
    F_{p^k} = F_p[t]/(m(t)) for a monic irreducible m.

    Args:
        p: An odd prime.
        modulus: Coefficients of the monic modulus, lowest degree first.
    """

    def __init__(self, p: int, modulus: Sequence[int]):
        self.p = int(p)
        modulus = tuple(int(c) % self.p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = self.p**self.degree
        self.prime_field = PrimeField(self.p)
        self._non_residue = None

    @classmethod
    def quadratic(cls, p: int, s: Optional[int] = None) -> "ExtensionField":
        """F_p[t]/(t^2 - s), s the smallest non-residue unless given."""
        s = smallest_non_residue(p) if s is None else s % p
        if gmpy2.legendre(s, p) != -1:
            raise ValueError(f"{s} is a square modulo {p}")
        return cls(p, (-s, 0, 1))

    @classmethod
    def cubic(cls, p: int) -> "ExtensionField":
        """F_p[t]/(t^3 + c1 t + c0) with (c0, c1) the first irreducible pair."""
        for c0 in range(1, p):
            for c1 in range(p):
                if not poly_roots((c0, c1, 0, 1), p):
                    return cls(p, (c0, c1, 0, 1))
        raise ValueError(f"no irreducible cubic found modulo {p}")

    @property
    def s(self) -> int:
        """t^2 for quadratic fields of the form F_p[t]/(t^2 - s)."""
        if self.degree != 2 or self.modulus[1] != 0:
            raise AttributeError("not of the form t^2 - s")
        return (-self.modulus[0]) % self.p

    def __call__(self, value) -> "FpExt":
        if isinstance(value, FpExt):
            return value
        if isinstance(value, Fp):
            value = value.value
        if isinstance(value, _INT_TYPES):
            return FpExt((int(value),), self)
        return FpExt(tuple(int(c) for c in value), self)

    @property
    def zero(self) -> "FpExt":
        return FpExt((), self)

    @property
    def one(self) -> "FpExt":
        return FpExt((1,), self)

    def gen(self) -> "FpExt":
        return FpExt((0, 1), self)

    def element(self, index: int) -> "FpExt":
        """The element whose coefficients are the base-p digits of index."""
        coeffs = []
        for _ in range(self.degree):
            index, digit = divmod(index, self.p)
            coeffs.append(digit)
        return FpExt(tuple(coeffs), self)

    def non_residue(self) -> "FpExt":
        if self._non_residue is None:
            e = (self.order - 1) // 2
            minus_one = -self.one
            index = 2
            while True:
                z = self.element(index)
                if z and z**e == minus_one:
                    self._non_residue = z
                    break
                index += 1
        return self._non_residue

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (other.p, other.modulus) == (self.p, self.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, modulus={self.modulus})"


class FpExt:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence[int], field: ExtensionField):
        k, p = field.degree, field.p
        if len(coeffs) > k:
            coeffs = poly_mod(coeffs, field.modulus, p)
        c = [int(x) % p for x in coeffs]
        c.extend([0] * (k - len(c)))
        self.coeffs = tuple(c)
        self.field = field

    def _coerce(self, other) -> Optional["FpExt"]:
        if isinstance(other, FpExt):
            if other.field != self.field:
                raise ValueError("Mixing elements of different extension fields")
            return other
        if isinstance(other, Fp):
            return FpExt((other.value,), self.field)
        if isinstance(other, _INT_TYPES):
            return FpExt((int(other),), self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpExt(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpExt(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FpExt(tuple(-a for a in self.coeffs), self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FpExt(poly_mod(poly_mul(self.coeffs, o.coeffs, p), self.field.modulus, p), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "FpExt":
        if not self:
            raise ZeroDivisionError("inverse of zero in an extension field")
        p = self.field.p
        g, s, _ = poly_xgcd(poly_trim(self.coeffs, p), self.field.modulus, p)
        if g != (1,):
            raise ZeroDivisionError("modulus is not irreducible")
        return FpExt(s, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
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
        return o is not None and o.coeffs == self.coeffs

    def __hash__(self):
        if self.is_prime_field():
            return hash((self.field.p, self.coeffs[0]))
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FpExt({list(self.coeffs)} mod {self.field.p})"

    def frobenius(self) -> "FpExt":
        """x -> x^p."""
        f = self.field
        if f.degree == 2 and f.modulus[1] == 0:
            # t^p = s^((p-1)/2) t = -t
            return FpExt((self.coeffs[0], -self.coeffs[1]), f)
        return self ** f.p

    def is_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_prime_field():
            raise ValueError(f"{self} is not in the prime field")
        return self.coeffs[0]

    def is_square(self) -> bool:
        return not self or self ** ((self.field.order - 1) // 2) == self.field.one

    def sqrt(self) -> "FpExt":
        """
        A square root in F_{p^k} by Tonelli-Shanks.

        Raises:
            NonResidueError: If self is not a square.
        """
        f = self.field
        if not self:
            return self
        if not self.is_square():
            raise NonResidueError(f"{self} is not a square")
        q, s = f.order - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        m = s
        c = f.non_residue() ** q
        t = self**q
        r = self ** ((q + 1) // 2)
        one = f.one
        while t != one:
            i, t2 = 0, t
            while t2 != one:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (m - i - 1))
            m = i
            c = b * b
            t = t * c
            r = r * b
        return r


FieldElement = Union[Fp, FpExt]


# ---------------------------------------------------------------------------
# Polynomials over F_p
# ---------------------------------------------------------------------------


def poly_trim(a: Sequence[int], p: int) -> Poly:
    coeffs = [int(c) % p for c in a]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_deg(a: Poly) -> int:
    return len(a) - 1


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return poly_trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], p)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return poly_trim(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def poly_neg(a: Poly, p: int) -> Poly:
    return poly_trim([-x for x in a], p)


def poly_scale(a: Poly, c: int, p: int) -> Poly:
    return poly_trim([x * c for x in a], p)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out, p)


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[Poly, Poly]:
    b = poly_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(poly_trim(a, p))
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), tuple(r)
    inv = int(gmpy2.invert(b[-1], p))
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * y) % p
    return poly_trim(q, p), poly_trim(r[:db], p)


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    return poly_divmod(a, b, p)[1]


def poly_monic(a: Poly, p: int) -> Poly:
    if not a:
        raise ValueError("zero polynomial has no monic associate")
    if a[-1] == 1:
        return a
    return poly_scale(a, int(gmpy2.invert(a[-1], p)), p)


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = poly_trim(a, p), poly_trim(b, p)
    while b:
        a, b = b, poly_mod(a, b, p)
    return poly_monic(a, p) if a else ()


def poly_xgcd(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0)."""
    r0, r1 = poly_trim(a, p), poly_trim(b, p)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    if not r0:
        return (), (), ()
    inv = int(gmpy2.invert(r0[-1], p))
    return poly_scale(r0, inv, p), poly_scale(s0, inv, p), poly_scale(t0, inv, p)


def poly_eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def poly_deriv(a: Poly, p: int) -> Poly:
    return poly_trim([i * a[i] for i in range(1, len(a))], p)


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> Poly:
    result: Poly = poly_mod((1,), m, p)
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def poly_shift(a: Sequence[int], c: int, p: int) -> Poly:
    """a(x + c)."""
    out: Poly = ()
    for coeff in reversed(a):
        out = poly_add(poly_mul(out, (c, 1), p), (coeff,), p)
    return out


def poly_reverse(a: Sequence[int], n: int, p: int) -> Poly:
    """x^n a(1/x) for deg a <= n."""
    a = poly_trim(a, p)
    if len(a) - 1 > n:
        raise ValueError(f"degree {len(a) - 1} exceeds {n}")
    padded = list(a) + [0] * (n + 1 - len(a))
    return poly_trim(padded[::-1], p)


def _split_linear(g: Poly, p: int, out: List[int]):
    """Append the roots of g, a monic product of distinct linear factors."""
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append((-g[0]) % p)
        return
    half = (p - 1) // 2
    for delta in range(p):
        w = poly_powmod((delta, 1), half, g, p)
        h = poly_gcd(g, poly_sub(w, (1,), p), p)
        if 0 < len(h) - 1 < d:
            _split_linear(h, p, out)
            _split_linear(poly_divmod(g, h, p)[0], p, out)
            return
    raise RuntimeError(f"failed to split {g} modulo {p}")


def poly_roots(f: Sequence[int], p: int) -> List[int]:
    """
    All roots of f in F_p, sorted.

    Raises:
        ValueError: If f is the zero polynomial.
    """
    f = poly_trim(f, p)
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    f = poly_monic(f, p)
    xp = poly_powmod((0, 1), p, f, p)
    g = poly_gcd(f, poly_sub(xp, (0, 1), p), p)
    roots: List[int] = []
    _split_linear(g, p, roots)
    return sorted(roots)


def _pth_root(f: Poly, p: int) -> Poly:
    return tuple(f[i] for i in range(0, len(f), p))


def poly_squarefree_factorization(f: Sequence[int], p: int) -> List[Tuple[Poly, int]]:
    """
    Squarefree decomposition f = lead * prod g_i^i over F_p.

    Returns:
        List of (monic squarefree factor, multiplicity), constant factors omitted.

    Raises:
        ValueError: If f is the zero polynomial.
    """
    f = poly_trim(f, p)
    if not f:
        raise ValueError("zero polynomial")
    f = poly_monic(f, p)
    if len(f) == 1:
        return []
    out: List[Tuple[Poly, int]] = []
    fd = poly_deriv(f, p)
    if not fd:
        return [(g, m * p) for g, m in poly_squarefree_factorization(_pth_root(f, p), p)]
    c = poly_gcd(f, fd, p)
    w = poly_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = poly_gcd(w, c, p)
        z = poly_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = poly_divmod(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, m * p) for g, m in poly_squarefree_factorization(_pth_root(c, p), p))
    return out


def poly_is_squarefree(f: Sequence[int], p: int) -> bool:
    return all(m == 1 for _, m in poly_squarefree_factorization(f, p))


def poly_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: no factor of degree <= deg f / 2."""
    f = poly_trim(f, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    f = poly_monic(f, p)
    x: Poly = (0, 1)
    xpi = x
    for _ in range(n // 2):
        xpi = poly_powmod(xpi, p, f, p)
        if len(poly_gcd(f, poly_sub(xpi, x, p), p)) > 1:
            return False
    return True


def poly_sqrt_mod(h: Sequence[int], u: Sequence[int], p: int) -> Poly:
    """
    v with v^2 = h (mod u) and deg v < deg u, for monic irreducible u.

    Of the two roots the one with the lexicographically smaller coefficient
    vector (constant term first) is returned.

    Raises:
        NotASquareError: If h mod u is not a square in F_p[x]/(u).
    """
    u = poly_trim(u, p)
    if len(u) < 2 or u[-1] != 1:
        raise ValueError("u must be monic of positive degree")
    r = poly_mod(h, u, p)
    if not r:
        return ()
    field = ExtensionField(p, u)
    try:
        root = field(r).sqrt()
    except NonResidueError as exc:
        raise NotASquareError(str(exc)) from exc
    best = min(root.coeffs, (-root).coeffs)
    return poly_trim(best, p)
