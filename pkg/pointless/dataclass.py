import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

SPLIT_CASE = "split"
INERT_CASE = "inert"

OK = "ok"
AMBIGUOUS = "ambiguous"
BAD = "bad"

EXCEPTIONAL_REASONS = ("ramified", "translates", "disc", "h0")


def exceptional(reason: str) -> str:
    if reason not in EXCEPTIONAL_REASONS:
        raise ValueError(f"Unknown exceptional reason: {reason}")
    return f"exceptional:{reason}"


def weil_bounds_hold(p: int, a1: int, a2: int, a3: int) -> bool:
    """|a_i| <= C(6, i) p^(i/2), checked in integers; the a2 bound is strict."""
    return a1 * a1 <= 36 * p and abs(a2) < 15 * p and a3 * a3 <= 400 * p**3


@dataclass(frozen=True)
class ModPLData:
    """
    Reduction data for one prime.

    Split primes carry (a1, a2, a3) mod p, inert primes (b1, b2, b3) mod p,
    the T^2, T^4, T^6 coefficients of L_p(T) L_p(-T).
    """

    p: int
    case: str
    coeffs: Tuple[int, int, int]

    @property
    def is_split(self) -> bool:
        return self.case == SPLIT_CASE


@dataclass(frozen=True)
class UpVector:
    """(h^e_{p-1}, h^e_{p-2}, h^e_{p-3}) mod P for h(x + beta), e = (p-1)/2."""

    p: int
    beta: int
    values: Tuple[Any, Any, Any]


@dataclass(frozen=True)
class LPoly:
    """
    L_p(T) = 1 + a1 T + a2 T^2 + a3 T^3 + p a2 T^4 + p^2 a1 T^5 + p^3 T^6.
    """

    p: int
    a1: int
    a2: int
    a3: int

    def coefficients(self) -> Tuple[int, ...]:
        p = self.p
        return (1, self.a1, self.a2, self.a3, p * self.a2, p * p * self.a1, p**3)

    def value_at(self, t: int) -> int:
        return sum(c * t**i for i, c in enumerate(self.coefficients()))

    def weil_ok(self) -> bool:
        return weil_bounds_hold(self.p, self.a1, self.a2, self.a3)

    def reciprocal_roots(self) -> np.ndarray:
        """Roots of T^6 L_p(1/T), which all have absolute value sqrt(p)."""
        return np.roots([float(c) for c in self.coefficients()])

    def reduces_to(self, md: ModPLData) -> bool:
        from .lpoly_modp import b_relations

        p = self.p
        if md.is_split:
            return tuple(a % p for a in (self.a1, self.a2, self.a3)) == md.coeffs
        return b_relations(self.a1, self.a2, self.a3, p) == md.coeffs


@dataclass(frozen=True)
class CountResult:
    """N_k = #C(F_{p^k})."""

    p: int
    k: int
    count: int

    def weil_ok(self) -> bool:
        q = self.p**self.k
        dev = self.count - q - 1
        # |dev| <= 6 sqrt(q)
        return dev * dev <= 36 * q


@dataclass(frozen=True)
class OrderResult:
    order: int
    multiple: int
    factorization: Dict[int, int]


@dataclass
class PrimeRecord:
    """One output line of a run."""

    p: int
    status: str
    split: str
    a1: Optional[int] = None
    a2: Optional[int] = None
    a3: Optional[int] = None
    timings: Dict[str, float] = field(default_factory=dict)
    group_ops: int = 0
    # why a prime ended up bad; None otherwise
    reason: Optional[str] = None
    # None when no cross-check ran
    verified: Optional[bool] = None

    @classmethod
    def from_lpoly(cls, lp: LPoly, split: str, **kwargs) -> "PrimeRecord":
        return cls(p=lp.p, status=OK, split=split, a1=lp.a1, a2=lp.a2, a3=lp.a3, **kwargs)

    @property
    def is_ok(self) -> bool:
        return self.status == OK

    @property
    def lpoly(self) -> Optional[LPoly]:
        if not self.is_ok:
            return None
        return LPoly(self.p, self.a1, self.a2, self.a3)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "status": self.status,
            "split": self.split,
            "a1": self.a1,
            "a2": self.a2,
            "a3": self.a3,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def stats(self) -> Dict[str, Any]:
        stats = {"p": self.p, "status": self.status, "timings": self.timings, "group_ops": self.group_ops}
        if self.reason is not None:
            stats["reason"] = self.reason
        if self.verified is not None:
            stats["verified"] = self.verified
        return stats
