"""
From L_p(T) mod p to L_p(T) in Z[T].

Weil bounds leave finitely many lifts of the mod-p data. Each lift fixes a1 and
a2 and leaves a3 in an arithmetic progression modulo p, so #Jac = L_p(1) and
#Jac~ = L_p(-1) run through progressions as well. Random elements of the
Jacobian and of its quadratic twist discard candidates whose progression never
annihilates them, and the lcm of element orders narrows the rest until one
triple is left.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Set, Tuple

import gmpy2
import numpy as np
from sympy.ntheory.modular import solve_congruence

from .arith.finite_fields import Poly, poly_roots, sqrt_mod_p
from .dataclass import INERT_CASE, SPLIT_CASE, CountResult, LPoly, ModPLData, weil_bounds_hold
from .errors import InconsistentCountsError, NoCandidatesError, NonResidueError
from .jacobian import CurveFp, Jacobian, jacobian_for, order_from_multiple, scalar_mul
from .jacobian.group import BabyStepTable, bsgs_annihilator
from .oracle import DEFAULT_CHUNK, DEFAULT_COUNT_GUARD, naive_count
from .utils import log

Triple = Tuple[int, int, int]


def a3_bound(p: int) -> int:
    """Largest |a3| allowed by the Weil bound, floor(20 p^(3/2))."""
    return int(gmpy2.isqrt(400 * p**3))


def _lifts(residue: int, p: int, ok) -> List[int]:
    """Integers congruent to residue mod p accepted by ok, searched around 0."""
    residue %= p
    out = []
    x = residue
    while ok(x):
        out.append(x)
        x += p
    x = residue - p
    while ok(x):
        out.append(x)
        x -= p
    return sorted(out)


@dataclass(frozen=True)
class Candidate:
    """
    Fixed (a1, a2) with a3 = a3_start + j p for 0 <= j < a3_count.
    """

    p: int
    a1: int
    a2: int
    a3_start: int
    a3_count: int

    @property
    def a3_residue(self) -> int:
        return self.a3_start % self.p

    @property
    def plus_base(self) -> int:
        """L_p(1) - a3."""
        p = self.p
        return (p**3 + 1) + (p * p + 1) * self.a1 + (p + 1) * self.a2

    @property
    def minus_base(self) -> int:
        """L_p(-1) + a3."""
        p = self.p
        return (p**3 + 1) - (p * p + 1) * self.a1 + (p + 1) * self.a2

    def a3_values(self) -> range:
        return range(self.a3_start, self.a3_start + self.a3_count * self.p, self.p)

    def progression(self, twisted: bool = False) -> Optional[Tuple[int, int]]:
        """
        (c, J) such that the possible #Jac (or #Jac~ when twisted) are c + j p,
        0 <= j < J, clipped to positive values.
        """
        p = self.p
        if twisted:
            # L_p(-1) = minus_base - a3 decreases with a3; start from the top term
            c = self.minus_base - (self.a3_start + (self.a3_count - 1) * p)
        else:
            c = self.plus_base + self.a3_start
        J = self.a3_count
        if c < 1:
            skip = (1 - c + p - 1) // p
            c += skip * p
            J -= skip
        if J < 1:
            return None
        return c, J


def _candidate(p: int, a1: int, a2: int, r3: int) -> Optional[Candidate]:
    bound = a3_bound(p)
    start = -bound + ((r3 + bound) % p)
    if start > bound:
        return None
    count = (bound - start) // p + 1
    return Candidate(p=p, a1=a1, a2=a2, a3_start=start, a3_count=count)


@dataclass
class CandidateSet:
    p: int
    case: str
    candidates: List[Candidate] = field(default_factory=list)

    def __len__(self):
        return len(self.candidates)

    def __iter__(self) -> Iterator[Candidate]:
        return iter(self.candidates)

    def residue_classes(self) -> Set[Triple]:
        p = self.p
        return {(c.a1 % p, c.a2 % p, c.a3_residue) for c in self.candidates}


def _lift_residues(p: int, residues: Sequence[Triple], case: str) -> CandidateSet:
    cands = CandidateSet(p=p, case=case)
    for r1, r2, r3 in residues:
        for a1 in _lifts(r1, p, lambda x: x * x <= 36 * p):
            for a2 in _lifts(r2, p, lambda x: abs(x) < 15 * p):
                cand = _candidate(p, a1, a2, r3)
                if cand is not None:
                    cands.candidates.append(cand)
    return cands


def enumerate_split(md: ModPLData) -> CandidateSet:
    """
    Every (a1, a2, a3-progression) within the Weil box reducing to (a1, a2, a3) mod p.
    a1 is unique for p >= 149.
    """
    if not md.is_split:
        raise ValueError("enumerate_split needs split mod-p data")
    cands = _lift_residues(md.p, [md.coeffs], SPLIT_CASE)
    if not cands:
        raise NoCandidatesError(f"no Weil-compatible lift of {md.coeffs} modulo {md.p}")
    return cands


def inert_residues(md: ModPLData) -> List[Triple]:
    """All (a1, a2, a3) mod p with b_relations equal to the stored (b1, b2, b3)."""
    p = md.p
    b1, b2, b3 = md.coeffs
    try:
        r = sqrt_mod_p(-b3, p)
    except NonResidueError:
        return []
    inv2 = pow(2, -1, p)
    out = []
    for a3 in sorted({r, (-r) % p}):
        # a2 = (a1^2 + b1) / 2 substituted into a2^2 - 2 a1 a3 = b2
        quartic = (b1 * b1 - 4 * b2, -8 * a3, 2 * b1, 0, 1)
        for a1 in poly_roots(quartic, p):
            out.append((a1, (a1 * a1 + b1) * inv2 % p, a3))
    return out


def enumerate_inert(md: ModPLData) -> CandidateSet:
    """
    Candidates for an inert prime, where only L_p(T) L_p(-T) mod p is known.

    Raises:
        NoCandidatesError: If no residue triple or no Weil-compatible lift exists.
    """
    if md.is_split:
        raise ValueError("enumerate_inert needs inert mod-p data")
    residues = inert_residues(md)
    if not residues:
        raise NoCandidatesError(f"no residue triple matches {md.coeffs} modulo {md.p}")
    cands = _lift_residues(md.p, residues, INERT_CASE)
    if not cands:
        raise NoCandidatesError(f"no Weil-compatible lift of {md.coeffs} modulo {md.p}")
    return cands


def enumerate_candidates(md: ModPLData) -> CandidateSet:
    return enumerate_split(md) if md.is_split else enumerate_inert(md)


@dataclass
class LiftOutcome:
    """
    Attributes:
        lpoly: The L-polynomial, or None when the candidates stayed ambiguous.
        exponent: lcm of sampled element orders on the curve.
        twist_exponent: The same on the twist.
        samples: Random elements drawn per curve.
        group_ops: Group additions spent on both Jacobians.
    """

    lpoly: Optional[LPoly]
    exponent: int = 1
    twist_exponent: int = 1
    samples: int = 0
    group_ops: int = 0


class _Sampler:
    """Random elements of one Jacobian and the candidates surviving them."""

    def __init__(self, G: Jacobian, twisted: bool):
        self.G = G
        self.twisted = twisted
        self.exponent = 1
        self.samples = 0

    def sample(self, alive: List[Candidate], rng: np.random.Generator) -> List[Candidate]:
        G = self.G
        p = G.p
        a = G.random_element(rng)
        self.samples += 1
        progs = []
        for cand in alive:
            prog = cand.progression(self.twisted)
            if prog is not None:
                progs.append((prog[0], prog[1], cand))
        if not progs:
            return []
        progs.sort(key=lambda t: t[0])
        J_max = max(J for _, J, _ in progs)
        size = max(1, int(gmpy2.isqrt(len(progs) * J_max)) + 1)
        table = BabyStepTable(G, scalar_mul(G, p, a), size)

        survivors = []
        multiple = None
        prev_c, ca = 0, G.identity
        for c, J, cand in progs:
            ca = G.add(ca, scalar_mul(G, c - prev_c, a))
            prev_c = c
            j = bsgs_annihilator(G, a, c, p, J, table=table, ca=ca)
            if j is None:
                continue
            survivors.append(cand)
            if multiple is None:
                multiple = c + j * p
        if multiple is not None:
            order = order_from_multiple(G, a, multiple).order
            self.exponent = int(gmpy2.lcm(self.exponent, order))
        return survivors


def surviving_triples(alive: Sequence[Candidate], n: int, n_twist: int, cap: int) -> Optional[Set[Triple]]:
    """
    Triples whose L_p(1) is a multiple of n and L_p(-1) a multiple of n_twist.

    Returns:
        The set, or None when it exceeds cap.
    """
    found: Set[Triple] = set()
    for cand in alive:
        p = cand.p
        bound = a3_bound(p)
        solved = solve_congruence(
            (cand.a3_residue, p),
            ((-cand.plus_base) % n, n),
            (cand.minus_base % n_twist, n_twist),
        )
        if solved is None:
            continue
        x0, M = (int(v) for v in solved)
        start = x0 - ((x0 + bound) // M) * M
        for a3 in range(start, bound + 1, M):
            if not weil_bounds_hold(p, cand.a1, cand.a2, a3):
                continue
            found.add((cand.a1, cand.a2, a3))
            if len(found) > cap:
                return None
    return found


def lift_one(
    cands: CandidateSet,
    curve: CurveFp,
    twist: CurveFp,
    rng: np.random.Generator,
    initial_samples: int = 3,
    max_samples: int = 48,
    enumeration_cap: int = 64,
) -> LiftOutcome:
    """
    Pin down L_p(T) among the candidates using random elements of Jac(C) and
    of the twist's Jacobian.

    Returns:
        A LiftOutcome whose lpoly is None if the sample limit ran out with more
        than one triple left, or if every candidate was discarded.
    """
    p = cands.p
    G = jacobian_for(curve)
    Gt = jacobian_for(twist)
    plain, twisted = _Sampler(G, twisted=False), _Sampler(Gt, twisted=True)
    alive = list(cands)
    target = initial_samples
    triples: Optional[Set[Triple]] = None

    while True:
        while plain.samples < target and alive:
            alive = plain.sample(alive, rng)
        while twisted.samples < target and alive:
            alive = twisted.sample(alive, rng)
        if not alive:
            break
        triples = surviving_triples(alive, plain.exponent, twisted.exponent, enumeration_cap)
        if triples is not None and len(triples) <= 1:
            break
        if target >= max_samples:
            break
        target = min(2 * target, max_samples)

    outcome = LiftOutcome(
        lpoly=None,
        exponent=plain.exponent,
        twist_exponent=twisted.exponent,
        samples=plain.samples,
        group_ops=G.ops + Gt.ops,
    )
    if not alive or not triples or len(triples) != 1:
        log.debug(f"p = {p}: {len(alive)} candidates alive, exponents {plain.exponent}, {twisted.exponent}")
        return outcome
    outcome.lpoly = LPoly(p, *next(iter(triples)))
    return outcome


def lpoly_from_counts(p: int, counts: Sequence[int]) -> LPoly:
    """
    L_p(T) from N_1, N_2, N_3 by Newton's identities on s_k = p^k + 1 - N_k.
    """
    s1, s2, s3 = (p**k + 1 - n for k, n in zip((1, 2, 3), counts))
    e2, r2 = divmod(s1 * s1 - s2, 2)
    e3, r3 = divmod(s1**3 - 3 * s1 * s2 + 2 * s3, 6)
    if r2 or r3:
        raise InconsistentCountsError(f"point counts {tuple(counts)} are not those of a curve over F_{p}")
    return LPoly(p, -s1, e2, -e3)


def naive_lift(h: Poly, p: int, guard: int = DEFAULT_COUNT_GUARD, chunk: int = DEFAULT_CHUNK) -> LPoly:
    """
    L_p(T) by counting points of y^2 = h(x) over F_p, F_{p^2} and F_{p^3}.

    h need not be monic; any squarefree model of degree 7 or 8 will do.
    """
    counts: List[CountResult] = [naive_count(h, p, k, guard=guard, chunk=chunk) for k in (1, 2, 3)]
    return lpoly_from_counts(p, [c.count for c in counts])
