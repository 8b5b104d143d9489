"""
The batch pipeline: model, classification, three remainder forests, then one
independent job per prime (Hasse-Witt matrix, L_p mod p, lifting).
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Dict, List, Optional, Union

import numpy as np
from sympy import sieve

from .arith.finite_fields import Poly
from .arith.quad_ring import INERT, RAMIFIED, SPLIT, residue_map, split_type
from .callback import BaseCallbackHandler
from .configuration import Configuration
from .configuration import config as default_config
from .dataclass import AMBIGUOUS, BAD, PrimeRecord, exceptional
from .errors import ConfigurationError, ExceptionalPrimeError, PointlessError
from .hasse_witt import assemble_W, compute_Up
from .interface import Engine
from .jacobian import (
    CurveFp,
    check_octic,
    jacobian_for,
    normalize_octic,
    reduce_conic_model,
    scalar_mul,
    split_octic,
    twist_model,
)
from .lifting import enumerate_candidates, lift_one, naive_lift
from .lpoly_modp import lpoly_inert, lpoly_split
from .model_builder import HyperModel, build_model, discriminant, model_from_coefficients
from .recurrence import build_tree_input
from .remainder_forest import QuadMatrix, remainder_forest
from .utils import log
from .utils.io import CurveFile, write_jsonl
from .utils.timing import StageTimer

SPLIT_FLAGS = {SPLIT: "s", INERT: "i", RAMIFIED: "r"}


@dataclass
class PointCountingRunnerArguments:
    """Arguments for controlling the point-counting pipeline."""

    N: int = field(
        metadata={"help": "Compute L_p(T) for all odd primes p < N."},
    )
    kappa: int = field(
        default=7,
        metadata={"help": "Split each remainder tree into 2^kappa subtrees; clamped to the tree depth."},
    )
    naive_threshold: int = field(
        default=256,
        metadata={"help": "Primes below this bound are lifted by naive point counting."},
    )
    seed: int = field(
        default=0,
        metadata={"help": "Seed of the per-prime random streams."},
    )
    threads: int = field(
        default=1,
        metadata={"help": "Worker threads for the forests and the per-prime stage."},
    )
    karatsuba: bool = field(
        default=True,
        metadata={"help": "Use three integer products per O_K matrix product instead of four."},
    )
    verify: bool = field(
        default=False,
        metadata={"help": "Cross-check small primes against the naive oracle and large ones by annihilation."},
    )
    initial_samples: int = field(
        default=3,
        metadata={"help": "Random elements per Jacobian before the first uniqueness test."},
    )
    max_samples: int = field(
        default=48,
        metadata={"help": "Random elements per Jacobian before a prime is declared ambiguous."},
    )
    verify_samples: int = field(
        default=10,
        metadata={"help": "Random elements per Jacobian in the annihilation check."},
    )
    s_enumeration_cap: int = field(
        default=64,
        metadata={"help": "Largest surviving candidate set that is enumerated."},
    )
    count_guard: int = field(
        default=10**8,
        metadata={"help": "Largest field size the naive point count may enumerate."},
    )
    chunk_elements: int = field(
        default=1 << 22,
        metadata={"help": "Field elements evaluated per vectorized chunk."},
    )

    def __post_init__(self):
        if self.N < 5:
            raise ConfigurationError(f"N must be at least 5, got {self.N}")
        if self.kappa < 0:
            raise ConfigurationError(f"kappa must be non-negative, got {self.kappa}")
        if self.threads < 1:
            raise ConfigurationError(f"threads must be positive, got {self.threads}")
        if self.naive_threshold < 3:
            raise ConfigurationError(f"naive_threshold must be at least 3, got {self.naive_threshold}")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be non-negative, got {self.seed}")
        if not 1 <= self.initial_samples <= self.max_samples:
            raise ConfigurationError("need 1 <= initial_samples <= max_samples")
        if self.naive_threshold**3 > self.count_guard:
            raise ConfigurationError(
                f"naive_threshold^3 = {self.naive_threshold**3} exceeds count_guard = {self.count_guard}"
            )

    @classmethod
    def from_config(cls, configuration: Optional[Configuration] = None, **overrides) -> "PointCountingRunnerArguments":
        """
        Fill every field not given in overrides from the pipeline, lifting and
        oracle sections of the configuration.
        """
        configuration = configuration or default_config
        values = {}
        for section in (
            configuration.pipeline_settings,
            configuration.lifting_settings,
            configuration.oracle_settings,
        ):
            values.update(section)
        names = {f.name for f in fields(cls)}
        kwargs = {k: v for k, v in values.items() if k in names}
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        if "N" not in kwargs:
            raise ConfigurationError("N is required")
        return cls(**kwargs)


def classify(p: int, model: HyperModel, disc_norm: Optional[int] = None) -> Optional[str]:
    """
    Exceptional status of the odd prime p, or None if the batch algorithm applies.

    p is exceptional if it ramifies in K, divides a difference of translates,
    or divides the norm of disc(h) or of some h(beta).
    """
    if model.d.D % p == 0:
        return exceptional("ramified")
    betas = model.translates
    if any((betas[i] - betas[j]) % p == 0 for i in range(3) for j in range(i + 1, 3)):
        return exceptional("translates")
    if disc_norm is None:
        disc_norm = discriminant(model.h).norm()
    if disc_norm % p == 0:
        return exceptional("disc")
    if any(model.h(beta).norm() % p == 0 for beta in betas):
        return exceptional("h0")
    return None


def load_model(curve: Union[CurveFile, HyperModel]) -> HyperModel:
    """
    The model described by a curve file: the [model] section when present,
    otherwise the one constructed from the conic.
    """
    if isinstance(curve, HyperModel):
        return curve
    if curve.has_model:
        return model_from_coefficients(curve.D, curve.h, curve.translates, conic=curve.conic)
    return build_model(curve.conic)


class PointCountingRunner(Engine):
    """
    L_p(T) for every odd prime p < N of a genus-3 curve w^2 = f on g = 0.
    """

    def __init__(self, args: PointCountingRunnerArguments, callback_handler: Optional[BaseCallbackHandler] = None):
        super().__init__()
        self.args = args
        self.callback_handler = callback_handler or BaseCallbackHandler()
        self.model: Optional[HyperModel] = None
        self.forests: Dict[int, List[QuadMatrix]] = {}
        self.apply_decorators()

    def run_model_stage(self, curve: Union[CurveFile, HyperModel]) -> HyperModel:
        self.model = load_model(curve)
        self.callback_handler.on_model_built(self.model)
        return self.model

    def run_classification_stage(self, model: HyperModel) -> Dict[int, Optional[str]]:
        """Status of every odd prime below N; None marks the primes to compute."""
        disc_norm = discriminant(model.h).norm()
        statuses = {p: classify(p, model, disc_norm) for p in sieve.primerange(3, self.args.N)}
        for p, status in statuses.items():
            if status is not None:
                log.debug(f"p = {p}: {status}")
        self.counters["exceptional"] = sum(s is not None for s in statuses.values())
        self.callback_handler.on_classification_end(
            {p: s for p, s in statuses.items() if s is not None}, total=len(statuses)
        )
        return statuses

    def _forest(self, model: HyperModel, beta: int) -> List[QuadMatrix]:
        self.callback_handler.on_forest_start(beta)
        inp = build_tree_input(model.translated(beta), self.args.N, self.args.karatsuba)
        kappa = self.args.kappa
        if kappa > inp.levels:
            log.warning(f"kappa = {kappa} exceeds the tree depth {inp.levels}; using {inp.levels}")
            kappa = inp.levels
        out = remainder_forest(inp, kappa)
        self.callback_handler.on_forest_end(beta)
        return out

    def run_forest_stage(self, model: HyperModel) -> Dict[int, List[QuadMatrix]]:
        """One remainder forest per translate."""
        with ThreadPoolExecutor(max_workers=min(self.args.threads, 3)) as executor:
            outputs = list(executor.map(lambda beta: self._forest(model, beta), model.translates))
        self.forests = dict(zip(model.translates, outputs))
        return self.forests

    def _raw_octic(self, model: HyperModel, p: int, reduction) -> Optional[Poly]:
        """A squarefree octic over F_p for the curve, or None when none is available."""
        if model.conic is not None:
            return reduce_conic_model(model.conic, p)
        if reduction.kind == SPLIT:
            raw = split_octic(model.h, reduction)
            check_octic(raw, p)
            return raw
        return None

    def _verify_annihilation(self, curve: CurveFp, twist: CurveFp, record: PrimeRecord, rng) -> bool:
        lp = record.lpoly
        for C, order in ((curve, lp.value_at(1)), (twist, lp.value_at(-1))):
            G = jacobian_for(C)
            for _ in range(self.args.verify_samples):
                if not G.is_identity(scalar_mul(G, order, G.random_element(rng))):
                    return False
        return True

    def process_prime(self, p: int, status: Optional[str]) -> PrimeRecord:
        """The record of one prime; data conditions become statuses."""
        model = self.model
        split = SPLIT_FLAGS[split_type(model.d, p)]
        if status is not None:
            return PrimeRecord(p=p, status=status, split=split)
        timer = StageTimer()
        rng = np.random.default_rng((self.args.seed, p))
        try:
            with timer.log_event("modp"):
                reduction = residue_map(model.d, p)
                index = (p - 1) // 2
                ups = []
                for beta in model.translates:
                    C = self.forests[beta][index].vector(model.d)
                    ups.append(compute_Up(C, model.h(beta), p, reduction, beta))
                W = assemble_W(ups, reduction.field)
                md = lpoly_split(W, p) if reduction.kind == SPLIT else lpoly_inert(W, p)
            raw = self._raw_octic(model, p, reduction)
            if raw is None:
                log.warning(f"p = {p}: inert prime without a conic; no model over F_p")
                return PrimeRecord(p=p, status=AMBIGUOUS, split=split, timings=timer.dump())

            if p < self.args.naive_threshold:
                with timer.log_event("naive"):
                    lp = naive_lift(raw, p, guard=self.args.count_guard, chunk=self.args.chunk_elements)
                record = PrimeRecord.from_lpoly(lp, split, timings=timer.dump())
                if self.args.verify:
                    record.verified = lp.reduces_to(md)
                    if not record.verified:
                        self._report_verify_failure(p, f"naive L-polynomial does not reduce to {md.coeffs}")
                return record

            with timer.log_event("lift"):
                h, kind = normalize_octic(raw, p)
                curve = CurveFp(p=p, h=h, kind=kind, raw=raw)
                twist = twist_model(curve)
                cands = enumerate_candidates(md)
                outcome = lift_one(
                    cands,
                    curve,
                    twist,
                    rng,
                    initial_samples=self.args.initial_samples,
                    max_samples=self.args.max_samples,
                    enumeration_cap=self.args.s_enumeration_cap,
                )
            if outcome.lpoly is None:
                log.error(f"p = {p}: lifting stayed ambiguous after {outcome.samples} samples")
                return PrimeRecord(
                    p=p, status=AMBIGUOUS, split=split, timings=timer.dump(), group_ops=outcome.group_ops
                )
            record = PrimeRecord.from_lpoly(outcome.lpoly, split, group_ops=outcome.group_ops)
            if self.args.verify:
                with timer.log_event("verify"):
                    record.verified = self._verify_annihilation(curve, twist, record, rng)
                if not record.verified:
                    self._report_verify_failure(p, "L_p(+-1) does not annihilate the Jacobians")
            record.timings = timer.dump()
            return record
        except ExceptionalPrimeError as exc:
            log.debug(f"p = {p}: {exc.reason}")
            return PrimeRecord(p=p, status=BAD, split=split, timings=timer.dump(), reason=exc.reason)
        except PointlessError as exc:
            log.color_print(f"p = {p}: {type(exc).__name__}: {exc}")
            return PrimeRecord(
                p=p, status=BAD, split=split, timings=timer.dump(), reason=f"{type(exc).__name__}: {exc}"
            )

    def _report_verify_failure(self, p: int, message: str):
        log.color_print(f"p = {p}: verification failed: {message}")

    def _process_and_report(self, item) -> PrimeRecord:
        record = self.process_prime(*item)
        self.callback_handler.on_prime_end(record)
        return record

    def run_prime_stage(self, statuses: Dict[int, Optional[str]]) -> List[PrimeRecord]:
        """Records in ascending p."""
        with ThreadPoolExecutor(max_workers=self.args.threads) as executor:
            records = list(executor.map(self._process_and_report, sorted(statuses.items())))
        self.counters["group_ops"] = sum(r.group_ops for r in records)
        self.counters["ambiguous"] = sum(r.status == AMBIGUOUS for r in records)
        self.counters["bad"] = sum(r.status == BAD for r in records)
        if self.args.verify:
            self.counters["verify_failures"] = sum(r.verified is False for r in records)
        return records

    def run(self, curve: Union[CurveFile, HyperModel], output_path: Optional[str] = None) -> List[PrimeRecord]:
        """
        Run the whole pipeline.

        Args:
            curve: A parsed curve file or a ready model.
            output_path: Where to write the JSON-lines records, if anywhere.

        Returns:
            One record per odd prime below N, in ascending order.
        """
        model = self.run_model_stage(curve)
        statuses = self.run_classification_stage(model)
        if any(s is None for s in statuses.values()):
            self.run_forest_stage(model)
        records = self.run_prime_stage(statuses)
        if output_path:
            write_jsonl((r.to_json_line() for r in records), output_path)
        self.callback_handler.on_run_end(records)
        return records


def run_pipeline(
    args: PointCountingRunnerArguments,
    curve: Union[CurveFile, HyperModel],
    callback_handler: Optional[BaseCallbackHandler] = None,
) -> List[PrimeRecord]:
    return PointCountingRunner(args, callback_handler).run(curve)
