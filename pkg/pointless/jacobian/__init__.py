from .balanced import BalancedJacobian
from .base import JacElement, Jacobian, cantor_compose
from .curve import (
    BALANCED,
    ODD,
    CurveFp,
    check_octic,
    fp_model,
    fp_model_from_split,
    normalize_octic,
    reduce_conic_model,
    split_octic,
    twist_model,
)
from .group import BabyStepTable, bsgs_annihilator, order_from_multiple, scalar_mul
from .odd import OddJacobian


def jacobian_for(curve: CurveFp) -> Jacobian:
    """The group-law implementation matching the model's degree."""
    if curve.kind == ODD:
        return OddJacobian(curve)
    return BalancedJacobian(curve)


__all__ = [
    "BALANCED",
    "ODD",
    "BabyStepTable",
    "BalancedJacobian",
    "CurveFp",
    "JacElement",
    "Jacobian",
    "OddJacobian",
    "bsgs_annihilator",
    "cantor_compose",
    "check_octic",
    "fp_model",
    "fp_model_from_split",
    "jacobian_for",
    "normalize_octic",
    "order_from_multiple",
    "reduce_conic_model",
    "scalar_mul",
    "split_octic",
    "twist_model",
]
