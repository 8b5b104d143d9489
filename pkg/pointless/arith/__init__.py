from .finite_fields import ExtensionField, Fp, FpExt, PrimeField, sqrt_mod_p
from .quad_ring import (
    INERT,
    RAMIFIED,
    SPLIT,
    QuadDisc,
    QuadInt,
    QuadIntPoly,
    ResidueMap,
    qi_mul,
    qi_norm,
    reduce_inert,
    reduce_split,
    residue_map,
    split_type,
)
