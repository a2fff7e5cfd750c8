"""Exact character-level computations around quasi-BGG complexes and
semiinfinite cohomology of small quantum groups."""

from ._kernels import BACKEND
from .bgg import BGGComplexShape, build_bgg_complex, cousin_shape, euler_character
from .charring import (
    CharError,
    DenomFactor,
    FormalChar,
    LaurentInt,
    RationalChar,
    cyclotomic_reduce,
    expand_truncated,
    laurent_qbinom,
    qbinom,
    rc_equal,
)
from .qsl2 import Sl2VermaVector, act_E_divided, act_F_divided, verify_cogeneration, verify_kernel_closure
from .reps_chars import freudenthal_char, quasi_verma_char, simple_sl2_char, weyl_char, weyl_dimension
from .root_data import RootDataError, RootDatum, build_root_datum, height, pairing
from .semiinf import SemiinfCharParams, chformula, chformula_general, nilcone_cech_oracle_rank1, per_cell_term
from .weyl import WeylElement, WeylGroup, bruhat_leq, dot_action, generate_group

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BGGComplexShape",
    "CharError",
    "DenomFactor",
    "FormalChar",
    "LaurentInt",
    "RationalChar",
    "RootDataError",
    "RootDatum",
    "SemiinfCharParams",
    "Sl2VermaVector",
    "WeylElement",
    "WeylGroup",
    "act_E_divided",
    "act_F_divided",
    "bruhat_leq",
    "build_bgg_complex",
    "build_root_datum",
    "chformula",
    "chformula_general",
    "cousin_shape",
    "cyclotomic_reduce",
    "dot_action",
    "euler_character",
    "expand_truncated",
    "freudenthal_char",
    "generate_group",
    "height",
    "laurent_qbinom",
    "nilcone_cech_oracle_rank1",
    "pairing",
    "per_cell_term",
    "qbinom",
    "quasi_verma_char",
    "rc_equal",
    "simple_sl2_char",
    "verify_cogeneration",
    "verify_kernel_closure",
    "weyl_char",
    "weyl_dimension",
]
