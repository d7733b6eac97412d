"""Exact rank-metric code toolkit built on linearized polynomials.

Elements of GF(p^e) are represented everywhere by their wire encoding: the
base-p integer ``sum(c_i * p**i)`` of their coordinate vector in the power
basis of the defining polynomial's root.
"""

from .errors import DEFAULT_MAX_STEPS, GuardExceeded, InternalError, InvalidInput, MooreCodesError, NoMonomial
from .gf import FieldCtx, FieldElem, FieldTower, TowerLevel, field_ctx, fq_rank, frobenius, make_tower, norm_rel, trace_rel
from .linpoly import LinPoly, random_invertible
from .code import MrdReport, RankMetricCode, new_code

__all__ = [
    "DEFAULT_MAX_STEPS",
    "FieldCtx",
    "FieldElem",
    "FieldTower",
    "GuardExceeded",
    "InternalError",
    "InvalidInput",
    "LinPoly",
    "MooreCodesError",
    "MrdReport",
    "NoMonomial",
    "RankMetricCode",
    "TowerLevel",
    "field_ctx",
    "fq_rank",
    "frobenius",
    "make_tower",
    "new_code",
    "norm_rel",
    "random_invertible",
    "trace_rel",
]
