"""Exact loop symmetric functions, the birational S_m action, and loop alternants."""

from .action import SubstitutionMap, apply, build_si, compose, transposition
from .alternants import (BorderStrip, CheckResult, add_border_strips, alternant_det,
                         alternant_matrix, m_matrix, verify_hma, verify_mn, verify_roa)
from .band import BandMatrix, band_mul, c_transform, curl, unitriangular_inverse, whirl
from .generators import kappa, loop_e, loop_h, pi, power_sum
from .poly import Poly, RatFn, Ring, VarId, poly_eval, ratfn_eq
from .tableaux import Partition, Tableau, colored_weight, enumerate_ssyt, jacobi_trudi, loop_schur

__all__ = [
    "BandMatrix", "BorderStrip", "CheckResult", "Partition", "Poly", "RatFn", "Ring",
    "SubstitutionMap", "Tableau", "VarId", "add_border_strips", "alternant_det",
    "alternant_matrix", "apply", "band_mul", "build_si", "c_transform", "colored_weight",
    "compose", "curl", "enumerate_ssyt", "jacobi_trudi", "kappa", "loop_e", "loop_h",
    "loop_schur", "m_matrix", "pi", "poly_eval", "power_sum", "ratfn_eq", "transposition",
    "unitriangular_inverse", "verify_hma", "verify_mn", "verify_roa", "whirl",
]
