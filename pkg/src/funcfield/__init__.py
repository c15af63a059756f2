"""Exact-arithmetic toolkit for function fields over finite fields.

Finite field and polynomial kernel, Carlitz torsion, ramification
filtrations and conductors, genus formula evaluators, explicit
place-counting bounds, and recursive tower analysis, all over exact
integers and rationals.
"""

from .asymptotics import (AbelianBoundParams, ChebotarevParams,
                          FeasibilityReport, GenusBoundBracket, MfLogBound,
                          MqRatioRow, chebotarev_lower, genus_lower_bound,
                          hasse_weil_class_bound, mf_log_upper_bound,
                          mq_ratio_sequence, splitting_place_feasible, t_of)
from .carlitz import (DivisorShape, LinearizedOperator, TorsionPolynomial,
                      carlitz_action_of, compose, euler_phi_divisor,
                      euler_phi_modulus, specialize, torsion_polynomial)
from .factor import (count_roots_in_ext, factorize, is_irreducible,
                     minimal_polynomial, roots_in)
from .field import FieldElement, FieldHandle, embed, embed_map, make_field
from .genus import (GenusParityError, GenusResult, RamSummary,
                    cyclotomic_genus, cyclotomic_genus_via_hurwitz,
                    cyclotomic_phi, cyclotomic_ram_summary, hurwitz,
                    prime_power_torsion_genus, prime_torsion_genus,
                    ray_class_degree, ray_class_genus,
                    s_infinity_class_number)
from .poly import Poly, parse_poly
from .ramification import (RamFiltration, abelian_different_lower_bound,
                           conductor_exponent, conductor_via_identity,
                           different_exponent, enumerate_filtrations,
                           phi_herbrand, psi_herbrand)
from .towers import (ClosureBudgetError, ClosureSet, ProjPoint, RationalMap,
                     TowerSpec, WildKummerError, bq_lower_bound, builtin_tower,
                     closure, first_step_genus, gamma_upper_bound,
                     genus_growth_lower_bounds, kummer_ramified,
                     tameness_check, tower_summary)

__version__ = "0.1.0"

__all__ = [
    "AbelianBoundParams", "ChebotarevParams", "ClosureBudgetError",
    "ClosureSet", "DivisorShape", "FeasibilityReport", "FieldElement",
    "FieldHandle", "GenusBoundBracket", "GenusParityError", "GenusResult",
    "LinearizedOperator", "MfLogBound", "MqRatioRow", "Poly", "ProjPoint",
    "RamFiltration", "RamSummary", "RationalMap", "TorsionPolynomial",
    "TowerSpec", "WildKummerError", "abelian_different_lower_bound",
    "bq_lower_bound", "builtin_tower", "carlitz_action_of",
    "chebotarev_lower", "closure", "compose", "conductor_exponent",
    "conductor_via_identity", "count_roots_in_ext", "cyclotomic_genus",
    "cyclotomic_genus_via_hurwitz", "cyclotomic_phi", "cyclotomic_ram_summary",
    "different_exponent", "embed", "embed_map", "enumerate_filtrations",
    "euler_phi_divisor", "euler_phi_modulus", "factorize",
    "first_step_genus", "gamma_upper_bound", "genus_growth_lower_bounds",
    "genus_lower_bound", "hasse_weil_class_bound", "hurwitz",
    "is_irreducible", "kummer_ramified", "make_field", "mf_log_upper_bound",
    "minimal_polynomial", "mq_ratio_sequence", "parse_poly", "phi_herbrand",
    "prime_power_torsion_genus", "prime_torsion_genus", "psi_herbrand",
    "ray_class_degree", "ray_class_genus", "roots_in",
    "s_infinity_class_number", "specialize", "splitting_place_feasible",
    "t_of", "tameness_check", "torsion_polynomial", "tower_summary",
]
