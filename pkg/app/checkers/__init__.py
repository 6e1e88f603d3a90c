"""
Identity checkers, theorem verifiers and the verification orchestrator.

The function forms below wrap the checker classes for callers that only
want the report.
"""

from typing import Union

from ..core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid
from ..schemas import CheckReport
from .brace_checkers import BraceGammaAgreementChecker
from .left_checkers import (
    AlphaEndomorphismChecker,
    AlphaGammaRelationChecker,
    AlphaPropertyChecker,
    GammaHomomorphismChecker,
    InverseIdentityChecker,
    RemarkIdentityChecker,
)
from .right_checkers import (
    BetaDeltaRelationChecker,
    BetaEndomorphismChecker,
    BetaPropertyChecker,
    DeltaHomomorphismChecker,
    RightInverseIdentityChecker,
    RightRemarkIdentityChecker,
)
from .theorems import (
    check_brace_star_reproduction,
    check_lau_brace,
    check_lau_converse,
    check_prop_action_beta,
    check_prop_inverse_beta,
    check_rump_radical_ring,
    check_star_forms,
    check_theorem_two_sided,
    theorem_suite,
)
from .verifier import StructureVerifier, verify_brace, verify_left, verify_right, verify_two_sided


def check_remark_identities(B: SkewLeftBracoid) -> CheckReport:
    return RemarkIdentityChecker(B).check()


def check_inverse_identity(B: SkewLeftBracoid) -> CheckReport:
    return InverseIdentityChecker(B).check()


def check_alpha_properties(B: SkewLeftBracoid) -> CheckReport:
    return AlphaPropertyChecker(B).check()


def check_gamma_homomorphism(B: SkewLeftBracoid) -> CheckReport:
    return GammaHomomorphismChecker(B).check()


def check_alpha_endomorphism(B: SkewLeftBracoid) -> CheckReport:
    return AlphaEndomorphismChecker(B).check()


def check_right_remark_identities(B: SkewRightBracoid) -> CheckReport:
    return RightRemarkIdentityChecker(B).check()


def check_right_inverse_identity(B: SkewRightBracoid) -> CheckReport:
    return RightInverseIdentityChecker(B).check()


def check_beta_properties(B: SkewRightBracoid) -> CheckReport:
    return BetaPropertyChecker(B).check()


def check_delta_homomorphism(B: SkewRightBracoid) -> CheckReport:
    return DeltaHomomorphismChecker(B).check()


def check_beta_endomorphism(B: SkewRightBracoid) -> CheckReport:
    return BetaEndomorphismChecker(B).check()


def check_derived_map_relations(B: Union[SkewLeftBracoid, SkewRightBracoid]) -> CheckReport:
    if isinstance(B, SkewLeftBracoid):
        return AlphaGammaRelationChecker(B).check()
    return BetaDeltaRelationChecker(B).check()


def check_brace_gamma_agreement(B: SkewBrace) -> CheckReport:
    return BraceGammaAgreementChecker(B).check()


__all__ = [
    "StructureVerifier",
    "check_alpha_endomorphism",
    "check_alpha_properties",
    "check_beta_endomorphism",
    "check_beta_properties",
    "check_brace_gamma_agreement",
    "check_brace_star_reproduction",
    "check_delta_homomorphism",
    "check_derived_map_relations",
    "check_gamma_homomorphism",
    "check_inverse_identity",
    "check_lau_brace",
    "check_lau_converse",
    "check_prop_action_beta",
    "check_prop_inverse_beta",
    "check_remark_identities",
    "check_right_inverse_identity",
    "check_right_remark_identities",
    "check_rump_radical_ring",
    "check_star_forms",
    "check_theorem_two_sided",
    "theorem_suite",
    "verify_brace",
    "verify_left",
    "verify_right",
    "verify_two_sided",
]
