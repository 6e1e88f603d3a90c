"""
Structure Verifier - Orchestrator
=================================
Coordinates axiom validation and every identity checker for a structure.

Structures handed in here may be unvalidated (loaded straight from a file),
so the axioms are reported rather than enforced and the identity checkers
still run on whatever the tables say.
"""

import logging
from typing import List

from ..core.actions import LeftActionTable, RightActionTable, is_transitive, make_left_action, make_right_action
from ..core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid, eq1_violation, eq2_violation, eq4_violation
from ..core.errors import ActionError
from ..core.two_sided import TwoSidedSkewBracoid, eq6_violation
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

logger = logging.getLogger("bracoid.checkers")

LEFT_CHECKERS = [
    RemarkIdentityChecker,
    InverseIdentityChecker,
    AlphaPropertyChecker,
    GammaHomomorphismChecker,
    AlphaEndomorphismChecker,
    AlphaGammaRelationChecker,
]

RIGHT_CHECKERS = [
    RightRemarkIdentityChecker,
    RightInverseIdentityChecker,
    BetaPropertyChecker,
    DeltaHomomorphismChecker,
    BetaEndomorphismChecker,
    BetaDeltaRelationChecker,
]


def _report(prop: str, witness=None) -> CheckReport:
    if witness is None:
        return CheckReport(property=prop, status="pass")
    return CheckReport(property=prop, status="fail", witness=list(witness))


class StructureVerifier:
    """
    Runs every applicable validator and checker on one structure.

    Fault-tolerant: a checker that raises is logged and reported as a
    failure of that property; the remaining checkers still run.
    """

    def __init__(self, structure):
        self.structure = structure

    def verify(self) -> List[CheckReport]:
        s = self.structure
        if isinstance(s, TwoSidedSkewBracoid):
            return self._two_sided(s)
        if isinstance(s, SkewLeftBracoid):
            return self._left(s)
        if isinstance(s, SkewRightBracoid):
            return self._right(s)
        if isinstance(s, SkewBrace):
            return self._brace(s)
        raise TypeError(f"cannot verify {type(s).__name__}")

    def _run_checker(self, checker_class, *args) -> CheckReport:
        try:
            return checker_class(*args).check()
        except Exception as e:
            logger.error(f"{checker_class.__name__} crashed: {e}", exc_info=True)
            name = getattr(checker_class, "name", checker_class.__name__)
            return CheckReport(property=name, status="fail", witness=["CheckerCrashed", str(e)])

    # ------------------------------------------------------------------

    def _left(self, B: SkewLeftBracoid) -> List[CheckReport]:
        G, N, action = B.G, B.N, B.action
        reports = [self._action_axioms("left_action_axioms", make_left_action, G, N, action)]
        reports.append(self._transitivity("left_transitive", action))

        broken = eq2_violation(action)
        reports.append(_report("left_bracoid_law", broken and ["Eq2Violated", G.name_of(broken[0]),
                                                                *N.names(broken[1], broken[2])]))
        reports += [self._run_checker(c, B) for c in LEFT_CHECKERS]
        return reports

    def _right(self, B: SkewRightBracoid) -> List[CheckReport]:
        H, N, action = B.H, B.N, B.action
        reports = [self._action_axioms("right_action_axioms", make_right_action, N, H, action)]
        reports.append(self._transitivity("right_transitive", action))

        broken = eq4_violation(action)
        reports.append(_report("right_bracoid_law", broken and ["Eq4Violated", H.name_of(broken[0]),
                                                                 *N.names(broken[1], broken[2])]))
        reports += [self._run_checker(c, B) for c in RIGHT_CHECKERS]
        return reports

    def _two_sided(self, T: TwoSidedSkewBracoid) -> List[CheckReport]:
        reports = self._left(T.left) + self._right(T.right)
        if T.left.N != T.right.N:
            reports.append(_report("compatibility", ["SharedNMismatch", T.left.N.name, T.right.N.name]))
            return reports
        broken = eq6_violation(T.left.action, T.right.action)
        if broken:
            g, eta, h = broken
            witness = ["Eq6Violated", T.G.name_of(g), T.N.name_of(eta), T.H.name_of(h)]
            reports.append(_report("compatibility", witness))
        else:
            reports.append(_report("compatibility"))
        return reports

    def _brace(self, B: SkewBrace) -> List[CheckReport]:
        broken = eq1_violation(B.star_group, B.dot_group)
        reports = [_report("brace_law", broken and ["Eq1Violated", *B.star_group.names(*broken)])]
        if broken is None:
            reports.append(self._run_checker(BraceGammaAgreementChecker, B))
        return reports

    @staticmethod
    def _action_axioms(prop: str, build, first, second, action) -> CheckReport:
        try:
            build(first, second, action.table)
        except ActionError as e:
            return _report(prop, [e.kind, *e.witness])
        return _report(prop)

    @staticmethod
    def _transitivity(prop: str, action) -> CheckReport:
        if is_transitive(action):
            return _report(prop)
        N = action.space
        return _report(prop, ["NotTransitive", N.name_of(N.identity)])


def verify_left(B: SkewLeftBracoid) -> List[CheckReport]:
    return StructureVerifier(B).verify()


def verify_right(B: SkewRightBracoid) -> List[CheckReport]:
    return StructureVerifier(B).verify()


def verify_two_sided(T: TwoSidedSkewBracoid) -> List[CheckReport]:
    return StructureVerifier(T).verify()


def verify_brace(B: SkewBrace) -> List[CheckReport]:
    return StructureVerifier(B).verify()


def unchecked_left(G, N, table) -> SkewLeftBracoid:
    """A left bracoid shell around a shape-checked table, axioms unverified."""
    return SkewLeftBracoid(G, N, LeftActionTable.unchecked(G, N, table))


def unchecked_right(H, N, table) -> SkewRightBracoid:
    return SkewRightBracoid(H, N, RightActionTable.unchecked(N, H, table))
