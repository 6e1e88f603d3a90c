"""
Brace Checkers
==============
Agreement between a skew brace and its left bracoid view.
"""

from ..core.bracoids import SkewBrace, brace_gamma, brace_to_left_bracoid
from ..core.errors import BracoidError
from ..schemas import CheckReport
from .base_checker import BaseChecker
from .left_checkers import GammaHomomorphismChecker


class BraceGammaAgreementChecker(BaseChecker):
    """The bracoid γ of (B,·) acting on (B,⋆) is the brace γ-function,
    and it is a homomorphism (B,·) -> Aut(B,⋆)."""

    name = "brace_gamma_agreement"

    def __init__(self, B: SkewBrace):
        self.B = B

    def check(self) -> CheckReport:
        try:
            bracoid = brace_to_left_bracoid(self.B)
        except BracoidError as e:
            return self._fail(e.kind, e.witness)
        star = self.B.star_group
        for b in range(self.B.n):
            expected = brace_gamma(self.B, b).images
            actual = tuple(int(x) for x in bracoid.gammas[b])
            if expected != actual:
                a = next(i for i in range(self.B.n) if expected[i] != actual[i])
                return self._fail("γ(b)a = b̄ ⋆ (b·a)", star.names(b, a))
        report = GammaHomomorphismChecker(bracoid).check()
        if report.status != "pass":
            return self._fail(report.witness[0], report.witness[1:])
        return self._pass()
