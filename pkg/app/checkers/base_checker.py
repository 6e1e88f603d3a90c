"""
Base checker class with shared utilities
"""
import logging
from abc import ABC, abstractmethod
from typing import Dict, Optional, Sequence

import numpy as np

from ..schemas import CheckReport, TheoremVerdict

logger = logging.getLogger("bracoid.checkers")


def first_failure(mask: np.ndarray) -> Optional[tuple]:
    """Index tuple of the first False entry of a boolean array, or None."""
    broken = np.argwhere(~mask)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


class BaseChecker(ABC):
    """Abstract base class for all identity checkers.

    A checker scans one named property exhaustively and returns a single
    CheckReport; mathematical failures never raise.
    """

    name: str = "property"

    @abstractmethod
    def check(self) -> CheckReport:
        """Each checker must implement this method"""

    def _pass(self) -> CheckReport:
        return CheckReport(property=self.name, status="pass")

    def _fail(self, label: str, witness: Sequence[str]) -> CheckReport:
        logger.debug(f"{self.name} failed at {label}: {list(witness)}")
        return CheckReport(property=self.name, status="fail", witness=[label, *witness])

    def _not_applicable(self) -> CheckReport:
        return CheckReport(property=self.name, status="not_applicable")


def make_verdict(theorem: str, hypotheses: Dict[str, bool], conclusion: Optional[bool],
                 witness: Optional[Sequence[str]] = None,
                 hypothesis_witness: Optional[Sequence[str]] = None) -> TheoremVerdict:
    """Combine hypothesis and conclusion outcomes into a verdict.

    Hypotheses-true with conclusion-false means the implementation is wrong,
    not the theorem, so it is logged loudly.
    """
    if not all(hypotheses.values()):
        flag = "not_applicable"
    elif conclusion is False:
        flag = "counterexample_to_theorem"
        logger.error(f"{theorem}: hypotheses hold but the conclusion fails at {list(witness or [])}")
    else:
        flag = "ok"
    if conclusion is False and witness:
        shown = list(witness)
    elif hypothesis_witness:
        shown = list(hypothesis_witness)
    else:
        shown = None
    return TheoremVerdict(
        theorem=theorem,
        hypotheses=dict(hypotheses),
        conclusion=conclusion,
        witness=shown,
        flag=flag,
    )
