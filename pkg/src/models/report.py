"""
Report and sweep-row records
"""

from dataclasses import dataclass, asdict
from typing import NamedTuple, Optional

from src.core.exceptions import ReportInvariantError
from src.models.state import CorrelationTriple

REPORT_TOL = 1e-12


@dataclass(frozen=True)
class MeasureReport:
    """Every correlation measure of one Bell-diagonal input"""
    c: CorrelationTriple
    mutual_information: float
    maximal_holevo: float
    classical_correlation: float
    discord: float
    x: Optional[float] = None
    weak_maximal_holevo: Optional[float] = None
    super_classical_correlation: Optional[float] = None
    super_discord: Optional[float] = None
    eof: Optional[float] = None

    def __post_init__(self):
        self._expect_equal("classical_correlation", self.classical_correlation, self.maximal_holevo)
        self._expect_equal("discord", self.discord, self.mutual_information - self.classical_correlation)
        if self.x is not None:
            if None in (self.weak_maximal_holevo, self.super_classical_correlation, self.super_discord):
                raise ReportInvariantError("weak measures are required when x is given")
            self._expect_equal(
                "super_classical_correlation", self.super_classical_correlation, self.weak_maximal_holevo
            )
            self._expect_equal(
                "super_discord", self.super_discord,
                self.mutual_information - self.super_classical_correlation,
            )

    @staticmethod
    def _expect_equal(name, got, expected):
        if abs(got - expected) > REPORT_TOL:
            raise ReportInvariantError(f"report invariant broken: {name}={got!r}, expected {expected!r}")

    def to_dict(self) -> dict:
        data = asdict(self)
        data["c"] = list(self.c.as_tuple())
        return data


class WernerRow(NamedTuple):
    z: float
    x: float
    eof: float
    classical_correlation: float
    weak_maximal_holevo: float
    discord: float
    super_discord: float


class GadRow(NamedTuple):
    z: float
    gamma: float
    x: float
    nc1: float
    nc1w: float
