from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.core.exceptions import ValidationError


class ChannelKind(str, Enum):
    BF = "bf"
    PF = "pf"
    BPF = "bpf"
    GAD = "gad"
    DEPOL1 = "depol1"


GAD_CLOSED_FORM_P = 0.5


@dataclass(frozen=True)
class ChannelSpec:
    """A single-qubit decoherence channel and its strengths.

    BF/PF/BPF/GAD act on both qubits with the same Kraus set; DEPOL1 acts on
    one qubit, chosen by ``side`` (A by default).
    """
    kind: ChannelKind
    p: float
    gamma: Optional[float] = None
    side: str = "A"

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        if not 0.0 <= self.p <= 1.0:
            raise ValidationError(f"{self.kind.name} probability p must lie in [0, 1], got {self.p}")
        if self.kind is ChannelKind.GAD:
            if self.gamma is None or not 0.0 <= self.gamma <= 1.0:
                raise ValidationError(f"GAD needs gamma in [0, 1], got {self.gamma}")
        elif self.gamma is not None:
            raise ValidationError(f"gamma only applies to GAD, not {self.kind.name}")
        if self.side not in ("A", "B"):
            raise ValidationError(f"side must be 'A' or 'B', got {self.side!r}")
        if self.side != "A" and self.kind is not ChannelKind.DEPOL1:
            raise ValidationError(f"{self.kind.name} acts on both qubits; side selection is DEPOL1 only")

    @classmethod
    def gad(cls, gamma: float, p: float = GAD_CLOSED_FORM_P) -> "ChannelSpec":
        return cls(ChannelKind.GAD, p, gamma)

    @property
    def has_closed_form(self) -> bool:
        return self.kind is not ChannelKind.GAD or self.p == GAD_CLOSED_FORM_P

    def __repr__(self):
        extra = f", gamma={self.gamma}" if self.gamma is not None else ""
        return f"<ChannelSpec {self.kind.name} p={self.p}{extra}>"
