# cipher/schemas.py
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class WrapMode(str, Enum):
    """How the Caesar stage reduces out-of-range byte sums."""
    BYTE = "byte"  # mod 256, a bijection per position
    CONDITIONAL_255 = "paper"  # "if value > 255 then value mod 255"; collides 0x00 / 0xFF


class PowerExRule(str, Enum):
    KEY_LENGTH = "key-length"  # pseudo_code mod key length
    CODE = "code"  # digit_sum(pseudo_code) mod code
    THREE = "three"  # digit_sum(pseudo_code) mod 3


class OutputFormat(str, Enum):
    RAW = "raw"
    HEX = "hex"
    BASE64 = "base64"


class KeySchedule(BaseModel):
    """Key-derived constants driving both cipher stages. Immutable."""
    model_config = ConfigDict(frozen=True)

    key_length: int = Field(ge=1)
    csum: int = Field(ge=0)
    pseudo_code: int = Field(ge=0)
    code: int = Field(ge=1)
    power_ex: int = Field(ge=1)
    power_ex_rule: PowerExRule = PowerExRule.KEY_LENGTH
    prime_index: int = Field(ge=1)
    modulus: int = Field(ge=2)


class Histogram(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: List[int] = Field(min_length=256, max_length=256)
    total: int = Field(ge=0)

    @model_validator(mode="after")
    def _counts_match_total(self):
        if sum(self.counts) != self.total:
            raise ValueError("histogram counts do not sum to total")
        return self


class AnalysisReport(BaseModel):
    histogram: Histogram
    index_of_coincidence: float
    chi_square: float  # 0.0 for an empty stream
    distinct_count: int
    max_count: int
    longest_run: int


class LeakageReport(BaseModel):
    plain: AnalysisReport
    cipher: AnalysisReport


class DiffusionReport(BaseModel):
    trials: int
    seed: int
    mean_changed_bytes: float
    max_changed_byte_distance: int
    changed_outside_block: int = 0  # trials that touched a byte outside the flipped block


class KatCase(BaseModel):
    """One block of a known-answer file.

    Either ``pt``/``ct`` (a cipher vector) or ``code``/``power_ex`` (a
    schedule vector) is present.
    """
    count: int
    key: bytes
    line: int = 0  # first line of the block in its file
    wrap: WrapMode = WrapMode.BYTE
    stages: Optional[List[str]] = None
    power_ex_rule: PowerExRule = PowerExRule.KEY_LENGTH
    pt: Optional[bytes] = None
    ct: Optional[bytes] = None
    code: Optional[int] = None
    power_ex: Optional[int] = None
    modulus: Optional[int] = None

    @property
    def is_schedule_case(self) -> bool:
        return self.pt is None and self.ct is None


class AnalyzeOutput(BaseModel):
    """JSON document written by the ``analyze`` command."""
    reports: Dict[str, AnalysisReport] = {}
    leakage: Optional[LeakageReport] = None
    diffusion: Optional[DiffusionReport] = None
