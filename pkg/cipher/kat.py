# cipher/kat.py
"""Known-answer test files.

Line-oriented blocks separated by blank lines::

    COUNT = 7
    KEY = 68656c6c6f20776f726c64
    WRAP = byte
    PT = 61616161
    CT = 90069ad0

Cipher blocks carry PT/CT (optionally WRAP, STAGES, POWER_EX_RULE);
schedule blocks carry CODE/POWER_EX and optionally MODULUS. ``#`` starts a
comment line.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .exceptions import KatParseError
from .key_schedule import derive_schedule
from .pipeline import DEFAULT_STAGES, PipelineConfig, run_pipeline, sd_aree_encrypt
from .schemas import KatCase, PowerExRule, WrapMode

logger = logging.getLogger(__name__)

HEX_FIELDS = ("KEY", "PT", "CT")
INT_FIELDS = ("COUNT", "CODE", "POWER_EX", "MODULUS")
KNOWN_FIELDS = HEX_FIELDS + INT_FIELDS + ("WRAP", "STAGES", "POWER_EX_RULE")


@dataclass
class KatOutcome:
    case: KatCase
    passed: bool
    detail: str = ""


def _parse_value(name: str, value: str, line: int):
    try:
        if name in HEX_FIELDS:
            return bytes.fromhex(value)
        if name in INT_FIELDS:
            return int(value)
        if name == "WRAP":
            return WrapMode(value)
        if name == "POWER_EX_RULE":
            return PowerExRule(value)
    except ValueError:
        raise KatParseError(line, f"bad value for {name}: {value!r}") from None

    stages = [part.strip() for part in value.split(",") if part.strip()]
    unknown = [s for s in stages if s not in DEFAULT_STAGES]
    if not stages or unknown:
        raise KatParseError(line, f"bad STAGES value: {value!r}")
    return stages


def _build_case(fields: Dict[str, Tuple[object, int]], start: int, end: int) -> KatCase:
    def missing(*names):
        return [n for n in names if n not in fields]

    absent = missing("COUNT", "KEY")
    if absent:
        raise KatParseError(end, f"block starting at line {start} is missing {', '.join(absent)}")
    key, key_line = fields["KEY"]
    if not key:
        raise KatParseError(key_line, "KEY must not be empty")

    is_cipher = "PT" in fields or "CT" in fields
    absent = missing("PT", "CT") if is_cipher else missing("CODE", "POWER_EX")
    if absent:
        raise KatParseError(end, f"block starting at line {start} is missing {', '.join(absent)}")

    values = {name.lower(): value for name, (value, _) in fields.items()}
    return KatCase(line=start, **values)


def parse_kat(text: str) -> List[KatCase]:
    cases: List[KatCase] = []
    fields: Dict[str, Tuple[object, int]] = {}
    start = last = 0

    def flush():
        if fields:
            cases.append(_build_case(fields, start, last))
            fields.clear()

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or name not in KNOWN_FIELDS:
            raise KatParseError(lineno, f"expected 'FIELD = value', got {raw!r}")
        if name == "COUNT":
            flush()
        if not fields:
            start = lineno
        if name in fields:
            raise KatParseError(lineno, f"duplicate {name} in block starting at line {start}")
        fields[name] = (_parse_value(name, value, lineno), lineno)
        last = lineno
    flush()
    if not cases:
        raise KatParseError(max(len(lines), 1), "no test cases found")
    return cases


def check_case(case: KatCase) -> KatOutcome:
    if case.is_schedule_case:
        schedule = derive_schedule(case.key, case.power_ex_rule)
        expected = {"code": case.code, "power_ex": case.power_ex, "modulus": case.modulus}
        wrong = [
            f"{name} {getattr(schedule, name)} != {want}"
            for name, want in expected.items()
            if want is not None and getattr(schedule, name) != want
        ]
        return KatOutcome(case, not wrong, "; ".join(wrong))

    if case.stages is None:
        actual = sd_aree_encrypt(case.pt, case.key, case.wrap, case.power_ex_rule)
    else:
        config = PipelineConfig.from_names(case.key, case.stages, case.wrap, case.power_ex_rule)
        actual = run_pipeline(config, case.pt)
    if actual == case.ct:
        return KatOutcome(case, True)
    return KatOutcome(case, False, f"CT {actual.hex()} != {case.ct.hex()}")


def run_kat(text: str) -> List[KatOutcome]:
    outcomes = [check_case(case) for case in parse_kat(text)]
    logger.debug("KAT: %d case(s), failing COUNTs %s", len(outcomes), failing_counts(outcomes))
    return outcomes


def failing_counts(outcomes: List[KatOutcome]) -> List[int]:
    return [o.case.count for o in outcomes if not o.passed]

