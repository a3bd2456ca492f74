# cipher/pipeline.py
"""SD-AREE encryption as a chain of invertible byte stages.

The default chain is bit-matrix cycling followed by the polynomial Caesar
layer; decryption runs the inverses in reverse order. Other stages can be
chained in, so SD-AREE can sit alongside another cipher.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence, Tuple

from .bit_matrix import cycle_message, uncycle_message
from .exceptions import CipherError, InvalidArgumentError, StageError
from .key_schedule import KeyMaterial, derive_schedule
from .poly_caesar import decrypt_stream, encrypt_stream
from .schemas import KeySchedule, PowerExRule, WrapMode

logger = logging.getLogger(__name__)

BIT_CYCLE = "bit_cycle"
POLY_CAESAR = "poly_caesar"
DEFAULT_STAGES = (BIT_CYCLE, POLY_CAESAR)


class Direction(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


def _accept_all(data: bytes) -> bool:
    return True


def _free_of_ff(data: bytes) -> bool:
    # 0x00 and 0xFF collide under the mod-255 rule
    return 0xFF not in bytes(data)


@dataclass(frozen=True)
class CipherStage:
    name: str
    forward: Callable[[bytes], bytes]
    inverse: Callable[[bytes], bytes]
    # inverse(forward(x)) == x is only promised for inputs this accepts
    accepts: Callable[[bytes], bool] = field(default=_accept_all)


def bit_cycle_stage(schedule: KeySchedule) -> CipherStage:
    return CipherStage(
        name=BIT_CYCLE,
        forward=lambda data: cycle_message(data, schedule.code),
        inverse=lambda data: uncycle_message(data, schedule.code),
    )


def poly_caesar_stage(schedule: KeySchedule, wrap: WrapMode = WrapMode.BYTE) -> CipherStage:
    wrap = WrapMode(wrap)
    accepts = _accept_all
    if wrap is WrapMode.CONDITIONAL_255:
        accepts = _free_of_ff
    return CipherStage(
        name=POLY_CAESAR,
        forward=lambda data: encrypt_stream(data, schedule, wrap),
        inverse=lambda data: decrypt_stream(data, schedule, wrap),
        accepts=accepts,
    )


def build_stage(name: str, schedule: KeySchedule, wrap: WrapMode = WrapMode.BYTE) -> CipherStage:
    if name == BIT_CYCLE:
        return bit_cycle_stage(schedule)
    if name == POLY_CAESAR:
        return poly_caesar_stage(schedule, wrap)
    raise InvalidArgumentError(f"unknown stage '{name}' (expected one of {', '.join(DEFAULT_STAGES)})")


@dataclass(frozen=True)
class PipelineConfig:
    key: KeyMaterial
    wrap: WrapMode
    stages: Tuple[CipherStage, ...]
    strict: bool = False  # check each stage's domain before running it forward

    @classmethod
    def from_names(
        cls,
        key,
        names: Sequence[str] = DEFAULT_STAGES,
        wrap: WrapMode = WrapMode.BYTE,
        rule: PowerExRule = PowerExRule.KEY_LENGTH,
        strict: bool = False,
    ) -> "PipelineConfig":
        key = KeyMaterial.coerce(key)
        wrap = WrapMode(wrap)
        schedule = derive_schedule(key, rule)
        stages = tuple(build_stage(name, schedule, wrap) for name in names)
        return cls(key=key, wrap=wrap, stages=stages, strict=strict)


def run_pipeline(config: PipelineConfig, data: bytes, direction: Direction = Direction.FORWARD) -> bytes:
    """Apply the stages in order (forward) or their inverses in reverse order."""
    if not config.stages:
        raise InvalidArgumentError("pipeline has no stages")
    direction = Direction(direction)
    stages = config.stages if direction is Direction.FORWARD else tuple(reversed(config.stages))

    data = bytes(data)
    for stage in stages:
        if direction is Direction.FORWARD and config.strict and not stage.accepts(data):
            raise StageError(stage.name, "input is outside the stage's invertible domain")
        step = stage.forward if direction is Direction.FORWARD else stage.inverse
        try:
            data = step(data)
        except StageError:
            raise
        except CipherError as exc:
            raise StageError(stage.name, str(exc)) from exc
        logger.debug("%s %s: %d byte(s)", stage.name, direction.value, len(data))
    return data


def sd_aree_encrypt(
    message: bytes,
    key,
    wrap: WrapMode = WrapMode.BYTE,
    rule: PowerExRule = PowerExRule.KEY_LENGTH,
) -> bytes:
    """Cycle every bit matrix ``code`` times, then apply the Caesar layer."""
    config = PipelineConfig.from_names(key, DEFAULT_STAGES, wrap, rule)
    return run_pipeline(config, message, Direction.FORWARD)


def sd_aree_decrypt(
    ciphertext: bytes,
    key,
    wrap: WrapMode = WrapMode.BYTE,
    rule: PowerExRule = PowerExRule.KEY_LENGTH,
) -> bytes:
    config = PipelineConfig.from_names(key, DEFAULT_STAGES, wrap, rule)
    return run_pipeline(config, ciphertext, Direction.INVERSE)
