# cipher/poly_caesar.py
"""Position-dependent Caesar layer: y_i = wrap(x_i + code + t_i).

Positions are global over the whole message, starting at 0.
"""
import logging

import numpy as np

from .exceptions import InvalidArgumentError
from .key_schedule import OffsetStream
from .schemas import KeySchedule, WrapMode

logger = logging.getLogger(__name__)


def _forward_wrap(s, mode: WrapMode):
    if mode is WrapMode.BYTE:
        return s % 256
    return np.where(s > 255, s % 255, s)


def _inverse_wrap(d, mode: WrapMode):
    if mode is WrapMode.BYTE:
        return d % 256
    return np.where(d < 0, d % 255, d)


def shift_byte(x: int, i: int, schedule: KeySchedule, mode: WrapMode = WrapMode.BYTE) -> int:
    if not 0 <= x <= 255:
        raise InvalidArgumentError(f"not a byte value: {x}")
    s = x + schedule.code + OffsetStream(schedule).offset_at(i)
    return int(_forward_wrap(s, WrapMode(mode)))


def unshift_byte(y: int, i: int, schedule: KeySchedule, mode: WrapMode = WrapMode.BYTE) -> int:
    if not 0 <= y <= 255:
        raise InvalidArgumentError(f"not a byte value: {y}")
    d = y - schedule.code - OffsetStream(schedule).offset_at(i)
    return int(_inverse_wrap(d, WrapMode(mode)))


def _shifts(schedule: KeySchedule, start: int, count: int) -> np.ndarray:
    return schedule.code + OffsetStream(schedule).window(start, count)


def encrypt_stream(xs: bytes, schedule: KeySchedule, mode: WrapMode = WrapMode.BYTE, start: int = 0) -> bytes:
    """Shift every byte by code + t_i; ``start`` is the global position of xs[0]."""
    mode = WrapMode(mode)
    data = np.frombuffer(bytes(xs), dtype=np.uint8).astype(np.int64)
    if data.size == 0:
        return b""
    if mode is WrapMode.CONDITIONAL_255 and (data == 0xFF).any():
        logger.warning("0xFF reaches the mod-255 Caesar stage; those bytes will decrypt as 0x00")
    out = _forward_wrap(data + _shifts(schedule, start, data.size), mode)
    return out.astype(np.uint8).tobytes()


def decrypt_stream(ys: bytes, schedule: KeySchedule, mode: WrapMode = WrapMode.BYTE, start: int = 0) -> bytes:
    mode = WrapMode(mode)
    data = np.frombuffer(bytes(ys), dtype=np.uint8).astype(np.int64)
    if data.size == 0:
        return b""
    out = _inverse_wrap(data - _shifts(schedule, start, data.size), mode)
    return out.astype(np.uint8).tobytes()
