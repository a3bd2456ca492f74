# cipher/bit_matrix.py
"""Bit-level matrix cycling.

Each message byte becomes one row of an m x 8 bit matrix (MSB in column 0),
eight bytes per matrix. The matrix splits into concentric rings, and one
cyclic operation shifts every ring a single step along its clockwise
enumeration: even-depth rings forward (clockwise), odd-depth rings backward.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Tuple, Union

import numpy as np

from .exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

COLUMNS = 8
MAX_ROWS = 8
BLOCK_SIZE = MAX_ROWS  # bytes per full matrix


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """m x 8 grid of bits (1 <= m <= 8); row r holds byte r of the block."""
    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[1] != COLUMNS or not 1 <= bits.shape[0] <= MAX_ROWS:
            raise InvalidArgumentError(f"bit matrix must be m x 8 with 1 <= m <= 8, got {bits.shape}")
        if bits.max(initial=0) > 1:
            raise InvalidArgumentError("bit matrix cells must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @classmethod
    def from_bytes(cls, block: bytes) -> "BitMatrix":
        data = np.frombuffer(bytes(block), dtype=np.uint8)
        return cls(np.unpackbits(data).reshape(-1, COLUMNS))

    def to_bytes(self) -> bytes:
        return np.packbits(self.bits, axis=1).ravel().tobytes()

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __repr__(self):
        rows = " / ".join("".join(str(b) for b in row) for row in self.bits)
        return f"BitMatrix({rows})"


@dataclass(frozen=True)
class RingPath:
    """One concentric ring, cells listed clockwise from its top-left cell."""
    depth: int
    cells: Tuple[Tuple[int, int], ...]

    def __len__(self):
        return len(self.cells)

    @cached_property
    def index(self) -> Tuple[np.ndarray, np.ndarray]:
        rows, cols = zip(*self.cells)
        return np.array(rows), np.array(cols)


@lru_cache(maxsize=64)
def _rings(rows: int, cols: int) -> Tuple[RingPath, ...]:
    rings = []
    depth = 0
    top, left, bottom, right = 0, 0, rows - 1, cols - 1
    while top <= bottom and left <= right:
        cells = [(top, c) for c in range(left, right + 1)]
        cells += [(r, right) for r in range(top + 1, bottom + 1)]
        if top < bottom:
            cells += [(bottom, c) for c in range(right - 1, left - 1, -1)]
        if left < right:
            cells += [(r, left) for r in range(bottom - 1, top, -1)]
        rings.append(RingPath(depth=depth, cells=tuple(cells)))
        depth += 1
        top, left, bottom, right = top + 1, left + 1, bottom - 1, right - 1
    return tuple(rings)


def ring_decompose(rows: int, cols: int = COLUMNS) -> List[RingPath]:
    """Rings of a rows x cols grid, outermost first."""
    if rows < 1 or cols < 1:
        raise InvalidArgumentError(f"grid must be at least 1 x 1, got {rows} x {cols}")
    return list(_rings(rows, cols))


def _rotate(grid: np.ndarray, n: int, sign: int) -> np.ndarray:
    if n < 0:
        raise InvalidArgumentError(f"cycle count must be >= 0, got {n}")
    if grid.ndim != 2 or grid.size == 0:
        raise InvalidArgumentError(f"expected a non-empty 2-D grid, got shape {grid.shape}")
    out = grid.copy()
    for ring in _rings(*grid.shape):
        shift = n % len(ring)
        if ring.depth % 2:
            shift = -shift
        shift *= sign
        if shift:
            rr, cc = ring.index
            out[rr, cc] = np.roll(grid[rr, cc], shift)
    return out


GridLike = Union[BitMatrix, np.ndarray]


def _apply(matrix: GridLike, n: int, sign: int) -> GridLike:
    if isinstance(matrix, BitMatrix):
        return BitMatrix(_rotate(matrix.bits, n, sign))
    return _rotate(np.asarray(matrix), n, sign)


def cycle_once(matrix: GridLike) -> GridLike:
    return _apply(matrix, 1, 1)


def cycle(matrix: GridLike, n: int) -> GridLike:
    """n cyclic operations, done as one rotation by n mod len(ring) per ring.

    Accepts a BitMatrix or any 2-D numpy grid and returns the same kind.
    """
    return _apply(matrix, n, 1)


def uncycle(matrix: GridLike, n: int) -> GridLike:
    return _apply(matrix, n, -1)


def pack_blocks(message: bytes) -> List[BitMatrix]:
    message = bytes(message)
    return [
        BitMatrix.from_bytes(message[start:start + BLOCK_SIZE])
        for start in range(0, len(message), BLOCK_SIZE)
    ]


def unpack_blocks(blocks: List[BitMatrix]) -> bytes:
    return b"".join(block.to_bytes() for block in blocks)


@lru_cache(maxsize=256)
def _permutation(rows: int, n: int, sign: int) -> np.ndarray:
    # rotating a grid of cell indices says which source cell lands where
    index = np.arange(rows * COLUMNS).reshape(rows, COLUMNS)
    perm = _rotate(index, n, sign).ravel()
    perm.setflags(write=False)
    return perm


def _cycle_message(message: bytes, n: int, sign: int) -> bytes:
    if n < 0:
        raise InvalidArgumentError(f"cycle count must be >= 0, got {n}")
    data = np.frombuffer(bytes(message), dtype=np.uint8)
    if data.size == 0:
        return b""
    bits = np.unpackbits(data).reshape(-1, COLUMNS)
    out = np.empty_like(bits)

    full = (data.size // BLOCK_SIZE) * BLOCK_SIZE
    if full:
        blocks = bits[:full].reshape(-1, BLOCK_SIZE * COLUMNS)
        out[:full] = blocks[:, _permutation(BLOCK_SIZE, n, sign)].reshape(-1, COLUMNS)
    tail = data.size - full
    if tail:
        out[full:] = bits[full:].ravel()[_permutation(tail, n, sign)].reshape(tail, COLUMNS)

    logger.debug("cycled %d full block(s) and a %d-row tail, n=%d sign=%+d", full // BLOCK_SIZE, tail, n, sign)
    return np.packbits(out, axis=1).ravel().tobytes()


def cycle_message(message: bytes, n: int) -> bytes:
    """pack_blocks -> cycle(n) per block -> unpack_blocks, vectorized."""
    return _cycle_message(message, n, 1)


def uncycle_message(message: bytes, n: int) -> bytes:
    return _cycle_message(message, n, -1)
