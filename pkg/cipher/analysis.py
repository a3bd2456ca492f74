# cipher/analysis.py
"""Frequency spectra, repetition-leakage statistics and a single-bit diffusion test."""
import csv
import logging
from typing import IO, Iterator, Tuple

import numpy as np

from .exceptions import InvalidArgumentError, UndefinedStatisticError
from .bit_matrix import BLOCK_SIZE
from .key_schedule import KeyMaterial
from .pipeline import sd_aree_encrypt
from .schemas import (
    AnalysisReport,
    DiffusionReport,
    Histogram,
    LeakageReport,
    PowerExRule,
    WrapMode,
)

logger = logging.getLogger(__name__)

SPECTRUM_HEADER = ("byte", "count", "frequency")


def _as_array(data: bytes) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8)


def histogram(data: bytes) -> Histogram:
    counts = np.bincount(_as_array(data), minlength=256)
    return Histogram(counts=[int(c) for c in counts], total=len(data))


def index_of_coincidence(h: Histogram) -> float:
    n = h.total
    if n < 2:
        return 0.0
    counts = np.asarray(h.counts, dtype=np.int64)
    return float(np.sum(counts * (counts - 1))) / (n * (n - 1))


def chi_square_uniform(h: Histogram) -> float:
    """Chi-square distance of the byte counts from a uniform spread."""
    n = h.total
    if n == 0:
        raise UndefinedStatisticError("chi-square is undefined for an empty stream")
    expected = n / 256
    counts = np.asarray(h.counts, dtype=np.float64)
    return float(np.sum((counts - expected) ** 2 / expected))


def longest_run(data: bytes) -> int:
    arr = _as_array(data)
    if arr.size == 0:
        return 0
    edges = np.flatnonzero(arr[1:] != arr[:-1]) + 1
    bounds = np.concatenate(([0], edges, [arr.size]))
    return int(np.diff(bounds).max())


def analyze(data: bytes) -> AnalysisReport:
    h = histogram(data)
    return AnalysisReport(
        histogram=h,
        index_of_coincidence=index_of_coincidence(h),
        chi_square=chi_square_uniform(h) if h.total else 0.0,
        distinct_count=sum(1 for c in h.counts if c),
        max_count=max(h.counts),
        longest_run=longest_run(data),
    )


def leakage_report(plain: bytes, cipher: bytes) -> LeakageReport:
    return LeakageReport(plain=analyze(plain), cipher=analyze(cipher))


def spectrum_rows(h: Histogram) -> Iterator[Tuple[int, int, str]]:
    for value, count in enumerate(h.counts):
        frequency = count / h.total if h.total else 0.0
        yield value, count, f"{frequency:.6f}"


def write_spectrum_csv(h: Histogram, fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SPECTRUM_HEADER)
    writer.writerows(spectrum_rows(h))


def diffusion_test(
    message: bytes,
    key,
    trials: int,
    seed: int = 0,
    wrap: WrapMode = WrapMode.BYTE,
    rule: PowerExRule = PowerExRule.KEY_LENGTH,
) -> DiffusionReport:
    """Flip one random plaintext bit per trial and measure the ciphertext change."""
    message = bytes(message)
    if not message:
        raise InvalidArgumentError("diffusion test needs a non-empty message")
    if trials < 1:
        raise InvalidArgumentError(f"diffusion test needs trials >= 1, got {trials}")
    key = KeyMaterial.coerce(key)

    rng = np.random.default_rng(seed)
    baseline = _as_array(sd_aree_encrypt(message, key, wrap, rule))
    changed_total = 0
    max_distance = 0
    outside = 0
    for _ in range(trials):
        pos = int(rng.integers(len(message)))
        bit = int(rng.integers(8))
        mutated = bytearray(message)
        mutated[pos] ^= 1 << bit
        changed = np.flatnonzero(baseline != _as_array(sd_aree_encrypt(bytes(mutated), key, wrap, rule)))
        changed_total += changed.size
        if changed.size:
            max_distance = max(max_distance, int(np.abs(changed - pos).max()))
            if (changed // BLOCK_SIZE != pos // BLOCK_SIZE).any():
                outside += 1

    report = DiffusionReport(
        trials=trials,
        seed=seed,
        mean_changed_bytes=changed_total / trials,
        max_changed_byte_distance=max_distance,
        changed_outside_block=outside,
    )
    logger.debug("diffusion: %s", report.model_dump())
    return report
