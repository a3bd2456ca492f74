# cipher/key_schedule.py
"""Key-derived constants (code, power_ex, prime modulus) and Caesar offsets."""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .exceptions import InvalidArgumentError, InvalidKeyError
from .schemas import KeySchedule, PowerExRule

logger = logging.getLogger(__name__)

# nth_prime(n) for n < 6 (the sieve bound below only holds from n = 6 on)
_SMALL_PRIMES = (2, 3, 5, 7, 11)

_prime_table = np.array(_SMALL_PRIMES, dtype=np.int64)

# nth_prime keeps a dense table up to this index; beyond it primes are
# counted one segment at a time so memory stays bounded
_DENSE_INDEX_LIMIT = 1 << 20
_SEGMENT_SIZE = 1 << 20  # odd numbers per segment

# largest prime_index a key may derive; past it InvalidKeyError is raised
MAX_PRIME_INDEX = 1 << 26

# products of two residues must fit in int64 for the vectorized offset window
_INT64_SAFE_MODULUS = 1 << 31


@dataclass(frozen=True)
class KeyMaterial:
    """The pass-key as raw bytes; length is the byte count."""
    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, (bytes, bytearray)):
            raise InvalidKeyError("key must be a byte sequence")
        if len(self.data) == 0:
            raise InvalidKeyError("key must not be empty")
        object.__setattr__(self, "data", bytes(self.data))

    @property
    def length(self) -> int:
        return len(self.data)

    @classmethod
    def coerce(cls, key: Union["KeyMaterial", bytes, bytearray]) -> "KeyMaterial":
        return key if isinstance(key, cls) else cls(key)


def derive_csum(key) -> int:
    """Weighted key checksum: sum of byte_i * length * 2**i, exact."""
    key = KeyMaterial.coerce(key)
    length = key.length
    return sum(byte * length * (1 << i) for i, byte in enumerate(key.data))


def digit_sum(n: int) -> int:
    """Sum of the decimal digits of n (one pass, not reduced to one digit)."""
    if n < 0:
        raise InvalidArgumentError(f"digit_sum needs n >= 0, got {n}")
    total = 0
    while n:
        n, c = divmod(n, 10)
        total += c
    return total


def _sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime)


def _nth_prime_bound(n: int) -> int:
    # p_n < n (ln n + ln ln n) for n >= 6
    return int(n * (math.log(n) + math.log(math.log(n)))) + 1


def nth_prime_segmented(n: int, segment_size: int = _SEGMENT_SIZE) -> int:
    """The nth prime by counting odd-only sieve segments.

    Holds the base primes up to sqrt(p_n) and one segment at a time.
    """
    if n < 1:
        raise InvalidArgumentError(f"nth_prime needs n >= 1, got {n}")
    if segment_size < 1:
        raise InvalidArgumentError(f"segment_size must be >= 1, got {segment_size}")
    if n == 1:
        return 2
    limit = _nth_prime_bound(max(n, 6))
    base_primes = [int(p) for p in _sieve(math.isqrt(limit) + 1)[1:]]
    remaining = n - 1  # 2 is already counted

    # segment index k stands for the odd number low + 2k
    low = 1
    while low <= limit:
        size = min(segment_size, (limit - low) // 2 + 1)
        high = low + 2 * (size - 1)
        is_prime = np.ones(size, dtype=bool)
        if low == 1:
            is_prime[0] = False
        for p in base_primes:
            if p * p > high:
                break
            start = max(p * p, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            is_prime[(start - low) // 2::p] = False
        found = np.flatnonzero(is_prime)
        if found.size >= remaining:
            return low + 2 * int(found[remaining - 1])
        remaining -= found.size
        logger.debug("nth_prime(%d): %d left after segment ending at %d", n, remaining, high)
        low = high + 2
    raise RuntimeError(f"prime bound {limit} is too small for n={n}")


def nth_prime(n: int) -> int:
    """The nth prime, counting 2 as the 1st."""
    global _prime_table
    if n < 1:
        raise InvalidArgumentError(f"nth_prime needs n >= 1, got {n}")
    if n > _DENSE_INDEX_LIMIT:
        return nth_prime_segmented(n)
    if n > len(_prime_table):
        # grow geometrically so a sweep over n does not re-sieve every call
        target = min(max(n, 2 * len(_prime_table), 6), _DENSE_INDEX_LIMIT)
        _prime_table = _sieve(_nth_prime_bound(target))
    return int(_prime_table[n - 1])


def _raw_power_ex(pseudo_code: int, code: int, key_length: int, rule: PowerExRule) -> int:
    if rule is PowerExRule.KEY_LENGTH:
        return pseudo_code % key_length
    temporary_power_ex = digit_sum(pseudo_code)
    if rule is PowerExRule.CODE:
        return temporary_power_ex % code
    return temporary_power_ex % 3


@lru_cache(maxsize=128)
def _derive(data: bytes, rule: PowerExRule) -> KeySchedule:
    key = KeyMaterial(data)
    csum = derive_csum(key)
    pseudo_code = digit_sum(csum)

    code = pseudo_code % 16
    if code == 0:
        code = pseudo_code
    if code == 0:
        # all-NUL key: csum is 0, and code must stay >= 1
        code = 16

    power_ex = _raw_power_ex(pseudo_code, code, key.length, rule)
    if power_ex in (0, 1):
        power_ex = code

    prime_index = power_ex * code * 10
    if prime_index > MAX_PRIME_INDEX:
        raise InvalidKeyError(
            f"key derives prime_index {prime_index} (code {code}, power_ex {power_ex}); "
            f"the largest supported is {MAX_PRIME_INDEX}"
        )
    schedule = KeySchedule(
        key_length=key.length,
        csum=csum,
        pseudo_code=pseudo_code,
        code=code,
        power_ex=power_ex,
        power_ex_rule=rule,
        prime_index=prime_index,
        modulus=nth_prime(prime_index),
    )
    logger.debug(
        "derived schedule: code=%d power_ex=%d prime_index=%d modulus=%d (rule %s)",
        schedule.code, schedule.power_ex, schedule.prime_index, schedule.modulus, rule.value,
    )
    return schedule


def derive_schedule(key, rule: PowerExRule = PowerExRule.KEY_LENGTH) -> KeySchedule:
    """Derive code, power_ex and the prime modulus from a pass-key."""
    key = KeyMaterial.coerce(key)
    return _derive(key.data, PowerExRule(rule))


@dataclass(frozen=True)
class OffsetStream:
    """Position-indexed Caesar offsets t_i = power_ex**i mod P, with t_0 = 0."""
    schedule: KeySchedule

    def offset_at(self, i: int) -> int:
        if i < 0:
            raise InvalidArgumentError(f"position must be >= 0, got {i}")
        if i == 0:
            return 0
        return pow(self.schedule.power_ex, i, self.schedule.modulus)

    def window(self, start: int, count: int) -> np.ndarray:
        """t_start .. t_{start+count-1} as an int64 array."""
        if start < 0 or count < 0:
            raise InvalidArgumentError("window needs start >= 0 and count >= 0")
        out = np.zeros(count, dtype=np.int64)
        if count == 0:
            return out
        base = self.schedule.power_ex
        modulus = self.schedule.modulus
        skip = 1 if start == 0 else 0  # t_0 stays 0
        powers = out[skip:]
        if powers.size == 0:
            return out
        powers[0] = pow(base, start + skip, modulus)
        if modulus < _INT64_SAFE_MODULUS:
            # doubling: powers[f + j] = powers[j] * base**f
            filled = 1
            while filled < powers.size:
                step = min(filled, powers.size - filled)
                powers[filled:filled + step] = powers[:step] * pow(base, filled, modulus) % modulus
                filled += step
        else:
            for k in range(1, powers.size):
                powers[k] = int(powers[k - 1]) * base % modulus
        return out


def offset_at(stream: Union[OffsetStream, KeySchedule], i: int) -> int:
    if isinstance(stream, KeySchedule):
        stream = OffsetStream(stream)
    return stream.offset_at(i)
