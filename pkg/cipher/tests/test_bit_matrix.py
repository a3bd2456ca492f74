# cipher/tests/test_bit_matrix.py
import math
import random

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
import hypothesis.strategies as st

from cipher.bit_matrix import (
    BitMatrix,
    cycle,
    cycle_message,
    cycle_once,
    pack_blocks,
    ring_decompose,
    uncycle,
    uncycle_message,
    unpack_blocks,
)
from cipher.exceptions import InvalidArgumentError

REAL_MATRIX = np.array([list("ABCD"), list("LMNE"), list("KPOF"), list("JIHG")])
CYCLED_MATRIX = np.array([list("LABC"), list("KNOD"), list("JMPE"), list("IHGF")])


def peel_rings(rows, cols):
    """Spiral order by peeling: top row, right column, bottom row, left column."""
    grid = [[(r, c) for c in range(cols)] for r in range(rows)]
    rings = []
    while grid:
        ring = list(grid.pop(0))
        for row in grid:
            if row:
                ring.append(row.pop())
        if grid:
            ring.extend(reversed(grid.pop()))
        for row in reversed(grid):
            if row:
                ring.append(row.pop(0))
        grid = [row for row in grid if row]
        rings.append(ring)
    return rings


def oracle_cycle_once(bits):
    out = bits.copy()
    for depth, ring in enumerate(peel_rings(*bits.shape)):
        seq = [bits[r, c] for r, c in ring]
        seq = seq[-1:] + seq[:-1] if depth % 2 == 0 else seq[1:] + seq[:1]
        for (r, c), value in zip(ring, seq):
            out[r, c] = value
    return out


def random_matrix(rng, rows):
    return BitMatrix(np.array([[rng.randrange(2) for _ in range(8)] for _ in range(rows)]))


bit_matrices = st.integers(min_value=1, max_value=8).flatmap(
    lambda m: st.lists(st.integers(0, 255), min_size=m, max_size=m)
).map(lambda rows: BitMatrix.from_bytes(bytes(rows)))


class PackTests(SimpleTestCase):
    def test_pack_aBc(self):
        """One 3 x 8 matrix, MSB in column 0"""
        (block,) = pack_blocks(b"aBc")
        self.assertEqual(block.rows, 3)
        rows = ["".join(str(bit) for bit in row) for row in block.bits]
        self.assertEqual(rows, ["01100001", "01000010", "01100011"])

    def test_pack_empty(self):
        self.assertEqual(pack_blocks(b""), [])

    def test_pack_nine_bytes(self):
        blocks = pack_blocks(bytes(range(9)))
        self.assertEqual([b.bits.shape for b in blocks], [(8, 8), (1, 8)])

    def test_unpack_aBc(self):
        self.assertEqual(list(unpack_blocks(pack_blocks(b"aBc"))), [97, 66, 99])
        self.assertEqual(unpack_blocks(pack_blocks(b"aBc")), b"aBc")

    def test_unpack_empty(self):
        self.assertEqual(unpack_blocks([]), b"")

    def test_invalid_shapes_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            BitMatrix(np.zeros((9, 8)))
        with self.assertRaises(InvalidArgumentError):
            BitMatrix(np.zeros((2, 7)))
        with self.assertRaises(InvalidArgumentError):
            BitMatrix(np.full((2, 8), 2))

    def test_matrix_is_read_only(self):
        block = BitMatrix.from_bytes(b"a")
        with self.assertRaises(ValueError):
            block.bits[0, 0] = 1


class RingTests(SimpleTestCase):
    def test_ring_sizes(self):
        self.assertEqual([len(r) for r in ring_decompose(4, 4)], [12, 4])
        self.assertEqual([len(r) for r in ring_decompose(3, 8)], [18, 6])
        self.assertEqual([len(r) for r in ring_decompose(1, 8)], [8])

    def test_outer_ring_of_4x4_follows_the_letters(self):
        outer, inner = ring_decompose(4, 4)
        self.assertEqual("".join(REAL_MATRIX[r, c] for r, c in outer.cells), "ABCDEFGHIJKL")
        self.assertEqual("".join(REAL_MATRIX[r, c] for r, c in inner.cells), "MNOP")

    def test_degenerate_strip_runs_left_to_right(self):
        inner = ring_decompose(3, 8)[1]
        self.assertEqual(inner.cells, tuple((1, c) for c in range(1, 7)))

    def test_degenerate_column_runs_top_to_bottom(self):
        (ring,) = ring_decompose(3, 1)
        self.assertEqual(ring.cells, ((0, 0), (1, 0), (2, 0)))

    def test_rings_partition_every_grid(self):
        for rows in range(1, 9):
            for cols in (1, 2, 3, 4, 8):
                cells = [cell for ring in ring_decompose(rows, cols) for cell in ring.cells]
                self.assertEqual(len(cells), rows * cols)
                self.assertEqual(set(cells), {(r, c) for r in range(rows) for c in range(cols)})

    def test_rings_match_peeling_oracle(self):
        for rows in range(1, 9):
            got = [list(ring.cells) for ring in ring_decompose(rows, 8)]
            self.assertEqual(got, peel_rings(rows, 8))


class CycleTests(SimpleTestCase):
    def test_real_matrix_to_cycled_matrix(self):
        np.testing.assert_array_equal(cycle_once(REAL_MATRIX), CYCLED_MATRIX)

    def test_cycled_matrix_back_to_real(self):
        np.testing.assert_array_equal(uncycle(CYCLED_MATRIX, 1), REAL_MATRIX)

    def test_cycle_one_equals_cycle_once(self):
        np.testing.assert_array_equal(cycle(REAL_MATRIX, 1), cycle_once(REAL_MATRIX))

    def test_letter_matrix_round_trip(self):
        np.testing.assert_array_equal(uncycle(cycle(REAL_MATRIX, 10), 10), REAL_MATRIX)

    def test_single_row_rotates_right(self):
        block = BitMatrix.from_bytes(b"a")  # 01100001
        self.assertEqual(cycle_once(block).to_bytes(), bytes([0b10110000]))

    def test_two_by_two(self):
        grid = np.array([list("AB"), list("DC")])
        np.testing.assert_array_equal(cycle_once(grid), np.array([list("DA"), list("CB")]))

    def test_zero_cycles(self):
        block = BitMatrix.from_bytes(b"SD-AREE!")
        self.assertEqual(cycle(block, 0), block)
        self.assertEqual(uncycle(block, 0), block)

    def test_full_rotation_of_single_row(self):
        block = BitMatrix.from_bytes(b"a")
        self.assertEqual(cycle(block, 8), block)

    def test_negative_count_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            cycle(BitMatrix.from_bytes(b"a"), -1)

    def test_cycle_once_matches_oracle(self):
        """200 random matrices over every height 1..8"""
        rng = random.Random(42)
        for k in range(200):
            block = random_matrix(rng, k % 8 + 1)
            np.testing.assert_array_equal(cycle_once(block).bits, oracle_cycle_once(block.bits))

    def test_cycle_n_matches_repeated_cycle_once(self):
        rng = random.Random(7)
        for rows in range(1, 9):
            block = random_matrix(rng, rows)
            expected = block
            for _ in range(13):
                expected = cycle_once(expected)
            self.assertEqual(cycle(block, 13), expected)

    @settings(max_examples=150)
    @given(bit_matrices, st.integers(min_value=0, max_value=64))
    def test_uncycle_inverts_cycle(self, block, n):
        self.assertEqual(uncycle(cycle(block, n), n), block)
        self.assertEqual(cycle(uncycle(block, n), n), block)

    @given(bit_matrices, st.integers(min_value=0, max_value=64))
    def test_cycling_conserves_ones(self, block, n):
        ones = int(block.bits.sum())
        self.assertEqual(int(cycle(block, n).bits.sum()), ones)
        self.assertEqual(int(uncycle(block, n).bits.sum()), ones)

    @given(bit_matrices)
    def test_common_multiple_of_ring_lengths_is_identity(self, block):
        period = math.lcm(*(len(r) for r in ring_decompose(block.rows)))
        self.assertEqual(cycle(block, period), block)


class MessageCycleTests(SimpleTestCase):
    def test_matches_per_block_operations(self):
        rng = random.Random(99)
        for length in list(range(0, 20)) + [63, 64, 65, 200]:
            message = bytes(rng.randrange(256) for _ in range(length))
            for n in (0, 1, 10, 37):
                expected = unpack_blocks([cycle(b, n) for b in pack_blocks(message)])
                self.assertEqual(cycle_message(message, n), expected)
                self.assertEqual(uncycle_message(expected, n), message)

    def test_worked_example_blocks(self):
        """code = 10: 'a' becomes 0x58, 'aaaa' becomes 86 f8 80 86"""
        self.assertEqual(cycle_message(b"a", 10), bytes([0x58]))
        self.assertEqual(cycle_message(b"aaaa", 10), bytes.fromhex("86f88086"))

    def test_length_preserved(self):
        for length in range(0, 33):
            self.assertEqual(len(cycle_message(bytes(length), 5)), length)
