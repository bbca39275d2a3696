import math
import random

import pytest

from bookcross.enumeration import (
    canonical_form,
    count_formula,
    enumerate_layouts,
    layout_from_string,
    necklace_classes,
)


class TestCanonicalForm:
    def test_rotation(self):
        assert canonical_form("0110") == "0011"

    def test_already_minimal(self):
        assert canonical_form("0101") == "0101"

    def test_reflection_needed(self):
        assert canonical_form("10010") == "00101"

    def test_idempotent_on_random_strings(self):
        rng = random.Random(101)
        for _ in range(200):
            s = "".join(rng.choice("01") for _ in range(rng.randint(1, 14)))
            c = canonical_form(s)
            assert canonical_form(c) == c

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            canonical_form("")


class TestCountFormula:
    @pytest.mark.parametrize(
        "m,n,expected",
        [(4, 5, 10), (5, 7, 38), (7, 13, 1980), (1, 1, 1), (6, 10, 280)],
    )
    def test_known_counts(self, m, n, expected):
        assert count_formula(m, n) == expected

    def test_symmetric(self):
        for m in range(1, 8):
            for n in range(1, 8):
                assert count_formula(m, n) == count_formula(n, m)

    def test_positive_arguments_required(self):
        with pytest.raises(ValueError):
            count_formula(0, 3)


class TestEnumerateLayouts:
    @pytest.mark.parametrize("m,n,expected", [(4, 5, 10), (5, 7, 38), (1, 1, 1)])
    def test_orbit_counts(self, m, n, expected):
        assert sum(1 for _ in enumerate_layouts(m, n)) == expected

    def test_agrees_with_formula_small(self):
        for total in range(2, 13):
            for m in range(1, total):
                n = total - m
                assert len(necklace_classes(m, n)) == count_formula(m, n), (m, n)

    def test_burnside_orbit_sizes(self):
        for m, n in [(3, 4), (4, 4), (2, 6), (5, 5)]:
            classes = necklace_classes(m, n)
            assert sum(c.orbit_size for c in classes) == math.comb(m + n, m)
            for c in classes:
                assert 2 * (m + n) % c.orbit_size == 0

    def test_emitted_in_lexicographic_canonical_order(self):
        classes = necklace_classes(4, 5)
        strings = [c.canonical for c in classes]
        assert strings == sorted(strings)
        for s in strings:
            assert canonical_form(s) == s
            assert s.count("1") == 4 and s.count("0") == 5

    def test_layout_indices_clockwise(self):
        lay = layout_from_string("01101")
        assert lay.seq == (("w", 0), ("b", 0), ("b", 1), ("w", 1), ("b", 2))
        assert lay.to_bitstring() == "01101"

    def test_bad_pattern_rejected(self):
        with pytest.raises(ValueError):
            layout_from_string("0121")
        with pytest.raises(ValueError):
            layout_from_string("1111")

    def test_word_length_cap(self):
        with pytest.raises(ValueError):
            necklace_classes(13, 13)
