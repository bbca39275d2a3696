import pytest

from bookcross.bounds import exact_crossing_number, zarankiewicz
from bookcross.constructions import riskin_crossing_count
from bookcross.oracle import (
    OracleLimitError,
    OracleLimits,
    brute_force_nu,
    brute_force_pagenumber,
    brute_force_run,
)


class TestBruteForceNu:
    def test_3_3_2_matches_zarankiewicz(self):
        assert brute_force_nu(3, 3, 2) == 1 == zarankiewicz(3, 3)

    def test_2_4_1_matches_riskin(self):
        assert brute_force_nu(2, 4, 1) == 2 == riskin_crossing_count(2, 4)

    def test_4_4_3_embeds(self):
        assert brute_force_nu(4, 4, 3) == 0

    def test_riskin_agreement_on_divisible_instances(self):
        for m, n in [(1, 5), (2, 2), (2, 4), (3, 3), (2, 6), (4, 4)]:
            assert brute_force_nu(m, n, 1) == riskin_crossing_count(m, n), (m, n)

    def test_monotone_in_k(self):
        values = [brute_force_nu(3, 3, k) for k in (1, 2, 3)]
        assert values == sorted(values, reverse=True)
        assert values[0] == 3 and values[-1] == 0

    def test_monotone_in_parts(self):
        assert brute_force_nu(2, 3, 2) <= brute_force_nu(2, 4, 2) <= brute_force_nu(2, 5, 2)
        assert brute_force_nu(2, 4, 2) <= brute_force_nu(3, 4, 2)

    def test_matches_exact_family_values(self):
        # k=2: K_{3,n}; k=3: K_{4,n} within the size limits
        for n in range(2, 8):
            assert brute_force_nu(3, n, 2) == exact_crossing_number(2, n), n
        for n in range(4, 7):
            assert brute_force_nu(4, n, 3) == exact_crossing_number(3, n), n

    def test_stats_populated(self):
        run = brute_force_run(3, 3, 2)
        assert run.value == 1
        assert run.millis >= 0
        assert run.to_dict()["m"] == 3


class TestLimits:
    def test_vertex_limit(self):
        with pytest.raises(OracleLimitError):
            brute_force_nu(6, 6, 2)

    def test_page_limit(self):
        with pytest.raises(OracleLimitError):
            brute_force_nu(3, 3, 4)

    def test_custom_limits_allow_more(self):
        limits = OracleLimits(max_vertices=11, max_pages=4, node_budget=10**8)
        assert brute_force_nu(4, 5, 4, limits) == 0

    def test_node_budget_enforced(self):
        limits = OracleLimits(max_vertices=10, max_pages=3, node_budget=5)
        with pytest.raises(OracleLimitError):
            brute_force_nu(3, 4, 2, limits)


class TestPagenumber:
    def test_3_3(self):
        assert brute_force_pagenumber(3, 3) == 3

    def test_path_cases(self):
        assert brute_force_pagenumber(1, 6) == 1
        assert brute_force_pagenumber(2, 2) == 1

    def test_2_5_needs_two_pages(self):
        # K_{2,5} is not outerplanar but embeds in 2 pages
        assert brute_force_pagenumber(2, 5) == 2

    def test_limit_exceeded(self):
        limits = OracleLimits(max_vertices=10, max_pages=2, node_budget=10**8)
        with pytest.raises(OracleLimitError):
            brute_force_pagenumber(4, 5, limits)
