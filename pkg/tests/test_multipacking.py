import itertools
import json
import random

import pytest

from helpers import naive_best_witness, pts1d
from multipack import (
    BudgetExceededError,
    Violation,
    bruteforce_max_r_multipacking,
    bruteforce_profile,
    build_neighbor_table,
    is_r_multipacking,
    load_witness,
    multipacking_number,
    save_witness,
)
from multipack.instances import random_point_set

POWERS = pts1d(2, 4, 8, 16)


def test_checker_accepts_far_pair():
    table = build_neighbor_table(POWERS)
    ok, violation = is_r_multipacking(POWERS, table, {0, 3}, 3)
    assert ok and violation is None


def test_checker_rejects_adjacent_pair():
    table = build_neighbor_table(POWERS)
    ok, violation = is_r_multipacking(POWERS, table, {0, 1}, 1)
    assert not ok
    assert violation == Violation(v=0, s=1, count=2, bound=1)


def test_checker_empty_and_singletons_always_valid():
    table = build_neighbor_table(POWERS)
    for r in range(1, POWERS.n):
        assert is_r_multipacking(POWERS, table, set(), r)[0]
        for v in range(POWERS.n):
            assert is_r_multipacking(POWERS, table, {v}, r)[0]


def test_checker_validates_r_range():
    table = build_neighbor_table(POWERS)
    with pytest.raises(ValueError):
        is_r_multipacking(POWERS, table, {0}, 0)
    with pytest.raises(ValueError):
        is_r_multipacking(POWERS, table, {0}, POWERS.n)


def test_checker_validates_member_indices():
    table = build_neighbor_table(POWERS)
    with pytest.raises(ValueError):
        is_r_multipacking(POWERS, table, {0, 4}, 1)


def test_checker_reports_first_violation_in_scan_order():
    pts = pts1d(0, 1, 3, 10)
    table = build_neighbor_table(pts)
    ok, violation = is_r_multipacking(pts, table, {0, 1, 2}, 2)
    assert not ok
    assert (violation.v, violation.s) == (0, 1)


def test_oracle_powers_of_two_n6():
    pts = pts1d(2, 4, 8, 16, 32, 64)
    report = bruteforce_max_r_multipacking(pts, 5)
    assert report.size == 2
    assert report.indices == (0, 3)


def test_oracle_upper_values_n5():
    report = bruteforce_max_r_multipacking(pts1d(0, 2, 3, 11, 18), 4)
    assert report.size == 2
    assert report.indices == (0, 3)


def test_oracle_singleton_convention():
    report = bruteforce_max_r_multipacking(pts1d(7), 1)
    assert report.size == 1
    assert report.indices == (0,)


def test_multipacking_number_powers():
    assert multipacking_number(POWERS) == 2


def test_multipacking_number_any_three_points():
    for seed in range(5):
        assert multipacking_number(random_point_set(3, dim=2, seed=seed)) == 1


def test_oracle_size_guard():
    pts = pts1d(0, 2, 5, 11, 23)
    with pytest.raises(BudgetExceededError):
        bruteforce_max_r_multipacking(pts, 2, limit_n=4)


def test_oracle_matches_naive_enumeration():
    for seed in range(30):
        n = 4 + seed % 5
        pts = random_point_set(n, dim=1 + seed % 2, seed=seed)
        table = build_neighbor_table(pts)
        for r in range(1, n):
            report = bruteforce_max_r_multipacking(pts, r)
            assert report.indices == naive_best_witness(pts, table, r)


def test_oracle_witness_passes_checker():
    for seed in range(20):
        pts = random_point_set(7, dim=2, seed=seed)
        table = build_neighbor_table(pts)
        for r in range(1, 7):
            report = bruteforce_max_r_multipacking(pts, r)
            assert is_r_multipacking(pts, table, report.indices, r)[0]


def test_profile_matches_per_radius_calls():
    pts = random_point_set(8, dim=2, seed=12)
    profile = bruteforce_profile(pts)
    assert len(profile) == 7
    for report in profile:
        single = bruteforce_max_r_multipacking(pts, report.r)
        assert (report.size, report.indices) == (single.size, single.indices)


def test_hereditary_subsets_of_witnesses_are_valid():
    rng = random.Random(0)
    for seed in range(15):
        pts = random_point_set(9, dim=2, seed=seed)
        table = build_neighbor_table(pts)
        r = 1 + seed % 8
        witness = bruteforce_max_r_multipacking(pts, r).indices
        for _ in range(8):
            sub = [i for i in witness if rng.random() < 0.6]
            assert is_r_multipacking(pts, table, sub, r)[0]


def test_monotone_in_radius():
    for seed in range(15):
        pts = random_point_set(8, dim=1 + seed % 2, seed=seed)
        sizes = [report.size for report in bruteforce_profile(pts)]
        assert sizes == sorted(sizes, reverse=True)
        assert sizes[-1] >= 1


def test_full_radius_upper_bound():
    for seed in range(15):
        n = 4 + seed % 6
        pts = random_point_set(n, dim=2, seed=seed)
        assert multipacking_number(pts) <= n // 2


def test_valid_sets_stay_valid_for_smaller_r():
    pts = random_point_set(8, dim=2, seed=21)
    table = build_neighbor_table(pts)
    for combo in itertools.combinations(range(8), 3):
        if is_r_multipacking(pts, table, combo, 5)[0]:
            for smaller in range(1, 5):
                assert is_r_multipacking(pts, table, combo, smaller)[0]


def test_witness_json_round_trip(tmp_path):
    report = bruteforce_max_r_multipacking(pts1d(2, 4, 8, 16, 32, 64), 5)
    path = tmp_path / "witness.json"
    save_witness(report, path)
    data = json.loads(path.read_text())
    assert data == {"r": 5, "indices": [0, 3], "size": 2}
    indices, r = load_witness(path)
    assert indices == (0, 3)
    assert r == 5


def test_load_witness_accepts_full_report(tmp_path):
    path = tmp_path / "report.json"
    path.write_text('{"size":2,"indices":[1,4],"r":3,"method":"x","stats":{}}')
    assert load_witness(path) == ((1, 4), 3)
