from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nnpoly.families import mu, safe_a_squared
from nnpoly.paths import (
    EnumerationCapExceeded,
    all_nu,
    build_certificate,
    enumerate_monomials,
    exact_nu,
    first_cycle,
    min_cycle_length,
    monomial_value,
    numeric_decomposition_check,
    partition_stats,
    path_from_index,
    phi,
    psi,
    verify_certificate_on_matrix,
)

F = Fraction

PAPER_PATH = (1, 3, 5, 7, 3, 10, 6, 4, 12, 10, 7, 5, 2)


def test_enumerate_single_path():
    assert list(enumerate_monomials(2, 1)) == [(1, 2)]


def test_enumerate_count_and_endpoints():
    paths = list(enumerate_monomials(3, 3))
    assert len(paths) == 9
    assert all(m[0] == 1 and m[-1] == 2 and len(m) == 4 for m in paths)


def test_enumerate_keeps_order_distinct():
    # same multiset of edges, different order: two distinct monomials
    paths = set(enumerate_monomials(6, 5))
    assert (1, 1, 4, 6, 1, 2) in paths
    assert (1, 4, 6, 1, 1, 2) in paths


def test_enumerate_lexicographic_matches_index():
    paths = list(enumerate_monomials(3, 3))
    assert paths == sorted(paths)
    assert paths == [path_from_index(3, 3, i) for i in range(9)]


def test_enumerate_cap_guard():
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_monomials(10, 12, cap=10**6))


def test_min_cycle_length_loop():
    assert min_cycle_length((1, 1, 3, 2)) == 1


def test_min_cycle_length_paper_example():
    assert min_cycle_length(PAPER_PATH) == 3


def test_min_cycle_length_two_cycle():
    assert min_cycle_length((1, 2, 1, 2)) == 2


def test_min_cycle_length_requires_repeat():
    with pytest.raises(ValueError):
        min_cycle_length((1, 3, 2))


def test_first_cycle_examples():
    assert first_cycle(PAPER_PATH, 3) == (1, 3)
    assert first_cycle((1, 1, 2), 1) == (0, 1)
    assert first_cycle((1, 2, 1, 2), 2) == (0, 2)


def test_first_cycle_wrong_k():
    with pytest.raises(ValueError):
        first_cycle((1, 1, 2), 2)


def test_phi_psi_paper_example():
    cyc = first_cycle(PAPER_PATH, 3)
    assert phi(PAPER_PATH, cyc) == (1, 3, 5, 7, 3, 5, 7, 3, 10, 6, 4, 12, 10, 7, 5, 2)
    assert psi(PAPER_PATH, cyc) == (1, 3, 10, 6, 4, 12, 10, 7, 5, 2)


def test_phi_psi_small_examples():
    assert phi((1, 1, 2), (0, 1)) == (1, 1, 1, 2)
    assert psi((1, 1, 2), (0, 1)) == (1, 2)
    assert phi((1, 2, 1, 2), (0, 2)) == (1, 2, 1, 2, 1, 2)
    assert psi((1, 2, 1, 2), (0, 2)) == (1, 2)


def test_phi_rejects_bad_cycle():
    with pytest.raises(ValueError):
        phi((1, 1, 2), (0, 2))


def test_consecutive_cycle_bookkeeping():
    # z = 3->4->3 repeats twice in m, three times in phi(m), once in psi(m)
    m = (1, 3, 4, 3, 4, 3, 2)
    k = min_cycle_length(m)
    assert k == 2
    cyc = first_cycle(m, k)
    assert phi(m, cyc) == (1, 3, 4, 3, 4, 3, 4, 3, 2)
    assert psi(m, cyc) == (1, 3, 4, 3, 2)


def test_partition_stats_n2():
    assert partition_stats(2) == [(1, 2)]


def test_partition_stats_n3():
    assert partition_stats(3) == [(1, 6), (2, 3)]


def test_partition_sums_to_total():
    for n in range(2, 7):
        stats = partition_stats(n)
        assert sum(c for _, c in stats) == n ** (n - 1)
        assert [k for k, _ in stats] == list(range(1, n))


def test_partition_stats_parallel_matches_serial():
    assert partition_stats(5, workers=4) == partition_stats(5)


def test_exact_nu_small():
    assert exact_nu(2, 1) == 2
    assert exact_nu(3, 2) == 3
    assert exact_nu(3, 1) == 3


def test_exact_nu_bounded_by_mu():
    for n in range(2, 7):
        for k, nu in zip(range(1, n), all_nu(n)):
            assert 1 <= nu <= mu(n, k)


def test_exact_nu_k_out_of_range():
    with pytest.raises(ValueError):
        exact_nu(3, 3)


def test_build_certificate_n2():
    rep = build_certificate(2, F(2))
    assert rep.verdict
    assert rep.per_k == [(1, 2, True, 2, 2)]


def test_build_certificate_n3():
    assert build_certificate(3, F(1)).verdict


def test_build_certificate_rejects_huge_a():
    assert not build_certificate(3, F(100)).verdict


def test_build_certificate_parallel():
    rep = build_certificate(4, safe_a_squared(4), workers=3)
    assert rep.verdict


def test_certificate_json_roundtrip():
    import json

    rep = build_certificate(3, F(1))
    j = json.loads(json.dumps(rep.to_json()))
    assert j["verdict"] is True
    assert j["a_sq"] == "1"
    assert len(j["per_k"]) == 2


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_value_identity(data):
    n = data.draw(st.integers(2, 4))
    A = [[F(data.draw(st.integers(0, 6))) for _ in range(n)] for _ in range(n)]
    idx = data.draw(st.integers(0, n ** (n - 1) - 1))
    m = path_from_index(n, n, idx)
    k = min_cycle_length(m)
    cyc = first_cycle(m, k)
    f, g = phi(m, cyc), psi(m, cyc)
    assert len(f) == len(m) + k and len(g) == len(m) - k
    assert f[0] == g[0] == 1 and f[-1] == g[-1] == 2
    assert monomial_value(f, A) * monomial_value(g, A) == monomial_value(m, A) ** 2


def test_decomposition_check_zero_matrix():
    Z = [[F(0)] * 2 for _ in range(2)]
    assert numeric_decomposition_check(2, F(2), Z)


def test_decomposition_check_all_ones():
    J = [[F(1)] * 2 for _ in range(2)]
    assert numeric_decomposition_check(2, F(2), J)


def test_decomposition_check_random():
    import random

    rng = random.Random(7)
    for _ in range(10):
        A = [[F(rng.randint(0, 8), rng.randint(1, 4)) for _ in range(3)] for _ in range(3)]
        assert numeric_decomposition_check(3, F(1), A)


def test_decomposition_check_rejects_negative_matrix():
    with pytest.raises(ValueError):
        numeric_decomposition_check(2, F(2), [[F(-1), F(0)], [F(0), F(0)]])


def test_end_to_end_membership_on_random():
    import random

    rng = random.Random(11)
    for n in (2, 3):
        cap = safe_a_squared(n)
        for _ in range(20):
            A = [[F(rng.randint(0, 12), 4) for _ in range(n)] for _ in range(n)]
            assert verify_certificate_on_matrix(n, cap, A)
