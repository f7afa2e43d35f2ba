import pytest

import oracles
from chainperm import (
    DomainError,
    f_closed,
    f_recurrence,
    g_closed,
    g_recurrence,
    gen_P1,
    gen_Q2,
    lucas,
    p1_count,
    q2_count,
)


def test_lucas():
    assert [lucas(m) for m in range(0, 8)] == [2, 1, 3, 4, 7, 11, 18, 29]


def test_lucas_recurrence_runs_long():
    for n in range(1, 129):
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)
    assert lucas(128) > 2**64


def test_f_values():
    assert [f_closed(n) for n in (1, 2, 3, 8)] == [1, 2, 4, 71]
    assert f_recurrence(3) == 4 and f_recurrence(4) == 8
    assert [f_closed(n) for n in range(1, 11)] == [oracles.f_by_recurrence(n) for n in range(1, 11)]


def test_g_values():
    assert [g_closed(n) for n in (2, 3, 9)] == [2, 4, 136]
    assert g_recurrence(3) == 4 and g_recurrence(5) == 12


def test_closed_equals_recurrence():
    for n in range(1, 65):
        assert f_closed(n) == f_recurrence(n)
    for n in range(2, 65):
        assert g_closed(n) == g_recurrence(n)


def test_decomposition_identities():
    for n in range(3, 65):
        assert f_closed(n) == p1_count(n) + f_closed(n - 1) + f_closed(n - 2)
        assert g_closed(n) == g_closed(n - 1) + q2_count(n)


def test_part_counts():
    assert [p1_count(n) for n in (3, 4, 101)] == [1, 2, 50]
    assert [q2_count(n) for n in (3, 4, 13)] == [2, 3, 1025]
    for n in range(3, 13):
        assert p1_count(n) == len(gen_P1(n))
        assert q2_count(n) == len(gen_Q2(n))


@pytest.mark.parametrize(
    "func, bad",
    [(f_closed, 0), (f_recurrence, 0), (g_closed, 1), (g_recurrence, 1), (p1_count, 2), (q2_count, 2), (lucas, -1)],
)
def test_domain_errors(func, bad):
    with pytest.raises(DomainError):
        func(bad)
