import pytest

import oracles
from chainperm import (
    CHAIN_213,
    CHAIN_231,
    DomainError,
    UnsupportedChain,
    count_avoiders,
    enumerate_avoiders,
    parse_chain,
    parse_perm,
    sequence,
)

CHAINS = [(CHAIN_231, oracles.CHAIN_231), (CHAIN_213, oracles.CHAIN_213)]


def words(perms):
    return [p.values for p in perms]


def test_small_listings():
    assert list(enumerate_avoiders(3, CHAIN_231)) == [parse_perm(s) for s in ("123", "132", "213", "321")]
    assert list(enumerate_avoiders(3, CHAIN_213)) == [parse_perm(s) for s in ("123", "132", "231", "321")]
    assert words(enumerate_avoiders(1, parse_chain("231,12:21"))) == [(1,)]
    assert words(enumerate_avoiders(0, parse_chain("1"))) == [()]


def test_streams():
    gen = enumerate_avoiders(12, CHAIN_213)
    assert next(gen) == parse_perm(",".join(map(str, range(1, 13))))


@pytest.mark.parametrize(
    "chain, n, expected",
    [(CHAIN_231, 1, 1), (CHAIN_231, 2, 2), (CHAIN_213, 2, 2), (CHAIN_231, 6, 25), (CHAIN_213, 6, 21)],
)
def test_counts(chain, n, expected):
    assert count_avoiders(n, chain) == expected


@pytest.mark.parametrize("n", range(0, 8))
def test_pruned_equals_full_filter(n):
    for chain, oracle_chain in CHAINS:
        assert words(enumerate_avoiders(n, chain)) == oracles.filter_all(n, oracle_chain)


@pytest.mark.parametrize("n", range(0, 8))
def test_count_matches_listing(n):
    for chain, _ in CHAINS:
        assert count_avoiders(n, chain) == len(list(enumerate_avoiders(n, chain)))


@pytest.mark.parametrize("n", range(1, 8))
def test_more_levels_never_add(n):
    for chain, _ in CHAINS:
        first_only = parse_chain(",".join(str(p) for p in chain.levels[0]))
        assert count_avoiders(n, chain) <= count_avoiders(n, first_only)


def test_unprunable_chains():
    # level 1 has no classical pattern, so every permutation is visited
    for text in ("-:321", "~21:12", "~123"):
        c = parse_chain(text)
        oracle = [[(p.word.values, p.consecutive) for p in level] for level in c.levels]
        for n in range(0, 7):
            assert words(enumerate_avoiders(n, c)) == oracles.filter_all(n, oracle)


@pytest.mark.parametrize("workers", [2, 8])
def test_worker_count_does_not_change_output(workers):
    for chain, _ in CHAINS:
        assert list(enumerate_avoiders(7, chain, workers)) == list(enumerate_avoiders(7, chain))
        assert count_avoiders(7, chain, workers) == count_avoiders(7, chain)


class TestSequence:
    def test_brute(self):
        assert sequence(CHAIN_231, 1, 8).counts == [1, 2, 4, 8, 14, 25, 42, 71]
        assert sequence(CHAIN_213, 2, 8).counts == [2, 4, 7, 12, 21, 38, 71]

    def test_empty_range(self):
        assert sequence(parse_chain("321"), 0, 0).entries == ((0, 1),)

    @pytest.mark.parametrize("method", ["structural", "closed"])
    def test_routes_agree(self, method):
        assert sequence(CHAIN_231, 1, 9, method).entries == sequence(CHAIN_231, 1, 9).entries
        assert sequence(CHAIN_213, 2, 9, method).entries == sequence(CHAIN_213, 2, 9).entries

    def test_set_semantics_recognised(self):
        assert sequence(parse_chain("1432,231:231"), 3, 3, "closed").counts == [4]

    def test_unsupported(self):
        with pytest.raises(UnsupportedChain):
            sequence(parse_chain("321"), 1, 3, "structural")
        with pytest.raises(UnsupportedChain):
            sequence(parse_chain("231,1432:231:1"), 1, 3, "closed")

    def test_closed_domain(self):
        with pytest.raises(DomainError):
            sequence(CHAIN_213, 1, 3, "closed")

    @pytest.mark.parametrize("lo, hi, method", [(3, 2, "brute"), (-1, 2, "brute"), (1, 2, "magic")])
    def test_bad_arguments(self, lo, hi, method):
        with pytest.raises(ValueError):
            sequence(CHAIN_231, lo, hi, method)
