import itertools

import pytest
from hypothesis import given, strategies as st

from chainperm import (
    LengthMismatch,
    NotABijection,
    ParseError,
    Permutation,
    classical,
    avoids,
    compose,
    direct_sum,
    format_perm,
    from_one_line,
    identity,
    inverse,
    is_unimodal,
    parse_perm,
    power,
)

P = parse_perm


def all_perms(n):
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


permutations = st.integers(0, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(from_one_line)


class TestConstruction:
    def test_seven_letter_word(self):
        p = from_one_line([1, 3, 2, 5, 4, 6, 7])
        assert p.values == (1, 3, 2, 5, 4, 6, 7)
        assert p(2) == 3
        assert len(p) == 7

    def test_empty(self):
        assert len(from_one_line([])) == 0

    @pytest.mark.parametrize("word, index", [([1, 3, 3], 3), ([0, 1], 1), ([1, 2, 4], 3)])
    def test_not_a_bijection(self, word, index):
        with pytest.raises(NotABijection) as info:
            from_one_line(word)
        assert info.value.index == index

    def test_immutable(self):
        p = P("123")
        with pytest.raises(AttributeError):
            p.values = (3, 2, 1)

    def test_identity(self):
        assert identity(3) == P("123")
        assert identity(0) == from_one_line([])
        assert identity(1) == P("1")


class TestText:
    def test_compact_and_comma(self):
        assert P("4312") == P("4,3,1,2") == P(" 4, 3,1 ,2 ")

    def test_compact_limited_to_nine(self):
        with pytest.raises(ParseError):
            P("12345678910")
        assert len(P(",".join(map(str, range(10, 0, -1))))) == 10

    def test_bad_text(self):
        with pytest.raises(ParseError):
            P("12a")
        with pytest.raises(ParseError):
            P("1,,2")

    def test_format(self):
        p = P("4312")
        assert format_perm(p) == "4,3,1,2"
        assert str(p) == "4,3,1,2"
        assert format_perm(p, compact=True) == "4312"
        big = identity(10)
        assert format_perm(big, compact=True) == "1,2,3,4,5,6,7,8,9,10"

    @given(permutations)
    def test_round_trip(self, p):
        assert parse_perm(format_perm(p)) == p
        if len(p):
            assert parse_perm(format_perm(p, compact=True)) == p


class TestAlgebra:
    def test_compose(self):
        p = P("1325467")
        assert compose(p, p) == P("1234567")
        assert compose(identity(5), P("25314")) == P("25314")
        assert compose(P("231"), P("231")) == P("312")

    def test_compose_is_functional_order(self):
        p, q = P("231"), P("132")
        r = compose(p, q)
        assert all(r(i) == p(q(i)) for i in range(1, 4))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compose(P("12"), P("123"))

    def test_power(self):
        assert power(P("1325467"), 2) == P("1234567")
        assert power(P("25314"), 0) == identity(5)
        assert power(P("231"), 3) == P("123")

    def test_inverse(self):
        # hand inversion of 34521 gives 54123 (not 45123: compose(34521, 45123)(1) = 2)
        assert inverse(P("34521")) == P("54123")
        assert compose(P("34521"), P("54123")) == identity(5)
        assert inverse(identity(4)) == identity(4)
        assert inverse(P("45321")) == P("54312")

    def test_direct_sum(self):
        assert direct_sum(P("231"), P("21")) == P("23154")
        assert direct_sum(identity(0), P("312")) == P("312")
        assert direct_sum(P("1"), P("12")) == P("123")

    def test_unimodal(self):
        assert not is_unimodal(P("1534627"))
        assert is_unimodal(P("23451"))
        assert not is_unimodal(P("213"))
        assert is_unimodal(P("12345")) and is_unimodal(P("54321"))


class TestProperties:
    @pytest.mark.parametrize("n", range(0, 9))
    def test_inverse_both_sides(self, n):
        e = identity(n)
        for p in all_perms(n):
            q = inverse(p)
            assert compose(p, q) == e and compose(q, p) == e

    @given(permutations, st.integers(0, 5), st.integers(0, 5))
    def test_power_adds_exponents(self, p, a, b):
        assert power(p, a + b) == compose(power(p, a), power(p, b))

    def test_square_of_direct_sum(self):
        for total in range(0, 9):
            for a in range(0, total + 1):
                qs = all_perms(total - a)
                for p in all_perms(a):
                    p2 = power(p, 2)
                    for q in qs:
                        assert power(direct_sum(p, q), 2) == direct_sum(p2, power(q, 2))

    @given(permutations, permutations, st.integers(0, 6))
    def test_direct_sum_acts_blockwise(self, p, q, k):
        assert power(direct_sum(p, q), k) == direct_sum(power(p, k), power(q, k))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_unimodal_iff_avoids_213_and_312(self, n):
        a, b = classical("213"), classical("312")
        for p in all_perms(n):
            assert is_unimodal(p) == (avoids(p, a) and avoids(p, b))

    def test_lexicographic_order(self):
        assert sorted(all_perms(3)) == [P(s) for s in ("123", "132", "213", "231", "312", "321")]
