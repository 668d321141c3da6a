import pytest
from hypothesis import given, strategies as st

from imark import (
    GameSpec,
    floor_div_chain,
    follower_count,
    followers,
    mex,
    nim_sum,
)

specs = st.builds(
    GameSpec,
    subtractions=st.sets(st.integers(1, 9), min_size=1, max_size=3),
    divisors=st.sets(st.integers(2, 9), max_size=3),
)


class TestGameSpec:
    def test_normalises_to_sorted_tuples(self):
        spec = GameSpec([3, 1, 3], [5, 2, 2])
        assert spec.subtractions == (1, 3)
        assert spec.divisors == (2, 5)
        assert spec.max_sub == 3

    def test_rejects_empty_spec(self):
        with pytest.raises(ValueError):
            GameSpec((), ())

    def test_rejects_divisor_below_two(self):
        with pytest.raises(ValueError):
            GameSpec({1}, {1, 2})

    def test_rejects_nonpositive_subtraction(self):
        with pytest.raises(ValueError):
            GameSpec({0, 1}, {2})

    def test_division_only_game_is_allowed(self):
        spec = GameSpec((), {2, 3})
        assert spec.max_sub == 0

    def test_hashable_and_frozen(self):
        spec = GameSpec({1}, {2, 3})
        assert spec == GameSpec([1], [3, 2])
        assert hash(spec) == hash(GameSpec({1}, {2, 3}))
        with pytest.raises(AttributeError):
            spec.subtractions = (2,)


class TestFollowers:
    def test_example_position_ten(self):
        assert followers(GameSpec({1}, {2, 3}), 10) == [9, 5]

    def test_zero_is_a_sink(self):
        assert followers(GameSpec({1}, {2, 3}), 0) == []

    def test_position_six_has_three_followers(self):
        assert followers(GameSpec({1}, {2, 3}), 6) == [5, 3, 2]

    def test_subtractions_ordered_by_decreasing_amount(self):
        assert followers(GameSpec({1, 2}, {2, 5}), 10) == [8, 9, 5, 2]

    def test_coincident_follower_listed_once(self):
        # 2-1 == 2/2; the deduplicated list has one entry but both rules apply
        spec = GameSpec({1}, {2, 3})
        assert followers(spec, 2) == [1]
        assert follower_count(spec, 2) == 2

    def test_follower_count_examples(self):
        spec = GameSpec({1}, {2, 3})
        assert follower_count(spec, 6) == 3
        assert follower_count(spec, 7) == 1
        assert follower_count(spec, 0) == 0

    @given(specs, st.integers(0, 10**6))
    def test_followers_decrease(self, spec, n):
        assert all(f < n for f in followers(spec, n))

    @given(specs, st.integers(0, 10**4))
    def test_follower_count_counts_rule_applications(self, spec, n):
        applications = [n - s for s in reversed(spec.subtractions) if n - s >= 0]
        if n > 0:
            applications += [n // d for d in spec.divisors if n % d == 0]
        assert follower_count(spec, n) == len(applications)
        # the follower list is the applications deduplicated, order kept
        assert followers(spec, n) == list(dict.fromkeys(applications))


class TestMex:
    def test_examples(self):
        assert mex([]) == 0
        assert mex({0, 1}) == 2
        assert mex({1, 2}) == 0

    @given(st.sets(st.integers(0, 40)))
    def test_mex_is_least_excluded(self, values):
        m = mex(values)
        assert m not in values
        assert all(v in values for v in range(m))


class TestNimSum:
    def test_three_xor_five_is_six(self):
        assert nim_sum(3, 5) == 6

    @given(st.integers(0, 2**20), st.integers(0, 2**20), st.integers(0, 2**20))
    def test_group_laws(self, a, b, c):
        assert nim_sum(a, b) == nim_sum(b, a)
        assert nim_sum(nim_sum(a, b), c) == nim_sum(a, nim_sum(b, c))
        assert nim_sum(nim_sum(a, b), b) == a
        assert nim_sum(a, 0) == a
        assert nim_sum(a, a) == 0


class TestFloorDivChain:
    def test_examples(self):
        assert floor_div_chain(100, [3, 4]) == 8
        assert floor_div_chain(7, []) == 7
        assert floor_div_chain(12, [2, 3]) == 2

    @given(
        st.integers(0, 2**40),
        st.lists(st.integers(1, 100), max_size=4),
    )
    def test_chain_equals_single_division_by_product(self, x, ds):
        product = 1
        for d in ds:
            product *= d
        assert floor_div_chain(x, ds) == x // product

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            floor_div_chain(-1, [2])
        with pytest.raises(ValueError):
            floor_div_chain(10, [0])
