import pytest
from hypothesis import given
from hypothesis import strategies as st

from geodesy.weights import WeightData, enumerate_weight_data


def test_validation():
    with pytest.raises(ValueError):
        WeightData({1: 0}, {})
    with pytest.raises(ValueError):
        WeightData({1: -2}, {})
    wd = WeightData({1: 1, 3: 2}, {-1: 1})
    assert wd.plus == {3: 2, 1: 1}
    assert wd.dim_plus == 3 and wd.dim_minus == 1


def test_admissibility():
    assert WeightData({1: 1}, {-1: 1}).is_admissible()
    assert WeightData({0: 2}, {0: 2}).is_admissible()
    assert not WeightData({3: 1}, {-1: 1}).is_admissible()  # not negation-symmetric
    assert not WeightData({2: 1}, {-2: 1}).is_admissible()  # missing the weight-0 rung
    assert not WeightData({2: 1}, {0: 1}).is_admissible()
    assert WeightData({2: 1}, {0: 1, -2: 1}).is_admissible()
    assert WeightData({}, {}).is_admissible()


def test_sectors():
    wd = WeightData({2: 1, 1: 1}, {-1: 1, 0: 1})
    assert wd.odd_sector() == WeightData({1: 1}, {-1: 1})
    assert wd.even_sector() == WeightData({2: 1}, {0: 1})
    assert wd.odd_sector().sector(1) == wd.odd_sector()


def test_frozen_rank_one_enumeration():
    # computed by hand: dimension 2 holds either one standard representation
    # (weights +1, -1, split either way) or two trivials
    got = list(enumerate_weight_data(1))
    assert got == [
        WeightData({-1: 1}, {1: 1}),
        WeightData({0: 1}, {0: 1}),
        WeightData({1: 1}, {-1: 1}),
    ]


def test_rank_one_excludes_asymmetric_tables():
    listed = set(wd.key() for wd in enumerate_weight_data(1, max_weight=3))
    assert WeightData({3: 1}, {-1: 1}).key() not in listed
    assert WeightData({2: 1}, {0: 1}).key() not in listed


def test_frozen_rank_two_count():
    # by hand over the partitions of 4: dim4 gives C(4,2)=6 splits, 3+1 gives
    # 4, 2+2 gives 3, 2+1+1 gives 4, 1+1+1+1 gives 1, total 18
    assert len(list(enumerate_weight_data(2))) == 18


def test_enumeration_counts_regression():
    assert len(list(enumerate_weight_data(3))) == 99
    assert len(list(enumerate_weight_data(4))) == 533


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_enumeration_invariants(p):
    seen = set()
    for wd in enumerate_weight_data(p):
        assert wd.dim_plus == p and wd.dim_minus == p
        assert wd.is_admissible()
        assert all(abs(w) <= 2 * p - 1 for w in wd.all_weights())
        assert wd.key() not in seen
        seen.add(wd.key())


def test_enumeration_is_deterministic():
    first = [wd.key() for wd in enumerate_weight_data(3)]
    second = [wd.key() for wd in enumerate_weight_data(3)]
    assert first == second


def test_max_weight_bound_prunes():
    bounded = list(enumerate_weight_data(2, max_weight=1))
    assert all(max(abs(w) for w in wd.all_weights()) <= 1 for wd in bounded)
    assert WeightData({1: 2}, {-1: 2}) in bounded


def test_bad_arguments():
    with pytest.raises(ValueError):
        list(enumerate_weight_data(0))
    with pytest.raises(ValueError):
        list(enumerate_weight_data(2, max_weight=0))


def test_layout_spans():
    wd = WeightData({1: 2, 0: 1}, {0: 1, -1: 2})
    layout = wd.layout()
    assert layout.n_plus == 3 and layout.n_minus == 3 and layout.size == 6
    assert layout.span("plus", 1) == (0, 2)
    assert layout.span("plus", 0) == (2, 3)
    assert layout.span("minus", 0) == (3, 4)
    assert layout.span("minus", -1) == (4, 6)
    assert layout.weight_vector() == [1, 1, 0, 0, -1, -1]


def test_digest_and_json_round_trip():
    wd = WeightData({3: 1, 1: 2}, {-1: 2, -3: 1})
    assert WeightData.from_json_dict(wd.to_json_dict()) == wd
    assert wd.digest() == WeightData(dict(wd.plus), dict(wd.minus)).digest()
    assert len(wd.digest()) == 16


@given(
    st.dictionaries(st.integers(-5, 5), st.integers(1, 3), max_size=4),
    st.dictionaries(st.integers(-5, 5), st.integers(1, 3), max_size=4),
)
def test_weight_data_equality_and_hash(plus, minus):
    a = WeightData(plus, minus)
    b = WeightData(dict(plus), dict(minus))
    assert a == b and hash(a) == hash(b)
    assert WeightData.from_json_dict(a.to_json_dict()) == a
