from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodesy.candidates import (
    CandidateFormatError,
    candidate_from_json_dict,
    candidate_to_json_dict,
    diagonal_candidate,
    embedding_with_rank,
    lift_classification,
    load_candidate,
    save_candidate,
    standard_trivial_candidate,
)
from geodesy.checker import check_conditions
from geodesy.ladder import classify_weight_data
from geodesy.weights import enumerate_weight_data

BUNDLED = Path(__file__).resolve().parent.parent / "candidates"


def test_builders_pass_checks():
    for p in (1, 2, 3):
        for m in range(0, p + 1):
            report = check_conditions(embedding_with_rank(p, m))
            assert report.passed and report.totally_geodesic
            assert report.injective == (m > 0)


def test_builder_validation():
    with pytest.raises(ValueError):
        embedding_with_rank(2, 3)


def test_round_trip_of_builders():
    for candidate in (diagonal_candidate(2), standard_trivial_candidate(3)):
        doc = candidate_to_json_dict(candidate)
        back = candidate_from_json_dict(doc)
        assert back.f_u == candidate.f_u
        assert back.f_v == candidate.f_v
        assert back.f_w == candidate.f_w


def test_file_round_trip(tmp_path):
    path = tmp_path / "candidate.json"
    save_candidate(diagonal_candidate(2), path)
    loaded = load_candidate(path)
    assert loaded.f_w == diagonal_candidate(2).f_w
    # round trip again through the text form
    text_one = path.read_text()
    save_candidate(loaded, path)
    assert path.read_text() == text_one


def test_bundled_candidates_match_builders():
    diagonal = load_candidate(BUNDLED / "diagonal_p2.json")
    assert diagonal.f_u == diagonal_candidate(2).f_u
    assert diagonal.f_w == diagonal_candidate(2).f_w
    mixed = load_candidate(BUNDLED / "standard_trivial_p2.json")
    assert mixed.f_u == standard_trivial_candidate(2).f_u


def test_parse_errors_carry_field_diagnostics(tmp_path):
    with pytest.raises(CandidateFormatError, match="missing field 'p'"):
        candidate_from_json_dict({})
    with pytest.raises(CandidateFormatError, match="f_u"):
        candidate_from_json_dict({"p": 1, "f_u": [], "f_v": [], "f_w": []})
    doc = candidate_to_json_dict(diagonal_candidate(1))
    doc["f_u"][0][1][1] = "0"
    with pytest.raises(CandidateFormatError, match=r"f_u\[0\]\[1\]: zero denominator"):
        candidate_from_json_dict(doc)
    doc = candidate_to_json_dict(diagonal_candidate(1))
    doc["f_u"][0][1][0] = "one"
    with pytest.raises(CandidateFormatError, match="decimal integer"):
        candidate_from_json_dict(doc)
    truncated = tmp_path / "broken.json"
    truncated.write_text('{"p": 1, "f_u": [[')
    with pytest.raises(CandidateFormatError, match="line 1"):
        load_candidate(truncated)


def test_non_member_document_rejected():
    doc = candidate_to_json_dict(diagonal_candidate(1))
    doc["f_w"][0][0] = ["1", "1", "0", "1"]  # real diagonal entry: not skew
    with pytest.raises(CandidateFormatError, match="su"):
        candidate_from_json_dict(doc)


entry_strings = st.integers(-9, 9).map(str)


@given(
    st.integers(1, 2),
    st.data(),
)
@settings(max_examples=25, deadline=None)
def test_entry_grid_round_trip(p, data):
    n = 2 * p
    # exercise only the entry codec; the matrices need not be algebra members
    grid = data.draw(
        st.lists(
            st.lists(
                st.tuples(entry_strings, st.sampled_from(["1", "2", "3"]), entry_strings, st.sampled_from(["1", "2"])),
                min_size=n,
                max_size=n,
            ),
            min_size=n,
            max_size=n,
        )
    )
    from geodesy.candidates import _entry_from_json, _entry_to_json

    for i in range(n):
        for j in range(n):
            entry = _entry_from_json(list(grid[i][j]), "x")
            again = _entry_from_json(_entry_to_json(entry), "x")
            assert again == entry


def test_lift_of_every_feasible_class_passes(tmp_path):
    for p in (1, 2, 3):
        for wd in enumerate_weight_data(p):
            result = classify_weight_data(wd)
            if result.status != "feasible":
                continue
            candidate = lift_classification(result)
            report = check_conditions(candidate)
            assert report.passed, wd.describe()
            assert report.totally_geodesic
            assert report.h_spectrum == wd
            # the lift survives a trip through the wire format
            path = tmp_path / "lift.json"
            save_candidate(candidate, path)
            assert load_candidate(path).f_u == candidate.f_u


def test_lift_rejects_infeasible_results():
    from geodesy.ladder import WitnessError
    from geodesy.weights import WeightData

    result = classify_weight_data(WeightData({-1: 1}, {1: 1}))
    with pytest.raises(WitnessError):
        lift_classification(result)
