import pytest

import oracles
from gintools.corpus import (collinear_points,
                             complete_intersection, determinantal,
                             determinantal_from_matrix, general_points,
                             parse_entry, point_ideal, render_entry,
                             twisted_cubic)
from gintools.gin import gin, variety_invariants
from gintools.ring import PolyRing
from gintools.staircase import InvariantProfile, gap_degrees, is_borel_fixed
from gintools.parsing import parse_polynomial


def test_single_point_is_two_linear_forms():
    ring = PolyRing(3)
    I = point_ideal(ring, (1, 2, 3))
    assert len(I.gens) == 2
    assert all(g.degree == 1 for g in I.gens)
    assert oracles.ideal_dim(list(I.gens), 1, 3, ring.prime) == 2


def test_three_general_points_profile():
    inv = variety_invariants(general_points(3, seed=0), seed=0)
    assert inv.table.entries[0][1] == InvariantProfile(2, (2, 1))


def test_five_general_points_hilbert():
    I = general_points(5, seed=0)
    counts = oracles.quotient_ring_dims(list(I.gens), 4, 3, I.ring.prime)
    assert counts == [1, 3, 5, 5, 5]


def test_points_are_saturated_by_construction():
    I = general_points(4, seed=3)
    result = gin(I, seed=0)
    assert all(g[-1] == 0 for g in result.gin.gens)


def test_twisted_cubic_quotient_values():
    I = twisted_cubic()
    counts = oracles.quotient_ring_dims(list(I.gens), 3, 4, I.ring.prime)
    assert counts[1:] == [4, 7, 10]


def test_collinear_points_have_gaps():
    I = collinear_points(4, seed=0)
    result = gin(I, seed=0)
    assert gap_degrees(result.gin) == (2, 3)


def test_complete_intersection_koszul_counts():
    I = complete_intersection(2, 2, 3, seed=0)
    counts = oracles.quotient_ring_dims(list(I.gens), 5, 4, I.ring.prime)
    assert counts == [1, 4, 8, 12, 16, 20]


def test_complete_intersection_surface_case():
    inv = variety_invariants(complete_intersection(2, 2, 4, seed=0), seed=0)
    assert inv.s_Z == inv.s_Gamma == 2


def test_determinantal_specializes_to_twisted_cubic():
    ring = PolyRing(4)
    x = [parse_polynomial(f"x{i}", ring) for i in range(4)]
    I = determinantal_from_matrix([[x[0], x[1], x[2]], [x[1], x[2], x[3]]])
    assert I.same_ideal(twisted_cubic())


def test_determinantal_random_surface():
    I = determinantal(4, seed=0)
    result = gin(I, seed=0, votes=5)
    ok, _ = is_borel_fixed(result.gin)
    assert ok
    assert all(g[-1] == 0 for g in result.gin.gens)
    inv = variety_invariants(I, seed=0)
    assert inv.s_Z == inv.s_Gamma == 2


def test_builders_reject_bad_arguments():
    with pytest.raises(ValueError):
        general_points(0, seed=0)
    with pytest.raises(ValueError):
        complete_intersection(1, 2, 3, seed=0)
    with pytest.raises(ValueError):
        determinantal(2, seed=0)


def test_builders_reject_field_exhaustion():
    with pytest.raises(ValueError, match="plane"):
        general_points(8, seed=0, prime=2)
    with pytest.raises(ValueError, match="line"):
        collinear_points(7, seed=0, prime=5)


def test_small_field_points_still_work():
    I = collinear_points(4, seed=1, prime=5)
    assert all(g.degree >= 1 for g in I.gens)


# ---------------------------------------------------------------------------
# entry files

def test_builtin_corpus_loads(corpus_entries):
    assert len(corpus_entries) == 10
    for entry in corpus_entries.values():
        assert entry.gens
        assert entry.expect["gin"]


def test_entry_roundtrip(corpus_entries):
    entry = corpus_entries["twisted-cubic"]
    again = parse_entry(render_entry(entry, comments=["round trip"]))
    assert again == entry


def test_entries_match_expected_values(corpus_entries, corpus_gins):
    from gintools.cli import check_expectations
    for name, entry in corpus_entries.items():
        inv = variety_invariants(entry.ideal(), seed=0, votes=5)
        ok, mismatches = check_expectations(entry, corpus_gins[name], inv)
        assert ok, (name, mismatches)


def test_expected_hilbert_matches_rank_oracle(corpus_entries):
    """The frozen Hilbert expectations agree with independent ranks."""
    for name in ("twisted-cubic", "points-5", "points-4-collinear"):
        entry = corpus_entries[name]
        expected = [int(v) for v in entry.expect["hilbert"].split(",")]
        counts = oracles.quotient_ring_dims(
            list(entry.gens), len(expected) - 1, entry.n + 1, entry.prime)
        assert counts == expected
