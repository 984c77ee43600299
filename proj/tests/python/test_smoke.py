from fractions import Fraction

import pytest

import tropgrass as tg


def test_tree_space_counts():
    st = tg.tn_stats(5)
    assert (st["vertices"], st["facets"]) == (10, 15)
    assert tg.tn_stats(6)["f_vector"] == [25, 105, 105]


def test_tree_round_trip():
    w = tg.tree_vector(6, ["12|3456", "34|1256", "56|1234"])
    assert tg.four_point_check(w) is None
    t = tg.reconstruct_tree(w)
    assert len(t["splits"]) == 3
    assert tg.equal_mod_phi(tg.tree_vector(6, t["splits"]), w)


def test_four_point_violation():
    w = tg.tree_vector(4, ["12|34"])
    w["12"] = Fraction(-5)
    assert tg.four_point_check(w) is not None
    with pytest.raises(tg.FourPointViolation):
        tg.reconstruct_tree(w)


def test_plane_membership_and_type():
    w = tg.tree_vector(6, ["12|3456", "34|1256", "56|1234"])
    assert tg.plane_member(w, [0] * 6)
    assert not tg.plane_member(w, [0, 0, 5, 0, 0, 0])
    assert len(tg.plane_type(w)) == 9
    assert tg.dual(tg.dual(w)) == w


def test_g36():
    assert tg.g36_f_vector() == [65, 550, 1395, 1035]
    assert tg.g36_facet_census()["FFGG"] == 45
    w = tg.g36_sample("FFGG")
    assert tg.is_monomial_free(w)
    assert len(tg.plane_type(w)) == 28
    assert tg.equal_mod_phi(tg.reconstruct_plucker(w), w)


def test_tropical_minors_of_a_matrix():
    m = tg.tropical_minors([[0, 0, 0], [0, 1, 2]])
    assert m == {"12": 0, "13": 0, "23": 1}
