from fractions import Fraction

import pytest

import msindex as ms


def chair():
    return ms.Tree(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def test_counts():
    p7 = ms.Tree.path(7)
    assert ms.merrifield_simmons(p7) == 34
    assert ms.stability_number(p7) == 4
    assert ms.merrifield_simmons(ms.Tree.star(4)) == 9
    assert ms.count_stable_sets_bruteforce(chair()) == ms.merrifield_simmons(chair()) == 14


def test_big_count_is_exact():
    star = ms.Tree.star(100)
    assert ms.merrifield_simmons(star) == 2**99 + 1


def test_invalid_tree():
    with pytest.raises(ms.NotATree):
        ms.Tree(4, [(0, 1), (2, 3), (1, 2), (0, 3)])
    assert issubclass(ms.NotATree, ms.Error)


def test_canonical_code_round_trip():
    t = chair()
    code = ms.canonical_code(t)
    assert len(code) == 10
    assert ms.canonical_code(ms.Tree.from_code(code)) == code
    assert ms.canonical_code(ms.Tree.parse(t.to_edge_list())) == code


def test_enumeration():
    assert [len(ms.free_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    assert sum(len(ms.trees_with_alpha(9, a)) for a in range(1, 9)) == 47


def test_structure():
    c = ms.classify(chair())
    assert c["class"] == "AlmostTreeOfStars"
    assert c["exposed"] == 4
    assert ms.classify(ms.Tree.path(6))["class"] == "OddPath"
    assert ms.classify(ms.Tree.path(7))["class"] == "TreeOfStars"
    assert ms.heavy_light(18, 13) == {"heavy": 2, "light": 3, "heavy_size": 4, "light_size": 3}
    t = ms.realize(2, [(0, 1)], [3, 3])
    assert ms.merrifield_simmons(t) == 41
    assert ms.is_balanced(t)
    assert sorted(ms.center_tree(t)["labels"]) == [3, 3]
    assert "graph" in ms.to_dot(t)


def test_rotation():
    t = chair()
    rot = ms.construct_good_rotation_nontos(t)
    assert ms.is_good(t, rot)
    moved = ms.apply_rotation(t, rot)
    assert ms.merrifield_simmons(moved) == 13
    lhs, rhs = ms.f_delta_identity(t, rot)
    assert lhs == rhs == 1
    assert ms.decompose(t, rot)["decreases_f"]
    unbalanced = ms.realize(2, [(0, 1)], [4, 2])
    assert ms.is_good(unbalanced, ms.rebalance_rotation(unbalanced))
    assert ms.find_good_rotation(ms.Tree.path(5)) is None


def test_analytic():
    lo, hi = ms.r_k_bracket(2, Fraction(1, 10**12))
    assert isinstance(lo, Fraction)
    assert hi - lo <= Fraction(1, 10**12)
    assert (2 * lo + 1) ** 2 < 5 < (2 * hi + 1) ** 2
    assert ms.f_k(2, Fraction(1, 2)) == Fraction(-1, 4)
    assert ms.golden_ratio_bounds(chair())["passed"]


def test_extremal_and_verify():
    r = ms.extremal(5, 3)
    assert r["f_min"] == 13
    assert len(r["minimizers"]) == 1
    assert ms.extremal(14, 9, method="pruned")["f_min"] == ms.extremal(14, 9, jobs=2)["f_min"]
    with pytest.raises(ms.EmptyClass):
        ms.extremal(5, 1)
    report = ms.verify("structure", 12)
    assert report["passed"] and report["violations"] == []
