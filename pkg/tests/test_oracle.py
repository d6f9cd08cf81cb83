import pytest

from invword.matrix import GroupSpec, Mat
from invword.gf import make_field
from invword.perm import Perm
from invword.oracle import (GroupTooLarge, build_group, class_product_count,
                            conjugacy_classes, d_inv, dist_to_set,
                            group_order, involution_indices, is_simple,
                            orbital_diameter_report,
                            projective_involution_indices)


def test_order_formulas():
    assert group_order(GroupSpec("Sym", 5)) == 120
    assert group_order(GroupSpec("Alt", 5)) == 60
    assert group_order(GroupSpec("GL", 2, 3)) == 48
    assert group_order(GroupSpec("SL", 2, 3)) == 24
    assert group_order(GroupSpec("PSL", 2, 3)) == 12
    assert group_order(GroupSpec("PSL", 2, 7)) == 168
    assert group_order(GroupSpec("SL", 3, 2)) == 168
    assert group_order(GroupSpec("SL", 3, 4)) == 60480
    assert group_order(GroupSpec("PSL", 3, 4)) == 20160


def test_build_group_alt5():
    tbl = build_group(GroupSpec("Alt", 5))
    assert tbl.order == 60
    e = tbl.identity_index
    assert tbl.mul(e, e) == e
    # index_of and decode are mutually inverse
    for i in (0, 17, 59):
        assert tbl.index_of(tbl.decode(i)) == i
    # every generator really lands in the group
    for s in tbl.gens:
        assert tbl.mul(s, tbl.inv(s)) == e


def test_build_group_rejects_large():
    with pytest.raises(GroupTooLarge):
        build_group(GroupSpec("SL", 4, 3))   # order 12130560


def test_conjugacy_classes_alt5():
    tbl = build_group(GroupSpec("Alt", 5))
    ct = conjugacy_classes(tbl)
    assert sorted(ct.sizes) == [1, 12, 12, 15, 20]
    assert sum(ct.sizes) == 60
    # transporter invariant on every element
    for i in range(tbl.order):
        t = ct.transporter[i]
        r = ct.reps[ct.class_of[i]]
        assert tbl.mul(tbl.mul(t, r), tbl.inv(t)) == i


def test_conjugacy_classes_counts():
    assert conjugacy_classes(build_group(GroupSpec("SL", 2, 3))).n_classes == 7
    assert conjugacy_classes(build_group(GroupSpec("PSL", 2, 7))).n_classes == 6
    assert conjugacy_classes(build_group(GroupSpec("SL", 3, 2))).n_classes == 6


def test_psl_identifies_scalar_multiples():
    tbl = build_group(GroupSpec("PSL", 2, 5))
    assert tbl.order == 60
    ctx = make_field(5)
    m = Mat(ctx, [[1, 2], [0, 1]])
    assert tbl.index_of(m) == tbl.index_of(m.scale(4))   # -m is the same point


def test_involution_sets():
    a5 = build_group(GroupSpec("Alt", 5))
    assert len(involution_indices(a5)) == 15
    sl25 = build_group(GroupSpec("SL", 2, 5))
    # -I is the lone involution, and it is scalar: nothing squares to I
    # off-center, so the projective notion is the right target set
    assert len(involution_indices(sl25)) == 1
    proj = projective_involution_indices(sl25)
    assert len(proj) == 30
    minus = sl25.index_of(Mat(make_field(5), [[4, 0], [0, 4]]))
    for i in proj:
        assert sl25.mul(i, i) == minus


def test_dist_to_set_basics():
    tbl = build_group(GroupSpec("Alt", 5))
    inv = involution_indices(tbl)
    i22 = tbl.index_of(Perm.from_cycles("(1,2)(3,4)", 5))
    i3 = tbl.index_of(Perm.from_cycles("(1,2,3)", 5))
    i5 = tbl.index_of(Perm.from_cycles("(1,2,3,4,5)", 5))
    assert dist_to_set(tbl, i22, inv) == 1
    assert dist_to_set(tbl, i3, inv) == 2
    assert dist_to_set(tbl, i5, inv) == 3
    with pytest.raises(ValueError):
        dist_to_set(tbl, tbl.identity_index, inv)


def test_dist_to_set_nonnormal_target_falls_back():
    tbl = build_group(GroupSpec("Alt", 5))
    i3 = tbl.index_of(Perm.from_cycles("(1,2,3)", 5))
    one = tbl.index_of(Perm.from_cycles("(1,2)(3,4)", 5))
    # a single involution is not a union of classes; element search
    # still finds a product of two 3-cycles hitting it exactly
    assert dist_to_set(tbl, i3, {one}) == 2


def test_d_inv_alt5():
    rep = d_inv(build_group(GroupSpec("Alt", 5)))
    assert rep.value == 3
    by_size = {r[2]: r[3] for r in rep.rows}
    assert by_size[15] == 1 and by_size[20] == 2 and by_size[12] == 3


def test_d_inv_requires_simplicity():
    assert is_simple(GroupSpec("Alt", 5))
    assert is_simple(GroupSpec("PSL", 2, 7))
    assert not is_simple(GroupSpec("PSL", 2, 3))
    assert not is_simple(GroupSpec("SL", 2, 5))
    with pytest.raises(AssertionError):
        d_inv(build_group(GroupSpec("SL", 2, 5)))


def test_d_inv_sl32():
    # SL(3,2) is simple of order 168; every class is within 2 of an involution
    rep = d_inv(build_group(GroupSpec("SL", 3, 2)))
    assert rep.value == 2


def test_class_product_count_small():
    a4 = build_group(GroupSpec("Alt", 4))
    dt = a4.index_of(Perm.from_cycles("(1,2)(3,4)", 4))
    e = a4.identity_index
    # x * y = e with both in the size-3 class forces y = x^-1 = x
    assert class_product_count(a4, [dt, dt], e, cross_check=True) == 3
    assert class_product_count(a4, [dt, dt, dt], dt, cross_check=True) == 7
    # total over all targets must be |C|^m; per-class counts are constant
    ct = conjugacy_classes(a4)
    total = sum(
        class_product_count(a4, [dt, dt], ct.reps[k]) * ct.sizes[k]
        for k in range(ct.n_classes))
    assert total == 9


def test_class_product_count_indices_and_elements_agree():
    a5 = build_group(GroupSpec("Alt", 5))
    g = Perm.from_cycles("(1,2,3)", 5)
    t = Perm.from_cycles("(1,2)(3,4)", 5)
    gi, ti = a5.index_of(g), a5.index_of(t)
    assert class_product_count(a5, [g, g], t) == \
        class_product_count(a5, [gi, gi], ti)


def test_orbital_diameter_report():
    rep = orbital_diameter_report()
    assert rep.ok
    # the nondiagonal orbital graphs are exactly the class Cayley graphs,
    # so the two diameter families coincide here
    assert sorted(rep.orbital_diameters.values()) == [2, 2, 3, 3]
    assert sorted(rep.class_diameters.values()) == [2, 2, 3, 3]
    assert rep.orbdiam == 3 and rep.d_t == 3
    assert len(rep.matching) == 4
    assert 2 * rep.orbdiam >= rep.d_t
    assert rep.orbdiam <= 72 * rep.d_t
