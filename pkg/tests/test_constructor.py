import pytest

from invword.gf import make_field, irreducible_polys
from invword.matrix import GroupSpec, Mat, transvection_h
from invword.canonical import companion, gen_jordan_block, class_transversal
from invword.perm import Perm
from invword.constructor import (ConstructError, Unreachable, Witness,
                                 WitnessStep, brute_force_witness,
                                 construct_involution, find_partner, replay,
                                 sl2_witness, witness_from_json,
                                 witness_to_json)

ctx2 = make_field(2)
ctx3 = make_field(3)
ctx4 = make_field(4)
ctx5 = make_field(5)
ctx7 = make_field(7)


def ok(w):
    rep = replay(w)
    assert rep.ok, rep.violation
    return w


def labels(w):
    return sorted({s.case for s in w.steps})


# -- 2x2 core -------------------------------------------------------------


def test_sl2_semisimple_commutator_route():
    w = ok(sl2_witness(Mat(ctx5, [[2, 0], [0, 3]])))
    assert w.length == 6 and labels(w) == ["sl2-commutator"]
    w = ok(sl2_witness(Mat(ctx7, [[2, 1], [0, 4]])))
    assert w.length == 4 and labels(w) == ["sl2-commutator"]


def test_sl2_unipotent_routes():
    w = ok(sl2_witness(Mat(ctx4, [[1, 1], [0, 1]])))
    assert w.length == 1 and labels(w) == ["sl2-unipotent"]
    w = ok(sl2_witness(Mat(ctx5, [[1, 1], [0, 1]])))
    assert w.length == 3 and labels(w) == ["sl2-unipotent"]
    w = ok(sl2_witness(Mat(ctx5, [[4, 1], [0, 4]])))
    assert w.length == 6 and labels(w) == ["sl2-square"]


def test_sl2_lower_routes():
    w = ok(sl2_witness(Mat(ctx5, [[0, 2], [2, 0]])))
    assert w.length == 1 and labels(w) == ["sl2-antidiagonal"]
    w = ok(sl2_witness(Mat(ctx5, [[4, 0], [3, 4]])))
    assert w.length == 12 and labels(w) == ["sl2-twist"]


def test_sl2_target_is_projective_involution():
    w = sl2_witness(Mat(ctx5, [[2, 0], [0, 3]]))
    t = w.target
    assert not t.is_scalar()
    sq = t * t
    assert sq.is_scalar() and sq[0, 0] in (1, ctx5.neg(1))


def test_sl2_witness_rejections():
    with pytest.raises(ValueError):
        sl2_witness(Mat(ctx3, [[1, 1], [0, 1]]))   # q <= 3: search territory
    with pytest.raises(ValueError):
        sl2_witness(Mat(ctx5, [[2, 0], [0, 1]]))   # det 2
    with pytest.raises(ValueError):
        sl2_witness(Mat(ctx5, [[4, 0], [0, 4]]))   # central


# -- single-block reduction routes ----------------------------------------


def test_m1_route():
    f = next(f for f in irreducible_polys(ctx5, 3) if f[0] == ctx5.neg(1))
    w = ok(construct_involution(companion(ctx5, f), GroupSpec("SL", 3, 5)))
    assert w.length == 24 and not w.reseeded()
    assert "m1-reduction" in labels(w)


def test_m1_route_q3():
    f = next(f for f in irreducible_polys(ctx3, 3) if f[0] == ctx3.neg(1))
    w = ok(construct_involution(companion(ctx3, f), GroupSpec("SL", 3, 3)))
    assert w.length == 16 and not w.reseeded()


def test_mn_route_unipotent():
    g = Mat(ctx5, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    w = ok(construct_involution(g, GroupSpec("SL", 3, 5)))
    assert w.length == 12 and "mn-reduction" in labels(w)


def test_mn_route_scaled():
    g = Mat(ctx5, [[2, 2, 0, 0], [0, 2, 2, 0], [0, 0, 2, 2], [0, 0, 0, 2]])
    assert g.det() == 1
    w = ok(construct_involution(g, GroupSpec("SL", 4, 5)))
    assert w.length == 12 and "mn-reduction" in labels(w)


def test_m2_route_n4():
    f = next(f for f in irreducible_polys(ctx5, 2)
             if gen_jordan_block(ctx5, f, 2).det() == 1)
    g = gen_jordan_block(ctx5, f, 2)
    w = ok(construct_involution(g, GroupSpec("SL", 4, 5)))
    assert w.length == 48 and not w.reseeded()
    assert "m2-reduction" in labels(w)


def test_m2_route_n6():
    f = next(f for f in irreducible_polys(ctx2, 3)
             if gen_jordan_block(ctx2, f, 2).det() == 1)
    w = ok(construct_involution(gen_jordan_block(ctx2, f, 2),
                                GroupSpec("SL", 6, 2)))
    assert w.length == 4 and labels(w) == ["m2-reduction"]
    f = next(f for f in irreducible_polys(ctx3, 3)
             if gen_jordan_block(ctx3, f, 2).det() == 1)
    w = ok(construct_involution(gen_jordan_block(ctx3, f, 2),
                                GroupSpec("SL", 6, 3)))
    assert w.length == 16 and "m2-reduction" in labels(w)


def test_m2_route_n8_det_repair_blocked_reseeds():
    # over GF(3) the needed scalar correction is never an 8th power, so
    # the straight word is rejected and the commutator restart kicks in
    f = next(f for f in irreducible_polys(ctx3, 4)
             if gen_jordan_block(ctx3, f, 2).det() == 1)
    w = ok(construct_involution(gen_jordan_block(ctx3, f, 2),
                                GroupSpec("SL", 8, 3)))
    assert w.reseeded() and w.length == 16
    f = next(f for f in irreducible_polys(ctx5, 4)
             if gen_jordan_block(ctx5, f, 2).det() == 1)
    w = ok(construct_involution(gen_jordan_block(ctx5, f, 2),
                                GroupSpec("SL", 8, 5)))
    assert w.reseeded() and w.length == 24


def test_ext_descent_route():
    f = next(iter(irreducible_polys(ctx2, 2)))
    w = ok(construct_involution(gen_jordan_block(ctx2, f, 3),
                                GroupSpec("SL", 6, 2)))
    assert w.length == 2 and labels(w) == ["descent/mn-reduction"]
    f = next(f for f in irreducible_polys(ctx3, 2)
             if gen_jordan_block(ctx3, f, 3).det() == 1)
    w = ok(construct_involution(gen_jordan_block(ctx3, f, 3),
                                GroupSpec("SL", 6, 3)))
    assert w.length == 12 and labels(w) == ["descent/mn-reduction"]


def test_decomposable_route():
    g = Mat(ctx5, [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]])
    w = ok(construct_involution(g, GroupSpec("SL", 4, 5)))
    assert w.length == 12 and not w.reseeded()
    g = Mat(ctx5, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    w = ok(construct_involution(g, GroupSpec("SL", 3, 5)))
    assert w.length == 12 and w.reseeded()


def test_gl_reseed_route():
    g = Mat(ctx7, [[3, 0], [0, 1]])
    w = ok(construct_involution(g, GroupSpec("GL", 2, 7)))
    assert w.reseeded() and w.length == 4
    assert w.net_exponent == 0    # commutator restarts always balance


def test_find_partner_frozen():
    assert find_partner(Mat(ctx5, [[1, 1], [0, 1]])).to_text() == "1,0;1,1"
    assert find_partner(Mat(ctx7, [[2, 0], [0, 3]])).to_text() == "1,1;0,1"
    with pytest.raises(ValueError):
        find_partner(Mat(ctx5, [[2, 0], [0, 2]]))


# -- excluded pairs and the search ladder ----------------------------------


def test_excluded_sl22():
    w = ok(construct_involution(Mat(ctx2, [[1, 1], [0, 1]]),
                                GroupSpec("SL", 2, 2)))
    assert w.length == 1 and labels(w) == ["bfs"]


def test_excluded_sl22_order3_unreachable():
    g = Mat(ctx2, [[0, 1], [1, 1]])
    with pytest.raises(Unreachable) as ei:
        construct_involution(g, GroupSpec("SL", 2, 2))
    cert = ei.value.certificate
    assert cert == {"group_order": 6, "classes_in_closure": 2,
                    "closure_size": 3, "levels_explored": 2,
                    "involution_classes_in_group": 1}


def test_excluded_sl23_transversal():
    lens = []
    for g, _ in class_transversal(ctx3, 2):
        w = ok(construct_involution(g, GroupSpec("SL", 2, 3)))
        assert labels(w) == ["bfs"]
        lens.append(w.length)
    assert lens == [2, 2, 2, 2, 1, 1]


def test_excluded_sl32_transversal():
    lens = []
    for g, _ in class_transversal(ctx2, 3):
        w = ok(construct_involution(g, GroupSpec("SL", 3, 2)))
        lens.append(w.length)
    assert lens == [2, 2, 1, 2, 2]


def test_excluded_sl43_too_large_falls_through():
    # |SL(4,3)| is past the enumeration cap; the pair is excluded from
    # the reduction routes but the guard steps aside rather than fail
    g = Mat(ctx3, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    w = ok(construct_involution(g, GroupSpec("SL", 4, 3)))
    assert w.length <= 48


def test_brute_force_lengths_are_minimal():
    # BFS levels are exact distances, so a projective involution itself
    # comes back at length 1
    g = Mat(ctx3, [[0, 1], [2, 0]])
    assert (g * g).is_scalar() and not g.is_scalar()
    w = brute_force_witness(g, GroupSpec("SL", 2, 3))
    assert w.length == 1


# -- permutation routes ----------------------------------------------------


def test_alt_partner_witness():
    g = Perm.from_cycles("(1,2,3,4,5)", 6)
    w = ok(construct_involution(g, GroupSpec("Alt", 6)))
    assert w.length == 2 and labels(w) == ["alt-partner"]
    assert w.certificate is None


def test_a5_search_witness():
    g = Perm.from_cycles("(1,2,3,4,5)", 5)
    w = ok(construct_involution(g, GroupSpec("Alt", 5)))
    assert w.length == 3 and labels(w) == ["a5-search"]
    assert w.certificate == {"products_checked": 156,
                             "no_witness_of_length": 2,
                             "class_inverse_closed": True}


def test_sym_route_accepts_odd_input():
    g = Perm.from_cycles("(1,2)", 4)
    w = ok(construct_involution(g, GroupSpec("Sym", 4)))
    assert w.target.parity() == 0


def test_perm_rejections():
    with pytest.raises(ValueError):
        construct_involution(Perm.identity(6), GroupSpec("Alt", 6))
    with pytest.raises(ValueError):
        construct_involution(Perm.from_cycles("(1,2)", 6), GroupSpec("Alt", 6))


def test_matrix_rejections():
    with pytest.raises(ValueError):
        construct_involution(Mat(ctx5, [[2, 0], [0, 2]]),
                             GroupSpec("SL", 2, 5))   # central, det 4=1? no
    with pytest.raises(ValueError):
        construct_involution(Mat(ctx5, [[2, 0], [0, 1]]),
                             GroupSpec("SL", 2, 5))   # det 2
    with pytest.raises(ValueError):
        construct_involution(Mat(ctx5, [[1, 1], [0, 1]]),
                             GroupSpec("PSL", 2, 5))  # family unsupported


# -- transversal sweeps ----------------------------------------------------


@pytest.mark.parametrize("n,q", [(2, 5), (2, 7), (3, 3)])
def test_every_class_gets_a_witness(n, q):
    ctx = make_field(q)
    count = 0
    for g, _ in class_transversal(ctx, n):
        w = ok(construct_involution(g, GroupSpec("SL", n, q)))
        assert w.length <= (96 if w.reseeded() else 48)
        count += 1
    assert count > 0


# -- replay and serialization ----------------------------------------------


def _sample_witness():
    return construct_involution(Mat(ctx5, [[2, 0], [0, 3]]),
                                GroupSpec("SL", 2, 5))


def test_replay_flags_empty_and_oversize():
    w = _sample_witness()
    assert replay(Witness(w.spec, w.g, [], w.target)).violation == \
        "empty-witness"
    eye = Mat.identity(ctx5, 2)
    long = [(eye, 1, "x")] * 97
    assert replay(Witness(w.spec, w.g, long, w.target)).violation == \
        "length-exceeds-96"


def test_replay_flags_tampering():
    w = _sample_witness()
    w.steps[0] = WitnessStep(w.steps[0].c, -w.steps[0].e, "x")
    assert replay(w).violation == "net-exponent-mismatch"
    w = _sample_witness()
    w.steps[0] = WitnessStep(Mat(ctx5, [[1, 2], [0, 1]]), w.steps[0].e, "x")
    assert replay(w).violation == "product-mismatch"
    w = _sample_witness()
    w.steps[0] = WitnessStep(Mat(ctx5, [[2, 0], [0, 1]]), w.steps[0].e, "x")
    assert replay(w).violation == "conjugator-determinant"


def test_replay_flags_bad_target():
    g = Mat(ctx5, [[1, 1], [0, 1]])
    eye = Mat.identity(ctx5, 2)
    w = Witness(GroupSpec("SL", 2, 5), g, [(eye, 1, "x"), (eye, 1, "x")],
                g * g)
    assert replay(w).violation == "target-not-projective-involution"


def test_replay_flags_perm_violations():
    g = Perm.from_cycles("(1,2,3)", 5)
    spec = GroupSpec("Alt", 5)
    odd = Perm.from_cycles("(1,2)", 5)
    w = Witness(spec, g, [(odd, 1, "x")], g)
    assert replay(w).violation == "conjugator-parity"
    t = Perm.from_cycles("(1,2)", 5)
    w = Witness(GroupSpec("Sym", 5), t, [(Perm.identity(5), 1, "x")], t)
    assert replay(w).violation == "target-parity"


def test_witness_json_roundtrip_matrix():
    w = _sample_witness()
    js = witness_to_json(w)
    w2 = witness_from_json(js)
    assert replay(w2).ok and witness_to_json(w2) == js


def test_witness_json_roundtrip_perm():
    w = construct_involution(Perm.from_cycles("(1,2,3,4,5)", 6),
                             GroupSpec("Alt", 6))
    js = witness_to_json(w)
    w2 = witness_from_json(js)
    assert replay(w2).ok and witness_to_json(w2) == js


def test_witness_json_tamper_detection():
    import json
    w = _sample_witness()
    obj = json.loads(witness_to_json(w))
    obj["net_exponent"] += 1
    with pytest.raises(ValueError):
        witness_from_json(json.dumps(obj))
    obj = json.loads(witness_to_json(w))
    swapped = "1,0;2,1" if obj["steps"][0]["c"] != "1,0;2,1" else "1,0;3,1"
    obj["steps"][0]["c"] = swapped
    w2 = witness_from_json(json.dumps(obj))
    assert not replay(w2).ok
