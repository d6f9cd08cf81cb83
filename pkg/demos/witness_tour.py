"""Walk one element of each reduction route through the constructor and
print the resulting word.

Every witness is a sequence of steps (c, e): the product of c g^e c^-1
over the steps equals the recorded target, a non-scalar matrix squaring
to plus or minus the identity."""

from invword.canonical import companion, gen_jordan_block
from invword.constructor import construct_involution, replay, witness_to_json
from invword.gf import irreducible_polys, make_field
from invword.matrix import GroupSpec, Mat


def tour(tag, g, spec):
    w = construct_involution(g, spec)
    rep = replay(w)
    routes = sorted({s.case for s in w.steps})
    print("=" * 64)
    print("%s  (%s)" % (tag, ", ".join(routes)))
    print("g =")
    print(g)
    print("length %d, net exponent %+d, replay %s"
          % (w.length, w.net_exponent, "ok" if rep.ok else rep.violation))
    print("target =")
    print(w.target)
    t2 = w.target * w.target
    print("target^2 is %sI" % ("-" if t2[0, 0] != 1 else ""))


ctx5 = make_field(5)
ctx2 = make_field(2)

tour("2x2 semisimple", Mat(ctx5, [[2, 0], [0, 3]]), GroupSpec("SL", 2, 5))
tour("2x2 unipotent", Mat(ctx5, [[1, 1], [0, 1]]), GroupSpec("SL", 2, 5))

f = next(f for f in irreducible_polys(ctx5, 3) if f[0] == ctx5.neg(1))
tour("irreducible companion 3x3", companion(ctx5, f), GroupSpec("SL", 3, 5))

tour("scaled regular unipotent",
     Mat(ctx5, [[2, 2, 0, 0], [0, 2, 2, 0], [0, 0, 2, 2], [0, 0, 0, 2]]),
     GroupSpec("SL", 4, 5))

f = next(iter(irreducible_polys(ctx2, 2)))
tour("quadratic block, multiplicity 3 (field descent)",
     gen_jordan_block(ctx2, f, 3), GroupSpec("SL", 6, 2))

tour("block diagonal split",
     Mat(ctx5, [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]]),
     GroupSpec("SL", 4, 5))

print("=" * 64)
print("witness JSON for the first example:")
print(witness_to_json(construct_involution(Mat(ctx5, [[2, 0], [0, 3]]),
                                           GroupSpec("SL", 2, 5))))
