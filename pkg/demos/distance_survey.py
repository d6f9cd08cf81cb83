"""Exhaustive conjugacy-class distances in small simple groups.

For each nontrivial class C, the distance is the least k such that some
product of k conjugates (or inverses of conjugates) of a class member is
an involution.  Tables are exact, computed by breadth-first search over
class products."""

from invword.matrix import GroupSpec
from invword.oracle import build_group, d_inv, d_proj_inv

print("alternating groups: distance to an involution, per class")
for n in (5, 6, 7, 8):
    rep = d_inv(build_group(GroupSpec("Alt", n)))
    print("  Alt(%d): max distance %d" % (n, rep.value))
    for k, text, size, dist in rep.rows:
        print("    class %-18s size %-5d dist %d" % (text, size, dist))

print()
print("PSL(2,q): distance to an involution, per class")
for q in (5, 7, 8, 9, 11):
    rep = d_inv(build_group(GroupSpec("PSL", 2, q)))
    print("  PSL(2,%d): max distance %d over %d classes"
          % (q, rep.value, len(rep.rows)))

print()
print("SL(2,q): distance to a projective involution (matrices whose")
print("square is scalar), the relevant target for the matrix groups")
for q in (5, 7):
    rep = d_proj_inv(build_group(GroupSpec("SL", 2, q)))
    for k, text, size, dist in rep.rows:
        print("  SL(2,%d) class %-12s size %-4d dist %s"
              % (q, text.replace("\n", "|"), size, dist))
