"""Compare orbital-graph diameters with conjugate-product distances for
the square-with-swap action on Alt(5).

The domain is the group itself: pairs (u, v) act by w -> u^-1 w v and a
swap sends w -> w^-1.  Nondiagonal orbitals of the induced action on
pairs turn out to be Cayley graphs of conjugacy classes, so orbital
diameters and the distances measured by products of conjugates control
each other within fixed factors."""

from invword.oracle import orbital_diameter_report

rep = orbital_diameter_report()
print("square-with-swap action on Alt(5), 60 points")
print("nondiagonal orbital diameters:", sorted(rep.orbital_diameters.values()))
print("class Cayley graph diameters: ", sorted(rep.class_diameters.values()))
print("orbital <-> class matching:")
for orbital_id, class_id in sorted(rep.matching.items()):
    print("  orbital %-3s -> class %s (diameter %d)"
          % (orbital_id, class_id, rep.class_diameters[class_id]))
print("max orbital diameter %d, max class distance d_t %d"
      % (rep.orbdiam, rep.d_t))
print("2 * orbdiam >= d_t: %s    orbdiam <= 72 * d_t: %s"
      % (rep.lower_ok, rep.upper_ok))
assert rep.ok
