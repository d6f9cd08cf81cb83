"""Evaluate the character-sum bounds over a grid of ranks and field
sizes, and print where each family's estimate first drops below 1.

A value below 1 certifies that a product of six conjugates covers the
relevant class; parameter pairs at 1 or above are the exceptions that
need separate treatment."""

from fractions import Fraction

from invword.bounds import FAMILIES, STATED_EXCEPTIONS, scan

for family in FAMILIES:
    checks, exceptions = scan(family, nmax=10, qmax=9)
    stated = STATED_EXCEPTIONS.get(family)
    print("%-8s %3d grid points, %2d exception(s) %s"
          % (family, len(checks), len(exceptions),
             sorted(exceptions) if exceptions else ""))
    if stated is not None and exceptions != {p for p in stated
                                             if p[0] <= 10 and p[1] <= 9}:
        print("         (differs from the recorded set %s)" % sorted(stated))
    worst = max(checks, key=lambda c: c.value)
    best = min(checks, key=lambda c: c.value)
    print("         largest  %-12s %s" % (worst.params, worst.value))
    print("         smallest %-12s %s" % (best.params,
                                          float(best.value)))

print()
print("growth along one slice, full-block linear case, q = 3:")
from invword.bounds import gl_full_block
for n in range(3, 9):
    v = gl_full_block(n, 3)
    print("  n = %d   bound = %-22s %s" % (n, v, "ok" if v < 1 else "FAILS"))
assert gl_full_block(3, 3) >= 1 and gl_full_block(4, 3) < Fraction(1)
