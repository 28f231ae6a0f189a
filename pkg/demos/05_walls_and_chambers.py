"""
Walls and chambers in the positive cone
=======================================

For a vector v of positive rank with minimal twisted rank r0 and
l = rk(v)/r0, classes xi with 0 < -xi^2 <= (l^2/4)(2l^2 + <v,v>) cut
walls out of the positive cone. Polarizations on no wall are general;
crossing a wall is what can change the moduli space.
"""

from k3moduli.lattices import Lattice
from k3moduli.mukai import MukaiVector, mukai_pairing
from k3moduli.walls import (WallQuery, is_general, same_chamber,
                            strong_generality, wall_bound, walls_between)

ns = Lattice(((2, 0), (0, -2)))          # signature (1,1), rho = 2
v = MukaiVector(2, (0, 0), -1)           # <v,v> = 4, l = 2

print("<v,v> =", mukai_pairing(v, v, ns), " wall bound =", wall_bound(v, 1, ns))

# H = (1,0) lies on the wall cut by xi = (0,1).
q = WallQuery(ns, v, 1, (1, 0))
general, witnesses = is_general((1, 0), q)
print("\nH=(1,0) general?", general)
for w in witnesses:
    print("  wall through H: xi =", w.xi, " -xi^2 =", w.norm)

# A segment crossing that wall: walls are reported with primitive,
# sign-normalized representatives, endpoint walls flagged.
seg = WallQuery(ns, v, 1, (2, 1), (2, -1))
print("\nwalls meeting the segment (2,1) -> (2,-1):")
for w in walls_between(seg):
    tag = " (through an endpoint)" if w.on_endpoint else ""
    print("  xi =", w.xi, " -xi^2 =", w.norm, tag)
print("same chamber?", same_chamber(seg))

# The minimum-norm criterion: once every -D^2 on H-perp exceeds the
# bound, H is general for every vector with that bound.
v_small = MukaiVector(1, (0, 0), -1)     # <v,v> = 2, l = 1, bound 1
q_small = WallQuery(ns, v_small, 1, (1, 0))
holds, min_norm = strong_generality((1, 0), q_small)
print("\nmin -D^2 on (1,0)-perp:", min_norm,
      "| exceeds the bound:", holds)

# Rank-one Neron-Severi lattices have no room for walls at all.
rho1 = WallQuery(Lattice(((2,),)), MukaiVector(1, (0,), -1), 1, (1,))
print("rho = 1 is always general:", is_general((1,), rho1))
