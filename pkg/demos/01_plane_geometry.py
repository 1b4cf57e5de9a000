"""A tour of the euclidean plane in Cl(2,0,1).

1-vectors are lines, 2-vectors are points, and the single degenerate
direction e0 is the ideal line.  Everything euclidean (distances,
angles, perpendiculars) comes out of the geometric product even though
the metric cannot be inverted.
"""

import math

from pgakit import (angle, distance, ideal_norm, join, normalize, pga2d,
                    point, point_coords, rotator, sandwich, translator)
from pgakit.metric import line2d, perp_through_point

alg = pga2d()
bl = alg.blades

print("== the degenerate planar algebra ==")
print("basis:", ", ".join(alg.blade_names))
print("e0 * e0 =", bl["e0"] * bl["e0"], "   (the ideal line squares to zero)")
print("e1 * e2 =", bl["e1"] * bl["e2"], "  (two coordinate lines meet in the origin)")
print("I * I   =", bl["I"] * bl["I"])
print()

print("== points, lines, incidence ==")
p = point(alg, 3.0, 4.0)
q = point(alg, 0.0, 0.0)
print("p = (3,4) embeds as:", p)
print("distance(p, origin) =", distance(p, q))
ln = join(p, q)
print("their joining line p & q:", ln)
print("meet with the line y = 1:", normalize(ln ^ line2d(alg, 0, 1, -1)))
print()

print("== free vectors are ideal points ==")
v = alg.multivector({"E1": 3.0, "E2": 4.0})
print("v = 3 E1 + 4 E2 has length", ideal_norm(v), "measured against any point")
print()

print("== angles and perpendiculars ==")
a = normalize(line2d(alg, 1.0, 0.0, -1.0))      # x = 1
b = normalize(line2d(alg, 1.0, -1.0, 0.0))      # x = y
print("angle between x=1 and x=y:", math.degrees(angle(a, b)), "degrees")
foot = perp_through_point(p, a)
print("perpendicular to x=1 through p:", foot)
print()

print("== isometries are sandwiches ==")
r = point(alg, 0.5, 0.5)
img = sandwich(a, r)
print("reflecting (0.5, 0.5) in the line x=1 gives", point_coords(img))
t = translator(alg, (2.0, 0.0))
print("the translator by (2,0) is the rotor", t)
print("it moves (0.5, 0.5) to", point_coords(sandwich(t, r)))
g = rotator(point(alg, 1.0, 0.0), math.pi / 2)
print("a quarter turn about (1,0) sends the origin to",
      point_coords(sandwich(g, q)))
print()

print("== triangle centers fall out of joins and meets ==")
pa, pb, pc = point(alg, 0.0, 0.0), point(alg, 4.0, 0.0), point(alg, 1.0, 3.0)
a_, b_, c_ = join(pb, pc), join(pc, pa), join(pa, pb)
medians = (join(pb + pc, pa), join(pc + pa, pb))
centroid = normalize(medians[0] ^ medians[1])
bisectors = ((pb + pc) | a_, (pc + pa) | b_)
circum = normalize(bisectors[0] ^ bisectors[1])
altitudes = (pa | a_, pb | b_)
ortho = normalize(altitudes[0] ^ altitudes[1])
print("centroid     ", point_coords(centroid))
print("circumcenter ", point_coords(circum))
print("orthocenter  ", point_coords(ortho))
euler = join(centroid, circum)
print("orthocenter on the Euler line?",
      abs((euler ^ ortho).pseudo_part) < 1e-12)
print("|MT| / |MP| =", distance(centroid, ortho) / distance(centroid, circum))
