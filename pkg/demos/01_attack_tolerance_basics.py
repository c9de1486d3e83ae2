"""Why conductance alone misses node attacks, and what VAT measures.

A star has the best possible conductance: every admissible vertex set
sends out as many edges as its volume, so no sparse edge bottleneck
exists.  Yet deleting the single hub shatters it into isolated leaves.
Vertex attack tolerance (VAT) prices exactly that: the cheapest attack
set relative to how much of the graph it disconnects.
"""

import vattol as vt


def describe(name, g):
    tau = vt.vat_exact(g)
    phi = vt.conductance_exact(g)
    print(f"{name:12s} n={g.n:2d} m={g.m:2d}  "
          f"conductance = {str(phi.value):5s}  "
          f"attack tolerance = {str(tau.value):5s}  "
          f"best attack = {tau.witness_vertices}")


print("A star keeps maximal conductance while one vertex holds it together:")
for leaves in (3, 5, 8):
    describe(f"star({leaves})", vt.star(leaves))

print()
print("Regular graphs tell a different story; there the two measures")
print("track each other (that is what the verification suite checks):")
for name, g in [
    ("cycle(6)", vt.cycle(6)),
    ("cycle(12)", vt.cycle(12)),
    ("complete(6)", vt.complete(6)),
    ("petersen", vt.petersen()),
]:
    describe(name, g)

print()
g = vt.star(5)
tau = vt.vat_exact(g)
print("Attacking the star hub removes 1 vertex and strands 4 leaves:")
print(f"  witness {tau.witness_vertices} -> survivors "
      f"{[vt.vertices_from_mask(c) for c in vt.components(g, tau.witness)]}")
print(f"  value |S| / (|V - S - C_max| + 1) = {tau.value}")
