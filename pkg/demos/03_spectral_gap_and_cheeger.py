"""The normalized spectral gap and the Cheeger sandwich.

lambda2 is the second largest eigenvalue of the normalized adjacency
matrix (equal to the random-walk transition matrix on regular graphs);
1 - lambda2 is the spectral gap.  Cheeger's inequality pins the gap
between phi^2/2 and 2*phi, and some families meet the upper bound with
exact equality.
"""

import vattol as vt

print(f"{'graph':16s} {'phi':>6s} {'phi^2/2':>9s} {'gap':>9s} {'2*phi':>7s}  tight?")
for name, g in [
    ("complete(2)", vt.complete(2)),
    ("complete(4)", vt.complete(4)),
    ("cycle(4)", vt.cycle(4)),
    ("cycle(6)", vt.cycle(6)),
    ("cycle(12)", vt.cycle(12)),
    ("hypercube(3)", vt.hypercube(3)),
    ("hypercube(4)", vt.hypercube(4)),
    ("petersen", vt.petersen()),
    ("complete_bip(4)", vt.complete_bipartite(4)),
]:
    phi = vt.conductance_exact(g).value
    gap = vt.spectral_gap(g)
    lower = float(phi * phi / 2)
    upper = float(2 * phi)
    assert lower <= gap + 1e-9 <= upper + 2e-9
    tight = "equality" if abs(gap - upper) <= 1e-9 else ""
    print(f"{name:16s} {str(phi):>6s} {lower:9.4f} {gap:9.4f} {upper:7.4f}  {tight}")

print()
print("Hypercubes and even complete graphs sit exactly on the upper bound;")
print("the eigensolver reports its residual so the tolerance is auditable:")
res = vt.lambda2(vt.hypercube(4))
print(f"  hypercube(4): lambda2 = {res.lambda2:.12f}, residual = {res.residual:.2e}")
