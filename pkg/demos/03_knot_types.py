"""
Knot-type relations among Horadam twisted torus knots
=====================================================

Invariant comparisons corroborate the three isotopy/mirror relations
and the reduction chain that collapses every K(H_{k+2}, H_k, H_{k+1}, -1)
to the bottom of its family, up to mirror image.  Equal invariants are
evidence, not proof; an inequality would falsify the construction.
"""

from ttklib import (HoradamTTK, resolve, surface_slope, verify_lemma7,
                    verify_lemma8, verify_lemma9, verify_prop12_1)

print("K(p,q,p-q,+1) ~ K(p,p-q,q,+1):")
for (p, q) in [(5, 2), (7, 2), (7, 3)]:
    rep = verify_lemma7(p, q)
    print(f"  (p,q)=({p},{q}): {rep.invariants} -> {rep.verdict}")

print("K(p,q,p+q,-1) ~ mirror of K(p,p+q,q,+1):")
for (p, q) in [(3, 2), (4, 3), (5, 2)]:
    rep = verify_lemma8(p, q)
    print(f"  (p,q)=({p},{q}): {rep.invariants} -> {rep.verdict}")

print("K(H_{k+3},H_{k+2},H_{k+1},-1) ~ K(H_{k+1},H_k,H_{k+2},+1):")
for (m, n, k) in [(1, 2, 1), (2, 3, 0), (3, 4, 0)]:
    rep = verify_lemma9(m, n, k)
    print(f"  seeds ({m},{n}), k={k}: {rep.invariants} -> {rep.verdict}")

print("reduction chain for K(H_{k+2},H_k,H_{k+1},-1):")
for (m, n) in [(2, 3), (2, 7)]:
    rep = verify_prop12_1(m, n, 2)
    print(f"  seeds ({m},{n}): {rep.invariants} -> {rep.verdict}")

# surface slopes of the six types at one seed pair
print()
print("surface slopes for seeds (2,7), k=1:")
for ty in range(1, 7):
    params = resolve(HoradamTTK(2, 7, 1, ty))
    print(f"  type {ty}: {params.label():>16} slope {surface_slope(params):>6}")
