"""
Detecting torus knots among twisted torus knots
===============================================

Three closed-form criteria decide when K(p,q,r,+-1) is a torus knot.
Each detected match is cross-checked against the torus knot's
closed-form Alexander polynomial, and the corollary ties detection for
the K(H_{k+2},H_k,H_{k+1},-1) family to the maximal-pair property of
the seeds.
"""

from math import gcd

from ttklib import (TTKParams, alexander, braid_for, corollary_maximal_pair_check,
                    lee_torus_qsmall, torus_alexander)

print("K(p,q,p-q,-1) torus matches with p <= 13:")
for p in range(5, 14):
    for q in range(2, p):
        if gcd(p, q) != 1 or not q < p - q:
            continue
        m = lee_torus_qsmall(p, q)
        if not m.matched:
            continue
        delta = alexander(braid_for(TTKParams(p=p, q=q, r=p - q, twist_n=-1)))
        agrees = delta == torus_alexander(m.torus_p, abs(m.torus_q))
        chir = "" if m.torus_q > 0 else " (mirror)"
        print(f"  K({p},{q},{p-q},-1) = T({m.torus_p},{abs(m.torus_q)}){chir}"
              f"  alexander check: {'ok' if agrees else 'MISMATCH'}")

print()
print("torus <=> maximal pair, for three seed pairs:")
for (m, n) in [(4, 7), (3, 7), (2, 7)]:
    rep = corollary_maximal_pair_check(m, n, 4)
    flags = ", ".join(f"k={k}:{'torus' if t else 'not'}" for k, t in rep.per_k)
    print(f"  seeds ({m},{n}) maximal={rep.maximal}: {flags} -> "
          f"{'consistent' if rep.consistent else 'INCONSISTENT'}")
