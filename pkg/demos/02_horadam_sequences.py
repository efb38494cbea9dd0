"""
Horadam sequences, slope invariants, and maximal pairs
======================================================

The (m,n)-sequence obeys H_k = H_{k-2} + H_{k-1}.  Two quadratic slope
sequences s_k and t_k govern which twisted torus knots built from the
sequence can share a knot type; both increase with gaps of at least 2.
A pair (m,n) is "maximal" when its Euclidean quotient chain is all 1s
with a final quotient of 1 or 2, which happens exactly when (m,n) sits
inside a (+-1, a)-sequence.
"""

from ttklib import (HoradamSpec, check_slope_relations, embed_in_unit_sequence,
                    euclid_trace, is_maximal_pair, slope_s, slope_t)

spec = HoradamSpec(2, 7)
print("(2,7)-sequence:", spec.terms(8))
print("slopes:")
for k in range(1, 6):
    print(f"  k={k}  s_k={slope_s(spec, k):>6}  t_k={slope_t(spec, k):>6}")

report = check_slope_relations(spec, 20)
print("slope identities up to k=20:", "all hold" if report.ok else report.first_violation)

print()
for (m, n) in [(8, 13), (4, 7), (3, 7), (2, 7)]:
    tr = euclid_trace(m, n)
    tag = "maximal" if is_maximal_pair(m, n) else "not maximal"
    print(f"({m},{n}): quotients {list(tr.quotients)} -> {tag}")
    emb = embed_in_unit_sequence(m, n)
    if emb is not None:
        seq = emb.spec().terms(emb.start_index + 3)
        print(f"        embeds in the ({emb.sign:+d},{emb.a})-sequence {seq} "
              f"at index {emb.start_index}")
