#!/usr/bin/env python3
"""What is the smallest interesting dimension for a given group order?

Every non-cosemisimple Hopf algebra without nontrivial skew-primitives must
contain six specific blocks: the grouplike block, a coradical block of some
simple size d > 1, a symmetric pair of level-1 edge blocks, a top pointed
block, and a higher diagonal block.  Summing the least possible dimension of
each gives the bound (2d+2)r + 2*lcm(d^2, r), minimized over d > 1; the
minimal forms realize it exactly.
"""

from blocksieve import NSP, check, lower_bound, minimal_form, total_dim

for r in (1, 2, 3, 5, 7):
    n_min, ds = lower_bound(r)
    print(f"group order {r}: no such Hopf algebra below dimension {n_min} "
          f"(minimizing sizes d in {sorted(ds)})")

print()
print("the two minimal forms at group order 3, both of dimension 42:")
for d in (2, 3):
    form = minimal_form(3, d)
    print(f"\n  L(3,{d}), total {total_dim(form)}:")
    for (level, d1, d2, dim) in form.entries():
        print(f"    level {level}: B({level},{d1},{d2}) = {dim}")
    violations = check(form, NSP)
    print(f"  rule check: {'all rules pass' if not violations else violations}")
