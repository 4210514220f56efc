#!/usr/bin/env python3
"""Breaking a block system one rule at a time.

Start from a system that passes every necessary condition, then damage it in
targeted ways and watch which rule reports the problem.  Violations are data:
each names its rule, the indices involved, and any missing witness.
"""

from blocksieve import NSP, BlockSystem, check, explain, minimal_form

good = minimal_form(3, 2)
print("intact minimal form:", check(good, NSP) or "all rules pass")

experiments = {
    "drop one half of the level-1 edge pair": BlockSystem(3, {
        (0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6, (2, 1, 1): 3, (2, 2, 2): 12,
    }),
    "wrong multiple at an edge block": BlockSystem(3, {
        (0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 9, (1, 1, 2): 9,
        (2, 1, 1): 3, (2, 2, 2): 12,
    }),
    "oversized top pointed block": BlockSystem(3, {
        (0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6, (1, 1, 2): 6,
        (2, 1, 1): 6, (2, 2, 2): 12,
    }),
    "level-2 block with no chain through level 1": BlockSystem(3, {
        (0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6, (1, 1, 2): 6,
        (2, 1, 1): 3, (2, 2, 2): 12, (3, 2, 2): 12,
    }),
    "level gap between occupied levels": BlockSystem(3, {
        (0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6, (1, 1, 2): 6,
        (2, 1, 1): 3, (2, 2, 2): 12, (4, 2, 2): 12,
    }),
    "skew-primitive block under the nsp hypothesis": BlockSystem(2, {
        (0, 1, 1): 2, (1, 1, 1): 2,
    }),
}

for title, system in experiments.items():
    print(f"\n{title}:")
    for violation in check(system, NSP):
        print("  " + explain(violation))
