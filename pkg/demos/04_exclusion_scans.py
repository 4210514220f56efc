#!/usr/bin/env python3
"""Dimension exclusion tables for prime group orders.

For a prime group order p, write the total dimension as t*p and ask which
multipliers t admit any rule-satisfying block system at all.  The excluded t
are dimensions where no non-cosemisimple Hopf algebra without nontrivial
skew-primitives can exist with that group order.
"""

from blocksieve import NSP, scan

for r, t_max in [(2, 16), (3, 20), (5, 21)]:
    rows = scan(r, t_max, NSP)
    excluded = [t for (t, verdict, _) in rows if verdict == "infeasible"]
    feasible = [t for (t, verdict, _) in rows if verdict == "feasible"]
    print(f"group order {r}, t up to {t_max}:")
    print(f"  excluded  t: {excluded}")
    print(f"  feasible  t: {feasible}")
    witness_digest = {
        t: [(i, v) for (*i, v) in cert.witness.entries()]
        for (t, verdict, cert) in rows
        if verdict == "feasible"
    }
    first = feasible[0]
    print(f"  first feasible witness (t={first}):")
    for idx, v in witness_digest[first]:
        print(f"    B{tuple(idx)} = {v}")
    print()
