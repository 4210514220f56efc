#!/usr/bin/env python3
"""Deciding a (dimension, group order) pair with a certificate.

Feasible answers come with the lexicographically least witness table, already
verified against every rule.  Infeasible answers mean the bounded search
space was exhausted; the certificate keeps the top-level case split and which
rule closed each case, plus counters of every pruning reason.
"""

import json

from blocksieve import NSP, FeasibilityProblem, solve

for dim, r in [(42, 3), (45, 3), (95, 5)]:
    cert = solve(FeasibilityProblem(dim, r, NSP))
    print(f"dim {dim}, group order {r}: {cert.verdict} "
          f"({cert.stats['nodes']} nodes, {cert.stats['supports_checked']} supports)")
    if cert.feasible:
        for (level, d1, d2, v) in cert.witness.entries():
            print(f"    B({level},{d1},{d2}) = {v}")
    else:
        for line in cert.refutation_summary[:5]:
            print("    " + line)
    print()

print("certificate JSON for (45, 3):")
cert = solve(FeasibilityProblem(45, 3, NSP))
print(json.dumps(cert.as_json_dict(), sort_keys=True, indent=1)[:800], "...")
