#!/usr/bin/env python3
"""From structure constants to a verdict.

The analyzer never touches floating point: the dual algebra, its radical,
the coradical filtration, the Wedderburn decomposition, and the isotypic
dimensions are all exact rational computations.  The resulting block system
is a basis invariant of the coalgebra, and the rule engine then says whether
it could possibly carry a Hopf algebra structure.
"""

from blocksieve import NON_COSEMISIMPLE, PLAIN, analyze
from blocksieve.corpus import (
    matrix_coalgebra,
    s3_dual_coalgebra,
    sweedler_coalgebra,
    sweedler_tensor_square,
)

cases = [
    ("4-dim coalgebra with skew-primitive pair", sweedler_coalgebra(), NON_COSEMISIMPLE),
    ("its tensor square (dim 16)", sweedler_tensor_square(), NON_COSEMISIMPLE),
    ("dual of the rational group algebra of S3", s3_dual_coalgebra(), PLAIN),
    ("2x2 comatrix coalgebra", matrix_coalgebra(2), PLAIN),
]

for title, coalgebra, flags in cases:
    result = analyze(coalgebra, flags)
    print(title)
    print(f"  components: {[(s.label, s.d) for s in result.components]}")
    print(f"  filtration dims: {list(result.filtration.dims)}")
    print(f"  blocks: {result.block_system}")
    if result.q_table:
        print(f"  isotypic table: {dict(sorted(result.q_table.items()))}")
    print(f"  verdict: {result.verdict}")
    for v in result.rule_report:
        print(f"    {v.rule}: {v.message}")
    print()
