"""Necessary conditions on block systems of finite-dimensional Hopf algebras.

Every rule here is a condition that the block system of a finite-dimensional
Hopf algebra provably satisfies; a coalgebra whose block system breaks any
activated rule admits no compatible Hopf algebra structure.  Passing all rules
asserts nothing: these are necessary conditions only.

Throughout, r denotes the group order (the dimension of the grouplike part of
the coradical) and B(n,d1,d2) the block at level n with left and right simple
comodule dimensions d1 and d2.  Absent entries are read as dimension 0, except
that an absent (0,1,1) entry counts as r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockIndex, BlockSystem, ModeFlags, pointed_levels

# Rule ids in report order.  R7 and R8 are active only with the
# no-skew-primitives flag; RNC only with the non-cosemisimple flag.
RULE_ORDER = (
    "R0", "R1", "R2", "R3", "R4", "R5", "R6",
    "R7", "R8", "R9", "R11", "R12", "RNC",
)

RULE_NAMES = {
    "R0": "level-0 structure",
    "R1": "group divisibility",
    "R2": "edge divisibility",
    "R3": "antipode symmetry",
    "R4": "chain condition",
    "R5": "off-diagonal escalation",
    "R6": "top pointed block",
    "R7": "nsp necessary blocks",
    "R8": "nsp forcing",
    "R9": "level contiguity",
    "R11": "support-at-zero",
    "R12": "bicomodule divisibility",
    "RNC": "non-cosemisimplicity",
}

# One-line statement of what each rule asserts, used by reports.
RULE_ANCHORS = {
    "R0": "level 0 is the coradical: diagonal blocks, dim B(0,d,d) a positive multiple of d*d, dim B(0,1,1) = |G(H)|",
    "R1": "|G(H)| = dim B(0,1,1) divides the dimension of every block",
    "R2": "for n >= 1, dim B(n,d,1) and dim B(n,1,d) are multiples of d*|G(H)|",
    "R3": "the antipode carries B(n,d1,d2) onto B(n,d2,d1), so their dimensions agree",
    "R4": "a block at level n > 1 factors through every intermediate level: witnesses b with B(i,d1,b), B(n-i,b,d2) nonzero",
    "R5": "an off-diagonal block B(n,d1,d2), d1 != d2, forces B(n2,d1,d3) nonzero for some n2 > n",
    "R6": "dim B(m,1,1) = |G(H)| at the top pointed level m",
    "R7": "without nontrivial skew-primitives: B(1,1,1) = 0 and blocks B(1,d,1), B(1,1,d), B(k,d,d) (k>1), B(m,1,1) (m>1) all nonzero for some d > 1",
    "R8": "without nontrivial skew-primitives, a pointed level l with 1 < l < m forces edge blocks at some level l' > l backed at level l'-1",
    "R9": "the filtration grows strictly: every level up to the top one carries a block",
    "R11": "superscripts index simple subcoalgebras: any d used above level 0 needs B(0,d,d) nonzero",
    "R12": "a level-n block is a sum of simple bicomodules of dimension d1*d2, so d1*d2 divides it",
    "RNC": "non-cosemisimple: some block above level 0 is nonzero",
}


@dataclass(frozen=True)
class RuleViolation:
    """One broken rule: which rule, at which indices, and why."""

    rule: str
    indices: tuple[BlockIndex, ...]
    message: str
    missing_witness: str | None = None


def explain(v: RuleViolation) -> str:
    """Deterministic one-line rendering: rule id, rule statement, indices."""
    return f"{v.rule} {RULE_NAMES[v.rule]}: {v.message}"


def _fmt(idx) -> str:
    n, a, b = idx
    return f"B({n},{a},{b})"


def check(s: BlockSystem, flags: ModeFlags) -> list[RuleViolation]:
    """Evaluate every activated rule; an empty list means all of them pass.

    Violations are data, not errors, and come back sorted by rule id (in
    RULE_ORDER) and then by index.
    """
    r = s.group_order
    nsp = flags.no_skew_primitives
    ncss = flags.non_cosemisimple or nsp

    # Effective table: stored entries plus the implicit (0,1,1) = r.
    eff: dict[BlockIndex, int] = dict(s.blocks)
    stored_011 = s.blocks.get(BlockIndex(0, 1, 1))
    if stored_011 is None and r > 0:
        eff[BlockIndex(0, 1, 1)] = r
    by_level: dict[int, dict[tuple[int, int], int]] = {}
    for idx, v in eff.items():
        by_level.setdefault(idx.level, {})[(idx.d1, idx.d2)] = v
    n_max = max(by_level, default=0)
    out: dict[str, list[RuleViolation]] = {rid: [] for rid in RULE_ORDER}

    def violate(rule, indices, message, missing=None):
        out[rule].append(RuleViolation(rule, tuple(indices), message, missing))

    # R0: coradical structure.
    if r < 1:
        violate("R0", [], f"group order is {r}; a Hopf-algebra candidate needs at least the unit grouplike")
    if stored_011 is not None and stored_011 != r:
        violate(
            "R0",
            [BlockIndex(0, 1, 1)],
            f"dim B(0,1,1)={stored_011} but group order is {r}",
        )
    for (a, b), v in sorted(by_level.get(0, {}).items()):
        if a == b and a > 1 and v % (a * a) != 0:
            violate(
                "R0",
                [BlockIndex(0, a, a)],
                f"dim B(0,{a},{a})={v} is not a positive multiple of {a * a}",
            )

    # R1: the group order divides every block dimension.
    if r >= 1:
        for idx, v in sorted(eff.items()):
            if v % r != 0:
                violate("R1", [idx], f"dim {_fmt(idx)}={v} is not a multiple of |G(H)|={r}")

    # R2: edge blocks at positive levels are multiples of d*r.
    if r >= 1:
        for idx, v in sorted(eff.items()):
            if idx.level >= 1 and min(idx.d1, idx.d2) == 1:
                d = max(idx.d1, idx.d2)
                if v % (d * r) != 0:
                    violate(
                        "R2", [idx],
                        f"dim {_fmt(idx)}={v} is not a multiple of {d}*|G(H)|={d * r}",
                    )

    # R3: dim B(n,d1,d2) = dim B(n,d2,d1); absent counts as 0.
    seen_pairs = set()
    for idx in sorted(eff):
        if idx.level >= 1 and idx.d1 != idx.d2:
            key = (idx.level, min(idx.d1, idx.d2), max(idx.d1, idx.d2))
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            mirror = BlockIndex(idx.level, idx.d2, idx.d1)
            v, w = eff.get(idx, 0), eff.get(mirror, 0)
            if v != w:
                big, small = (idx, mirror) if v > w else (mirror, idx)
                violate(
                    "R3",
                    [big, small],
                    f"dim {_fmt(big)}={max(v, w)} but dim {_fmt(small)}={min(v, w)}",
                )

    # R4: chain condition through every intermediate level.
    for idx in sorted(eff):
        n, d1, d2 = idx
        if n <= 1:
            continue
        for i in range(1, n):
            first_leg = by_level.get(i, {})
            second_leg = by_level.get(n - i, {})
            if not any(a == d1 and (b, d2) in second_leg for (a, b) in first_leg):
                violate(
                    "R4", [idx],
                    f"dim {_fmt(idx)}={eff[idx]} has no chain witness at split {i}+{n - i}",
                    missing=f"no b with B({i},{d1},b) and B({n - i},b,{d2}) nonzero",
                )

    # R5: off-diagonal blocks escalate to a strictly higher level in the same row.
    for idx in sorted(eff):
        n, d1, d2 = idx
        if n >= 1 and d1 != d2:
            if not any(
                lev > n and any(a == d1 for (a, _b) in cells)
                for lev, cells in by_level.items()
            ):
                violate(
                    "R5", [idx],
                    f"dim {_fmt(idx)}={eff[idx]} with {d1}!={d2} escalates nowhere",
                    missing=f"no d3 and n2>{n} with B(n2,{d1},d3) nonzero",
                )

    # R6: the top pointed block has dimension exactly r.
    _l, m = pointed_levels(s)
    if r >= 1:
        top = eff.get(BlockIndex(m, 1, 1), 0)
        if top != r:
            violate(
                "R6",
                [BlockIndex(m, 1, 1)],
                f"top pointed block must satisfy dim B({m},1,1) = |G(H)| = {r}, got {top}",
            )

    # R7 (nsp only): no skew-primitive level-1 pointed block, and the six
    # necessary blocks exist for a common d > 1.
    if nsp:
        lvl1 = by_level.get(1, {})
        if (1, 1) in lvl1:
            violate(
                "R7",
                [BlockIndex(1, 1, 1)],
                f"B(1,1,1) must be absent without nontrivial skew-primitives, got dim {lvl1[(1, 1)]}",
            )
        ds = [
            d for d in range(2, _max_d(eff) + 1)
            if (d, 1) in lvl1 and (1, d) in lvl1
            and any((d, d) in by_level.get(k, {}) for k in by_level if k > 1)
        ]
        if not ds:
            violate(
                "R7", [],
                "no d>1 with B(1,d,1), B(1,1,d), and B(k,d,d) (k>1) all nonzero",
                missing="necessary blocks B(1,d,1), B(1,1,d), B(k,d,d) with k>1",
            )
        if not any((1, 1) in by_level.get(k, {}) for k in by_level if k > 1):
            violate(
                "R7", [],
                "no pointed block B(m,1,1) with m>1",
                missing="a pointed block above level 1",
            )

    # R8 (nsp only): an intermediate pointed level forces edge blocks higher up.
    if nsp:
        l, m = pointed_levels(s)
        if l is not None and l < m:
            ok = False
            if l > 1:
                for lp in sorted(by_level):
                    if lp <= l:
                        continue
                    row = by_level.get(lp, {})
                    below = by_level.get(lp - 1, {})
                    d1s = [a for (a, b) in row if b == 1 and a > 1]
                    d2s = [b for (a, b) in row if a == 1 and b > 1]
                    if not d1s or not d2s:
                        continue
                    left_backed = any(
                        any(a == d1 and b > 1 for (a, b) in below) for d1 in d1s
                    )
                    right_backed = any(
                        any(b == d2 and a > 1 for (a, b) in below) for d2 in d2s
                    )
                    if left_backed and right_backed:
                        ok = True
                        break
            if not ok:
                violate(
                    "R8",
                    [BlockIndex(l, 1, 1), BlockIndex(m, 1, 1)],
                    f"pointed levels l={l} < m={m} force more structure; none found",
                    missing=(
                        f"l'>l>1 and d1,d2,d3,d4>1 with B(l',d1,1), B(l',1,d2), "
                        f"B(l'-1,d1,d3), B(l'-1,d4,d2) nonzero"
                    ),
                )

    # R9: no gaps below the top occupied level.
    for n in range(1, n_max + 1):
        if not by_level.get(n):
            violate("R9", [], f"level {n} is empty but level {n_max} is occupied")

    # R11: every d used above level 0 is backed by a coradical block.
    used = sorted({d for idx in eff if idx.level >= 1 for d in (idx.d1, idx.d2)})
    for d in used:
        if (d, d) not in by_level.get(0, {}):
            witnesses = sorted(idx for idx in eff if idx.level >= 1 and d in (idx.d1, idx.d2))
            violate(
                "R11",
                witnesses[:1],
                f"{_fmt(witnesses[0])} uses d={d} with no coradical block B(0,{d},{d})",
            )

    # R12: the bicomodule constituents have dimension d1*d2.
    for idx, v in sorted(eff.items()):
        if idx.level >= 1 and v % (idx.d1 * idx.d2) != 0:
            violate(
                "R12", [idx],
                f"dim {_fmt(idx)}={v} is not a multiple of d1*d2={idx.d1 * idx.d2}",
            )

    # RNC: the coalgebra is declared non-cosemisimple.
    if ncss and n_max < 1:
        violate("RNC", [], "cosemisimple: no block above level 0")

    return [v for rid in RULE_ORDER for v in out[rid]]


def _max_d(eff: dict[BlockIndex, int]) -> int:
    return max((max(i.d1, i.d2) for i in eff), default=1)
