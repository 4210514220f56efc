"""Block systems of finite-dimensional coalgebras.

A block system records, per filtration level n and per pair of simple-comodule
dimensions (d1, d2), the dimension of the corresponding direct summand
B(n, d1, d2).  Level 0 is the coradical: its blocks are diagonal and the
(0, 1, 1) block is spanned by the grouplike elements, so its dimension is the
group order r.  Zero blocks are not stored; a sparse map keeps search states
small.

All values in this module are immutable after construction and safe to share
across threads or processes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


class BlockSystemParseError(ValueError):
    """Raised for malformed block-system JSON; the message names the offending entry."""


@dataclass(frozen=True, order=True)
class BlockIndex:
    """Index (level, d1, d2) of one block.

    Level-0 blocks are diagonal by definition, so d1 != d2 is rejected there.
    Field order gives the canonical lexicographic ordering used everywhere.
    """

    level: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"block level must be >= 0, got {self.level}")
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError(
                f"comodule dimensions must be >= 1, got ({self.d1}, {self.d2})"
            )
        if self.level == 0 and self.d1 != self.d2:
            raise ValueError("level-0 block must be diagonal")

    def __iter__(self):
        return iter((self.level, self.d1, self.d2))


CORADICAL_POINTED = BlockIndex(0, 1, 1)


@dataclass(frozen=True)
class ModeFlags:
    """Which optional necessary conditions are in force.

    no_skew_primitives implies non_cosemisimple (the skew-primitive-free class
    is only interesting away from the cosemisimple case).  auto_nsp asks the
    solver to derive no_skew_primitives from gcd(r, N/r) = 1.
    """

    non_cosemisimple: bool = False
    no_skew_primitives: bool = False
    auto_nsp: bool = False

    def __post_init__(self):
        if self.no_skew_primitives and not self.non_cosemisimple:
            object.__setattr__(self, "non_cosemisimple", True)


NSP = ModeFlags(no_skew_primitives=True)
NON_COSEMISIMPLE = ModeFlags(non_cosemisimple=True)
PLAIN = ModeFlags()


@dataclass(frozen=True, eq=True)
class BlockSystem:
    """A sparse block-dimension table together with the group order r.

    The group order is stored separately from the (0,1,1) entry so that rule
    checks can detect inconsistency between the two instead of silently
    normalizing.  A stored (0,1,1) entry is therefore allowed to disagree with
    group_order; absent (0,1,1) is read as r (see effective_dim).

    group_order 0 is permitted so the analyzer can represent coalgebras with
    no grouplikes at all; such systems fail the rule check, as they must.
    """

    group_order: int
    blocks: dict[BlockIndex, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.group_order < 0:
            raise ValueError(f"group order must be >= 0, got {self.group_order}")
        normalized: dict[BlockIndex, int] = {}
        for idx, dim in self.blocks.items():
            if not isinstance(idx, BlockIndex):
                idx = BlockIndex(*idx)
            if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
                raise ValueError(
                    f"block dimension at {tuple(idx)} must be a positive integer; "
                    "zero blocks must be omitted"
                )
            normalized[idx] = dim
        object.__setattr__(self, "blocks", normalized)

    def effective_dim(self, idx: BlockIndex | tuple[int, int, int]) -> int:
        """Stored dimension at idx, with absent (0,1,1) counting as group_order."""
        if not isinstance(idx, BlockIndex):
            idx = BlockIndex(*idx)
        if idx == CORADICAL_POINTED:
            return self.blocks.get(idx, self.group_order)
        return self.blocks.get(idx, 0)

    def entries(self) -> tuple[tuple[int, int, int, int], ...]:
        """Stored entries as (level, d1, d2, dim), canonically sorted."""
        return tuple(sorted((i.level, i.d1, i.d2, v) for i, v in self.blocks.items()))

    def levels(self) -> Iterator[int]:
        return iter(sorted({i.level for i in self.blocks}))

    def max_level(self) -> int:
        return max((i.level for i in self.blocks), default=0)

    def __eq__(self, other):
        if not isinstance(other, BlockSystem):
            return NotImplemented
        return self.group_order == other.group_order and self.blocks == other.blocks

    def __repr__(self):
        body = ", ".join(f"({i.level},{i.d1},{i.d2}):{v}" for i, v in sorted(self.blocks.items()))
        return f"BlockSystem(r={self.group_order}, {{{body}}})"


def total_dim(s: BlockSystem) -> int:
    """Sum of all block dimensions, counting (0,1,1) as group_order if absent."""
    base = sum(s.blocks.values())
    if CORADICAL_POINTED not in s.blocks:
        base += s.group_order
    return base


def pointed_levels(s: BlockSystem) -> tuple[int | None, int]:
    """(l, m): least and greatest positive pointed levels.

    m is the largest n with a (n,1,1) entry, or 0 when only the coradical
    block exists.  l is the least n >= 1 with a (n,1,1) entry, or None.
    """
    positive = [i.level for i in s.blocks if i.d1 == 1 and i.d2 == 1 and i.level >= 1]
    if not positive:
        return None, 0
    return min(positive), max(positive)


def transpose(s: BlockSystem) -> BlockSystem:
    """Swap every (n,d1,d2) entry to (n,d2,d1); the antipode image of the system."""
    return BlockSystem(
        s.group_order,
        {BlockIndex(i.level, i.d2, i.d1): v for i, v in s.blocks.items()},
    )


_TOP_KEYS = {"group_order", "blocks"}
_ENTRY_KEYS = {"level", "d1", "d2", "dim"}


def _require_int(value, what: str, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise BlockSystemParseError(f"{where}: {what} must be an integer, got {value!r}")
    return value


def parse_block_system(text: bytes | str) -> BlockSystem:
    """Parse the block-system JSON interchange format.

    Schema: {"group_order": r, "blocks": [{"level": n, "d1": a, "d2": b,
    "dim": v}, ...]}.  Field order is free; unknown fields, duplicate indices,
    non-positive dimensions and level-0 off-diagonal entries are rejected with
    a message naming the offending entry.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BlockSystemParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise BlockSystemParseError("top level must be a JSON object")
    unknown = set(obj) - _TOP_KEYS
    if unknown:
        raise BlockSystemParseError(f"unknown fields rejected: {sorted(unknown)}")
    if "group_order" not in obj or "blocks" not in obj:
        raise BlockSystemParseError("fields 'group_order' and 'blocks' are required")
    r = _require_int(obj["group_order"], "group_order", "top level")
    if r < 1:
        raise BlockSystemParseError(f"group_order must be positive, got {r}")
    raw_blocks = obj["blocks"]
    if not isinstance(raw_blocks, list):
        raise BlockSystemParseError("'blocks' must be a list")
    blocks: dict[BlockIndex, int] = {}
    for k, entry in enumerate(raw_blocks):
        where = f"blocks[{k}]"
        if not isinstance(entry, dict):
            raise BlockSystemParseError(f"{where}: entries must be objects")
        bad = set(entry) - _ENTRY_KEYS
        if bad:
            raise BlockSystemParseError(f"{where}: unknown fields rejected: {sorted(bad)}")
        if set(entry) != _ENTRY_KEYS:
            raise BlockSystemParseError(f"{where}: fields level, d1, d2, dim are required")
        n = _require_int(entry["level"], "level", where)
        a = _require_int(entry["d1"], "d1", where)
        b = _require_int(entry["d2"], "d2", where)
        v = _require_int(entry["dim"], "dim", where)
        if v == 0:
            raise BlockSystemParseError(
                f"{where} (level={n}, d1={a}, d2={b}): zero blocks must be omitted"
            )
        if v < 0:
            raise BlockSystemParseError(
                f"{where} (level={n}, d1={a}, d2={b}): block dimension must be positive"
            )
        try:
            idx = BlockIndex(n, a, b)
        except ValueError as exc:
            raise BlockSystemParseError(f"{where} (level={n}, d1={a}, d2={b}): {exc}") from exc
        if idx in blocks:
            raise BlockSystemParseError(
                f"{where} (level={n}, d1={a}, d2={b}): duplicate index"
            )
        blocks[idx] = v
    return BlockSystem(r, blocks)


def serialize_block_system(s: BlockSystem) -> bytes:
    """Canonical UTF-8 JSON bytes: indices sorted lexicographically by (level, d1, d2)."""
    payload = {
        "group_order": s.group_order,
        "blocks": [
            {"level": n, "d1": a, "d2": b, "dim": v} for (n, a, b, v) in s.entries()
        ],
    }
    return json.dumps(payload).encode("utf-8")


@dataclass(frozen=True)
class Certificate:
    """Outcome of a feasibility query.

    Feasible certificates carry a witness system that passes the full rule
    check and sums to the queried dimension; infeasible ones carry a bounded
    refutation trace (top-level case split plus the rule that closed each
    case).  stats records node counts and which rules fired per branch class.
    """

    verdict: str
    witness: BlockSystem | None = None
    stats: dict = field(default_factory=dict)
    refutation_summary: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.verdict not in (FEASIBLE, INFEASIBLE):
            raise ValueError(f"verdict must be '{FEASIBLE}' or '{INFEASIBLE}'")
        if (self.verdict == FEASIBLE) != (self.witness is not None):
            raise ValueError("witness must be present exactly when feasible")

    @property
    def feasible(self) -> bool:
        return self.verdict == FEASIBLE

    def as_json_dict(self) -> dict:
        out: dict = {"verdict": self.verdict, "stats": self.stats}
        if self.witness is not None:
            out["witness"] = json.loads(serialize_block_system(self.witness))
        if self.refutation_summary is not None:
            out["refutation"] = list(self.refutation_summary)
        return out
