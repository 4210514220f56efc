import math
import random

from blocksieve.blocks import (
    NON_COSEMISIMPLE,
    NSP,
    PLAIN,
    BlockIndex,
    BlockSystem,
    total_dim,
    transpose,
)
from blocksieve.rules import RULE_NAMES, RULE_ORDER, check, explain
from blocksieve.solver import minimal_form

from conftest import random_system

ALL_FLAGS = (PLAIN, NON_COSEMISIMPLE, NSP)


def rules_of(violations):
    return sorted({v.rule for v in violations})


class TestSpecExamples:
    def test_minimal_form_passes_nsp(self):
        assert check(minimal_form(3, 2), NSP) == []

    def test_broken_symmetry_and_escalation(self):
        s = BlockSystem(3, {(0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6})
        assert rules_of(check(s, NSP)) == ["R3", "R5", "R7"]

    def test_sweedler_under_nsp_flags(self):
        s = BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 2})
        violations = check(s, NSP)
        assert rules_of(violations) == ["R7"]
        assert any("(1,1,1) must be absent" in v.message for v in violations)

    def test_sweedler_with_skew_primitives_allowed(self):
        s = BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 2})
        assert check(s, NON_COSEMISIMPLE) == []


class TestExplainFormat:
    def test_r3_exact_line(self):
        s = BlockSystem(3, {(0, 1, 1): 3, (0, 2, 2): 12, (1, 2, 1): 6, (2, 2, 2): 12})
        v = [w for w in check(s, PLAIN) if w.rule == "R3"][0]
        assert explain(v) == "R3 antipode symmetry: dim B(1,2,1)=6 but dim B(1,1,2)=0"

    def test_r6_mentions_group_order_equation(self):
        s = BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 4})
        v = [w for w in check(s, PLAIN) if w.rule == "R6"][0]
        assert "= |G(H)|" in v.message

    def test_r4_names_missing_witness(self):
        s = BlockSystem(1, {
            (0, 1, 1): 1, (0, 2, 2): 4,
            (1, 2, 1): 2, (1, 1, 2): 2,
            (2, 1, 1): 1,
            (3, 2, 2): 4,
        })
        v = [w for w in check(s, PLAIN) if w.rule == "R4" and w.indices[0] == BlockIndex(3, 2, 2)][0]
        assert v.missing_witness is not None and "b" in v.missing_witness
        assert "B(1,2,b)" in v.missing_witness or "B(2,b,2)" in v.missing_witness


class TestIndividualRules:
    def test_r0_detects_group_order_mismatch(self):
        s = BlockSystem(3, {(0, 1, 1): 5})
        assert "R0" in rules_of(check(s, PLAIN))

    def test_r0_level0_multiple_of_d_squared(self):
        s = BlockSystem(1, {(0, 1, 1): 1, (0, 2, 2): 6})
        assert "R0" in rules_of(check(s, PLAIN))

    def test_r1_group_divisibility(self):
        s = BlockSystem(3, {(0, 1, 1): 3, (1, 1, 1): 4, (2, 1, 1): 3})
        assert "R1" in rules_of(check(s, PLAIN))

    def test_r2_edge_divisibility(self):
        # entry 2 at (1,2,1) is a multiple of r=2 and of d1*d2=2, but not of d*r=4
        s = BlockSystem(2, {(0, 1, 1): 2, (0, 2, 2): 4, (1, 2, 1): 2, (1, 1, 2): 2, (2, 1, 1): 2})
        assert any(v.rule == "R2" for v in check(s, PLAIN))

    def test_r4_chain_condition(self):
        contiguous_pointed = BlockSystem(
            1, {(0, 1, 1): 1, (1, 1, 1): 1, (2, 1, 1): 1, (3, 1, 1): 1}
        )
        assert check(contiguous_pointed, PLAIN) == []
        # (3,1,1) has no split 1+2: (1,1,2) exists but (2,2,1) does not
        broken = BlockSystem(1, {
            (0, 1, 1): 1, (0, 2, 2): 4,
            (1, 2, 1): 2, (1, 1, 2): 2,
            (2, 2, 2): 4,
            (3, 1, 1): 1,
        })
        assert any(
            v.rule == "R4" and v.indices[0] == BlockIndex(3, 1, 1)
            for v in check(broken, PLAIN)
        )
        # routing through b = 2 satisfies the chain rule
        routed = BlockSystem(1, {
            (0, 1, 1): 1, (0, 2, 2): 4,
            (1, 2, 1): 2, (1, 1, 2): 2,
            (2, 2, 2): 4, (2, 1, 1): 1,
        })
        assert all(v.rule != "R4" for v in check(routed, PLAIN))

    def test_r6_pins_top_pointed_block(self):
        s = BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 4})
        assert "R6" in rules_of(check(s, PLAIN))
        ok = BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 2})
        assert "R6" not in rules_of(check(ok, PLAIN))

    def test_r8_intermediate_pointed_level_needs_backing(self):
        base = minimal_form(2, 2).blocks
        bad = dict(base)
        bad[BlockIndex(3, 1, 1)] = 2          # new top pointed block
        bad[BlockIndex(2, 2, 1)] = 4          # chain witnesses for it
        bad[BlockIndex(2, 1, 2)] = 4
        s = BlockSystem(2, bad)
        assert "R8" in rules_of(check(s, NSP))

    def test_r9_level_contiguity(self):
        s = BlockSystem(1, {(0, 1, 1): 1, (2, 1, 1): 1})
        assert "R9" in rules_of(check(s, PLAIN))

    def test_r11_support_at_zero(self):
        s = BlockSystem(1, {(0, 1, 1): 1, (1, 2, 2): 4})
        assert "R11" in rules_of(check(s, PLAIN))

    def test_r12_bicomodule_divisibility(self):
        s = BlockSystem(1, {(0, 1, 1): 1, (0, 2, 2): 4, (1, 2, 2): 2})
        assert "R12" in rules_of(check(s, PLAIN))

    def test_rnc_only_with_flag(self):
        s = BlockSystem(3, {(0, 1, 1): 3})
        assert check(s, PLAIN) == []
        assert rules_of(check(s, NON_COSEMISIMPLE)) == ["RNC"]

    def test_group_order_zero_flagged(self):
        s = BlockSystem(0, {(0, 2, 2): 4})
        assert "R0" in rules_of(check(s, PLAIN))


class TestRuleSetProperties:
    def test_transpose_invariance_of_verdict(self):
        rng = random.Random(3)
        for _ in range(120):
            s = random_system(rng)
            for flags in ALL_FLAGS:
                assert (check(s, flags) == []) == (check(transpose(s), flags) == [])

    def test_rescaling_is_scale_compatible(self):
        # multiplying level >= 1 entries by a multiple of lcm(all d1*d2, r)
        # never breaks a passing divisibility or symmetry rule, and leaves
        # the support (hence every existential rule) untouched
        divisibility = {"R0", "R1", "R2", "R3", "R11", "R12"}
        existential = {"R4", "R5", "R7", "R8", "R9", "RNC"}
        rng = random.Random(4)
        for _ in range(80):
            s = random_system(rng, symmetric=True)
            ds = [i.d1 * i.d2 for i in s.blocks if i.level >= 1] or [1]
            factor = max(s.group_order, 1)
            for d in ds:
                factor = factor * d // math.gcd(factor, d)
            factor *= rng.randint(1, 3)
            scaled = BlockSystem(
                s.group_order,
                {i: (v * factor if i.level >= 1 else v) for i, v in s.blocks.items()},
            )
            for flags in ALL_FLAGS:
                before = {v.rule for v in check(s, flags)}
                after = {v.rule for v in check(scaled, flags)}
                assert after & divisibility <= before & divisibility
                assert before & existential == after & existential

    def test_r1_passing_systems_have_level_cost(self):
        rng = random.Random(9)
        tried = 0
        for _ in range(400):
            s = random_system(rng)
            report = check(s, PLAIN)
            if any(v.rule in ("R1", "R9", "R0") for v in report):
                continue
            tried += 1
            n_max = s.max_level()
            assert total_dim(s) >= (n_max + 1) * s.group_order
        assert tried > 5

    def test_nsp_passing_systems_contain_six_necessary_blocks(self):
        for r, d in [(1, 2), (2, 2), (3, 3), (4, 2), (5, 2)]:
            s = minimal_form(r, d)
            assert check(s, NSP) == []
            eff = dict(s.blocks)
            assert BlockIndex(0, 1, 1) in eff
            assert BlockIndex(0, d, d) in eff
            assert BlockIndex(1, d, 1) in eff
            assert BlockIndex(1, 1, d) in eff
            assert any(i.level > 1 and (i.d1, i.d2) == (1, 1) for i in eff)
            assert any(i.level > 1 and (i.d1, i.d2) == (d, d) for i in eff)

    def test_violations_sorted_by_rule_order(self):
        rng = random.Random(17)
        order = {rid: k for k, rid in enumerate(RULE_ORDER)}
        for _ in range(60):
            s = random_system(rng)
            report = check(s, NSP)
            ranks = [order[v.rule] for v in report]
            assert ranks == sorted(ranks)

    def test_every_rule_has_name_and_anchor(self):
        from blocksieve.rules import RULE_ANCHORS

        for rid in RULE_ORDER:
            assert rid in RULE_NAMES
            assert rid in RULE_ANCHORS
