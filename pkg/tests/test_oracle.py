import pytest

from blocksieve.blocks import NON_COSEMISIMPLE, NSP, PLAIN, BlockSystem, total_dim
from blocksieve.oracle import OracleCapError, oracle_enumerate, oracle_solve
from blocksieve.rules import check
from blocksieve.solver import FeasibilityProblem, minimal_form, solve


class TestOracleSolve:
    def test_20_2_feasible(self):
        assert oracle_solve(20, 2, NSP).feasible

    def test_22_2_infeasible(self):
        assert not oracle_solve(22, 2, NSP).feasible

    def test_4_2_skew_allowed(self):
        cert = oracle_solve(4, 2, NON_COSEMISIMPLE)
        assert cert.feasible
        assert cert.witness == BlockSystem(2, {(0, 1, 1): 2, (1, 1, 1): 2})

    def test_caps(self):
        with pytest.raises(OracleCapError, match="refused"):
            oracle_solve(61, 2, NSP)
        with pytest.raises(OracleCapError, match="refused"):
            oracle_solve(18, 9, NSP)
        assert oracle_solve(70, 5, NSP, scale_cap=70).feasible


class TestOracleEnumerate:
    def test_42_3_contains_minimal_form(self):
        systems = oracle_enumerate(42, 3, NSP)
        assert systems
        assert minimal_form(3, 2) in systems

    def test_6_3_empty(self):
        assert oracle_enumerate(6, 3, NSP) == []

    def test_3_3_cosemisimple(self):
        assert oracle_enumerate(3, 3, PLAIN) == [BlockSystem(3, {(0, 1, 1): 3})]

    def test_canonical_order_and_rule_agreement(self):
        for (n, r, flags) in [(42, 3, NSP), (24, 2, NSP), (12, 2, NON_COSEMISIMPLE)]:
            systems = oracle_enumerate(n, r, flags)
            keys = [s.entries() for s in systems]
            assert keys == sorted(keys)
            for s in systems:
                assert check(s, flags) == []
                assert total_dim(s) == n


class TestSolverAgreement:
    # the full N <= 60 grid is exercised by the acceptance suite; this is the
    # fast cross-section run on every test invocation
    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("nsp", [True, False])
    def test_verdicts_and_witnesses_match(self, r, nsp):
        # both sides document the lexicographically least witness over the
        # same bounded space, so feasible answers must coincide exactly
        flags = NSP if nsp else NON_COSEMISIMPLE
        for n in range(r, 31, r):
            a = solve(FeasibilityProblem(n, r, flags))
            b = oracle_solve(n, r, flags)
            assert a.verdict == b.verdict, (n, r, nsp)
            if a.feasible:
                assert a.witness == b.witness, (n, r, nsp)
