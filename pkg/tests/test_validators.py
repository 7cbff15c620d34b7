import pytest

from rigid_symbols import (
    BOTTOM,
    TOP,
    Outcome,
    Partition,
    PartitionError,
    check_monotonicity,
    check_pairwise_parity,
    check_structure_theorem,
    enumerate_rigid,
    parse_partition,
    verify_partition,
    verify_range,
)

from conftest import rigid_sweep


def P(*parts):
    return Partition(parts)


class TestPairwiseParity:
    def test_examples(self, b72):
        assert check_pairwise_parity(b72, "B")
        assert check_pairwise_parity(P(1, 1, 1), "B")

    def test_invalid(self):
        with pytest.raises(PartitionError):
            check_pairwise_parity(P(2, 1), "B")


class TestStructureTheorem:
    def test_b72_largest_parts(self, b72):
        reports = {r.threshold: r for r in check_structure_theorem(b72, "B")}
        top9 = reports[9]
        assert top9.prefix_length == 4 and top9.counts == (2, 2) and top9.passed
        assert top9.slots == {(TOP, 14), (TOP, 15), (BOTTOM, 13), (BOTTOM, 14)}

    def test_first_row_in_b(self):
        (report,) = check_structure_theorem(P(1, 1, 1), "B")
        assert report.threshold == 1 and report.counts == (2, 1) and report.passed

    def test_one_squared_in_c(self):
        # the lone pattern (1, 2) of 1^2 covers every slot
        (report,) = check_structure_theorem(P(1, 1), "C")
        assert report.threshold == 1 and report.counts == (1, 1) and report.passed

    def test_odd_prefix(self):
        # 3 2^2 1^4 in B: rows 7,3,1; v at the last part >= 3 is 9, so odd prefixes lean top
        p = P(3, 2, 2, 1, 1, 1, 1)
        reports = {r.threshold: r for r in check_structure_theorem(p, "B")}
        assert reports[2].counts == (2, 1) == reports[2].expected
        assert reports[3].counts == (1, 0) == reports[3].expected
        assert all(r.passed for r in reports.values())

    @pytest.mark.parametrize("theory", "BCD")
    def test_every_rigid_partition(self, theory):
        for p in rigid_sweep(theory, 10):
            assert all(r.passed for r in check_structure_theorem(p, theory)), p

    def test_non_rigid(self):
        with pytest.raises(PartitionError):
            check_structure_theorem(P(3, 1, 1), "B")


class TestMonotonicity:
    def test_one_cubed_in_b(self):
        assert check_monotonicity(P(1, 1, 1), "B") is Outcome.PASS

    def test_one_fourth_in_d(self):
        assert check_monotonicity(P(1, 1, 1, 1), "D") is Outcome.PASS

    def test_first_row_in_b(self):
        (report,) = check_structure_theorem(P(1, 1, 1), "B")
        assert report.threshold == 1 and report.counts == (2, 1) and report.passed

    def test_one_squared_in_c(self):
        assert check_monotonicity(P(1, 1), "C") is Outcome.PASS

    def test_mixed_c_not_applicable(self):
        assert check_monotonicity(P(2, 1, 1), "C") is Outcome.NOT_APPLICABLE

    @pytest.mark.parametrize("theory", "BCD")
    def test_every_rigid_partition(self, theory):
        for p in rigid_sweep(theory, 10):
            assert check_monotonicity(p, theory) is not Outcome.FAIL, p


class TestVerify:
    def test_record_fields(self):
        records = verify_partition(P(1, 1, 1), "B")
        assert [r.check for r in records] == [
            "shape", "contribution-fold", "closed", "block-fold", "widths", "legacy",
            "pairwise-parity", "structure", "monotonicity",
        ]
        assert all(r.outcome is Outcome.PASS for r in records)
        assert set(records[0].to_record()) == {"theory", "partition", "check", "outcome", "detail"}

    def test_method_selection(self):
        names = [r.check for r in verify_partition(P(1, 1, 1), "B", method="def")]
        assert "closed" not in names and "legacy" not in names
        with pytest.raises(ValueError):
            verify_partition(P(1, 1, 1), "B", method="bogus")

    def test_parallel_matches_serial(self):
        serial = list(verify_range(7, "C"))
        parallel = list(verify_range(7, "C", workers=2))
        assert serial == parallel
        assert {r.partition for r in serial} == {p.parts for n in range(1, 8) for p in enumerate_rigid(n, "C")}

    def test_loose_convention_counterexample(self):
        # outside the default convention the prefix split can flip
        p = parse_partition("5 4^2")
        failed = [r for r in check_structure_theorem(p, "B", "loose") if not r.passed]
        assert failed and failed[0].counts == (2, 1) and failed[0].expected == (1, 2)
