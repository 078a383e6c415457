from __future__ import annotations

import pytest

from stiefelq.manifold import ParameterError, validate
from stiefelq.span import (
    TriState,
    lower_bound_from_external_span,
    parallelizable_verdict,
    span_eq_stable_guaranteed,
    span_lower_bound,
    span_report,
    span_upper_bound,
    stably_parallelizable_verdict,
)


class TestTriState:
    def test_total_order(self):
        assert TriState.NO < TriState.UNKNOWN < TriState.YES
        assert TriState.YES > TriState.NO
        assert TriState.UNKNOWN <= TriState.UNKNOWN


class TestLowerBound:
    def test_examples(self):
        assert span_lower_bound(validate(4, 2, 5)) == 8  # even-n bound 12 - 8 + 4
        assert span_lower_bound(validate(4, 3, 2)) == 15  # parallelizable, = dim
        assert span_lower_bound(validate(5, 2, 2)) == 8  # 16 - 10 + 2
        assert span_lower_bound(validate(5, 1, 7)) == 1  # base case

    def test_deep_recursion_value(self):
        # hand-computed chain for n = 9: k=2 -> 16, k=3 -> 29, k=4 -> 40,
        # k=5 -> 49 (the dim - 2n + 2 candidate wins at every step)
        assert span_lower_bound(validate(9, 5, 2)) == 49
        assert 49 >= 5 * 5  # and it respects the k^2 candidate

    def test_independent_of_m(self):
        for m in (2, 3, 12, 59):
            assert span_lower_bound(validate(6, 3, m)) == span_lower_bound(
                validate(6, 3, 2)
            )

    def test_monotone_in_k(self):
        for n in range(3, 21):
            prev = span_lower_bound(validate(n, 1, 2))
            for k in range(2, n):
                cur = span_lower_bound(validate(n, k, 2))
                assert cur >= prev + 1
                prev = cur


class TestUpperBound:
    def test_examples(self):
        assert span_upper_bound(validate(8, 1, 3)) == 8  # rho(16) - 1
        assert span_upper_bound(validate(4, 2, 2)) == 12
        assert span_upper_bound(validate(4, 3, 2)) == 15

    def test_bounds_are_consistent(self):
        for n in range(2, 19):
            for k in range(1, n):
                params = validate(n, k, 4)
                lo, hi = span_lower_bound(params), span_upper_bound(params)
                assert 1 <= lo <= hi <= params.dimension


class TestEqualityCriteria:
    def test_examples(self):
        assert span_eq_stable_guaranteed(validate(4, 2, 7)) is True  # k even
        assert span_eq_stable_guaranteed(validate(4, 3, 2)) is False
        assert span_eq_stable_guaranteed(validate(6, 3, 2)) is True  # n = 2 mod 4
        assert span_eq_stable_guaranteed(validate(5, 3, 2)) is True  # n odd
        assert span_eq_stable_guaranteed(validate(4, 1, 2)) is False  # k = 1


class TestVerdicts:
    def test_examples(self):
        assert stably_parallelizable_verdict(validate(4, 2, 3)) is TriState.NO
        assert parallelizable_verdict(validate(4, 2, 3)) is TriState.NO
        assert stably_parallelizable_verdict(validate(4, 3, 9)) is TriState.YES
        assert parallelizable_verdict(validate(4, 3, 9)) is TriState.YES
        assert stably_parallelizable_verdict(validate(4, 2, 2)) is TriState.UNKNOWN
        # nonzero w4 forces NO even though all Pontrjagin terms vanish
        assert stably_parallelizable_verdict(validate(5, 2, 2)) is TriState.NO

    def test_ordering_invariant(self):
        for n in range(2, 15):
            for k in range(1, n):
                for m in (2, 3, 4, 6):
                    params = validate(n, k, m)
                    assert parallelizable_verdict(params) <= stably_parallelizable_verdict(params)

    def test_m_not_dividing_nk_forces_no(self):
        for n in range(4, 15):
            for k in range(2, n - 1):
                for m in range(2, 16):
                    if (n * k) % m != 0:
                        assert stably_parallelizable_verdict(validate(n, k, m)) is TriState.NO


class TestExternalSpan:
    def test_example_improvement(self):
        assert lower_bound_from_external_span(validate(4, 2, 2), 13) == 9
        assert lower_bound_from_external_span(validate(4, 2, 2), 3) == 8  # no gain

    def test_parallelizable_case_unmoved(self):
        for s in (0, 10, 24):
            assert lower_bound_from_external_span(validate(4, 3, 2), s) == 15

    def test_rejects_wrong_m(self):
        with pytest.raises(ParameterError) as exc:
            lower_bound_from_external_span(validate(4, 2, 3), 13)
        assert exc.value.reason == "external-span-needs-m-2"

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            lower_bound_from_external_span(validate(4, 2, 2), 17)  # > 2nk = 16
        with pytest.raises(ParameterError):
            lower_bound_from_external_span(validate(4, 2, 2), -1)


class TestSpanReport:
    def test_fields_and_provenance(self):
        rep = span_report(validate(4, 2, 2))
        assert rep.span_lower == 8
        assert rep.span_upper == 12
        assert rep.stable_span_lower == 8
        assert rep.span_eq_stable_guaranteed is True
        assert rep.parallelizable is TriState.UNKNOWN
        assert rep.provenance  # never empty
        assert any("span lower bound" in line for line in rep.provenance)

    def test_external_span_transfers_under_equality(self):
        # k even means the equality criterion holds, so the span bound moves too
        rep = span_report(validate(4, 2, 2), external_span=13)
        assert rep.stable_span_lower == 9
        assert rep.span_lower == 9

    def test_external_span_stable_only_without_equality(self):
        # (8, 3, 2): k odd, n = 0 mod 4 -> no equality criterion
        params = validate(8, 3, 2)
        assert not span_eq_stable_guaranteed(params)
        base = span_lower_bound(params)
        rep = span_report(params, external_span=2 * 8 * 3)
        assert rep.stable_span_lower == 2 * 8 * 3 - 9
        assert rep.stable_span_lower > base
        assert rep.span_lower == base

    def test_k1_not_covered_note(self):
        rep = span_report(validate(6, 1, 2))
        assert rep.span_eq_stable_guaranteed is False
        assert any("k = 1" in line for line in rep.provenance)

    def test_invariants_across_grid(self):
        for n in range(2, 13):
            for k in range(1, n):
                for m in (2, 5, 8):
                    rep = span_report(validate(n, k, m))
                    assert rep.span_lower <= rep.span_upper
                    assert rep.stable_span_lower >= rep.span_lower
                    assert rep.parallelizable <= rep.stably_parallelizable

    def test_parallelizable_family(self):
        for n in range(2, 13):
            rep = span_report(validate(n, n - 1, 3))
            d = (n - 1) * (n + 1)
            assert rep.span_lower == rep.span_upper == d
            assert rep.parallelizable is TriState.YES
            assert rep.stably_parallelizable is TriState.YES
