from __future__ import annotations

import pytest

from stiefelq.manifold import ParameterError, basic_invariants, validate


class TestValidate:
    def test_accepts_valid_triples(self):
        p = validate(4, 2, 2)
        assert (p.n, p.k, p.m) == (4, 2, 2)
        assert p.dimension == 12

    @pytest.mark.parametrize(
        "n,k,m,reason",
        [
            (4, 0, 2, "k-too-small"),
            (4, -1, 2, "k-too-small"),
            (4, 4, 2, "k-not-below-n"),
            (4, 7, 2, "k-not-below-n"),
            (1, 1, 2, "k-not-below-n"),
            (4, 2, 1, "m-too-small"),
            (4, 2, 0, "m-too-small"),
        ],
    )
    def test_rejections_are_distinct(self, n, k, m, reason):
        with pytest.raises(ParameterError) as exc:
            validate(n, k, m)
        assert exc.value.reason == reason


class TestBasicInvariants:
    def test_example_4_2_2(self):
        b = basic_invariants(validate(4, 2, 2))
        assert b.dimension == 12
        assert b.pi1_order == 2
        assert b.euler_characteristic == 0
        assert b.orientable is True
        assert b.picard_order == 2
        assert b.almost_complex_guaranteed is True
        assert b.complex_structure_guaranteed is True  # 2 | 4

    def test_example_4_3_5(self):
        b = basic_invariants(validate(4, 3, 5))
        assert b.dimension == 15
        assert b.almost_complex_guaranteed is False
        assert b.complex_structure_guaranteed is False

    def test_example_6_2_3(self):
        b = basic_invariants(validate(6, 2, 3))
        assert b.dimension == 20
        assert b.complex_structure_guaranteed is True  # k even and 3 | 6

    def test_parity_relations(self):
        for n in range(2, 13):
            for k in range(1, n):
                for m in (2, 3, 4, 12):
                    b = basic_invariants(validate(n, k, m))
                    assert b.dimension == k * (2 * n - k)
                    assert b.dimension % 2 == k % 2
                    assert b.almost_complex_guaranteed == (b.dimension % 2 == 0)
                    if b.complex_structure_guaranteed:
                        assert b.almost_complex_guaranteed
                    assert b.pi1_order == m == b.picard_order
