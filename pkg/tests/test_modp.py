from __future__ import annotations

import pytest

from stiefelq.manifold import validate
from stiefelq.modp import (
    CohomologyCase,
    PolyGenerator,
    SquareRule,
    betti_mod_p,
    classify,
    poincare_polynomial,
    presentation,
    total_dimension,
    truncation_exponent,
)

PRIMES = (2, 3, 5, 7)
CASES = CohomologyCase


def _coeffs(n, k, m, p):
    pres = presentation(validate(n, k, m), p)
    return pres, poincare_polynomial(pres, n, k)


class TestTruncationExponent:
    def test_examples(self):
        assert truncation_exponent(4, 2, 2) == 4  # C(4,3) = 4 even, C(4,4) = 1
        assert truncation_exponent(3, 2, 2) == 2  # C(3,2) = 3 odd
        assert truncation_exponent(3, 2, 3) == 3  # C(3,2) = 0 mod 3
        assert truncation_exponent(5, 1, 7) == 5  # k = 1 window is {n}

    def test_range(self):
        for n in range(2, 16):
            for k in range(1, n):
                for p in PRIMES:
                    half = truncation_exponent(n, k, p)
                    assert n - k + 1 <= half <= n

    def test_rejects(self):
        with pytest.raises(ValueError):
            truncation_exponent(4, 2, 6)  # composite p
        with pytest.raises(ValueError):
            truncation_exponent(4, 4, 2)  # k not below n


class TestClassify:
    def test_table(self):
        assert classify(5, 2) is CASES.COPRIME
        assert classify(5, 5) is CASES.ODD_DIVIDES
        assert classify(6, 3) is CASES.ODD_DIVIDES
        assert classify(2, 2) is CASES.TWO_MOD_FOUR
        assert classify(6, 2) is CASES.TWO_MOD_FOUR
        assert classify(4, 2) is CASES.ZERO_MOD_FOUR
        assert classify(12, 2) is CASES.ZERO_MOD_FOUR
        assert classify(9, 2) is CASES.COPRIME  # odd m is coprime to 2

    def test_exhaustive_consistency(self):
        for m in range(2, 40):
            for p in PRIMES:
                case = classify(m, p)
                if m % p != 0:
                    assert case is CASES.COPRIME
                elif p != 2:
                    assert case is CASES.ODD_DIVIDES
                elif m % 4 == 2:
                    assert case is CASES.TWO_MOD_FOUR
                else:
                    assert case is CASES.ZERO_MOD_FOUR


class TestPresentation:
    def test_coprime_example(self):
        pres = presentation(validate(3, 2, 5), 2)
        assert pres.case is CASES.COPRIME
        assert pres.poly_generator is None
        assert pres.exterior_degrees == (3, 5)
        assert pres.square_rule is SquareRule.NONE
        assert pres.deg2_truncation is None
        assert pres.render() == "Lambda_Z_2(v3, v5)"

    def test_two_mod_four_example(self):
        pres = presentation(validate(3, 2, 2), 2)
        assert pres.case is CASES.TWO_MOD_FOUR
        assert pres.poly_generator == PolyGenerator(degree=1, truncation=4)
        assert pres.exterior_degrees == (5,)
        assert pres.square_rule is SquareRule.DEG1_SQUARE_IS_DEG2
        assert pres.deg2_truncation == 2
        assert pres.render() == "Z_2[y1]/(y1^4) (x) Lambda(y5)"

    def test_zero_mod_four_example(self):
        pres = presentation(validate(3, 2, 4), 2)
        assert pres.case is CASES.ZERO_MOD_FOUR
        assert pres.poly_generator == PolyGenerator(degree=2, truncation=2)
        assert pres.exterior_degrees == (1, 5)
        assert pres.square_rule is SquareRule.DEG1_SQUARE_ZERO
        assert pres.render() == "Z_2[y2]/(y2^2) (x) Lambda(y1, y5)"

    def test_odd_divides_example(self):
        pres = presentation(validate(3, 2, 3), 3)
        assert pres.case is CASES.ODD_DIVIDES
        assert pres.poly_generator == PolyGenerator(degree=2, truncation=3)
        assert pres.exterior_degrees == (1, 3)  # omitted degree is 2*3 - 1 = 5
        assert pres.render() == "Z_3[y2]/(y2^3) (x) Lambda(y1, y3)"

    def test_k1_lens_specializations(self):
        # odd p dividing m: classical truncated polynomial times a circle class
        pres = presentation(validate(5, 1, 7), 7)
        assert pres.case is CASES.ODD_DIVIDES
        assert pres.poly_generator == PolyGenerator(degree=2, truncation=5)
        assert pres.exterior_degrees == (1,)
        # m = 2: real projective space of dimension 2n - 1
        pres = presentation(validate(5, 1, 2), 2)
        assert pres.case is CASES.TWO_MOD_FOUR
        assert pres.poly_generator == PolyGenerator(degree=1, truncation=10)
        assert pres.exterior_degrees == ()
        assert pres.render() == "Z_2[y1]/(y1^10)"
        # coprime: the sphere
        pres = presentation(validate(5, 1, 3), 2)
        assert pres.case is CASES.COPRIME
        assert pres.exterior_degrees == (9,)

    def test_coprime_matches_frame_manifold_degrees(self):
        for n in range(2, 14):
            for k in range(1, n):
                pres = presentation(validate(n, k, 5), 2)
                assert pres.exterior_degrees == tuple(
                    range(2 * n - 2 * k + 1, 2 * n, 2)
                )

    def test_omitted_degree_always_inside_run(self):
        for n in range(2, 14):
            for k in range(1, n):
                for m in (2, 3, 4, 6, 8, 12):
                    for p in PRIMES:
                        if m % p != 0:
                            continue
                        pres = presentation(validate(n, k, m), p)
                        run = set(range(2 * n - 2 * k + 1, 2 * n, 2))
                        omitted = 2 * pres.deg2_truncation - 1
                        assert omitted in run
                        expected = run - {omitted}
                        got = set(pres.exterior_degrees) - {1}
                        assert got == expected


class TestPoincarePolynomial:
    def test_example_3_2_2(self):
        _, coeffs = _coeffs(3, 2, 2, 2)
        assert coeffs == [1, 1, 1, 1, 0, 1, 1, 1, 1]

    def test_example_3_2_5(self):
        _, coeffs = _coeffs(3, 2, 5, 2)
        assert coeffs == [1, 0, 0, 1, 0, 1, 0, 0, 1]

    def test_betti_examples(self):
        params = validate(3, 2, 2)
        assert betti_mod_p(params, 2, 0) == 1
        assert betti_mod_p(params, 2, 4) == 0
        assert betti_mod_p(params, 2, 8) == 1
        assert betti_mod_p(params, 2, 9) == 0
        assert betti_mod_p(params, 2, 100) == 0
        with pytest.raises(ValueError):
            betti_mod_p(params, 2, -1)

    def test_total_dimension_examples(self):
        pres, coeffs = _coeffs(3, 2, 2, 2)
        assert total_dimension(pres, 2) == 8 == sum(coeffs)
        pres, coeffs = _coeffs(3, 2, 5, 2)
        assert total_dimension(pres, 2) == 4 == sum(coeffs)
        pres, coeffs = _coeffs(4, 2, 2, 2)
        assert total_dimension(pres, 2) == 16 == sum(coeffs)

    def test_structural_suite_small(self):
        for n in range(2, 13):
            for k in range(1, n):
                dim = k * (2 * n - k)
                for m in (2, 3, 4, 6, 8, 12):
                    for p in PRIMES:
                        pres, coeffs = _coeffs(n, k, m, p)
                        assert len(coeffs) == dim + 1
                        assert coeffs[0] == 1 and coeffs[dim] == 1
                        # Poincare duality
                        assert coeffs == coeffs[::-1]
                        # Euler characteristic 0
                        assert sum(coeffs[::2]) == sum(coeffs[1::2])
                        assert sum(coeffs) == total_dimension(pres, k)

    def test_equal_truncation_gives_equal_polynomials(self):
        # the three p | m shapes with the same truncation exponent have the
        # same additive Poincare polynomial
        for n in range(2, 11):
            for k in range(1, n):
                buckets: dict[int, list[list[int]]] = {}
                for m, p in [(2, 2), (4, 2), (8, 2), (3, 3), (9, 3), (6, 2), (6, 3)]:
                    pres, coeffs = _coeffs(n, k, m, p)
                    assert pres.deg2_truncation is not None
                    buckets.setdefault(pres.deg2_truncation, []).append(coeffs)
                for group in buckets.values():
                    for other in group[1:]:
                        assert other == group[0]
