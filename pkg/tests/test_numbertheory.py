import itertools
import math

import numpy as np
import pytest

from hermwalk import gcd, independence_screen, integer_relation, modular_inverse


def brute_force_relation(xs, bound, tol):
    """Exhaustive oracle: any nonzero integer vector in the box hitting tol."""
    m = len(xs)
    for combo in itertools.product(range(-bound, bound + 1), repeat=m):
        if all(c == 0 for c in combo):
            continue
        if abs(sum(c * x for c, x in zip(combo, xs))) <= tol:
            return combo
    return None


class TestBasics:
    def test_gcd(self):
        assert gcd(12, 18) == 6
        assert gcd(7, 0) == 7

    def test_modular_inverse_trivial(self):
        assert modular_inverse(1, 3) == 1

    def test_modular_inverse_none(self):
        assert modular_inverse(2, 4) is None

    def test_modular_inverse_hand_checked(self):
        assert modular_inverse(3, 7) == 5  # 3*5 = 15 = 1 (mod 7)

    def test_modular_inverse_validates(self):
        with pytest.raises(ValueError):
            modular_inverse(1, 0)


class TestIntegerRelation:
    def test_equal_sines(self):
        xs = [math.sin(math.pi / 3), math.sin(2 * math.pi / 3)]
        assert integer_relation(xs, 100, 1e-10) == [1, -1]

    def test_constructed_sum(self):
        s2 = math.sqrt(2.0)
        rel = integer_relation([1.0, s2, 1.0 + s2], 100, 1e-10)
        assert rel == [1, 1, -1]

    def test_sin_sevenths_independent(self):
        xs = [math.sin(2 * math.pi * k / 7) for k in (1, 2, 3)]
        assert integer_relation(xs, 10**4, 1e-10) is None
        # exhaustive small-coefficient oracle agrees
        assert brute_force_relation(xs, 12, 1e-10) is None

    def test_returned_relation_satisfies_bound(self, rng):
        # random planted relations are recovered and re-verified exactly
        for _ in range(20):
            coeffs = rng.integers(-5, 6, size=3)
            while not np.any(coeffs):
                coeffs = rng.integers(-5, 6, size=3)
            base = rng.uniform(0.5, 3.0, size=2)
            # plant x3 so that c1 x1 + c2 x2 + c3 x3 = 0 when c3 != 0
            if coeffs[2] == 0:
                continue
            x3 = -(coeffs[0] * base[0] + coeffs[1] * base[1]) / coeffs[2]
            xs = [base[0], base[1], x3]
            rel = integer_relation(xs, 10**4, 1e-9)
            assert rel is not None
            assert abs(sum(c * x for c, x in zip(rel, xs))) <= 1e-9
            assert max(abs(c) for c in rel) <= 10**4

    def test_size_cap(self):
        with pytest.raises(ValueError):
            integer_relation(list(range(1, 10)), 100, 1e-9)

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            integer_relation([1.0], 0, 1e-9)
        with pytest.raises(ValueError):
            integer_relation([1.0], 10**7, 1e-9)

    def test_single_value(self):
        assert integer_relation([1.0], 100, 1e-10) is None
        assert integer_relation([0.0], 100, 1e-10) == [1]

    def test_deterministic(self):
        xs = [1.0, math.sqrt(2.0), 1.0 + math.sqrt(2.0)]
        assert integer_relation(xs, 100, 1e-10) == integer_relation(xs, 100, 1e-10)


class TestIndependenceScreen:
    def test_c5_positive_eigenvalues(self):
        xs = [2 * math.sin(2 * math.pi / 5), 2 * math.sin(4 * math.pi / 5)]
        report = independence_screen(xs)
        assert report.likely_independent

    def test_sixth_root_twins(self):
        # sin(2 pi/6) and sin(4 pi/6) are the same number computed two ways
        xs = [math.sin(2 * math.pi / 6), math.sin(4 * math.pi / 6), 1.0]
        report = independence_screen(xs)
        assert not report.likely_independent
        assert report.residual <= 1e-10

    def test_hadamard_exponentials(self):
        report = independence_screen(np.exp([0.0, 1.0, 2.0, 3.0]))
        assert report.likely_independent

    def test_zeros_and_duplicates_dropped(self):
        report = independence_screen([0.0, 1e-14, 2.0, 2.0])
        assert np.array_equal(report.values, [2.0])
        assert report.likely_independent

    def test_screen_accepts_large_sets(self):
        # more values than the public integer_relation cap
        xs = np.exp(np.linspace(0.1, 2.0, 10))
        report = independence_screen(xs)
        assert report.likely_independent in (True, False)

    def test_deterministic(self):
        xs = [1.0, 2.0, math.pi]
        r1 = independence_screen(xs)
        r2 = independence_screen(xs)
        assert r1.likely_independent == r2.likely_independent
        assert r1.relation == r2.relation
