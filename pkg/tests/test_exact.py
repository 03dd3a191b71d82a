from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilldet.exact import bareiss_determinant, rational_determinant, to_fraction


def _leibniz(m):
    """Permutation expansion; fine for n <= 6."""
    from itertools import permutations

    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(m):
    assert bareiss_determinant(m) == _leibniz(m)


def test_bareiss_needs_pivoting():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [1, 2]]) == 0
    assert bareiss_determinant([]) == 1


def test_rational_determinant():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert rational_determinant(m) == Fraction(1, 10) - Fraction(1, 12)


def test_to_fraction():
    assert to_fraction(0.5) == Fraction(1, 2)
    assert to_fraction(np.int64(3)) == 3
    with pytest.raises(TypeError):
        to_fraction("1/2")
    with pytest.raises(ValueError):
        to_fraction(float("inf"))
