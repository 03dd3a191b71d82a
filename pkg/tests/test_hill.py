import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilldet import OscillatorParams, assemble, eigenvalues

P = OscillatorParams(beta=1, c=1, delta=1, s=2)


def test_small_example():
    np.testing.assert_array_equal(
        assemble(P, 3).entries, [[4, 0, 2], [1, 12, 0], [15, 1, 20]]
    )


def test_rejects_small_n():
    with pytest.raises(ValueError):
        assemble(P, 1)


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(2, 40),
    beta=st.floats(-3, 3),
    c=st.floats(-3, 3),
    delta=st.floats(-3, 3),
    s=st.floats(0.1, 4),
)
def test_band_structure(n, beta, c, delta, s):
    p = OscillatorParams(beta=beta, c=c, delta=delta, s=s)
    m = assemble(p, n).entries
    for i in range(n):
        for j in range(n):
            if j == i:
                expected = 4 * s * i + 2 * s
            elif j == i + 2:
                expected = (i + 1) * (i + 2)
            elif j == i - 1:
                expected = delta
            elif j == i - 2:
                expected = 4 * s * s - c
            elif j == i - 3:
                expected = -beta
            elif j == i - 4:
                expected = 1.0
            else:
                expected = 0.0
            assert m[i, j] == pytest.approx(expected, rel=1e-15, abs=0)
    # row 0 touches only h_0 and h_2
    assert np.count_nonzero(m[0]) == (2 if n > 2 else 1)


@given(n=st.integers(3, 40), k=st.integers(2, 40))
def test_leading_block(n, k):
    k = min(k, n)
    np.testing.assert_array_equal(assemble(P, n).entries[:k, :k], assemble(P, k).entries)


def test_full_secular_matrix():
    h = assemble(P, 6)
    np.testing.assert_array_equal(h.at_energy(1.5), h.entries - 1.5 * np.eye(6))


@pytest.mark.parametrize("n", [5, 17, 35, 60])
def test_trace_identity(n):
    h = assemble(P, n)
    assert np.trace(h.entries) == pytest.approx(2 * 2 * n**2, rel=1e-15)
    assert h.trace() == 4 * n**2
    assert abs(eigenvalues(h.entries).eigenvalues.sum() - h.trace()) <= 1e-8 * h.trace()


def test_csv_dump_roundtrip():
    h = assemble(OscillatorParams(beta=0.1, c=1 / 3, delta=0.7, s=1.3), 7)
    text = h.to_csv()
    back = np.loadtxt(io.StringIO(text), delimiter=",")
    np.testing.assert_array_equal(back, h.entries)
    buf = io.StringIO()
    assert h.to_csv(buf) is None and buf.getvalue() == text
