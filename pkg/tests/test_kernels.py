import numpy as np
import pytest

from disassoc import kernels


def random_matrix(rng, n=None, d=None):
    n = n or int(rng.integers(1, 40))
    d = d or int(rng.integers(1, 30))
    return (rng.random((n, d)) < 0.4).astype(np.uint8)


@pytest.fixture()
def backends():
    names = kernels.available_backends()
    if len(names) < 2:
        pytest.skip("only one backend available")
    return [kernels.get_backend(n) for n in names]


def test_both_backends_present():
    assert "numpy" in kernels.available_backends()
    assert "numba" in kernels.available_backends()


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_set_backend_switches_and_restores():
    original = kernels.active_backend
    try:
        for name in kernels.available_backends():
            assert kernels.set_backend(name) == name
            assert kernels.active_backend == name
    finally:
        kernels.set_backend(original)


def test_backend_equivalence(backends):
    rng = np.random.default_rng(42)
    for _ in range(60):
        B = random_matrix(rng)
        n, d = B.shape
        cols = np.sort(rng.choice(d, size=int(rng.integers(0, d + 1)), replace=False)).astype(np.int64)
        x = int(rng.integers(0, d))
        results = []
        for backend in backends:
            results.append(
                (
                    backend.column_supports(B),
                    backend.cooccurrence(B),
                    backend.itemset_support(B, cols),
                    backend.conditional_pair_counts(B, x, cols),
                )
            )
        ref = results[0]
        for other in results[1:]:
            np.testing.assert_array_equal(ref[0], other[0])
            np.testing.assert_array_equal(ref[1], other[1])
            assert ref[2] == other[2]
            np.testing.assert_array_equal(ref[3], other[3])


def test_kernels_against_python_counting():
    rng = np.random.default_rng(9)
    for backend in [kernels.get_backend(n) for n in kernels.available_backends()]:
        B = random_matrix(rng, 25, 12)
        rows = [set(np.flatnonzero(B[i])) for i in range(B.shape[0])]
        sups = backend.column_supports(B)
        for j in range(B.shape[1]):
            assert sups[j] == sum(1 for r in rows if j in r)
        C = backend.cooccurrence(B)
        for a in range(B.shape[1]):
            for b in range(B.shape[1]):
                assert C[a, b] == sum(1 for r in rows if a in r and b in r)
        cols = np.array([1, 4, 7], dtype=np.int64)
        assert backend.itemset_support(B, cols) == sum(1 for r in rows if {1, 4, 7} <= r)
        M = backend.conditional_pair_counts(B, 0, cols)
        for i, a in enumerate(cols):
            for j, b in enumerate(cols):
                expected = sum(1 for r in rows if 0 in r and a in r and b in r)
                assert M[i, j] == expected


def test_empty_cols_counts_all_rows():
    empty = np.array([], dtype=np.int64)
    B = np.ones((5, 3), dtype=np.uint8)
    for name in kernels.available_backends():
        assert kernels.get_backend(name).itemset_support(B, empty) == 5
