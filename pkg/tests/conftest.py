import numpy as np
import pytest

from disassoc import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger one-off numba compilation before any timed test runs."""
    B = np.array([[1, 0, 1], [1, 1, 0]], dtype=np.uint8)
    cols = np.array([0, 2], dtype=np.int64)
    for name in kernels.available_backends():
        backend = kernels.get_backend(name)
        backend.column_supports(B)
        backend.cooccurrence(B)
        backend.itemset_support(B, cols)
        backend.conditional_pair_counts(B, 0, cols)
