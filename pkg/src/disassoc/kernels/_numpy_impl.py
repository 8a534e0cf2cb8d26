"""Pure-numpy kernel implementations (the fallback backend).

Every kernel operates on a C-contiguous uint8 presence matrix B of shape
(n_subrecords, n_items) whose rows are sub-records over a local item domain.
"""

import numpy as np

NAME = "numpy"


def column_supports(B: np.ndarray) -> np.ndarray:
    """Singleton support of every column: int64 vector of length d."""
    return B.sum(axis=0, dtype=np.int64)


def cooccurrence(B: np.ndarray) -> np.ndarray:
    """Pair supports: M[i, j] = number of rows containing both i and j."""
    Bi = B.astype(np.int64)
    return Bi.T @ Bi


def itemset_support(B: np.ndarray, cols: np.ndarray) -> int:
    """Number of rows containing every column in `cols` (all rows if empty)."""
    if cols.size == 0:
        return int(B.shape[0])
    return int(B[:, cols].all(axis=1).sum())


def conditional_pair_counts(B: np.ndarray, x: int, cols: np.ndarray) -> np.ndarray:
    """Pair supports restricted to rows containing column `x`.

    M[i, j] = number of rows containing x, cols[i] and cols[j]; the diagonal
    holds the pair supports {x, cols[i]}.
    """
    rows = B[:, x].astype(bool)
    Bx = B[rows][:, cols].astype(np.int64)
    return Bx.T @ Bx
