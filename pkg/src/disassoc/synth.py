"""Synthetic set-valued datasets with Zipf-distributed item popularity.

Stands in for real click-stream corpora in sweeps and benchmarks when none is
on disk.
"""

from __future__ import annotations

import numpy as np

from .model import Dataset


def zipf_dataset(
    n_records: int,
    n_items: int,
    seed: int,
    *,
    exponent: float = 1.2,
    min_items: int = 1,
    max_items: int = 12,
) -> Dataset:
    """Records of 1..max_items draws from a Zipf(exponent) item distribution.

    Duplicate draws collapse, so records may end up shorter than drawn.
    Deterministic per seed.
    """
    if n_records < 1 or n_items < 1:
        raise ValueError("n_records and n_items must be positive")
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, n_items + 1, dtype=np.float64) ** exponent
    weights /= weights.sum()
    lengths = rng.integers(min_items, max_items + 1, size=n_records)
    draws = rng.choice(n_items, size=int(lengths.sum()), p=weights)
    rows = []
    pos = 0
    width = len(str(n_items - 1))
    for length in lengths:
        rows.append([f"w{d:0{width}d}" for d in draws[pos : pos + length]])
        pos += length
    return Dataset.from_token_lists(rows)
