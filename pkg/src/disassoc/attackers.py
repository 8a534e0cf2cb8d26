"""Background-knowledge generators for the three attacker profiles.

Strong attackers hold one size-m itemset per record, picked to include a
cover-implicated pair whenever the record contains one. Moderate attackers
hold itemsets for a strict random subset of records, each drawn from a strict
subset of the record's m-combinations. Weak attackers hold the m-combinations
of a random pool of dataset items plus out-of-dataset lexicon labels.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import DataError
from .model import Dataset, Item, Itemset

logger = logging.getLogger(__name__)

ATTACKER_CLASSES = ("strong", "moderate", "weak")


class KnowledgeEntry(NamedTuple):
    ordinal: Optional[int]  # source record, None for weak attackers
    itemset: Itemset


@dataclass
class BackgroundKnowledge:
    """An attacker's itemsets, each of size m, with optional record attribution.

    Entries keep generation order so attribution stays injective even when two
    records yield equal itemsets; `itemsets` is the deduplicated view used for
    matching. External (out-of-vocabulary) items get ids past the dataset
    vocabulary, labelled by `extra_labels`.
    """

    attacker_class: str
    m: int
    seed: Optional[int]
    entries: tuple
    extra_labels: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    @cached_property
    def itemsets(self) -> frozenset:
        return frozenset(e.itemset for e in self.entries)

    def pair_lookup(self) -> dict:
        """Map every 2-subset of some itemset to its smallest containing itemset."""
        lookup: dict = {}
        for itemset in sorted(self.itemsets, key=sorted):
            for pair in itertools.combinations(sorted(itemset), 2):
                lookup.setdefault(frozenset(pair), itemset)
        return lookup


def gen_strong(dataset: Dataset, covers: Iterable, m: int) -> BackgroundKnowledge:
    """One well-picked itemset per record with at least m items.

    If the record contains a (target, covered) pair of some cover instance,
    the emitted itemset contains that pair (smallest pair first, completed
    with the record's smallest remaining ids); otherwise it is the record's
    lexicographically first m-combination.
    """
    if m < 2:
        raise ValueError(f"strong knowledge needs m >= 2, got {m}")
    cover_pairs = {
        frozenset((inst.target_item, y)) for inst in covers for y in inst.covered
    }
    entries = []
    skipped = 0
    for rec in dataset.records:
        items = sorted(rec.items)
        if len(items) < m:
            skipped += 1
            continue
        chosen = None
        if cover_pairs:
            if math.comb(len(items), 2) <= len(cover_pairs):
                contained = [p for p in itertools.combinations(items, 2) if frozenset(p) in cover_pairs]
            else:
                contained = [tuple(sorted(p)) for p in cover_pairs if p <= rec.items]
            if contained:
                chosen = min(contained)
        if chosen is not None:
            rest = [it for it in items if it not in chosen]
            itemset = frozenset(chosen) | frozenset(rest[: m - 2])
        else:
            itemset = frozenset(items[:m])
        entries.append(KnowledgeEntry(rec.ordinal, itemset))
    if skipped:
        logger.warning("strong knowledge skipped %d records with fewer than %d items", skipped, m)
    if not entries:
        logger.warning("no record has %d items; strong knowledge is empty", m)
    return BackgroundKnowledge("strong", m, None, tuple(entries))


def _unrank_combination(pool: Sequence, m: int, rank: int) -> tuple:
    """The rank-th m-combination of `pool` in lexicographic order."""
    out = []
    n = len(pool)
    start = 0
    for slot in range(m):
        for i in range(start, n):
            block = math.comb(n - i - 1, m - slot - 1)
            if rank < block:
                out.append(pool[i])
                start = i + 1
                break
            rank -= block
    return tuple(out)


def gen_moderate(dataset: Dataset, m: int, z: int, seed: int) -> BackgroundKnowledge:
    """Itemsets for z distinct records, sampled from a strict subset of each
    record's m-combinations (the lexicographically last one is never drawn)."""
    n = len(dataset.records)
    if not 1 <= z < n:
        raise ValueError(f"z must satisfy 1 <= z < {n}, got {z}")
    eligible = [rec for rec in dataset.records if math.comb(len(rec.items), m) >= 2]
    if len(eligible) < z:
        raise DataError(
            f"only {len(eligible)} records have at least two {m}-combinations; need z={z}"
        )
    rng = np.random.default_rng(seed)
    picked = rng.choice(len(eligible), size=z, replace=False)
    entries = []
    for idx in sorted(int(i) for i in picked):
        rec = eligible[idx]
        pool = sorted(rec.items)
        total = math.comb(len(pool), m)
        sub = np.random.default_rng((seed, rec.ordinal))
        rank = int(sub.integers(0, total - 1))  # total-1 excluded: strict subset
        entries.append(KnowledgeEntry(rec.ordinal, frozenset(_unrank_combination(pool, m, rank))))
    return BackgroundKnowledge("moderate", m, seed, tuple(entries))


def gen_weak(
    dataset: Dataset,
    lexicon: Sequence[str],
    n_internal: int = 10,
    n_external: int = 10,
    m: int = 2,
    seed: int = 0,
) -> BackgroundKnowledge:
    """All m-combinations of a pool of random dataset items and external labels.

    Lexicon labels already present in the vocabulary are filtered out, so
    external items can never match dataset items. Defaults give C(20, 2) = 190
    itemsets.
    """
    vocab = dataset.vocabulary
    filtered = []
    seen = set()
    for label in lexicon:
        if label in vocab or label in seen:
            continue
        seen.add(label)
        filtered.append(label)
    if n_internal > len(vocab):
        raise DataError(f"vocabulary has {len(vocab)} items; cannot sample {n_internal}")
    if n_external > len(filtered):
        raise DataError(
            f"lexicon has {len(filtered)} usable labels after filtering; cannot sample {n_external}"
        )
    rng = np.random.default_rng(seed)
    pool = []
    if n_internal:
        pool.extend(sorted(int(i) for i in rng.choice(len(vocab), size=n_internal, replace=False)))
    extra_labels = {}
    if n_external:
        for offset, pos in enumerate(sorted(int(i) for i in rng.choice(len(filtered), size=n_external, replace=False))):
            item = len(vocab) + offset
            extra_labels[item] = filtered[pos]
            pool.append(item)
    entries = tuple(
        KnowledgeEntry(None, frozenset(c)) for c in itertools.combinations(sorted(pool), m)
    )
    return BackgroundKnowledge("weak", m, seed, entries, extra_labels)
