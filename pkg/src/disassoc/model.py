"""Core types and counting primitives for set-valued data.

Items are interned to dense integer ids at ingestion; every counting
operation runs on ids and labels only reappear at I/O boundaries.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

Item = int
Itemset = frozenset  # frozenset[Item]


class Vocabulary:
    """Bijection between item labels and dense non-negative integer ids."""

    __slots__ = ("_labels", "_ids")

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for label in labels:
            self.intern(label)

    def intern(self, label: str) -> int:
        """Return the id for `label`, assigning the next free id if new."""
        item = self._ids.get(label)
        if item is None:
            item = len(self._labels)
            self._ids[label] = item
            self._labels.append(label)
        return item

    def label(self, item: Item) -> str:
        return self._labels[item]

    def id_of(self, label: str) -> Item:
        return self._ids[label]

    def __contains__(self, label: str) -> bool:
        return label in self._ids

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocabulary) and self._labels == other._labels

    def __repr__(self) -> str:
        return f"Vocabulary({len(self)} items)"


@dataclass(frozen=True)
class Record:
    """One individual's itemset; the ordinal is its stable dataset position."""

    ordinal: int
    items: Itemset


@dataclass
class Dataset:
    """Ordered records plus the id/label vocabulary covering exactly their items."""

    records: tuple[Record, ...]
    vocabulary: Vocabulary

    @classmethod
    def from_token_lists(cls, rows: Iterable[Iterable[str]]) -> "Dataset":
        """Build a dataset from label rows, interning labels in encounter order.

        Duplicate tokens within a row collapse (records are sets); empty rows
        are skipped.
        """
        vocab = Vocabulary()
        records = []
        for tokens in rows:
            items = frozenset(vocab.intern(t) for t in tokens)
            if items:
                records.append(Record(len(records), items))
        return cls(tuple(records), vocab)

    def __len__(self) -> int:
        return len(self.records)

    def itemsets(self) -> list[Itemset]:
        return [r.items for r in self.records]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Dataset)
            and self.records == other.records
            and self.vocabulary == other.vocabulary
        )


def _as_itemsets(records: Iterable) -> Iterator[Itemset]:
    for r in records:
        yield r.items if isinstance(r, Record) else r


def support(query: Iterable[Item], records: Iterable) -> int:
    """Number of records containing every item of `query`.

    `records` may hold Record objects or plain sets. Foreign query items
    simply never match; the empty query is contained in every record.
    """
    q = frozenset(query)
    return sum(1 for items in _as_itemsets(records) if q <= items)


def m_combinations(record, m: int) -> set:
    """All size-m subsets of a record's items, as a set of itemsets."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    items = record.items if isinstance(record, Record) else frozenset(record)
    return {frozenset(c) for c in itertools.combinations(sorted(items), m)}


def item_frequencies(records: Iterable) -> Counter:
    """Singleton support of every item occurring in `records`."""
    freq: Counter = Counter()
    for items in _as_itemsets(records):
        freq.update(items)
    return freq
