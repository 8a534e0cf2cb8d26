"""Disassociation: horizontal clustering and vertical chunk splitting.

The transform groups records into clusters of bounded size, then splits each
cluster's item domain into record chunks that individually satisfy the
k^m-anonymity constraint, with items of cluster support below k going to the
cluster's item chunk.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .model import Item, Itemset, Record


class AnonymityParams(NamedTuple):
    k: int
    m: int
    max_cluster_size: int


@dataclass(frozen=True)
class AnonymityViolation:
    """An itemset of size <= m whose support sits strictly between 0 and k."""

    itemset: Itemset
    support: int
    required: int


@dataclass(eq=True)
class RecordChunk:
    """A vertical slice of a cluster: sub-records projected onto `items`.

    Sub-records keep the cluster's record order with empty projections
    dropped, so the chunk is a multiset of non-empty subsets of `items`.
    """

    items: Itemset
    sub_records: tuple

    @cached_property
    def columns(self) -> tuple:
        """Chunk items in ascending order, backing the matrix columns."""
        return tuple(sorted(self.items))

    @cached_property
    def matrix(self) -> np.ndarray:
        """uint8 presence matrix, one row per sub-record."""
        cols = {item: i for i, item in enumerate(self.columns)}
        B = np.zeros((len(self.sub_records), len(cols)), dtype=np.uint8)
        for r, sub in enumerate(self.sub_records):
            for item in sub:
                B[r, cols[item]] = 1
        return B

    @cached_property
    def column_support_map(self) -> dict:
        sups = kernels.column_supports(self.matrix)
        return {item: int(s) for item, s in zip(self.columns, sups)}

    def support(self, itemset: Iterable[Item]) -> int:
        """Support of `itemset` over the sub-records (foreign items give 0)."""
        lookup = {item: i for i, item in enumerate(self.columns)}
        cols = []
        for item in itemset:
            if item not in lookup:
                return 0
            cols.append(lookup[item])
        return int(kernels.itemset_support(self.matrix, np.array(cols, dtype=np.int64)))

    def __len__(self) -> int:
        return len(self.sub_records)


@dataclass(eq=True)
class Cluster:
    """Record chunks plus the item chunk of one horizontal group.

    Chunk item domains and the item chunk are pairwise disjoint and together
    cover the group's items; record_count is the group size (sub-record lists
    may be shorter because empty projections are dropped).
    """

    chunks: tuple
    item_chunk: Itemset
    record_count: int

    def all_items(self) -> Itemset:
        out = set(self.item_chunk)
        for chunk in self.chunks:
            out |= chunk.items
        return frozenset(out)


@dataclass
class DisassociatedDataset:
    clusters: tuple
    params: AnonymityParams

    def __len__(self) -> int:
        return len(self.clusters)


def _check_params(k: int, m: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def verify_km_anonymous(chunk, k: int, m: int) -> list[AnonymityViolation]:
    """Every itemset of size <= m with support in (0, k) over the sub-records.

    Candidate itemsets are drawn from the sub-records themselves, so an
    itemset that never co-occurs (support 0) is not a violation. An empty
    result means the chunk is k^m-anonymous. `chunk` may be a RecordChunk or
    any iterable of item sets.
    """
    _check_params(k, m)
    subs = chunk.sub_records if isinstance(chunk, RecordChunk) else tuple(chunk)
    counts: Counter = Counter()
    for sub in subs:
        items = sorted(sub)
        for size in range(1, min(m, len(items)) + 1):
            counts.update(map(frozenset, itertools.combinations(items, size)))
    violations = [
        AnonymityViolation(itemset, sup, k)
        for itemset, sup in counts.items()
        if sup < k
    ]
    violations.sort(key=lambda v: (len(v.itemset), sorted(v.itemset)))
    return violations


def _csr_arrays(records: Sequence[Record]):
    lengths = np.fromiter((len(r.items) for r in records), np.int64, len(records))
    indptr = np.concatenate(([0], np.cumsum(lengths)))
    flat = np.empty(int(indptr[-1]), dtype=np.int64)
    for i, r in enumerate(records):
        flat[indptr[i] : indptr[i + 1]] = sorted(r.items)
    return flat, indptr, lengths


def _gather(flat, indptr, lengths, g):
    """Concatenate the item arrays of the records indexed by g, plus owners."""
    lg = lengths[g]
    total = int(lg.sum())
    starts = indptr[g]
    prefix = np.concatenate(([0], np.cumsum(lg)[:-1]))
    idx = np.repeat(starts - prefix, lg) + np.arange(total)
    owner = np.repeat(np.arange(len(g)), lg)
    return flat[idx], owner


def horizontal_partition(dataset, max_cluster_size: int, k: int = 2) -> list:
    """Split the records into ordered disjoint groups of bounded size.

    Groups are produced by recursively splitting on the currently most
    frequent item that is absent from at least one record (ties broken by
    smallest item id), records containing it first. When no such item exists
    the group is chopped into consecutive max_cluster_size slices.
    """
    _check_params(k, 1)
    if max_cluster_size < k:
        raise ValueError(
            f"max_cluster_size must be >= k ({k}), got {max_cluster_size}"
        )
    records = dataset.records if hasattr(dataset, "records") else tuple(dataset)
    n = len(records)
    if n == 0:
        return []
    flat, indptr, lengths = _csr_arrays(records)

    groups: list[np.ndarray] = []
    work = [np.arange(n, dtype=np.int64)]
    while work:
        g = work.pop()
        if len(g) <= max_cluster_size:
            groups.append(g)
            continue
        items_g, owner = _gather(flat, indptr, lengths, g)
        uniq, counts = np.unique(items_g, return_counts=True)
        # candidates by descending frequency, ascending id; skip items found
        # in every record of the group (splitting on them cannot terminate)
        order = np.lexsort((uniq, -counts))
        split_item = -1
        for t in order:
            if counts[t] < len(g):
                split_item = int(uniq[t])
                break
        if split_item < 0:
            for s in range(0, len(g), max_cluster_size):
                groups.append(g[s : s + max_cluster_size])
            continue
        mask = np.zeros(len(g), dtype=bool)
        mask[owner[items_g == split_item]] = True
        work.append(g[~mask])
        work.append(g[mask])  # popped first: presence branch leads
    return [[records[int(i)] for i in g] for g in groups]


def _greedy_domains(B: np.ndarray, order: list, k: int, m: int) -> list:
    """Greedy chunk domains (lists of column indices) over the presence matrix.

    `order` gives candidate columns by descending support. A candidate joins
    the chunk under construction iff the extended projection still has no
    itemset of size <= m with support in (0, k); otherwise it waits for the
    next chunk.
    """
    if m == 1:
        # only singleton supports constrain the chunk and every candidate
        # already has support >= k
        return [list(order)] if order else []

    pair = kernels.cooccurrence(B) if m == 2 else None
    domains = []
    remaining = list(order)
    while remaining:
        accepted: list[int] = []
        deferred: list[int] = []
        for x in remaining:
            if not accepted:
                ok = True  # a lone frequent item is always k^m-anonymous
            elif m == 2:
                v = pair[x, np.array(accepted, dtype=np.int64)]
                ok = not bool(((v > 0) & (v < k)).any())
            elif m == 3:
                M = kernels.conditional_pair_counts(B, x, np.array(accepted, dtype=np.int64))
                ok = not bool(((M > 0) & (M < k)).any())
            else:
                ok = _extension_ok_general(B, accepted, x, k, m)
            (accepted if ok else deferred).append(x)
        domains.append(accepted)
        remaining = deferred
    return domains


def _extension_ok_general(B: np.ndarray, accepted: list, x: int, k: int, m: int) -> bool:
    """Def.1 check for adding column x, any m: counts all itemsets through x.

    Rows containing a candidate itemset necessarily contain x, so counting
    subset occurrences over the rows holding x yields exact supports.
    """
    acc = set(accepted)
    counts: Counter = Counter()
    for row in B:
        if not row[x]:
            continue
        present = sorted(i for i in acc if row[i])
        for size in range(1, m):
            counts.update(itertools.combinations(present, size))
    return all(c >= k for c in counts.values())


def vertical_partition(group: Sequence, k: int, m: int) -> Cluster:
    """Split one group's items into k^m-anonymous record chunks + item chunk.

    Items with group support below k land in the item chunk; the rest are
    offered to chunks in descending support order (ties by id) and deferred
    to later chunks whenever accepting one would break the constraint.
    """
    _check_params(k, m)
    itemsets = [r.items if isinstance(r, Record) else frozenset(r) for r in group]
    n = len(itemsets)
    sup: Counter = Counter()
    for items in itemsets:
        sup.update(items)
    frequent = sorted((it for it, s in sup.items() if s >= k), key=lambda it: (-sup[it], it))
    item_chunk = frozenset(it for it, s in sup.items() if s < k)

    cols = sorted(frequent)
    col_of = {item: i for i, item in enumerate(cols)}
    B = np.zeros((n, len(cols)), dtype=np.uint8)
    for r, items in enumerate(itemsets):
        for it in items:
            c = col_of.get(it)
            if c is not None:
                B[r, c] = 1

    chunks = []
    for domain_cols in _greedy_domains(B, [col_of[it] for it in frequent], k, m):
        domain = frozenset(cols[c] for c in domain_cols)
        subs = tuple(p for p in (items & domain for items in itemsets) if p)
        chunks.append(RecordChunk(domain, subs))
    return Cluster(tuple(chunks), item_chunk, n)


def disassociate(dataset, k: int, m: int, max_cluster_size: int) -> DisassociatedDataset:
    """Full transform: horizontal grouping then per-group vertical splitting.

    Deterministic given the record order and parameters; cluster order
    follows group order.
    """
    _check_params(k, m)
    if max_cluster_size < k:
        raise ValueError(
            f"max_cluster_size must be >= k ({k}), got {max_cluster_size}"
        )
    groups = horizontal_partition(dataset, max_cluster_size, k)
    clusters = tuple(vertical_partition(g, k, m) for g in groups)
    return DisassociatedDataset(clusters, AnonymityParams(k, m, max_cluster_size))
