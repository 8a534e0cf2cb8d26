"""Cover-problem detection between record chunks of a cluster.

A cover problem ties an item x of a later chunk to the items of an earlier
chunk whose support is at least x's: when the joint support of that candidate
set equals its minimum singleton support, the minimum-support members are
"covered" by the rest, and linking x to a covered item forces linkage to all
covering items.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .anonymize import Cluster, DisassociatedDataset, RecordChunk
from .model import Item, Itemset


@dataclass(frozen=True)
class CoverInstance:
    """One detected cover problem.

    Chunk indices are 0-based positions into the cluster's chunk tuple;
    `candidate_set` holds the previous-chunk items with support >= the
    target's, `covered` its minimum-support members and `covering` the rest.
    """

    cluster_index: int
    target_chunk: int
    target_item: Item
    prev_chunk: int
    candidate_set: Itemset
    covered: Itemset
    covering: Itemset

    @property
    def singleton(self) -> bool:
        """True when the candidate set has a single member (degenerate cover)."""
        return len(self.candidate_set) == 1


def candidate_set(x: Item, target_chunk: RecordChunk, prev_chunk: RecordChunk) -> Itemset:
    """Items of `prev_chunk` whose support is >= the support of x in its chunk."""
    if x not in target_chunk.items:
        raise ValueError(f"item {x} is not in the target chunk's domain")
    s_x = target_chunk.column_support_map[x]
    prev_sup = prev_chunk.column_support_map
    return frozenset(y for y in prev_chunk.items if prev_sup[y] >= s_x)


def is_cover(cand: Itemset, prev_chunk: RecordChunk) -> Optional[tuple]:
    """(covered, covering) when the candidate set's joint support equals its
    minimum singleton support; None otherwise or for an empty candidate set."""
    if not cand:
        return None
    if not cand <= prev_chunk.items:
        raise ValueError("candidate set must be drawn from the previous chunk's items")
    sups = prev_chunk.column_support_map
    min_sup = min(sups[y] for y in cand)
    if prev_chunk.support(cand) != min_sup:
        return None
    covered = frozenset(y for y in cand if sups[y] == min_sup)
    return covered, cand - covered


def detect_covers(cluster: Cluster, cluster_index: int = 0) -> list[CoverInstance]:
    """All cover instances of one cluster.

    Every chunk j >= 2 is tested against every earlier chunk; output order is
    target chunk ascending, target item by id, previous chunk descending.
    """
    out = []
    chunks = cluster.chunks
    for j in range(1, len(chunks)):
        for x in sorted(chunks[j].items):
            for l in range(j - 1, -1, -1):
                cand = candidate_set(x, chunks[j], chunks[l])
                res = is_cover(cand, chunks[l]) if cand else None
                if res is not None:
                    covered, covering = res
                    out.append(
                        CoverInstance(cluster_index, j, x, l, cand, covered, covering)
                    )
    return out


def detect_all_covers(tstar: DisassociatedDataset) -> list[CoverInstance]:
    """Cover instances of every cluster, cluster order preserved."""
    out = []
    for ci, cluster in enumerate(tstar.clusters):
        out.extend(detect_covers(cluster, ci))
    return out
