"""Privacy-breach quantification and the desk-scale reconstruction oracle.

`audit` counts, per cluster, how many (item, earlier-chunk) cover instances
have their (target, covered) pair inside some knowledge itemset; a cluster
contributes the maximum count over its chunks and the total sums cluster
contributions. `enumerate_reconstructions` and `breach_oracle` replay the
inverse transformation exhaustively to confirm what the counts mean.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Optional

from .anonymize import Cluster, DisassociatedDataset
from .attackers import BackgroundKnowledge
from .covers import CoverInstance, detect_covers
from .errors import InfeasibleEnumerationError
from .model import Item, Itemset, support

DEFAULT_ENUMERATION_LIMIT = 10_000


class ClusterBreach(NamedTuple):
    cluster_index: int
    max_breach: int
    chunk_breaches: tuple


class BreachPair(NamedTuple):
    target_item: Item
    covered_item: Item
    cluster_index: int
    knowledge_itemset: Itemset
    target_chunk: int
    prev_chunk: int
    singleton_cover: bool


@dataclass
class AuditReport:
    """Audit outcome: total vulnerable records plus the per-cluster evidence.

    total equals the sum over clusters of max_breach. The secondary total
    ignores breaches whose cover has a single-item candidate set, so both
    readings of that degenerate case stay recoverable.
    """

    total: int
    per_cluster: tuple
    breach_pairs: tuple
    elapsed_ms: float
    total_without_singleton_covers: int


def audit(
    tstar: DisassociatedDataset,
    knowledge: BackgroundKnowledge,
    covers: Optional[Iterable[CoverInstance]] = None,
    clock: Callable[[], float] = time.perf_counter,
) -> AuditReport:
    """Count knowledge-matched cover instances per chunk; see module docstring.

    `covers` may carry precomputed instances for the whole dataset; otherwise
    they are detected here. A breach is counted once per (item, earlier chunk)
    even when several covered items match.
    """
    if knowledge.m != tstar.params.m:
        raise ValueError(
            f"knowledge built for m={knowledge.m} but dataset disassociated with m={tstar.params.m}"
        )
    t0 = clock()
    pair_map = knowledge.pair_lookup()

    by_cluster: dict = {}
    if covers is not None:
        for inst in covers:
            by_cluster.setdefault(inst.cluster_index, []).append(inst)

    per_cluster = []
    breach_pairs = []
    total = 0
    total_ns = 0
    for ci, cluster in enumerate(tstar.clusters):
        instances = by_cluster.get(ci) if covers is not None else detect_covers(cluster, ci)
        counts = [0] * len(cluster.chunks)
        counts_ns = [0] * len(cluster.chunks)
        for inst in instances or ():
            match = None
            for y in sorted(inst.covered):
                hit = pair_map.get(frozenset((inst.target_item, y)))
                if hit is not None:
                    match = (y, hit)
                    break
            if match is None:
                continue
            counts[inst.target_chunk] += 1
            if not inst.singleton:
                counts_ns[inst.target_chunk] += 1
            breach_pairs.append(
                BreachPair(
                    inst.target_item,
                    match[0],
                    ci,
                    match[1],
                    inst.target_chunk,
                    inst.prev_chunk,
                    inst.singleton,
                )
            )
        max_breach = max(counts, default=0)
        total += max_breach
        total_ns += max(counts_ns, default=0)
        per_cluster.append(ClusterBreach(ci, max_breach, tuple(counts)))
    elapsed_ms = (clock() - t0) * 1000.0
    return AuditReport(total, tuple(per_cluster), tuple(breach_pairs), elapsed_ms, total_ns)


@dataclass(frozen=True)
class Reconstruction:
    """One alignment of sub-records across chunks.

    records has exactly record_count rows (rows whose every chunk slot was
    padding are empty). The item chunk is carried unchanged as leftover_items;
    it takes no part in alignment or validity.
    """

    records: tuple
    valid: bool
    leftover_items: Itemset


def _padded(chunk_subs: tuple, n: int) -> list:
    if len(chunk_subs) > n:
        raise ValueError(
            f"chunk has {len(chunk_subs)} sub-records but the cluster holds {n} records"
        )
    return list(chunk_subs) + [frozenset()] * (n - len(chunk_subs))


def _multiset_permutations(values: list):
    """Distinct permutations of `values`; equal sub-records are interchangeable."""
    counts = Counter(values)
    distinct = sorted(counts, key=lambda s: (len(s), sorted(s)))
    n = len(values)
    buf = [frozenset()] * n

    def rec(depth: int):
        if depth == n:
            yield tuple(buf)
            return
        for v in distinct:
            if counts[v]:
                counts[v] -= 1
                buf[depth] = v
                yield from rec(depth + 1)
                counts[v] += 1

    yield from rec(0)


def alignment_count(cluster: Cluster) -> int:
    """Number of distinct alignments: product over chunks after the first of
    the multiset permutations of their padded sub-record lists."""
    n = cluster.record_count
    count = 1
    for chunk in cluster.chunks[1:]:
        padded = _padded(chunk.sub_records, n)
        c = math.factorial(n)
        for mult in Counter(padded).values():
            c //= math.factorial(mult)
        count *= c
    return count


def enumerate_reconstructions(
    cluster: Cluster,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    *,
    k: int,
    covers: Optional[list] = None,
) -> list[Reconstruction]:
    """All alignments of sub-records across chunks, validity-marked.

    The first chunk keeps its order (padded with empty sub-records up to the
    cluster's record count); every other chunk contributes each distinct
    permutation of its padded sub-records. An alignment is invalid iff some
    detected cover's (target, covered) pair reaches support k in it: such a
    pair would have kept the target item in the earlier chunk. Enumeration is
    refused outright when the alignment count exceeds `limit`.
    """
    count = alignment_count(cluster)
    if count > limit:
        raise InfeasibleEnumerationError(count, limit)
    n = cluster.record_count
    if covers is None:
        covers = detect_covers(cluster)
    check_pairs = sorted(
        {frozenset((inst.target_item, y)) for inst in covers for y in inst.covered},
        key=sorted,
    )

    if cluster.chunks:
        first = tuple(_padded(cluster.chunks[0].sub_records, n))
    else:
        first = tuple(frozenset() for _ in range(n))
    rest = [_padded(c.sub_records, n) for c in cluster.chunks[1:]]

    out = []
    for combo in itertools.product(*(_multiset_permutations(p) for p in rest)):
        rows = []
        for i in range(n):
            row = first[i]
            for assigned in combo:
                row = row | assigned[i]
            rows.append(row)
        valid = all(support(pair, rows) < k for pair in check_pairs)
        out.append(Reconstruction(tuple(rows), valid, cluster.item_chunk))
    return out


@dataclass(frozen=True)
class OracleVerdict:
    vulnerable: bool
    deanonymized: bool
    linked_items: Itemset


def breach_oracle(
    cluster: Cluster,
    pair: Iterable[Item],
    k: int,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> OracleVerdict:
    """Exhaustively decide whether a known pair breaches the cluster.

    vulnerable: the pair's support stays below k in every valid
    reconstruction. deanonymized: additionally, every record containing the
    pair carries one identical full itemset across all valid reconstructions.
    linked_items is the intersection of those full itemsets (empty when the
    pair never occurs).
    """
    pair = frozenset(pair)
    if len(pair) != 2:
        raise ValueError(f"oracle pair must have exactly 2 items, got {sorted(pair)}")
    reconstructions = enumerate_reconstructions(cluster, limit, k=k)
    valid = [r for r in reconstructions if r.valid]
    vulnerable = all(support(pair, r.records) < k for r in valid)
    occurrences = [row for r in valid for row in r.records if pair <= row]
    deanonymized = vulnerable and bool(occurrences) and all(
        row == occurrences[0] for row in occurrences
    )
    linked = frozenset.intersection(*occurrences) if occurrences else frozenset()
    return OracleVerdict(vulnerable, deanonymized, linked)
