"""Independent brute-force reference implementations used as test oracles.

Everything here is written against the definitions directly (exhaustive
enumeration, naive counting) and deliberately shares no code with the
package's fast paths.
"""

from __future__ import annotations

import itertools
from collections import Counter

from disassoc.model import Record


def naive_support(query, itemsets) -> int:
    q = set(query)
    count = 0
    for items in itemsets:
        if q.issubset(items):
            count += 1
    return count


def km_violations_bruteforce(sub_records, k: int, m: int) -> set:
    """All (itemset, support) with size <= m and support in (0, k), enumerated
    over every subset of the chunk's item domain."""
    subs = [set(s) for s in sub_records]
    domain = sorted(set().union(*subs)) if subs else []
    out = set()
    for size in range(1, m + 1):
        for combo in itertools.combinations(domain, size):
            sup = naive_support(combo, subs)
            if 0 < sup < k:
                out.add((frozenset(combo), sup))
    return out


def covers_literal(cluster) -> list:
    """Literal cover detection: all (target chunk, item, previous chunk)
    triples, naive support counting on raw sub-record lists.

    Returns (target_chunk, target_item, prev_chunk, candidate, covered,
    covering) tuples in the same deterministic order the detector uses.
    """
    chunks = [list(c.sub_records) for c in cluster.chunks]
    domains = [sorted(c.items) for c in cluster.chunks]
    found = []
    for j in range(1, len(chunks)):
        for x in domains[j]:
            s_x = naive_support([x], chunks[j])
            for l in range(j - 1, -1, -1):
                cand = [y for y in domains[l] if naive_support([y], chunks[l]) >= s_x]
                if not cand:
                    continue
                singles = {y: naive_support([y], chunks[l]) for y in cand}
                joint = naive_support(cand, chunks[l])
                if joint == min(singles.values()):
                    covered = frozenset(y for y in cand if singles[y] == joint)
                    found.append(
                        (j, x, l, frozenset(cand), covered, frozenset(cand) - covered)
                    )
    return found


def alignment_count_bruteforce(cluster) -> int:
    """Distinct-permutation count per chunk via raw permutations + dedup."""
    n = cluster.record_count
    total = 1
    for chunk in cluster.chunks[1:]:
        padded = list(chunk.sub_records) + [frozenset()] * (n - len(chunk.sub_records))
        total *= len(set(itertools.permutations(padded)))
    return total


def reconstructions_bruteforce(cluster, k: int) -> list:
    """Second, independently written enumerator: raw permutations of every
    non-first chunk deduplicated as whole assignments, validity recomputed
    from the literal cover detector.

    Returns (records tuple, valid) pairs.
    """
    n = cluster.record_count
    firsts = tuple(
        list(cluster.chunks[0].sub_records)
        + [frozenset()] * (n - len(cluster.chunks[0].sub_records))
    ) if cluster.chunks else tuple(frozenset() for _ in range(n))

    other_perms = []
    for chunk in cluster.chunks[1:]:
        padded = list(chunk.sub_records) + [frozenset()] * (n - len(chunk.sub_records))
        other_perms.append(sorted(set(itertools.permutations(padded)), key=_perm_key))

    pairs = set()
    for j, x, l, cand, covered, covering in covers_literal(cluster):
        for y in covered:
            pairs.add(frozenset((x, y)))

    out = []
    for combo in itertools.product(*other_perms):
        rows = []
        for i in range(n):
            row = set(firsts[i])
            for assignment in combo:
                row |= assignment[i]
            rows.append(frozenset(row))
        valid = all(naive_support(p, rows) < k for p in pairs)
        out.append((tuple(rows), valid))
    return out


def _perm_key(perm):
    return [sorted(s) for s in perm]


def audit_reaggregate(tstar, knowledge) -> tuple:
    """Independent audit aggregation from the literal cover detector.

    Returns (total, breached_cluster_count): total is the sum over clusters of
    the max over chunks of knowledge-matched (item, previous chunk) counts;
    breached_cluster_count tallies clusters with any match.
    """
    pair_sets = set()
    for itemset in knowledge.itemsets:
        for p in itertools.combinations(sorted(itemset), 2):
            pair_sets.add(frozenset(p))
    total = 0
    breached = 0
    for cluster in tstar.clusters:
        per_chunk: Counter = Counter()
        for j, x, l, cand, covered, covering in covers_literal(cluster):
            if any(frozenset((x, y)) in pair_sets for y in covered):
                per_chunk[j] += 1
        contribution = max(per_chunk.values(), default=0)
        total += contribution
        if contribution:
            breached += 1
    return total, breached


def random_dataset(
    rng, max_records: int, max_items: int, max_len: int = 8, min_records: int = 1, min_items: int = 1
):
    """Seeded random dataset of min..max_records records over <= max_items labels."""
    from disassoc.model import Dataset

    n = int(rng.integers(min_records, max_records + 1))
    d = int(rng.integers(min_items, max_items + 1))
    rows = []
    for _ in range(n):
        length = int(rng.integers(1, min(max_len, d) + 1))
        rows.append([f"t{int(i)}" for i in rng.choice(d, size=length, replace=False)])
    return Dataset.from_token_lists(rows)


def spearman(xs, ys) -> float:
    """Spearman rank correlation with average ranks for ties."""

    def ranks(vals):
        order = sorted(range(len(vals)), key=lambda i: vals[i])
        out = [0.0] * len(vals)
        i = 0
        while i < len(order):
            j = i
            while j + 1 < len(order) and vals[order[j + 1]] == vals[order[i]]:
                j += 1
            avg = (i + j) / 2 + 1
            for t in range(i, j + 1):
                out[order[t]] = avg
            i = j + 1
        return out

    rx, ry = ranks(xs), ranks(ys)
    n = len(xs)
    mx = sum(rx) / n
    my = sum(ry) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    if vx == 0 or vy == 0:
        return 0.0
    return cov / (vx * vy) ** 0.5
