"""File formats: transaction files, serialized disassociated datasets,
lexicons, knowledge files, audit reports and tabular cover/sweep outputs.

All text is UTF-8 and newline-terminated. Item labels are whitespace-free by
construction of the transaction parser; '|' separates sub-records in the
serialized form, so labels containing it are refused at serialization time.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Iterable, Optional

from .anonymize import AnonymityParams, Cluster, DisassociatedDataset, RecordChunk
from .attackers import BackgroundKnowledge
from .audit import AuditReport
from .covers import CoverInstance
from .errors import DataError
from .model import Dataset, Itemset, Vocabulary

SWEEP_HEADER = ("maxClusterSize", "total", "covers", "clusters", "elapsedMs")
COVER_HEADER = ("cluster", "targetChunk", "item", "prevChunk", "covered", "covering", "singleton")
ORACLE_HEADER = ("cluster", "pair", "status", "vulnerable", "deanonymized", "linkedItems")


def parse_transactions(path) -> Dataset:
    """One record per line, whitespace-separated item tokens.

    Blank lines are skipped and duplicate tokens within a line collapse.
    Unreadable or record-free files raise DataError.
    """
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read transaction file {path}: {exc}") from exc
    rows = [line.split() for line in text.splitlines()]
    dataset = Dataset.from_token_lists(r for r in rows if r)
    if not dataset.records:
        raise DataError(f"transaction file {path} holds no records")
    return dataset


def serialize_transactions(dataset: Dataset) -> str:
    """Inverse of parse_transactions; items written in ascending id order."""
    vocab = dataset.vocabulary
    lines = [" ".join(vocab.label(i) for i in sorted(r.items)) for r in dataset.records]
    return "\n".join(lines) + "\n"


def _labels(itemset: Iterable[int], vocab: Vocabulary, extra: Optional[dict] = None) -> list[str]:
    out = []
    for item in sorted(itemset):
        if extra and item in extra:
            out.append(extra[item])
        else:
            out.append(vocab.label(item))
    return out


def _check_serializable(vocab: Vocabulary) -> None:
    for label in vocab:
        if "|" in label:
            raise DataError(
                f"label {label!r} contains the reserved sub-record separator '|'"
            )


def serialize_tstar(tstar: DisassociatedDataset, vocab: Vocabulary) -> str:
    """Line-oriented text form of a disassociated dataset.

    #params k m maxClusterSize, then per cluster a '#cluster <index>
    <recordCount>' header, one 'C<j>: sub|sub|...' line per record chunk
    (1-based chunk labels) and a 'T: ...' line for the item chunk.
    """
    _check_serializable(vocab)
    k, m, size = tstar.params
    out = [f"#params k={k} m={m} maxClusterSize={size}"]
    for ci, cluster in enumerate(tstar.clusters):
        out.append(f"#cluster {ci} {cluster.record_count}")
        for j, chunk in enumerate(cluster.chunks, start=1):
            subs = "|".join(" ".join(_labels(s, vocab)) for s in chunk.sub_records)
            out.append(f"C{j}: {subs}")
        out.append("T: " + " ".join(_labels(cluster.item_chunk, vocab)))
    return "\n".join(out) + "\n"


def parse_tstar(text: str) -> tuple[DisassociatedDataset, Vocabulary]:
    """Parse the serialize_tstar format; labels are re-interned from scratch."""
    vocab = Vocabulary()
    params = None
    clusters = []
    chunks: list[RecordChunk] = []
    item_chunk: Optional[Itemset] = None
    record_count = 0
    open_cluster = False

    def close_cluster():
        nonlocal chunks, item_chunk, open_cluster
        if open_cluster:
            clusters.append(Cluster(tuple(chunks), item_chunk or frozenset(), record_count))
        chunks, item_chunk, open_cluster = [], None, False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#params"):
            fields = dict(part.split("=", 1) for part in line.split()[1:])
            params = AnonymityParams(
                int(fields["k"]), int(fields["m"]), int(fields["maxClusterSize"])
            )
        elif line.startswith("#cluster"):
            close_cluster()
            _, _idx, count = line.split()
            record_count = int(count)
            open_cluster = True
        elif line.startswith("C") and ":" in line:
            body = line.split(":", 1)[1].strip()
            subs = []
            for part in body.split("|"):
                items = frozenset(vocab.intern(tok) for tok in part.split())
                if items:
                    subs.append(items)
            domain = frozenset().union(*subs) if subs else frozenset()
            chunks.append(RecordChunk(domain, tuple(subs)))
        elif line.startswith("T:"):
            item_chunk = frozenset(vocab.intern(tok) for tok in line[2:].split())
        else:
            raise DataError(f"unrecognized line {lineno} in serialized dataset: {raw!r}")
    close_cluster()
    if params is None:
        raise DataError("serialized dataset misses the #params header")
    return DisassociatedDataset(tuple(clusters), params), vocab


def load_lexicon(path) -> list[str]:
    """One label per line; blank lines and '#'-prefixed comments are ignored."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read lexicon file {path}: {exc}") from exc
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def serialize_knowledge(knowledge: BackgroundKnowledge, vocab: Vocabulary) -> str:
    """Knowledge file: header comment, then '<ordinal>\\t<labels>' per entry
    ('-' marks unattributed entries)."""
    seed = "-" if knowledge.seed is None else str(knowledge.seed)
    lines = [f"#knowledge attacker={knowledge.attacker_class} m={knowledge.m} seed={seed}"]
    for entry in knowledge.entries:
        ordinal = "-" if entry.ordinal is None else str(entry.ordinal)
        lines.append(ordinal + "\t" + " ".join(_labels(entry.itemset, vocab, knowledge.extra_labels)))
    return "\n".join(lines) + "\n"


def serialize_audit_report(
    report: AuditReport,
    vocab: Vocabulary,
    extra_labels: Optional[dict] = None,
    meta: Optional[dict] = None,
) -> str:
    """Structured text form of an audit report (see README for the layout)."""
    lines = []
    if meta:
        lines.append("#audit " + " ".join(f"{key}={val}" for key, val in meta.items()))
    lines.append(f"total: {report.total}")
    lines.append(f"total_without_singleton_covers: {report.total_without_singleton_covers}")
    lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
    for row in report.per_cluster:
        counts = ",".join(str(c) for c in row.chunk_breaches)
        lines.append(f"cluster {row.cluster_index}: max={row.max_breach} chunks={counts}")
    for bp in report.breach_pairs:
        know = ",".join(_labels(bp.knowledge_itemset, vocab, extra_labels))
        lines.append(
            "breach x={x} covered={y} cluster={c} target_chunk={tj} prev_chunk={pj} "
            "singleton={s} knowledge={k}".format(
                x=vocab.label(bp.target_item),
                y=vocab.label(bp.covered_item),
                c=bp.cluster_index,
                tj=bp.target_chunk,
                pj=bp.prev_chunk,
                s=int(bp.singleton_cover),
                k=know,
            )
        )
    return "\n".join(lines) + "\n"


def _rows_to_csv(header: tuple, rows: list[tuple]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _rows_to_jsonl(header: tuple, rows: list[tuple]) -> str:
    lines = [json.dumps(dict(zip(header, row)), sort_keys=True) for row in rows]
    return "\n".join(lines) + ("\n" if lines else "")


def format_rows(header: tuple, rows: list[tuple], fmt: str) -> str:
    if fmt == "csv":
        return _rows_to_csv(header, rows)
    if fmt == "json-lines":
        return _rows_to_jsonl(header, rows)
    raise ValueError(f"unknown output format {fmt!r}")


def cover_rows(covers: Iterable[CoverInstance], vocab: Vocabulary) -> list[tuple]:
    rows = []
    for inst in covers:
        rows.append(
            (
                inst.cluster_index,
                inst.target_chunk,
                vocab.label(inst.target_item),
                inst.prev_chunk,
                " ".join(_labels(inst.covered, vocab)),
                " ".join(_labels(inst.covering, vocab)),
                int(inst.singleton),
            )
        )
    return rows


def sweep_rows_to_table(rows) -> list[tuple]:
    out = []
    for row in rows:
        if row.error is not None:
            out.append((row.max_cluster_size, "ERROR", "", "", f"{row.elapsed_ms:.3f}"))
        else:
            out.append(
                (
                    row.max_cluster_size,
                    row.total,
                    row.covers,
                    row.clusters,
                    f"{row.elapsed_ms:.3f}",
                )
            )
    return out
