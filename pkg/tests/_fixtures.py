"""Shared example data: the medical search scenario and the four-record
cover showcase, both frozen so every test sees identical structures."""

from __future__ import annotations

from disassoc.anonymize import disassociate
from disassoc.model import Dataset

# Six search histories: three oncology records sharing {Cancer, Treatment,
# Oncologist}, one {Treatment, Oncologist} pair, two more SideEffects
# searchers. Disassociating with k=3, m=2 yields one cluster with chunks
# {Cancer, Oncologist, Treatment} and {SideEffects} plus item chunk
# {Flu, Headache, Vomiting}, and SideEffects->Cancer forms a cover.
MEDICAL_ROWS = [
    ["SideEffects", "Vomiting", "Cancer", "Treatment", "Oncologist"],
    ["Cancer", "Treatment", "Oncologist"],
    ["Cancer", "Treatment", "Oncologist"],
    ["Treatment", "Oncologist"],
    ["SideEffects", "Flu"],
    ["SideEffects", "Headache"],
]

# Four records whose k=2, m=2 disassociation gives chunk1=[abc, abc, ab] and
# chunk2=[e, e] in a single cluster: the minimal cover-problem showcase with
# 6 distinct reconstructions of which 5 are valid.
SHOWCASE_ROWS = [
    ["a", "b", "c"],
    ["a", "b", "c"],
    ["a", "b", "e"],
    ["e"],
]


def medical_dataset() -> Dataset:
    return Dataset.from_token_lists(MEDICAL_ROWS)


def medical_tstar():
    ds = medical_dataset()
    return ds, disassociate(ds, 3, 2, len(ds.records))


def showcase_dataset() -> Dataset:
    return Dataset.from_token_lists(SHOWCASE_ROWS)


def showcase_cluster():
    """(dataset, cluster) for the four-record showcase, k=2 m=2."""
    ds = showcase_dataset()
    tstar = disassociate(ds, 2, 2, len(ds.records))
    assert len(tstar.clusters) == 1
    return ds, tstar.clusters[0]


def ids(dataset: Dataset, *labels: str):
    return tuple(dataset.vocabulary.id_of(lab) for lab in labels)


def labelset(dataset: Dataset, items) -> set:
    return {dataset.vocabulary.label(i) for i in items}
