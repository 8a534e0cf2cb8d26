"""Disassociation toolkit for set-valued data.

Splits a dataset into clusters of k^m-anonymous record chunks plus item
chunks, detects cover problems between chunks, simulates attacker background
knowledge and quantifies the resulting privacy breach, with a desk-scale
exhaustive reconstruction oracle to confirm verdicts.
"""

from .anonymize import (
    AnonymityParams,
    AnonymityViolation,
    Cluster,
    DisassociatedDataset,
    RecordChunk,
    disassociate,
    horizontal_partition,
    verify_km_anonymous,
    vertical_partition,
)
from .attackers import (
    BackgroundKnowledge,
    KnowledgeEntry,
    gen_moderate,
    gen_strong,
    gen_weak,
)
from .audit import (
    AuditReport,
    BreachPair,
    ClusterBreach,
    OracleVerdict,
    Reconstruction,
    alignment_count,
    audit,
    breach_oracle,
    enumerate_reconstructions,
)
from .covers import CoverInstance, candidate_set, detect_all_covers, detect_covers, is_cover
from .errors import DataError, DisassocError, InfeasibleEnumerationError
from .experiment import ExperimentConfig, SweepRow, run_experiment
from .io import load_lexicon, parse_transactions, parse_tstar, serialize_transactions, serialize_tstar
from .model import Dataset, Record, Vocabulary, item_frequencies, m_combinations, support
from .synth import zipf_dataset

__version__ = "0.1.0"
