"""Document embeddings: average of pretrained word vectors, L2-normalized."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bundle import ConferenceBundle

log = logging.getLogger(__name__)

# alphanumeric runs only; underscore counts as a separator
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

LOW_COVERAGE_THRESHOLD = 0.5


@dataclass
class WordVectorTable:
    dimension: int
    entries: dict[str, np.ndarray]

    def __post_init__(self):
        for token, vec in self.entries.items():
            if len(vec) != self.dimension:
                raise ValueError(
                    f"vector for {token!r} has length {len(vec)}, expected {self.dimension}")


@dataclass
class DocumentEmbedding:
    paper_uid: str
    vector: np.ndarray
    coverage: float


def tokenize(text: str) -> list[str]:
    """Lowercase and split on every non-alphanumeric character."""
    return _TOKEN_RE.findall(text.lower())


def load_word_vectors(path: str | Path) -> WordVectorTable:
    """Read `token v1 ... vd` lines; an optional first line `<count> <d>` is skipped."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    entries: dict[str, np.ndarray] = {}
    dimension = 0
    start = 0
    if lines:
        first = lines[0].split()
        if len(first) == 2 and all(f.lstrip("+-").isdigit() for f in first):
            start = 1
    for lineno, line in enumerate(lines[start:], start=start + 1):
        if not line.strip():
            continue
        fields = line.split()
        token = fields[0].lower()
        vec = np.array([float(f) for f in fields[1:]], dtype=np.float64)
        if dimension == 0:
            dimension = len(vec)
        elif len(vec) != dimension:
            raise ValueError(
                f"line {lineno}: vector length {len(vec)} != {dimension}")
        entries[token] = vec
    if dimension == 0:
        raise ValueError(f"{path}: no word vectors found")
    return WordVectorTable(dimension=dimension, entries=entries)


def embed_document(abstract: str, table: WordVectorTable) -> tuple[np.ndarray, float]:
    """Mean of in-table token vectors, unit-normalized; zero vector if none match."""
    tokens = tokenize(abstract)
    hits = [table.entries[t] for t in tokens if t in table.entries]
    if not tokens or not hits:
        return np.zeros(table.dimension), 0.0
    mean = np.mean(hits, axis=0)
    norm = np.linalg.norm(mean)
    if norm == 0.0:
        # exactly cancelling vectors: treat like no coverage, keeps the
        # zero-vector-iff-zero-coverage invariant
        return np.zeros(table.dimension), 0.0
    return mean / norm, len(hits) / len(tokens)


def embed_corpus(bundle: ConferenceBundle,
                 table: WordVectorTable) -> list[DocumentEmbedding]:
    """One embedding per paper in bundle order; warns on coverage below 0.5."""
    embeddings = []
    low = []
    for paper in bundle.papers:
        vector, coverage = embed_document(paper.abstract, table)
        embeddings.append(DocumentEmbedding(paper.uid, vector, coverage))
        if coverage < LOW_COVERAGE_THRESHOLD:
            low.append(paper.uid)
    if low:
        log.warning("papers with vocabulary coverage < %.0f%%: %s",
                    LOW_COVERAGE_THRESHOLD * 100, ", ".join(low))
    return embeddings
