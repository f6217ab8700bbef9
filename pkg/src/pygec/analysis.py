"""Interpretability computations on exported model tensors.

Covers attention-mass aggregation per prompt component, text/Pinyin
feature alignment in hidden-state space, and PCA projection of pooled
vectors.  All numerics run in float64; the dump format stores float32.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np


class AnalysisError(ValueError):
    pass


class DumpFormatError(ValueError):
    pass


ROLE_TEXT = "text"
ROLE_PINYIN = "pinyin"


def _as_matrix(m, what: str) -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise AnalysisError(f"{what} must be a nonempty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise AnalysisError(f"{what} contains non-finite values")
    return a


def _span(value, what: str) -> tuple[int, int]:
    start, end = int(value[0]), int(value[1])
    if start < 0 or end <= start:
        raise AnalysisError(f"{what} span [{start}, {end}) must be non-empty and nonnegative")
    return start, end


@dataclass(frozen=True)
class SpanMap:
    """Half-open token index ranges.  Key-axis spans locate the prompt
    components; the output span selects query rows."""

    hypothesis: tuple[int, int]
    prediction: tuple[int, int]
    output: tuple[int, int]
    pinyin: Optional[tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "hypothesis", _span(self.hypothesis, "hypothesis"))
        object.__setattr__(self, "prediction", _span(self.prediction, "prediction"))
        object.__setattr__(self, "output", _span(self.output, "output"))
        if self.pinyin is not None:
            object.__setattr__(self, "pinyin", _span(self.pinyin, "pinyin"))
        key_spans = self.key_spans()
        names = sorted(key_spans)
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                (s1, e1), (s2, e2) = key_spans[a], key_spans[b]
                if s1 < e2 and s2 < e1:
                    raise AnalysisError(f"{a} and {b} spans overlap")

    def key_spans(self) -> dict[str, tuple[int, int]]:
        spans = {"hypothesis": self.hypothesis, "prediction": self.prediction}
        if self.pinyin is not None:
            spans["pinyin"] = self.pinyin
        return spans

    def to_json(self) -> dict:
        return {
            "hypothesis": list(self.hypothesis),
            "prediction": list(self.prediction),
            "output": list(self.output),
            "pinyin": list(self.pinyin) if self.pinyin is not None else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SpanMap":
        pinyin = obj.get("pinyin")
        return cls(
            hypothesis=tuple(obj["hypothesis"]),
            prediction=tuple(obj["prediction"]),
            output=tuple(obj["output"]),
            pinyin=tuple(pinyin) if pinyin is not None else None,
        )


ROW_SUM_TOL = 1e-4


@dataclass
class HiddenStateRecord:
    id: str
    role: str
    matrix: np.ndarray

    def __post_init__(self):
        if self.role not in (ROLE_TEXT, ROLE_PINYIN):
            raise AnalysisError(f"unknown hidden-state role {self.role!r}")
        self.matrix = _as_matrix(self.matrix, f"hidden states for {self.id!r}")


@dataclass
class AttentionRecord:
    id: str
    layer: int
    head: int
    matrix: np.ndarray
    spans: SpanMap

    def __post_init__(self):
        self.matrix = _as_matrix(self.matrix, f"attention for {self.id!r}")
        rows = self.matrix.sum(axis=1)
        if np.max(np.abs(rows - 1.0)) > ROW_SUM_TOL:
            raise AnalysisError(f"attention rows for {self.id!r} are not stochastic")
        k = self.matrix.shape[1]
        for name, (_, end) in self.spans.key_spans().items():
            if end > k:
                raise AnalysisError(f"{name} span exceeds key axis ({end} > {k})")
        if self.spans.output[1] > self.matrix.shape[0]:
            raise AnalysisError("output span exceeds query axis")


@dataclass
class AttentionSummary:
    id: str
    components: dict[str, float]
    per_layer: dict[int, dict[str, float]]
    raw_sum: bool
    template_excluded: bool


def component_attention(records: Sequence[AttentionRecord],
                        raw_sum: bool = False,
                        exclude_template_keys: bool = False) -> AttentionSummary:
    """Attention mass received by each prompt component.

    Per layer: mass inside each component's key span, averaged over the
    output-span query rows and over heads; the per-component total sums
    the layers.  raw_sum skips both means and adds everything up, which
    scales with sequence length and head count.  exclude_template_keys
    renormalizes each query row over the union of component spans, so
    mass on template tokens (keys outside every span) stops diluting the
    scores; without it scores are never renormalized.
    """
    if not records:
        raise AnalysisError("no attention records")
    first = records[0]
    for r in records[1:]:
        if r.id != first.id or r.spans != first.spans:
            raise AnalysisError("attention records mix utterances or span maps")
    spans = first.spans
    q0, q1 = spans.output
    layers: dict[int, list[dict[str, float]]] = {}
    for r in records:
        rows = r.matrix[q0:q1, :]
        comp_rows = {name: rows[:, s:e].sum(axis=1)
                     for name, (s, e) in spans.key_spans().items()}
        if exclude_template_keys:
            row_totals = sum(comp_rows.values())
            if float(np.min(row_totals)) <= 0.0:
                raise AnalysisError(
                    "a query row puts no mass on any component span")
            comp_rows = {name: v / row_totals for name, v in comp_rows.items()}
        per_head = {}
        for name, v in comp_rows.items():
            mass = float(v.sum())
            per_head[name] = mass if raw_sum else mass / rows.shape[0]
        layers.setdefault(r.layer, []).append(per_head)
    per_layer: dict[int, dict[str, float]] = {}
    for layer, heads in sorted(layers.items()):
        agg = {}
        for name in spans.key_spans():
            total = sum(h[name] for h in heads)
            agg[name] = total if raw_sum else total / len(heads)
        per_layer[layer] = agg
    totals = {
        name: sum(per_layer[layer][name] for layer in per_layer)
        for name in spans.key_spans()
    }
    return AttentionSummary(id=first.id, components=totals,
                            per_layer=per_layer, raw_sum=raw_sum,
                            template_excluded=exclude_template_keys)


def text_vector(h_text) -> np.ndarray:
    """Mean pooling over token positions."""
    return _as_matrix(h_text, "text hidden states").mean(axis=0)


def _row_cosines(matrix: np.ndarray, v: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1)
    vnorm = np.linalg.norm(v)
    with np.errstate(invalid="ignore", divide="ignore"):
        cos = (matrix @ v) / (norms * vnorm)
    cos[norms == 0.0] = 0.0
    return cos


def pinyin_vector(h_pinyin, v_text, t: int) -> np.ndarray:
    """Mean of the min(P, T) Pinyin rows most cosine-similar to the
    pooled text vector; cosine ties keep the lower row index."""
    matrix = _as_matrix(h_pinyin, "pinyin hidden states")
    v = np.asarray(v_text, dtype=np.float64)
    if t < 1:
        raise AnalysisError("t must be >= 1")
    if np.linalg.norm(v) == 0.0:
        raise AnalysisError("zero-norm text vector: cosine alignment undefined")
    keep = min(matrix.shape[0], t)
    cos = _row_cosines(matrix, v)
    order = sorted(range(matrix.shape[0]), key=lambda i: (-cos[i], i))
    return matrix[sorted(order[:keep]), :].mean(axis=0)


def _cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise AnalysisError("zero-norm vector in cosine")
    return float(u @ v / (nu * nv))


@dataclass
class AlignmentVectors:
    v_text: np.ndarray
    v_pinyin: np.ndarray
    cosine: float


def alignment_vectors(h_text, h_pinyin) -> AlignmentVectors:
    ht = _as_matrix(h_text, "text hidden states")
    vt = text_vector(ht)
    vp = pinyin_vector(h_pinyin, vt, ht.shape[0])
    return AlignmentVectors(v_text=vt, v_pinyin=vp, cosine=_cosine(vt, vp))


QUANTILE_POINTS = {"min": 0.0, "p25": 0.25, "median": 0.5, "p75": 0.75, "max": 1.0}


@dataclass
class AlignmentReport:
    mean: float
    quantiles: dict[str, float]
    cosines: list[float]
    n_pairs: int
    n_excluded: int

    def to_json(self) -> dict:
        return {
            "mean_cosine": self.mean,
            "quantiles": self.quantiles,
            "n_pairs": self.n_pairs,
            "n_excluded": self.n_excluded,
        }


def alignment_score(pairs: Sequence[tuple]) -> AlignmentReport:
    """Mean cosine between pooled text and aligned Pinyin vectors over
    (H_t, H_p) pairs.  Degenerate pairs (zero-norm vectors) are dropped
    and counted, not imputed."""
    if not pairs:
        raise AnalysisError("no hidden-state pairs")
    cosines = []
    excluded = 0
    for ht, hp in pairs:
        try:
            cosines.append(alignment_vectors(ht, hp).cosine)
        except AnalysisError:
            excluded += 1
    if not cosines:
        raise AnalysisError("every pair was degenerate")
    arr = np.array(cosines)
    quantiles = {name: float(np.quantile(arr, q))
                 for name, q in QUANTILE_POINTS.items()}
    return AlignmentReport(mean=float(arr.mean()), quantiles=quantiles,
                           cosines=cosines, n_pairs=len(cosines),
                           n_excluded=excluded)


def pair_hidden_states(records: Iterable[HiddenStateRecord]) -> list[tuple[str, np.ndarray, np.ndarray]]:
    """Group one text and one pinyin record per utterance id."""
    by_id: dict[str, dict[str, np.ndarray]] = {}
    for r in records:
        roles = by_id.setdefault(r.id, {})
        if r.role in roles:
            raise AnalysisError(f"duplicate {r.role} record for {r.id!r}")
        roles[r.role] = r.matrix
    pairs = []
    for uid in by_id:
        roles = by_id[uid]
        if set(roles) != {ROLE_TEXT, ROLE_PINYIN}:
            raise AnalysisError(f"utterance {uid!r} is missing a role")
        pairs.append((uid, roles[ROLE_TEXT], roles[ROLE_PINYIN]))
    return pairs


@dataclass
class PcaResult:
    projections: np.ndarray
    explained_variance_ratio: np.ndarray
    directions: np.ndarray = field(repr=False)


def pca_project(vectors, k: int) -> PcaResult:
    """Top-k PCA via the N x N Gram matrix (vectors are few, wide).

    Mean-centered; each direction's sign is fixed so its largest-
    magnitude loading is positive; explained-variance ratios come out
    nonincreasing by construction.
    """
    x = _as_matrix(vectors, "pca input")
    n, d = x.shape
    if n < 2:
        raise AnalysisError("pca needs at least 2 vectors")
    if not 1 <= k <= min(n - 1, d):
        raise AnalysisError(f"k={k} outside [1, {min(n - 1, d)}]")
    centered = x - x.mean(axis=0)
    gram = centered @ centered.T
    total = float(np.trace(gram))
    if total <= 0.0:
        raise AnalysisError("zero variance: all input vectors identical")
    eigvals, eigvecs = np.linalg.eigh(gram)
    order = np.argsort(eigvals)[::-1]
    eigvals = np.clip(eigvals[order], 0.0, None)
    eigvecs = eigvecs[:, order]
    if eigvals[k - 1] <= total * 1e-12:
        raise AnalysisError(f"rank deficient: component {k} has no variance")
    sigmas = np.sqrt(eigvals[:k])
    directions = (centered.T @ eigvecs[:, :k]) / sigmas
    for j in range(k):
        lead = int(np.argmax(np.abs(directions[:, j])))
        if directions[lead, j] < 0:
            directions[:, j] = -directions[:, j]
    projections = centered @ directions
    ratios = eigvals[:k] / total
    return PcaResult(projections=projections,
                     explained_variance_ratio=ratios,
                     directions=directions.T)


def write_tensor_dump(records: Sequence, header_path, payload_path=None) -> None:
    """Record-per-line JSON header; matrices go to a float32
    little-endian row-major payload file, or inline as nested decimal
    arrays when no payload path is given."""
    header_path = Path(header_path)
    payload = open(payload_path, "wb") if payload_path is not None else None
    try:
        with open(header_path, "w", encoding="utf-8") as head:
            offset = 0
            for r in records:
                if isinstance(r, HiddenStateRecord):
                    entry = {"id": r.id, "kind": "hidden", "role": r.role}
                elif isinstance(r, AttentionRecord):
                    entry = {"id": r.id, "kind": "attention", "layer": r.layer,
                             "head": r.head, "spans": r.spans.to_json()}
                else:
                    raise DumpFormatError(f"cannot dump {type(r).__name__}")
                entry["shape"] = list(r.matrix.shape)
                if payload is None:
                    entry["values"] = np.asarray(r.matrix, dtype=np.float32).tolist()
                else:
                    blob = np.ascontiguousarray(r.matrix, dtype="<f4").tobytes()
                    entry["offset"] = offset
                    payload.write(blob)
                    offset += len(blob)
                head.write(json.dumps(entry, ensure_ascii=False) + "\n")
    finally:
        if payload is not None:
            payload.close()


def read_tensor_dump(header_path, payload_path=None) -> list:
    header_path = Path(header_path)
    blob = Path(payload_path).read_bytes() if payload_path is not None else None
    records = []
    with open(header_path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{header_path}:{lineno}"
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DumpFormatError(f"{where}: invalid JSON: {exc}") from None
            try:
                shape = tuple(int(v) for v in entry["shape"])
                if "values" in entry:
                    matrix = np.asarray(entry["values"], dtype=np.float64)
                    if matrix.shape != shape:
                        raise DumpFormatError(f"{where}: values do not match shape")
                else:
                    if blob is None:
                        raise DumpFormatError(f"{where}: binary record but no payload file")
                    start = int(entry["offset"])
                    count = int(np.prod(shape))
                    end = start + count * 4
                    if end > len(blob):
                        raise DumpFormatError(f"{where}: payload truncated")
                    matrix = np.frombuffer(blob[start:end], dtype="<f4")
                    matrix = matrix.astype(np.float64).reshape(shape)
                kind = entry["kind"]
                if kind == "hidden":
                    records.append(HiddenStateRecord(id=entry["id"],
                                                     role=entry["role"],
                                                     matrix=matrix))
                elif kind == "attention":
                    records.append(AttentionRecord(id=entry["id"],
                                                   layer=int(entry["layer"]),
                                                   head=int(entry["head"]),
                                                   matrix=matrix,
                                                   spans=SpanMap.from_json(entry["spans"])))
                else:
                    raise DumpFormatError(f"{where}: unknown record kind {kind!r}")
            except DumpFormatError:
                raise
            except (KeyError, TypeError, ValueError) as exc:
                raise DumpFormatError(f"{where}: {exc}") from None
    return records
