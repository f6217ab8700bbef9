"""Subcommand entry point wiring the toolkit into file-to-file pipeline
stages: pinyin, synth, correct, evaluate, ensemble, analyze.

One flat JSON config drives every stage; flags override config values.
Each artifact embeds the config hash, the effective seed, and the
toolkit version, and reruns with identical inputs are byte-identical
(latency fields aside).  Exit codes: 0 success, 1 partial failures above
the configured threshold, 2 configuration or input errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .analysis import (
    AnalysisError,
    AttentionRecord,
    DumpFormatError,
    HiddenStateRecord,
    alignment_vectors,
    component_attention,
    pair_hidden_states,
    pca_project,
    read_tensor_dump,
)
from .corpus import CorpusFormatError, Lexicon, load_lexicon, load_utterances
from .ensemble import (
    CandidateFormatError,
    EnsembleSelection,
    llm_rerank,
    load_candidate_sets,
    pinyin_rerank,
    rover_merge,
)
from .gec import (
    ChatClient,
    Corrector,
    EndpointConfig,
    PromptError,
    ResponseCache,
    TaskKind,
    failure_rate,
)
from .metrics import Normalization, evaluate_corpus
from .pinyin import (
    DictionaryError,
    load_default_dictionaries,
    pinyin_of,
)
from .synth import SynthesisConfig, synthesize_dataset


class ConfigError(ValueError):
    pass


EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_CONFIG = 2

_ENV_REF = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def _interpolate_env(value: str) -> str:
    def repl(m):
        name = m.group(1)
        if name not in os.environ:
            raise ConfigError(f"environment variable {name} is not set")
        return os.environ[name]

    return _ENV_REF.sub(repl, value)


@dataclass
class RunConfig:
    seed: int = 0
    dictionary: Optional[str] = None
    homophones: Optional[str] = None
    tone_exact: bool = True
    lexicon: Optional[str] = None
    corpus: Optional[str] = None
    cache: Optional[str] = None
    output_dir: str = "out"
    synthesis: SynthesisConfig = field(default_factory=SynthesisConfig)
    endpoint: Optional[EndpointConfig] = None
    normalization: Normalization = field(default_factory=Normalization)
    raw_sum: bool = False
    exclude_template_keys: bool = False
    pca_components: int = 2
    failure_threshold: float = 0.0
    config_hash: str = ""

    def provenance(self) -> dict:
        return {"config_hash": self.config_hash, "seed": self.seed,
                "version": __version__}


def _take(section: dict, allowed: set[str], where: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown {where} keys: {', '.join(sorted(unknown))}")


def load_run_config(path=None, seed_override: Optional[int] = None) -> RunConfig:
    """Parse the flat JSON config.  ${VAR} interpolation is applied only
    inside the endpoint section, which is where secrets belong; the
    config hash is taken over the raw file bytes so secrets never enter
    it."""
    if path is None:
        raw_bytes = b"{}"
        data = {}
    else:
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file {p} does not exist")
        raw_bytes = p.read_bytes()
        try:
            data = json.loads(raw_bytes.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ConfigError(f"{p}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    _take(data, {"seed", "paths", "synthesis", "endpoint", "normalization",
                 "analysis", "tone_exact", "failure_threshold"}, "config")

    cfg = RunConfig(config_hash=hashlib.sha256(raw_bytes).hexdigest())
    cfg.seed = int(data.get("seed", 0))
    if seed_override is not None:
        cfg.seed = seed_override
    cfg.tone_exact = bool(data.get("tone_exact", True))
    cfg.failure_threshold = float(data.get("failure_threshold", 0.0))

    paths = data.get("paths", {})
    _take(paths, {"dictionary", "homophones", "lexicon", "corpus", "cache",
                  "output_dir"}, "paths")
    for name in ("dictionary", "homophones", "lexicon", "corpus"):
        value = paths.get(name)
        if value is not None:
            if not Path(value).exists():
                raise ConfigError(f"paths.{name}: {value} does not exist")
            setattr(cfg, name, value)
    cfg.cache = paths.get("cache")
    cfg.output_dir = paths.get("output_dir", "out")

    synth = dict(data.get("synthesis", {}))
    if "seed" in synth:
        raise ConfigError("synthesis.seed is not allowed; use the global seed")
    _take(synth, {"sentence_error_prob", "top_k_filter", "words_per_sentence",
                  "char_sub_prob", "tasks"}, "synthesis")
    if "tasks" in synth:
        try:
            tasks = tuple(TaskKind(t) for t in synth.pop("tasks"))
        except ValueError as exc:
            raise ConfigError(f"synthesis.tasks: {exc}") from None
        if TaskKind.RERANK in tasks:
            raise ConfigError("synthesis.tasks: rerank has no training-record form")
        synth["tasks"] = tasks
    try:
        cfg.synthesis = SynthesisConfig(seed=cfg.seed, **synth)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"synthesis: {exc}") from None

    endpoint = data.get("endpoint")
    if endpoint is not None:
        _take(endpoint, {"base_url", "model", "api_key_env", "temperature",
                         "max_tokens", "timeout_s", "max_retries", "backoff_s",
                         "max_concurrency"}, "endpoint")
        expanded = {k: _interpolate_env(v) if isinstance(v, str) else v
                    for k, v in endpoint.items()}
        try:
            cfg.endpoint = EndpointConfig(**expanded)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"endpoint: {exc}") from None

    norm = data.get("normalization", {})
    _take(norm, {"nfc", "strip_whitespace", "strip_ascii_punct"}, "normalization")
    cfg.normalization = Normalization(**{k: bool(v) for k, v in norm.items()})

    analysis = data.get("analysis", {})
    _take(analysis, {"raw_sum", "exclude_template_keys", "pca_components"},
          "analysis")
    cfg.raw_sum = bool(analysis.get("raw_sum", False))
    cfg.exclude_template_keys = bool(analysis.get("exclude_template_keys", False))
    cfg.pca_components = int(analysis.get("pca_components", 2))
    return cfg


# ---------------------------------------------------------------------------
# Deterministic artifact I/O.  JSONL artifacts open with a provenance
# record; readers skip it.


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def write_jsonl_artifact(path, provenance: dict, rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump({"_provenance": provenance}) + "\n")
        for row in rows:
            fh.write(_dump(row) + "\n")


def read_jsonl_artifact(path) -> list[dict]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            if "_provenance" not in obj:
                rows.append(obj)
    return rows


def write_json_artifact(path, obj: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2)
                    + "\n", encoding="utf-8")


def write_csv_artifact(path, provenance: dict, header: list[str], rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for key in ("config_hash", "seed", "version"):
            fh.write(f"# {key}={provenance[key]}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)


def _load_dicts(cfg: RunConfig):
    return load_default_dictionaries(cfg.dictionary, cfg.homophones,
                                     tone_exact=cfg.tone_exact)


def _require(cfg: RunConfig, attr: str, hint: str):
    value = getattr(cfg, attr)
    if value is None:
        where = "section endpoint" if attr == "endpoint" else f"key paths.{attr}"
        raise ConfigError(f"this command needs {hint} (config {where})")
    return value


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_pinyin(args, cfg: RunConfig) -> int:
    pdict, _ = _load_dicts(cfg)
    if args.text is not None:
        lines = [args.text]
    elif args.input is not None:
        lines = Path(args.input).read_text(encoding="utf-8").splitlines()
    else:
        lines = (line.rstrip("\n") for line in sys.stdin)
    for line in lines:
        print(pinyin_of(line, pdict))
    return EXIT_OK


def cmd_synth(args, cfg: RunConfig) -> int:
    corpus_path = _require(cfg, "corpus", "an input corpus")
    utterances = load_utterances(corpus_path)
    lexicon = load_lexicon(cfg.lexicon) if cfg.lexicon else Lexicon.from_words([])
    pdict, hdict = _load_dicts(cfg)
    result = synthesize_dataset(
        [u.reference for u in utterances], cfg.synthesis, lexicon, pdict, hdict,
        ids=[u.id for u in utterances],
    )
    prov = cfg.provenance()
    out = Path(cfg.output_dir)
    write_jsonl_artifact(out / "records.jsonl", prov,
                         (r.to_json() for r in result.records))
    write_jsonl_artifact(
        out / "hypotheses.jsonl", prov,
        ({"id": o.id, "reference": o.reference, "hypothesis": o.hypothesis}
         for o in result.outcomes),
    )
    write_json_artifact(out / "manifest.json",
                        {**result.manifest(), "provenance": prov})
    changed = sum(1 for o in result.outcomes if o.changed)
    print(f"synthesized {len(result.outcomes)} sentences "
          f"({changed} corrupted), {len(result.records)} records -> {out}")
    return EXIT_OK


def _task_from(args) -> TaskKind:
    task = TaskKind(args.task)
    if task is TaskKind.RERANK:
        raise ConfigError("rerank is an ensemble method, not a correction task")
    return task


def cmd_correct(args, cfg: RunConfig) -> int:
    corpus_path = _require(cfg, "corpus", "an input corpus")
    endpoint = _require(cfg, "endpoint", "an endpoint")
    task = _task_from(args)
    utterances = load_utterances(corpus_path)
    missing = [u.id for u in utterances if u.hypothesis is None]
    if missing and task is not TaskKind.TEXT_TO_PINYIN:
        raise ConfigError(f"{len(missing)} utterances lack a hypothesis "
                          f"(first: {missing[0]})")
    pdict, _ = _load_dicts(cfg)
    cache_path = cfg.cache or str(Path(cfg.output_dir) / "cache.jsonl")
    Path(cache_path).parent.mkdir(parents=True, exist_ok=True)
    corrector = Corrector(client=ChatClient(endpoint),
                          cache=ResponseCache(cache_path), pdict=pdict)
    results = corrector.batch_correct(utterances, task)
    write_jsonl_artifact(Path(cfg.output_dir) / "corrections.jsonl",
                         cfg.provenance(), (r.to_json() for r in results))
    rate = failure_rate(results)
    print(f"corrected {len(results)} utterances, failure rate {rate:.3f}")
    return EXIT_PARTIAL if rate > cfg.failure_threshold else EXIT_OK


def cmd_evaluate(args, cfg: RunConfig) -> int:
    corpus_path = _require(cfg, "corpus", "an input corpus")
    utterances = load_utterances(corpus_path)
    corrected = {}
    for row in read_jsonl_artifact(args.corrections):
        if "id" not in row or "text" not in row:
            raise ConfigError(f"{args.corrections}: corrections need id and text")
        corrected[row["id"]] = row["text"]
    report = evaluate_corpus(utterances, corrected, cfg.normalization)
    payload = {
        "pooled_cer": report.pooled_cer,
        "mean_cer": report.mean_cer,
        "pooled_cer_baseline": report.pooled_cer_baseline,
        "entity_recall": report.entity_recall,
        "cases": {"good_pct": report.cases.good_pct,
                  "bad_pct": report.cases.bad_pct,
                  "unchanged_pct": report.cases.unchanged_pct},
        "normalization": {"nfc": report.normalization.nfc,
                          "strip_whitespace": report.normalization.strip_whitespace,
                          "strip_ascii_punct": report.normalization.strip_ascii_punct},
        "flagged_empty_refs": report.flagged_empty_refs,
        "utterances": [
            {"id": u.utterance_id, "cer": u.cer_after, "cer_baseline": u.cer_before,
             "ref_len": u.ref_len, "entity_hits": u.entity_hits,
             "entity_total": u.entity_total}
            for u in report.utterances
        ],
        "provenance": cfg.provenance(),
    }
    write_json_artifact(Path(cfg.output_dir) / "report.json", payload)
    base = ("-" if report.pooled_cer_baseline is None
            else f"{report.pooled_cer_baseline:.4f}")
    recall = "-" if report.entity_recall is None else f"{report.entity_recall:.4f}"
    print(f"pooled CER {report.pooled_cer:.4f} (baseline {base})  "
          f"mean CER {report.mean_cer:.4f}  entity recall {recall}")
    print(f"cases: good {report.cases.good_pct:.1f}%  "
          f"bad {report.cases.bad_pct:.1f}%  "
          f"unchanged {report.cases.unchanged_pct:.1f}%")
    return EXIT_OK


def cmd_ensemble(args, cfg: RunConfig) -> int:
    sets = load_candidate_sets(args.candidates)
    pdict, _ = _load_dicts(cfg)
    selections: list[EnsembleSelection] = []
    if args.method == "rover":
        for cs in sets:
            selections.append(EnsembleSelection(id=cs.id, method="rover",
                                                text=rover_merge(cs)))
    elif args.method == "pinyin-rerank":
        for cs in sets:
            text, scores = pinyin_rerank(cs, pdict)
            selections.append(EnsembleSelection(id=cs.id, method="pinyin-rerank",
                                                text=text, scores=scores))
    else:
        endpoint = _require(cfg, "endpoint", "an endpoint")
        cache_path = cfg.cache or str(Path(cfg.output_dir) / "cache.jsonl")
        Path(cache_path).parent.mkdir(parents=True, exist_ok=True)
        client = ChatClient(endpoint)
        cache = ResponseCache(cache_path)
        for cs in sets:
            selections.append(llm_rerank(cs, client, cache, pdict))
    write_jsonl_artifact(Path(cfg.output_dir) / "selections.jsonl",
                         cfg.provenance(), (s.to_json() for s in selections))
    fallbacks = sum(1 for s in selections if s.fallback)
    rate = fallbacks / len(selections) if selections else 0.0
    print(f"selected {len(selections)} with {args.method} "
          f"({fallbacks} fallbacks)")
    return EXIT_PARTIAL if rate > cfg.failure_threshold else EXIT_OK


def _analyze_attention(records, cfg: RunConfig, out: Path) -> None:
    attention = [r for r in records if isinstance(r, AttentionRecord)]
    if not attention:
        raise ConfigError("dump contains no attention records")
    by_id: dict[str, list[AttentionRecord]] = {}
    for r in attention:
        by_id.setdefault(r.id, []).append(r)
    def cells(scores):
        return ["" if scores.get(c) is None else f"{scores[c]:.6f}"
                for c in ("hypothesis", "pinyin", "prediction")]

    rows = []
    summaries = {}
    for uid in sorted(by_id):
        summary = component_attention(
            by_id[uid], raw_sum=cfg.raw_sum,
            exclude_template_keys=cfg.exclude_template_keys)
        summaries[uid] = summary
        for layer in sorted(summary.per_layer):
            rows.append([uid, layer] + cells(summary.per_layer[layer]))
        rows.append([uid, "total"] + cells(summary.components))
    prov = cfg.provenance()
    write_csv_artifact(out / "attention.csv", prov,
                       ["id", "layer", "hypothesis", "pinyin", "prediction"], rows)
    write_json_artifact(out / "attention.json", {
        "raw_sum": cfg.raw_sum,
        "template_excluded": cfg.exclude_template_keys,
        "utterances": {uid: {"components": s.components,
                             "per_layer": {str(k): v for k, v in s.per_layer.items()}}
                       for uid, s in summaries.items()},
        "provenance": prov,
    })


def _analyze_alignment(records, cfg: RunConfig, out: Path) -> None:
    pairs = pair_hidden_states(r for r in records
                               if isinstance(r, HiddenStateRecord))
    if not pairs:
        raise ConfigError("dump contains no hidden-state pairs")
    cosines = []
    excluded = []
    for uid, ht, hp in pairs:
        try:
            cosines.append((uid, alignment_vectors(ht, hp).cosine))
        except AnalysisError:
            excluded.append(uid)
    if not cosines:
        raise ConfigError("every hidden-state pair was degenerate")
    values = [c for _, c in cosines]
    values_sorted = sorted(values)
    prov = cfg.provenance()
    write_csv_artifact(out / "alignment.csv", prov, ["id", "cosine"],
                       [[uid, f"{c:.6f}"] for uid, c in cosines])
    write_json_artifact(out / "alignment.json", {
        "mean_cosine": sum(values) / len(values),
        "min": values_sorted[0],
        "max": values_sorted[-1],
        "n_pairs": len(values),
        "excluded": excluded,
        "provenance": prov,
    })
    print(f"mean cosine {sum(values) / len(values):.4f} over {len(values)} pairs")


def _analyze_pca(records, cfg: RunConfig, out: Path) -> None:
    pairs = pair_hidden_states(r for r in records
                               if isinstance(r, HiddenStateRecord))
    if not pairs:
        raise ConfigError("dump contains no hidden-state pairs")
    labels = []
    vectors = []
    for uid, ht, hp in pairs:
        av = alignment_vectors(ht, hp)
        labels.append((uid, "text"))
        vectors.append(av.v_text)
        labels.append((uid, "pinyin"))
        vectors.append(av.v_pinyin)
    result = pca_project(vectors, cfg.pca_components)
    prov = cfg.provenance()
    header = ["id", "role"] + [f"pc{j + 1}" for j in range(cfg.pca_components)]
    rows = [[uid, role] + [f"{v:.6f}" for v in proj]
            for (uid, role), proj in zip(labels, result.projections)]
    write_csv_artifact(out / "pca.csv", prov, header, rows)
    write_json_artifact(out / "pca.json", {
        "explained_variance_ratio": list(result.explained_variance_ratio),
        "n_vectors": len(vectors),
        "provenance": prov,
    })


def cmd_analyze(args, cfg: RunConfig) -> int:
    records = read_tensor_dump(args.header, args.payload)
    out = Path(cfg.output_dir)
    if args.kind == "attention":
        _analyze_attention(records, cfg, out)
    elif args.kind == "alignment":
        _analyze_alignment(records, cfg, out)
    else:
        _analyze_pca(records, cfg, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pygec",
        description="Pinyin-aware ASR error correction toolkit",
    )
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--seed", type=int, help="override the config seed")
    parser.add_argument("--output-dir", help="override the output directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pinyin", help="render text as toned Pinyin")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--text", help="literal text instead of a file")
    p.set_defaults(func=cmd_pinyin)

    p = sub.add_parser("synth", help="synthesize homophone-error data")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("correct", help="run corrections through the endpoint")
    p.add_argument("--task", default="pygec",
                   choices=[t.value for t in TaskKind if t is not TaskKind.RERANK])
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("evaluate", help="score corrections against references")
    p.add_argument("corrections", help="corrections file from the correct stage")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ensemble", help="combine candidate corrections")
    p.add_argument("candidates", help="candidate-set file")
    p.add_argument("--method", default="rover",
                   choices=["rover", "pinyin-rerank", "llm-rerank"])
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("analyze", help="tensor analyses for figure data")
    p.add_argument("kind", choices=["attention", "alignment", "pca"])
    p.add_argument("header", help="dump header file")
    p.add_argument("--payload", help="binary payload file")
    p.set_defaults(func=cmd_analyze)
    return parser


CONFIG_ERRORS = (ConfigError, CorpusFormatError, DictionaryError,
                 CandidateFormatError, DumpFormatError, AnalysisError,
                 PromptError, FileNotFoundError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_run_config(args.config, seed_override=args.seed)
        if args.output_dir is not None:
            cfg.output_dir = args.output_dir
        return args.func(args, cfg)
    except CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
