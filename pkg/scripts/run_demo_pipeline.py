#!/usr/bin/env python3
"""Run the whole pipeline against an in-process fixture endpoint.

Generates a corpus, synthesizes homophone errors, corrects them over
three task variants, evaluates each, then merges the candidates with all
three ensemble methods.  Needs no network access or API key.
"""

import argparse
import json
import subprocess
import sys
from pathlib import Path

from pygec.cli import main as pygec_main
from pygec.cli import read_jsonl_artifact
from pygec.mock_endpoint import MockEndpoint


def run(argv: list[str]) -> None:
    code = pygec_main(argv)
    if code != 0:
        raise SystemExit(f"pygec {' '.join(argv)} exited {code}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="demo_run")
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    work = Path(args.workdir)
    work.mkdir(parents=True, exist_ok=True)
    corpus = work / "corpus.jsonl"
    script_dir = Path(__file__).parent
    subprocess.run(
        [sys.executable, str(script_dir / "make_demo_corpus.py"),
         "--count", str(args.count), "--seed", str(args.seed),
         "--out", str(corpus)],
        check=True,
    )

    synth_cfg = work / "synth.json"
    synth_cfg.write_text(json.dumps({
        "seed": args.seed,
        "paths": {"corpus": str(corpus), "output_dir": str(work / "synth")},
        "synthesis": {"sentence_error_prob": 1.0, "top_k_filter": 0},
    }), encoding="utf-8")
    run(["--config", str(synth_cfg), "synth"])

    hyp_rows = read_jsonl_artifact(work / "synth" / "hypotheses.jsonl")
    entities = {r["id"]: r.get("entities", [])
                for r in read_jsonl_artifact(corpus)}
    full_corpus = work / "corpus_full.jsonl"
    with open(full_corpus, "w", encoding="utf-8") as fh:
        for row in hyp_rows:
            row["entities"] = entities.get(row["id"], [])
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    reference_map = {r["hypothesis"]: r["reference"] for r in hyp_rows}

    mock = MockEndpoint(reference_map=reference_map)
    url = mock.start()
    try:
        for task in ("direct", "pygec", "pinyin_to_text"):
            out_dir = work / task
            cfg = work / f"{task}.json"
            cfg.write_text(json.dumps({
                "paths": {"corpus": str(full_corpus),
                          "output_dir": str(out_dir)},
                "endpoint": {"base_url": url, "model": "fixture",
                             "max_retries": 1, "backoff_s": 0.01},
            }), encoding="utf-8")
            print(f"== correct + evaluate [{task}]")
            run(["--config", str(cfg), "correct", "--task", task])
            run(["--config", str(cfg), "evaluate",
                 str(out_dir / "corrections.jsonl")])

        candidates = work / "candidates.jsonl"
        subprocess.run(
            [sys.executable, str(script_dir / "make_candidates.py"),
             "--corpus", str(full_corpus),
             "--source", f"direct={work / 'direct' / 'corrections.jsonl'}",
             "--source", f"pygec={work / 'pygec' / 'corrections.jsonl'}",
             "--source", f"p2t={work / 'pinyin_to_text' / 'corrections.jsonl'}",
             "--out", str(candidates)],
            check=True,
        )
        for method in ("rover", "pinyin-rerank", "llm-rerank"):
            out_dir = work / f"ensemble_{method}"
            cfg = work / f"ensemble_{method}.json"
            cfg.write_text(json.dumps({
                "paths": {"output_dir": str(out_dir)},
                "endpoint": {"base_url": url, "model": "fixture",
                             "max_retries": 1, "backoff_s": 0.01},
            }), encoding="utf-8")
            print(f"== ensemble [{method}]")
            run(["--config", str(cfg), "ensemble", str(candidates),
                 "--method", method])
    finally:
        mock.stop()
    print(f"artifacts under {work}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
