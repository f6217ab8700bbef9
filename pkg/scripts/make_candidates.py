#!/usr/bin/env python3
"""Bundle corrections from several runs into candidate sets for the
ensemble stage.  Each corrections file becomes one labeled source; the
corpus supplies the uncorrected input text."""

import argparse

from pygec.cli import read_jsonl_artifact
from pygec.corpus import load_utterances
from pygec.ensemble import Candidate, CandidateSet, save_candidate_sets


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", required=True,
                        help="corpus with hypotheses (the ensemble inputs)")
    parser.add_argument("--source", action="append", required=True,
                        metavar="LABEL=FILE",
                        help="labeled corrections file; repeatable")
    parser.add_argument("--out", default="candidates.jsonl")
    args = parser.parse_args()

    sources = []
    for entry in args.source:
        label, _, path = entry.partition("=")
        if not label or not path:
            parser.error(f"--source needs LABEL=FILE, got {entry!r}")
        rows = {r["id"]: r["text"] for r in read_jsonl_artifact(path)}
        sources.append((label, rows))

    sets = []
    skipped = 0
    for utt in load_utterances(args.corpus):
        if utt.hypothesis is None:
            skipped += 1
            continue
        candidates = [Candidate(source=label, text=rows[utt.id])
                      for label, rows in sources if utt.id in rows]
        if not candidates:
            skipped += 1
            continue
        sets.append(CandidateSet(id=utt.id, input=utt.hypothesis,
                                 candidates=candidates))
    save_candidate_sets(sets, args.out)
    note = f" ({skipped} skipped)" if skipped else ""
    print(f"wrote {len(sets)} candidate sets to {args.out}{note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
