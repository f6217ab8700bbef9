#!/usr/bin/env python3
"""Generate a demo corpus of random-character sentences with entity
spans.  Every character is drawn from the bundled reading dictionary's
homophone groups, so the synthesis stage always finds swap targets."""

import argparse
import json
from pathlib import Path

from pygec.pinyin import load_default_dictionaries
from pygec.rng import Xoshiro256StarStar


def char_pool(hdict) -> list[str]:
    chars = set()
    for key in sorted(hdict.by_syllable):
        group = sorted(hdict.by_syllable[key])
        if len(group) >= 2:
            chars.update(group)
    return sorted(chars)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--min-len", type=int, default=6)
    parser.add_argument("--max-len", type=int, default=14)
    parser.add_argument("--out", default="demo_corpus.jsonl")
    args = parser.parse_args()

    _, hdict = load_default_dictionaries()
    pool = char_pool(hdict)
    rng = Xoshiro256StarStar(args.seed)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        for i in range(args.count):
            length = args.min_len + rng.randbelow(args.max_len - args.min_len + 1)
            sentence = "".join(pool[rng.randbelow(len(pool))] for _ in range(length))
            start = rng.randbelow(length - 1)
            entity = sentence[start:start + 2]
            row = {"id": f"utt{i:04d}", "reference": sentence,
                   "entities": [entity]}
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    print(f"wrote {args.count} utterances to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
