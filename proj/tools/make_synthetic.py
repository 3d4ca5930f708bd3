#!/usr/bin/env python3
# Copyright 2026 The Lexnorm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the small synthetic corpus used by the tests.

Output (in --out, default tests/data/synthetic):
  train.txt      200 utterances, vertical format
  dev.txt        100 held-out utterances from the same distribution
  dict.txt       canonical word list
  vectors.txt    16-dimensional embeddings; noisy forms sit near their targets
  noisy.txt      raw text with noisy spellings, one sentence per line
  canonical.txt  clean raw text

The generator is deterministic: rerunning it reproduces the files byte for
byte.
"""

import argparse
import pathlib
import random

PAIRS = [
    ("u", "you"), ("r", "are"), ("b", "be"), ("2", "to"), ("4", "for"),
    ("ur", "your"), ("pls", "please"), ("thx", "thanks"), ("luv", "love"),
    ("gud", "good"), ("nite", "night"), ("tmrw", "tomorrow"),
    ("bc", "because"), ("wat", "what"), ("dat", "that"), ("da", "the"),
    ("ppl", "people"), ("wen", "when"), ("omw", "on my way"),
    ("srsly", "seriously"),
]

WORDS = """
a about after again all also always and any around ask at away back bad
big book bring bus call can car cat city class coffee cold come cool day
did dinner do dog done door down eat end even ever every far feel find
fine food friend fun game get give go going great had happy has have he
help her here him home hot house i in is it just keep know last late
later learn leave let like little long look lot make man me meet more
morning movie much music my need new next nice no not now of off ok old
on one open out over party phone play rain read ready really right road
run said say school see she show sleep so some soon start stay still stop
street sun take talk tea tell than them then there they think this time
tired today too town try up us very wait walk want was water way we week
well went were will with work world yes yet
""".split()

EXTRA_DICT = """
youth bee tow four yours pleased thank lover goody knight tomb cause whatever
than them mother peoples whence seriousness ton onto wayward mayday
""".split()

DIM = 16


def sentence(rng, pair_indices):
    length = rng.randint(5, 9)
    tokens = [(w, w) for w in rng.choices(WORDS, k=length)]
    for idx in pair_indices:
        raw, gold = PAIRS[idx]
        tokens.insert(rng.randrange(len(tokens) + 1), (raw, gold))
    return tokens


def corpus(rng, count, offset):
    utts = []
    for i in range(count):
        picks = [(i + offset) % len(PAIRS)]
        if rng.random() < 0.5:
            picks.append(rng.randrange(len(PAIRS)))
        utts.append(sentence(rng, picks))
    return utts


def write_vertical(path, utts):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for i, utt in enumerate(utts):
            if i:
                f.write("\n")
            for raw, gold in utt:
                f.write(f"{raw}\t{gold}\n")


def unit(rng):
    v = [rng.gauss(0.0, 1.0) for _ in range(DIM)]
    norm = sum(x * x for x in v) ** 0.5
    return [x / norm for x in v]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="tests/data/synthetic")
    parser.add_argument("--seed", type=int, default=20170901)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    train = corpus(rng, 200, 0)
    dev = corpus(rng, 100, 7)
    write_vertical(out / "train.txt", train)
    write_vertical(out / "dev.txt", dev)

    dict_words = set(WORDS) | set(EXTRA_DICT)
    for _, gold in PAIRS:
        dict_words.update(gold.split())
    (out / "dict.txt").write_text("".join(w + "\n" for w in sorted(dict_words)),
                                  encoding="utf-8")

    vectors = {w: unit(rng) for w in sorted(dict_words)}
    for raw, gold in PAIRS:
        target = vectors.get(gold) or unit(rng)
        vectors[raw] = [x + rng.gauss(0.0, 0.15) for x in target]
    with open(out / "vectors.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{len(vectors)} {DIM}\n")
        for w in sorted(vectors):
            f.write(w + " " + " ".join(f"{x:.6f}" for x in vectors[w]) + "\n")

    noisy_lines, canonical_lines = [], []
    for i in range(600):
        utt = sentence(rng, [rng.randrange(len(PAIRS)) for _ in range(rng.randint(0, 2))])
        noisy_lines.append(" ".join(raw for raw, _ in utt))
        canonical_lines.append(" ".join(gold for _, gold in utt))
        if i % 50 == 0:
            noisy_lines.append("@friend see www.example.com " + noisy_lines[-1])
    (out / "noisy.txt").write_text("\n".join(noisy_lines) + "\n", encoding="utf-8")
    (out / "canonical.txt").write_text("\n".join(canonical_lines) + "\n",
                                       encoding="utf-8")


if __name__ == "__main__":
    main()
