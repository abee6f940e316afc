#!/usr/bin/env python3
# Copyright 2026 The HaS Gateway Authors.
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

"""Writes tests/fixtures/simpairs.jsonl: 100 string pairs with the ratio of
difflib.SequenceMatcher (autojunk off) as the reference similarity."""

import difflib
import json
import random
import sys

FIXED = [
    ("abcd", "bcde"),
    ("", ""),
    ("", "abc"),
    ("abc", ""),
    ("abc", "abc"),
    ("abc", "xyz"),
    ("FBI", "CIA"),
    ("The FBI suspects", "The CIA suspects"),
    ("August 10, 2023", "September 15, 2025"),
    ("Washington DC", "New York City"),
    ("Zürich", "Zurich"),
    ("naïve café", "naive cafe"),
    ("東京タワー", "東京スカイツリー"),
    ("Москва", "Москве"),
    ("aaaaaaaaaa", "aaaaa"),
    ("abababab", "babababa"),
    ("<ORG> met <PERSON>", "<ORG_1> met <PERSON_1>"),
    ("a" * 250 + "b", "b" + "a" * 250),
    (" ".join(["the"] * 120), " ".join(["the"] * 100 + ["a"] * 20)),
    ("emoji 🙂 test", "emoji 🙃 test"),
]

ALPHABET = "aabcdeeefghiilmnnoorsttu  ,.é"
WORDS = ("the company said on monday that revenue grew by twelve percent in "
         "paris london and new york while the bank cut its forecast").split()


def rand_chars(rng, n):
    return "".join(rng.choice(ALPHABET) for _ in range(n))


def mutate(rng, s):
    out = list(s)
    for _ in range(rng.randint(1, 6)):
        op = rng.randint(0, 2)
        pos = rng.randint(0, len(out))
        if op == 0:
            out.insert(pos, rng.choice(ALPHABET))
        elif out and pos < len(out):
            if op == 1:
                del out[pos]
            else:
                out[pos] = rng.choice(ALPHABET)
    return "".join(out)


def main(path):
    rng = random.Random(20260101)
    pairs = list(FIXED)
    while len(pairs) < 60:
        a = rand_chars(rng, rng.randint(1, 40))
        pairs.append((a, mutate(rng, a)))
    while len(pairs) < 85:
        a = " ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 30)))
        b = " ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 30)))
        pairs.append((a, b))
    while len(pairs) < 100:
        # Long inputs where difflib's popularity heuristic would kick in.
        a = rand_chars(rng, rng.randint(220, 400))
        pairs.append((a, mutate(rng, a)))
    with open(path, "w", encoding="utf-8") as f:
        for a, b in pairs:
            ratio = difflib.SequenceMatcher(None, a, b, autojunk=False).ratio()
            f.write(json.dumps({"a": a, "b": b, "expected_ratio": ratio},
                               ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/simpairs.jsonl")
