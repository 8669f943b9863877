#!/usr/bin/env python3
# Copyright 2026 The FRC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the curated lexicon, synonym table and corpora under data/.

Output is a pure function of the constants below and the fixed seed.
"""

import json
import pathlib
import random

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# Base words and their lexicon strength, one class each. Strengths are
# distinct within a class so the strongest word of a text is unique.
POSITIVE = {
    "good": 0.60, "great": 0.80, "tasty": 0.70, "friendly": 0.65,
    "fast": 0.55, "clean": 0.50, "amazing": 0.90, "helpful": 0.62,
    "cozy": 0.58, "fresh": 0.64, "lovely": 0.72, "acceptable": 0.45,
}
NEGATIVE = {
    "bad": 0.60, "terrible": 0.88, "slow": 0.55, "rude": 0.70,
    "dirty": 0.66, "cold": 0.45, "bland": 0.57, "noisy": 0.50,
    "overpriced": 0.62, "disappointing": 0.68, "greasy": 0.52,
    "stale": 0.58, "dissatisfied": 0.70,
}
# Closest synonym first. Close synonyms sit 0.05 below the base word and
# loose ones 0.09 below.
SYNONYMS = {
    "good": ["fine", "decent"], "great": ["excellent", "solid"],
    "tasty": ["delicious", "flavorful"], "friendly": ["welcoming", "pleasant"],
    "fast": ["quick", "speedy"], "clean": ["tidy", "neat"],
    "amazing": ["incredible", "remarkable"], "helpful": ["supportive", "useful"],
    "cozy": ["comfortable", "snug"], "fresh": ["crisp", "vibrant"],
    "lovely": ["charming", "nice"], "acceptable": ["adequate", "passable"],
    "bad": ["poor", "subpar"], "terrible": ["horrible", "dreadful"],
    "slow": ["sluggish", "tardy"], "rude": ["impolite", "curt"],
    "dirty": ["filthy", "grimy"], "cold": ["chilly", "lukewarm"],
    "bland": ["tasteless", "plain"], "noisy": ["loud", "boisterous"],
    "overpriced": ["expensive", "pricey"],
    "disappointing": ["underwhelming", "mediocre"],
    "greasy": ["oily", "soggy"], "stale": ["musty", "dry"],
    "dissatisfied": ["displeased", "unhappy"],
}
CLOSE_DROP = 0.05
LOOSE_DROP = 0.09
MODIFIERS = {"very": 1.5, "slightly": 0.5, "really": 1.3, "quite": 1.2,
             "extremely": 1.5, "somewhat": 0.7}
NEGATORS = ["not", "never", "hardly", "isn't", "wasn't", "didn't"]

# Words the student lexicon lacks; the transfer corpus leans on them.
STUDENT_MISSING = ["rude", "bland", "lovely", "cozy", "stale", "helpful"]

SUBJECTS = ["food", "service", "staff", "room", "view", "coffee", "music",
            "location", "waiter", "menu", "dessert", "bed", "bathroom",
            "delivery", "soup", "noodles", "lobby", "pasta", "bread", "tea"]
PLURAL = {"staff", "noodles"}


def lexicon(missing=()):
    entries = {}
    for cls, table in (("positive", POSITIVE), ("negative", NEGATIVE)):
        for word, s in table.items():
            if word in missing:
                continue
            entries[word] = {cls: s}
            close, loose = SYNONYMS[word]
            entries[close] = {cls: round(s - CLOSE_DROP, 2)}
            entries[loose] = {cls: round(s - LOOSE_DROP, 2)}
    return {"entries": entries, "modifiers": MODIFIERS, "negators": NEGATORS}


def clause(subject, adjective, modifier=None):
    verb = "were" if subject in PLURAL else "was"
    adj = f"{modifier} {adjective}" if modifier else adjective
    return f"the {subject} {verb} {adj}"


def sentence(clauses, contrast_last):
    text = clauses[0]
    for i, c in enumerate(clauses[1:], start=1):
        last = i == len(clauses) - 1
        text += ", but " + c if (last and contrast_last) else ", " + c
    return text[0].upper() + text[1:] + "."


def polar_text(rng, polarities, modifiers=False):
    """Clauses with distinct subjects and adjectives, one adjective each."""
    subjects = rng.sample(SUBJECTS, len(polarities))
    pos = rng.sample(sorted(POSITIVE), polarities.count("positive"))
    neg = rng.sample(sorted(NEGATIVE), polarities.count("negative"))
    clauses = []
    for subject, polarity in zip(subjects, polarities):
        word = pos.pop() if polarity == "positive" else neg.pop()
        table = POSITIVE if polarity == "positive" else NEGATIVE
        mod = None
        if modifiers and table[word] <= 0.65 and rng.random() < 0.25:
            mod = "quite"
        clauses.append(clause(subject, word, mod))
    contrast = polarities[-1] != polarities[-2] if len(polarities) > 1 else False
    gold = polarities[-1] if contrast else max(
        set(polarities), key=polarities.count)
    return sentence(clauses, contrast), gold


def write_jsonl(name, rows):
    with open(DATA / name, "w", encoding="utf-8") as out:
        for row in rows:
            out.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    rng = random.Random(20261016)
    DATA.mkdir(exist_ok=True)
    with open(DATA / "lexicon_en.json", "w") as out:
        json.dump(lexicon(), out, indent=2, sort_keys=True)
        out.write("\n")
    with open(DATA / "lexicon_student_en.json", "w") as out:
        json.dump(lexicon(STUDENT_MISSING), out, indent=2, sort_keys=True)
        out.write("\n")
    with open(DATA / "synonyms_en.json", "w") as out:
        json.dump(SYNONYMS, out, indent=2, sort_keys=True)
        out.write("\n")

    shapes = [["positive", "positive", "negative"],
              ["negative", "negative", "positive"],
              ["positive", "negative", "positive"],
              ["negative", "positive", "negative"]]
    robust = []
    for i in range(120):
        text, gold = polar_text(rng, shapes[i % 4], modifiers=True)
        robust.append({"id": f"r{i:03d}", "text": text, "label": gold,
                       "lang": "en"})
    write_jsonl("corpus_robust.jsonl", robust)

    monotonic = []
    mono_shapes = [["positive"], ["negative"], ["positive", "negative"],
                   ["negative", "positive"], ["positive", "positive"],
                   ["negative", "negative", "positive"]]
    for i in range(500):
        text, gold = polar_text(rng, mono_shapes[i % len(mono_shapes)])
        monotonic.append({"id": f"m{i:03d}", "text": text, "label": gold,
                          "lang": "en"})
    write_jsonl("corpus_monotonic.jsonl", monotonic)

    strong_pos = ["amazing", "incredible", "great"]
    strong_neg = ["terrible", "horrible"]
    conflict = []
    for i in range(24):
        s1, s2 = rng.sample(SUBJECTS, 2)
        p = strong_pos[i % len(strong_pos)]
        n = strong_neg[i % len(strong_neg)]
        if i % 2 == 0:
            text = sentence([clause(s1, p), clause(s2, n)], True)
        else:
            text = sentence([clause(s1, n), clause(s2, p)], True)
        conflict.append({"id": f"c{i:03d}", "text": text, "label": None,
                         "lang": "en"})
    write_jsonl("corpus_conflict.jsonl", conflict)

    transfer = []
    for i in range(40):
        subject = SUBJECTS[i % len(SUBJECTS)]
        if i % 2 == 0:
            word = STUDENT_MISSING[i // 2 % len(STUDENT_MISSING)]
            cls = "positive" if word in POSITIVE else "negative"
            other = rng.choice(sorted(NEGATIVE if cls == "positive"
                                      else POSITIVE))
            # A strong opposing clause would outweigh the missing word, so
            # it only appears when weak enough.
            weak = (NEGATIVE if cls == "positive" else POSITIVE)[other]
            if weak > 0.55:
                text = sentence([clause(subject, word)], False)
            else:
                s2 = rng.choice([s for s in SUBJECTS if s != subject])
                text = sentence([clause(s2, other), clause(subject, word)],
                                True)
        else:
            text, cls = polar_text(rng, shapes[i % 4])
        transfer.append({"id": f"t{i:03d}", "text": text, "label": cls,
                         "lang": "en"})
    write_jsonl("corpus_transfer.jsonl", transfer)


if __name__ == "__main__":
    main()
