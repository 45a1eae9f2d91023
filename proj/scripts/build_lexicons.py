#!/usr/bin/env python3
"""Regenerate the shipped lexicon files under data/.

Sources (fetched with pip download, not needed at runtime):
  - textstat 0.7.13  resources/en/easy_words.txt   (Dale-Chall familiar words, MIT)
  - py-readability-metrics 1.4.5 data/spache_easy_porterstem.txt (Spache list, Porter stems)
  - wordfreq 3.1.1  top_n_list('en', ...)          (frequency ranks, Apache-2.0)

The Spache list is only distributed as Porter stems, so each stem is mapped
back to the shortest surface word that stems to it, preferring Dale-Chall
words, then the wordfreq top 50k, ties broken by frequency. Stems with no surface match are kept as-is.
"""
import argparse
import pathlib
import re

from nltk.stem.porter import PorterStemmer
from wordfreq import top_n_list, zipf_frequency

WORD = re.compile(r"^[a-z][a-z'-]*$")


def write(path, header, words):
    with open(path, "w", encoding="utf-8") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for w in words:
            fh.write(w + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--easy-words", required=True)
    ap.add_argument("--spache-stems", required=True)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)

    dale = sorted({w.strip().lower() for w in open(args.easy_words, encoding="utf-8") if w.strip()})
    write(out / "dale_chall.txt",
          ["Dale-Chall familiar word list (textstat easy_words.txt, MIT license).",
           "One lowercase word per line."], dale)

    dale_set = set(dale)
    stemmer = PorterStemmer()
    vocab = set(dale) | {w for w in top_n_list("en", 50000) if WORD.match(w)}
    by_stem = {}
    for w in vocab:
        by_stem.setdefault(stemmer.stem(w), []).append(w)
    spache = set()
    for stem in (s.strip() for s in open(args.spache_stems, encoding="utf-8")):
        if not stem:
            continue
        cands = by_stem.get(stem)
        if not cands:
            spache.add(stem.lower())
            continue
        spache.add(max(cands, key=lambda w: (w in dale_set, -len(w), zipf_frequency(w, "en"), w)).lower())
    write(out / "spache.txt",
          ["Spache familiar word list, revised.",
           "Rebuilt from the Porter-stemmed list in py-readability-metrics (MIT):",
           "each stem is mapped to its shortest surface form."], sorted(spache))

    top = []
    for w in top_n_list("en", 5000):
        if WORD.match(w) and w not in top:
            top.append(w)
        if len(top) == 1000:
            break
    write(out / "top1000.txt",
          ["1000 most frequent English words (wordfreq 3.1.1, Apache-2.0), rank order."], top)


if __name__ == "__main__":
    main()
