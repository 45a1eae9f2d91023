#!/usr/bin/env python3
"""Straight-line reference computation for the fixture corpus.

Recomputes text statistics, the eight readability scores, the consensus
grade and the default display schedule for every fixtures/*.txt file and
writes fixtures/<name>.expected.json. Shares data files with the engine
(lexicons, syllable exceptions) but no code.

The fixture texts are plain ASCII prose plus a few typographic quotes, so
str.isalpha()/str.isupper() are adequate character classes here.

usage: oracle.py [--check]
"""
import json
import math
import pathlib
import re
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "data"
FIX = ROOT / "fixtures"

ABBREV = {"mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc", "e.g", "i.e", "fig", "al"}
CLOSERS = set("\"')]}”’»")
OPENERS = set("\"'([“‘«")


def read_list(path):
    out = set()
    for line in open(path, encoding="utf-8"):
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line.lower())
    return out


def read_exceptions(path):
    out = {}
    for line in open(path, encoding="utf-8"):
        if not line.strip() or line.startswith("#"):
            continue
        w, n = line.rstrip("\n").split("\t")
        out[w.strip().lower()] = int(n)
    return out


DALE = read_list(DATA / "dale_chall.txt")
SPACHE = read_list(DATA / "spache.txt")
EXC = read_exceptions(DATA / "syllables.txt")

# ---------------------------------------------------------------- tokens
# word: letters/digits with internal apostrophes (letter-letter), hyphens
# (either side has a letter ... handled below) and digit separators.
TOKEN_RE = re.compile(r"\s+|[^\W_]+|.", re.S)


def split_tokens(text):
    raw = [m.group(0) for m in TOKEN_RE.finditer(text)]
    # raw pieces are whitespace runs, alnum runs, or single other chars.
    toks = []
    i = 0
    while i < len(raw):
        p = raw[i]
        if p[0].isspace():
            toks.append(["ws", p])
            i += 1
            continue
        if not p[0].isalnum():
            toks.append(["punct", p])
            i += 1
            continue
        cur = p
        i += 1
        while i + 1 < len(raw) and raw[i + 1][0].isalnum() and not raw[i + 1][0].isspace():
            j, nxt = raw[i], raw[i + 1]
            if j in ("'", "’") and cur[-1].isalpha() and nxt[0].isalpha():
                pass
            elif j == "-" and (any(c.isalpha() for c in cur) or nxt[0].isalpha()):
                pass
            elif j in (".", ",") and cur[-1].isdigit() and nxt[0].isdigit():
                pass
            else:
                break
            cur += j + nxt
            i += 2
        kind = "word" if any(c.isalpha() for c in cur) else "number"
        toks.append([kind, cur])
    return toks


def assign_sentences(toks):
    n = len(toks)
    final = [False] * n
    for i, (kind, t) in enumerate(toks):
        if kind != "punct" or t not in ".!?":
            continue
        j = i + 1
        if j < n and toks[j][0] == "punct" and toks[j][1] in ".!?":
            continue
        while j < n and toks[j][0] == "punct" and toks[j][1] in CLOSERS:
            j += 1
        ok = False
        if j >= n:
            ok = True
        elif toks[j][0] == "ws":
            k = j + 1
            while k < n and toks[k][0] == "punct" and toks[k][1] in OPENERS:
                k += 1
            if k >= n:
                ok = True
            else:
                c = toks[k][1][0]
                ok = (c.isalpha() and c.isupper()) or c.isdigit()
        if ok and t == ".":
            k = i - 1
            run = ""
            while k >= 0 and toks[k][0] != "ws":
                run = toks[k][1] + run
                k -= 1
            run = re.sub(r"^[^0-9A-Za-z]+", "", run).lower()
            if run in ABBREV:
                ok = False
        if ok:
            final[i] = True
    # sentence index per token; a boundary takes effect after trailing closers
    idx = []
    cur = 0
    bump_after = None
    last = 0
    for i, (kind, t) in enumerate(toks):
        if kind == "ws":
            idx.append(last)
            continue
        if bump_after is not None and i > bump_after:
            cur += 1
            bump_after = None
        idx.append(cur)
        last = cur
        if final[i]:
            j = i + 1
            while j < n and toks[j][0] == "punct" and toks[j][1] in CLOSERS:
                j += 1
            bump_after = j - 1
    has = any(k != "ws" for k, _ in toks)
    count = (max(i for i, (k, _) in zip(idx, toks) if k != "ws") + 1) if has else 0
    return final, idx, count


# ------------------------------------------------------------- syllables
def syl_part(p):
    p = "".join(c for c in p if c.isalpha())
    vow = [c in "aeiou" or (c == "y" and i > 0) for i, c in enumerate(p)]
    groups = sum(1 for i in range(len(p)) if vow[i] and (i == 0 or not vow[i - 1]))
    if len(p) >= 2 and p[-1] == "e" and groups > 1 and not vow[-2]:
        if not (len(p) >= 3 and p[-2] == "l" and not vow[-3]):
            groups -= 1
    return max(1, groups)


def exc(w):
    if w in EXC:
        return EXC[w]
    if w.endswith("es") and w[:-2] in EXC:
        return EXC[w[:-2]] + 1
    if len(w) >= 2 and w.endswith("s") and w[:-1] in EXC:
        base = w[:-1]
        return EXC[base] + (1 if base.endswith(("s", "x", "z", "ch", "sh", "ce", "ge", "se", "ze")) else 0)
    return None


def syllables(word):
    w = word.lower()
    if exc(w):
        return exc(w)
    total = 0
    for part in w.split("-"):
        if any(c.isalpha() for c in part):
            total += exc(part) or syl_part(part)
        else:
            total += sum(c.isdigit() for c in part)
    return max(1, total)


def normalize(w):
    w = w.lower()
    w = re.sub(r"^[^0-9a-z]+", "", w)
    w = re.sub(r"[^0-9a-z]+$", "", w)
    return w


def undouble(s):
    if len(s) >= 2 and s[-1] == s[-2] and s[-1] not in "aeiou":
        return s[:-1]
    return None


def familiar(lex, w):
    if not w or not any(c.isalpha() for c in w):
        return False
    if w in lex:
        return True
    cands = []
    if w.endswith("'s") or w.endswith("’s"):
        cands.append(w[:-2])
    if w.endswith("ies") and len(w) > 3:
        cands.append(w[:-3] + "y")
    if w.endswith("es") and len(w) > 2:
        cands.append(w[:-2])
    if w.endswith("s") and not w.endswith("ss") and len(w) > 1:
        cands.append(w[:-1])
    for suf in ("ed", "ing"):
        if w.endswith(suf) and len(w) > len(suf):
            s = w[: -len(suf)]
            cands += [s, s + "e"]
            u = undouble(s)
            if u:
                cands.append(u)
    return any(c and c in lex for c in cands)


# ------------------------------------------------------------ statistics
def stats_for(text, lex):
    toks = split_tokens(text)
    final, sidx, nsent = assign_sentences(toks)
    words = [(i, t) for i, t in enumerate(toks) if t[0] in ("word", "number")]
    syl = []
    for _, (kind, t) in words:
        syl.append(sum(c.isdigit() for c in t) if kind == "number" else syllables(t))
    first_in_sentence = {}
    for i, _ in words:
        first_in_sentence.setdefault(sidx[i], i)
    complex_n = 0
    for (i, (kind, t)), s in zip(words, syl):
        if kind != "word" or "-" in t:
            continue
        if t[0].isupper() and first_in_sentence[sidx[i]] != i:
            continue
        lw = t.lower()
        stem = lw
        for suf in ("ing", "ed", "es"):
            if lw.endswith(suf) and len(lw) > len(suf):
                stem = lw[: -len(suf)]
                break
        n = syllables(stem) if any(c.isalpha() for c in stem) else s
        if n >= 3:
            complex_n += 1
    difficult = sum(1 for _, (k, t) in words if not familiar(lex, normalize(t)))
    return {
        "char_count": sum(len(t) for k, t in toks if k != "ws"),
        "letter_count": sum(sum(c.isalpha() for c in t) for k, t in toks if k == "word"),
        "word_count": len(words),
        "sentence_count": nsent,
        "syllable_count": sum(syl),
        "polysyllable_count": sum(1 for s in syl if s >= 3),
        "complex_word_count": complex_n,
        "difficult_word_count": difficult,
        "per_word_syllables": syl,
    }, toks, final, words


# -------------------------------------------------------------- formulas
def clamp(x, lo=0.0, hi=22.0):
    return min(max(x, lo), hi)


def dc_grade(raw):
    for lim, g in ((5.0, 4.0), (6.0, 5.5), (7.0, 7.5), (8.0, 9.5), (9.0, 11.5), (10.0, 14.0)):
        if raw < lim:
            return g
    return 16.0


def fre_grade(raw):
    for lim, g in ((90, 5.0), (80, 6.0), (70, 7.0), (60, 8.5), (50, 11.0), (30, 14.0)):
        if raw >= lim:
            return g
    return 17.0


def report_for(st, spache_unfamiliar):
    W, S = st["word_count"], st["sentence_count"]
    C, L, Y = st["char_count"], st["letter_count"], st["syllable_count"]
    P, X = st["polysyllable_count"], st["complex_word_count"]
    f = st["difficult_word_count"] / W
    ari = 4.71 * (C / W) + 0.5 * (W / S) - 21.43
    fre = 206.835 - 1.015 * (W / S) - 84.6 * (Y / W)
    fkg = 0.39 * (W / S) + 11.8 * (Y / W) - 15.59
    fog = 0.4 * ((W / S) + 100.0 * (X / W))
    smog = 1.0430 * math.sqrt(P * 30.0 / S) + 3.1291
    cli = 0.0588 * (100.0 * L / W) - 0.296 * (100.0 * S / W) - 15.8
    dc = 0.1579 * (100.0 * f) + 0.0496 * (W / S) + (3.6365 if f > 0.05 else 0.0)
    sp = 0.121 * (W / S) + 0.082 * (100.0 * spache_unfamiliar) + 0.659
    scores = {
        "ari": {"raw": ari, "grade": clamp(ari), "reliable": True},
        "flesch_reading_ease": {"raw": fre, "grade": fre_grade(fre), "reliable": True},
        "flesch_kincaid_grade": {"raw": fkg, "grade": clamp(fkg), "reliable": True},
        "gunning_fog": {"raw": fog, "grade": clamp(fog), "reliable": True},
        "smog": {"raw": smog, "grade": clamp(smog), "reliable": S >= 30},
        "coleman_liau": {"raw": cli, "grade": clamp(cli), "reliable": True},
        "dale_chall": {"raw": dc, "grade": dc_grade(dc), "reliable": True},
        "spache": {"raw": sp, "grade": clamp(sp), "reliable": True},
    }
    grades = sorted(v["grade"] for k, v in scores.items() if k != "flesch_reading_ease")
    m = len(grades)
    cons = grades[m // 2] if m % 2 else (grades[m // 2 - 1] + grades[m // 2]) / 2.0
    return {"scores": scores, "consensus_grade": cons, "estimated_age": cons + 5.0,
            "difficult_word_fraction": f}


# -------------------------------------------------------------- schedule
def hexcolor(rgb):
    return "#%02x%02x%02x" % rgb


def gradient(words, width=55, a=(0x00, 0x42, 0x9D), b=(0xD1, 0x49, 0x5B)):
    lines, cur, cur_len = [], [], 0
    for n, (_, (_, t)) in enumerate(words):
        ln = len(t)
        if cur and cur_len + 1 + ln <= width:
            cur.append(n)
            cur_len += 1 + ln
        elif not cur:
            cur, cur_len = [n], ln
        else:
            lines.append(cur)
            cur, cur_len = [n], ln
    if cur:
        lines.append(cur)
    colors = []
    forward = True  # flips after every line that actually reaches its far end
    for line in lines:
        s, e = (a, b) if forward else (b, a)
        k = len(line)
        if k > 1:
            forward = not forward
        for j in range(k):
            t = 0.0 if k == 1 else j / (k - 1)
            colors.append(hexcolor(tuple(int(math.floor(s[c] + (e[c] - s[c]) * t + 0.5)) for c in range(3))))
    return colors


def orp(n):
    return 0 if n <= 1 else 1 if n <= 5 else 2 if n <= 9 else 3 if n <= 13 else 4


def schedule_for(toks, final, words, lex, wpm=300.0, mult=1.5):
    base = 60000.0 / wpm
    colors = gradient(words)
    entries = []
    total = 0.0
    for n, (i, (kind, t)) in enumerate(words):
        ln = len(t)
        lf = min(1.0 + 0.1 * (ln - 8), 2.0) if ln > 8 else 1.0
        j = i + 1
        while j < len(toks) and toks[j][0] == "punct" and toks[j][1] in CLOSERS:
            j += 1
        # walk to the last mark of a terminator run like "?!" or "..."
        while (j + 1 < len(toks) and not final[j] and toks[j][0] == "punct"
               and toks[j][1] in ".!?" and toks[j + 1][0] == "punct" and toks[j + 1][1] in ".!?"):
            j += 1
        pf = 1.0
        if j < len(toks) and toks[j][0] == "punct":
            if final[j]:
                pf = 2.0
            elif toks[j][1] in ",;:":
                pf = 1.5
        unf = kind == "number" or not familiar(lex, normalize(t))
        ms = base * lf * pf * (mult if unf else 1.0)
        total += ms
        entries.append({"i": i, "text": t, "ms": ms, "orp": orp(ln), "unfamiliar": unf,
                        "color": colors[n]})
    return {"version": 1, "effective_wpm": wpm, "total_ms": total, "entries": entries}


def main():
    check = "--check" in sys.argv
    rc = 0
    for path in sorted(FIX.glob("*.txt")):
        text = path.read_text(encoding="utf-8")
        st, toks, final, words = stats_for(text, DALE)
        spache_unf = sum(1 for _, (k, t) in words if not familiar(SPACHE, normalize(t))) / len(words)
        out = {
            "statistics": st,
            "spache_unfamiliar_fraction": spache_unf,
            "report": report_for(st, spache_unf),
            "schedule_default": schedule_for(toks, final, words, DALE),
        }
        dest = path.with_name(path.stem + ".expected.json")
        body = json.dumps(out, indent=1, ensure_ascii=False) + "\n"
        if check:
            if not dest.exists() or dest.read_text(encoding="utf-8") != body:
                print(f"stale: {dest.name}")
                rc = 1
        else:
            dest.write_text(body, encoding="utf-8")
            print(f"wrote {dest.name}: words={st['word_count']} sentences={st['sentence_count']} "
                  f"difficult={st['difficult_word_count']}")
    return rc


if __name__ == "__main__":
    sys.exit(main())
