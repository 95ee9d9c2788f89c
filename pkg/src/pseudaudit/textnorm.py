"""Rule-based deobfuscation of forum text.

Pipeline: strip quoted blocks, map known obfuscations through a canon
dictionary, then per token try symbol removal and leetspeak reversal, each
accepted only if it yields a lexicon word.  Tokens that are changed come out
lowercase; untouched tokens keep their original spelling.
"""

from __future__ import annotations

import csv
import itertools
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

MAX_SUBSTITUTABLE = 8
KEEP_INSIDE = "'-"  # never treated as obfuscating symbols

_QUOTE_TAG = re.compile(r"\[(/?)quote(?:[=\s][^\]]*)?\]|<(/?)blockquote(?:\s[^>]*)?>", re.IGNORECASE)
_SPLIT = re.compile(r"(\s+)")


def strip_quotes(text: str) -> str:
    """Remove ``[quote]...[/quote]`` and ``<blockquote>...</blockquote>`` blocks.

    Blocks may nest; an unclosed block runs to the end of the text and stray
    closing tags are dropped.  If only whitespace is left the result is "".
    """
    out = []
    depth = 0
    pos = 0
    for m in _QUOTE_TAG.finditer(text):
        closing = bool(m.group(1) or m.group(2))
        if depth == 0:
            out.append(text[pos : m.start()])
        if closing:
            depth = max(0, depth - 1)
        else:
            depth += 1
        pos = m.end()
    if depth == 0:
        out.append(text[pos:])
    result = "".join(out)
    return result if result.strip() else ""


# --------------------------------------------------------------------------
# resources


def _read_words(lines: Iterable[str]) -> frozenset[str]:
    out = set()
    for line in lines:
        w = line.split("#", 1)[0].strip()
        if w:
            if w != w.lower() or any(c.isspace() for c in w):
                raise ValueError(f"lexicon entries must be lowercase single tokens: {w!r}")
            out.add(w)
    return frozenset(out)


def _data_text(name: str) -> str:
    return resources.files("pseudaudit").joinpath("data", name).read_text()


@dataclass(frozen=True)
class Lexicon:
    words: frozenset[str]
    profanity: frozenset[str] = frozenset()

    def __contains__(self, word: str) -> bool:
        return word in self.words or word in self.profanity

    @classmethod
    def load(cls, words: str | Path | None = None, profanity: str | Path | None = None) -> "Lexicon":
        w = Path(words).read_text() if words else _data_text("lexicon.txt")
        p = Path(profanity).read_text() if profanity else _data_text("profanity.txt")
        prof = _read_words(p.splitlines())
        return cls(_read_words(w.splitlines()) | prof, prof)


@dataclass(frozen=True)
class SubstitutionTable:
    table: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        for k, vs in self.table.items():
            if len(k) != 1 or not vs or any(len(v) != 1 or not v.islower() for v in vs):
                raise ValueError(f"bad substitution entry {k!r} -> {vs!r}")

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SubstitutionTable":
        text = Path(path).read_text() if path else _data_text("leet.csv")
        rows = csv.DictReader(l for l in text.splitlines() if l and not l.startswith("#"))
        return cls({r["char"]: tuple(r["to"]) for r in rows})


@dataclass(frozen=True)
class CanonMap:
    entries: Mapping[str, str]

    @classmethod
    def load(cls, path: str | Path | None = None) -> "CanonMap":
        text = Path(path).read_text() if path else _data_text("canon.csv")
        rows = csv.DictReader(l for l in text.splitlines() if l and not l.startswith("#"))
        entries = {r["from"].strip().lower(): r["to"].strip().lower() for r in rows}
        for v in entries.values():
            if any(w in entries for w in v.split()):
                raise ValueError(f"canon value {v!r} is itself a key; normalization would not be idempotent")
        return cls(entries)

    def get(self, token: str) -> str | None:
        return self.entries.get(token.lower())


def load_skiplist(path: str | Path | None = None) -> frozenset[str]:
    text = Path(path).read_text() if path else _data_text("skiplist.txt")
    return _read_words(text.splitlines())


@dataclass(frozen=True)
class Normalizer:
    lexicon: Lexicon = field(default_factory=Lexicon.load)
    table: SubstitutionTable = field(default_factory=SubstitutionTable.load)
    canon: CanonMap = field(default_factory=CanonMap.load)
    skip: frozenset[str] = field(default_factory=load_skiplist)

    def __call__(self, text: str) -> str:
        return normalize(text, self.lexicon, self.table, self.canon, self.skip)


# --------------------------------------------------------------------------
# token transforms


def _split_punct(token: str, keep: str) -> tuple[str, str, str]:
    # Surrounding punctuation is peeled off, except characters in ``keep``.
    i, j = 0, len(token)
    while i < j and not (token[i].isalnum() or token[i] in keep):
        i += 1
    while j > i and not (token[j - 1].isalnum() or token[j - 1] in keep):
        j -= 1
    return token[:i], token[i:j], token[j:]


def desymbol(word: str, lexicon: Lexicon, table: SubstitutionTable | None = None) -> str:
    """Drop obfuscating symbols if what remains is a lexicon word.

    Leet characters from ``table`` plus apostrophes and hyphens are not
    treated as symbols.
    """
    leet = set(table.table) if table else set()
    residue = "".join(c for c in word if c.isalnum() or c in leet or c in KEEP_INSIDE)
    if residue != word and residue and residue.lower() in lexicon:
        return residue.lower()
    return word


def deleet(word: str, table: SubstitutionTable, lexicon: Lexicon) -> str:
    """Reverse leetspeak substitutions when the result is a lexicon word.

    Every combination of keeping or replacing each substitutable character
    is tried.  Among hits, profanity wins, then fewer substitutions, then
    alphabetical order.  Words already in the lexicon, words without
    letters and words with more than ``MAX_SUBSTITUTABLE`` substitutable
    characters are left alone.
    """
    low = word.lower()
    if low in lexicon or not any(c.isalpha() for c in low):
        return word
    slots = [i for i, c in enumerate(low) if c in table.table]
    if not slots or len(slots) > MAX_SUBSTITUTABLE:
        return word
    best = None
    chars = list(low)
    for combo in itertools.product(*[(None,) + table.table[low[i]] for i in slots]):
        for i, r in zip(slots, combo):
            chars[i] = low[i] if r is None else r
        cand = "".join(chars)
        if cand in lexicon:
            n_sub = sum(r is not None for r in combo)
            key = (cand not in lexicon.profanity, n_sub, cand)
            if best is None or key < best:
                best = key
    return best[2] if best else word


def _normalize_token(tok: str, lexicon: Lexicon, table: SubstitutionTable, canon: CanonMap, skip: frozenset[str]) -> str:
    keep = set(table.table)
    lead, core, trail = _split_punct(tok, keep)
    if not core or core.lower() in skip:
        return tok
    mapped = canon.get(core)
    if mapped is None and canon.get(tok) is not None:
        lead, core, trail, mapped = "", tok, "", canon.get(tok)
    if mapped is not None:
        return lead + mapped + trail
    if core.lower() in lexicon:
        return tok
    out = desymbol(core, lexicon, table)
    if out == core:
        out = deleet(core, table, lexicon)
    if out.lower() in skip:
        return tok
    return lead + out + trail


def normalize(
    text: str,
    lexicon: Lexicon,
    table: SubstitutionTable,
    canon: CanonMap,
    skip: frozenset[str] = frozenset({"yt"}),
) -> str:
    """strip_quotes, then canon map, desymbol and deleet per whitespace token."""
    parts = _SPLIT.split(strip_quotes(text))
    for i in range(0, len(parts), 2):
        if parts[i]:
            parts[i] = _normalize_token(parts[i], lexicon, table, canon, skip)
    return "".join(parts)
