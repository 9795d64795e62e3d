"""Corpus loading: plain text into canonical bracket-free statements.

split_punctuation defaults on because prefix matching needs punctuation
as separate tokens: "TOM IS A GIRL, NOT!" must tokenize so that the
bracket content "TOM IS A GIRL" is a prefix of the stored statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BracketInCorpus, EmptyCorpus
from .syntax import Statement

_PUNCT_SPLIT_RE = re.compile(r"[.,!?;:]|[^\s.,!?;:]+")
_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class TokenizerOptions:
    split_punctuation: bool = True
    fold_case: bool = False
    one_statement_per_line: bool = True


def corpus_from_text(text: str,
                     opts: TokenizerOptions = TokenizerOptions()) -> list[Statement]:
    """Tokenize text into an ordered, duplicate-free statement list."""
    if "[" in text or "]" in text:
        raise BracketInCorpus("corpus text contains reserved bracket characters")
    if opts.one_statement_per_line:
        chunks = text.splitlines()
    else:
        chunks = [c for line_group in text.split("\n\n")
                  for c in _SENTENCE_SPLIT_RE.split(line_group.replace("\n", " "))]
    seen: dict[Statement, None] = {}
    for chunk in chunks:
        if opts.fold_case:
            chunk = chunk.upper()
        if opts.split_punctuation:
            tokens = _PUNCT_SPLIT_RE.findall(chunk)
        else:
            tokens = chunk.split()
        if tokens:
            seen[Statement(tuple(tokens))] = None
    if not seen:
        raise EmptyCorpus("no statements in corpus text")
    return list(seen)


def load_corpus(path: str,
                opts: TokenizerOptions = TokenizerOptions()) -> list[Statement]:
    with open(path, encoding="utf-8") as fh:
        return corpus_from_text(fh.read(), opts)
