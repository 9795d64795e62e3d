"""Statements, brackets and programs: parsing, canonical form, sizing.

A statement is a flat sequence of elements; an element is either a word
(plain string, no whitespace, no bracket characters) or a bracket holding
a nested element sequence.  '[' and ']' are reserved and self-delimiting,
everything else splits on whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import EmptyStatement, UnbalancedBrackets

_TOKEN_RE = re.compile(r"\[|\]|[^\s\[\]]+")

Element = Union[str, "Bracket"]


@dataclass(frozen=True)
class Bracket:
    """A bracketed (possibly empty, possibly nested) element sequence."""

    elements: tuple[Element, ...] = ()

    def is_ripe(self) -> bool:
        """True when the content holds no nested bracket."""
        return all(isinstance(e, str) for e in self.elements)

    def content_words(self) -> tuple[str, ...]:
        """The content as words; only meaningful for ripe brackets."""
        assert self.is_ripe()
        return self.elements  # type: ignore[return-value]

    def __str__(self) -> str:
        return "[" + " ".join(str(e) for e in self.elements) + "]"


@dataclass(frozen=True)
class Statement:
    """One line of a BC program or corpus."""

    elements: tuple[Element, ...]

    def is_bracket_free(self) -> bool:
        return all(isinstance(e, str) for e in self.elements)

    @property
    def words(self) -> tuple[str, ...]:
        """Top-level words; equals all words for bracket-free statements."""
        assert self.is_bracket_free()
        return self.elements  # type: ignore[return-value]

    def token_count(self) -> int:
        """Top-level element count: each word and each bracket counts 1."""
        return len(self.elements)

    def depth(self) -> int:
        return _depth(self.elements)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _depth(elements: Iterable[Element]) -> int:
    best = 0
    for e in elements:
        if isinstance(e, Bracket):
            best = max(best, 1 + _depth(e.elements))
    return best


def words(*texts: str) -> Statement:
    """Convenience constructor for a bracket-free statement."""
    return Statement(tuple(texts))


def parse_statement(line: str) -> Statement:
    """Parse one line into a Statement.

    Raises UnbalancedBrackets on mismatched delimiters and EmptyStatement
    when nothing remains at the top level.
    """
    stack: list[list[Element]] = [[]]
    for token in _TOKEN_RE.findall(line):
        if token == "[":
            stack.append([])
        elif token == "]":
            if len(stack) == 1:
                raise UnbalancedBrackets(f"unexpected ']' in {line!r}")
            inner = stack.pop()
            stack[-1].append(Bracket(tuple(inner)))
        else:
            stack[-1].append(token)
    if len(stack) > 1:
        raise UnbalancedBrackets(f"unclosed '[' in {line!r}")
    if not stack[0]:
        raise EmptyStatement(f"no elements in {line!r}")
    return Statement(tuple(stack[0]))


def serialize_statement(s: Statement) -> str:
    """Canonical form; round-trips through parse_statement."""
    return str(s)


class Program:
    """An ordered, duplicate-free sequence of statements.

    Duplicates in the input are dropped silently; the count of dropped
    lines is kept for diagnostics.  Order is preserved because it fixes
    the deterministic expansion order of the engine.
    """

    def __init__(self, statements: Iterable[Statement]):
        seen: dict[str, Statement] = {}
        dropped = 0
        for s in statements:
            key = str(s)
            if key in seen:
                dropped += 1
            else:
                seen[key] = s
        self.statements: tuple[Statement, ...] = tuple(seen.values())
        self.duplicates_dropped = dropped

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.statements)

    def __len__(self) -> int:
        return len(self.statements)

    def __contains__(self, s: Statement) -> bool:
        return s in self.statements

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Program) and self.statements == other.statements

    def __hash__(self) -> int:
        return hash(self.statements)

    def __str__(self) -> str:
        return "\n".join(str(s) for s in self.statements)

    def __repr__(self) -> str:
        return f"Program({len(self.statements)} statements)"


def program_size(p: Program) -> int:
    """Character count of the canonical serialization (newline-joined)."""
    return len(str(p)) if len(p) else 0


def parse_program(text: str) -> Program:
    """Parse a program file body: one statement per line, '#' comments."""
    statements = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        statements.append(parse_statement(stripped))
    return Program(statements)


def load_program(path: str) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())
