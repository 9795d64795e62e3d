"""Expansion engine: closure of a program under resource limits, sampling.

The single rewrite rule: a ripe bracket (content without nested brackets)
is replaced by the ending of a bracket-free statement that starts with the
bracket's content.  Brackets with identical content within one statement
are replaced identically; empty brackets match any full statement and form
one replacement class of their own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import NoBracketedStatements
from .syntax import Bracket, Element, Program, Statement

WordSeq = tuple[str, ...]


@dataclass(frozen=True)
class ExpansionLimits:
    """Hard caps for closure computation; all mandatory because programs
    such as the recursive addition rules generate unboundedly."""

    max_rounds: int = 100
    max_statements: int = 100_000
    max_tokens_per_statement: int = 64

    def __post_init__(self) -> None:
        for name in ("max_rounds", "max_statements", "max_tokens_per_statement"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass
class TruncationFlags:
    rounds: bool = False
    statements: bool = False
    tokens: bool = False

    @property
    def any(self) -> bool:
        return self.rounds or self.statements or self.tokens


@dataclass
class ClosureResult:
    """Partition of all retained statements into bracket-free and residual.

    bracket_free keeps insertion order: program statements first, derived
    ones in derivation order.  truncated.any == False means a true fixpoint.
    """

    bracket_free: tuple[Statement, ...]
    residual: tuple[Statement, ...]
    truncated: TruncationFlags = field(default_factory=TruncationFlags)
    rounds_used: int = 0

    @property
    def bracket_free_set(self) -> frozenset[Statement]:
        return frozenset(self.bracket_free)


def ripe_contents(s: Statement) -> list[WordSeq]:
    """Distinct contents of ripe brackets, first-occurrence order.

    The empty content is one distinct class; a bracket-free statement
    yields an empty list.
    """
    out: list[WordSeq] = []
    seen: set[WordSeq] = set()

    def walk(elements: Iterable[Element]) -> None:
        for e in elements:
            if isinstance(e, Bracket):
                if e.is_ripe():
                    content = e.content_words()
                    if content not in seen:
                        seen.add(content)
                        out.append(content)
                else:
                    walk(e.elements)

    walk(s.elements)
    return out


def match_endings(content: WordSeq, pool: Iterable[Statement]) -> set[WordSeq]:
    """Endings of pool statements that start with `content`.

    Empty content matches every full pool statement; a pool statement equal
    to the content yields the empty ending (bracket removal).
    """
    endings: set[WordSeq] = set()
    n = len(content)
    for st in pool:
        ws = st.words
        if n == 0:
            endings.add(ws)
        elif ws[:n] == content:
            endings.add(ws[n:])
    return endings


def _substitute(elements: Sequence[Element],
                assignment: dict[WordSeq, WordSeq]) -> tuple[Element, ...]:
    new: list[Element] = []
    for e in elements:
        if isinstance(e, Bracket):
            if e.is_ripe():
                new.extend(assignment[e.content_words()])
            else:
                new.append(Bracket(_substitute(e.elements, assignment)))
        else:
            new.append(e)
    return tuple(new)


def expand_statement(s: Statement, pool: Iterable[Statement]) -> list[Statement]:
    """All one-step expansions of `s` against `pool`, deterministic order.

    Every ripe bracket of one content class receives the same ending.  If
    any class has no match the statement produces nothing this round
    (all-or-nothing; it may succeed against a richer pool later).
    """
    contents = ripe_contents(s)
    if not contents:
        return []
    pool = list(pool)
    choice_lists: list[list[WordSeq]] = []
    for content in contents:
        endings = sorted(match_endings(content, pool))
        if not endings:
            return []
        choice_lists.append(endings)
    results: list[Statement] = []
    for combo in product(*choice_lists):
        assignment = dict(zip(contents, combo))
        elements = _substitute(s.elements, assignment)
        if elements:  # a lone removed guard could leave nothing
            results.append(Statement(elements))
    return results


def closure(p: Program, limits: ExpansionLimits) -> ClosureResult:
    """Iterate expansion rounds to a fixpoint or a limit.

    Each round matches every bracketed statement (program order, then
    derivation insertion order) against the pool as of round start, so the
    result does not depend on within-round processing order.
    """
    pool: dict[Statement, None] = {}
    residual: dict[Statement, None] = {}
    for st in p:
        (pool if st.is_bracket_free() else residual)[st] = None

    flags = TruncationFlags()
    rounds_used = 0
    fixpoint = not residual
    while not fixpoint and rounds_used < limits.max_rounds:
        snapshot = list(pool)
        fresh_bf: list[Statement] = []
        fresh_res: list[Statement] = []
        queued: set[Statement] = set()
        capped = False
        for st in residual:
            for out in expand_statement(st, snapshot):
                if out in pool or out in residual or out in queued:
                    continue
                if out.token_count() > limits.max_tokens_per_statement:
                    flags.tokens = True
                    continue
                if len(pool) + len(residual) + len(queued) >= limits.max_statements:
                    flags.statements = True
                    capped = True
                    break
                queued.add(out)
                (fresh_bf if out.is_bracket_free() else fresh_res).append(out)
            if capped:
                break
        rounds_used += 1
        for st in fresh_bf:
            pool[st] = None
        for st in fresh_res:
            residual[st] = None
        if capped:
            break
        if not fresh_bf and not fresh_res:
            fixpoint = True
    if not fixpoint and not flags.statements and rounds_used >= limits.max_rounds:
        flags.rounds = True

    return ClosureResult(
        bracket_free=tuple(pool),
        residual=tuple(residual),
        truncated=flags,
        rounds_used=rounds_used,
    )


def sample(p: Program, limits: ExpansionLimits, seed: int,
           count: int) -> list[Statement]:
    """Randomly ground bracketed program statements; deterministic per seed.

    Endings are drawn uniformly per content class from the closure pool.
    Statements that fail to ground within the depth bound are skipped; the
    attempt budget caps the total work so degenerate programs terminate.
    """
    bracketed = [st for st in p if not st.is_bracket_free()]
    if not bracketed:
        raise NoBracketedStatements("program has no bracketed statements")
    pool = sorted(closure(p, limits).bracket_free, key=str)
    rng = random.Random(seed)
    results: list[Statement] = []
    attempts = 0
    max_attempts = max(count * 100, 100)
    while len(results) < count and attempts < max_attempts:
        attempts += 1
        st = rng.choice(bracketed)
        depth = 0
        while not st.is_bracket_free() and depth < limits.max_rounds:
            contents = ripe_contents(st)
            assignment: dict[WordSeq, WordSeq] = {}
            for content in contents:
                endings = sorted(match_endings(content, pool))
                if not endings:
                    break
                assignment[content] = rng.choice(endings)
            if len(assignment) < len(contents):
                break
            elements = _substitute(st.elements, assignment)
            if not elements:
                break
            st = Statement(elements)
            if st.token_count() > limits.max_tokens_per_statement:
                break
            depth += 1
        if st.is_bracket_free() and st.token_count() <= limits.max_tokens_per_statement:
            results.append(st)
    return results
