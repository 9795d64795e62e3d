"""Size-bounded loose compression: search for a program whose closure
approximates a corpus under a character budget.

Search is a deterministic beam search over an explicit move grammar
(merge categories, delete, add verbatim, widen a category, factor a
constant into a category slot).  The objective is
completeness + lambda * accuracy with a hard budget constraint; the
frontier sweep exposes the full trade-off so the scalarization choice is
not load-bearing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Sequence

from .engine import ExpansionLimits, closure
from .errors import BudgetTooSmall
from .metrics import FrontierPoint, MetricsReport, evaluate
from .syntax import Bracket, Element, Program, Statement, program_size

_MAX_NEIGHBORS = 300


@dataclass(frozen=True)
class SearchConfig:
    budget_chars: int
    lambda_accuracy: float = 0.5
    seed: int = 0
    max_iterations: int = 8
    beam_width: int = 8
    limits: ExpansionLimits = field(default_factory=ExpansionLimits)

    def __post_init__(self) -> None:
        if self.budget_chars < 1:
            raise ValueError("budget_chars must be >= 1")
        if self.beam_width < 1:
            raise ValueError("beam_width must be >= 1")
        if self.lambda_accuracy < 0:
            raise ValueError("lambda_accuracy must be >= 0")


@dataclass(frozen=True)
class Candidate:
    program: Program
    report: MetricsReport
    objective: float


# ---------------------------------------------------------------------------
# Slot induction


def _fresh_category(vocab: set[str], start: int = 0) -> str:
    k = start
    while f"CAT{k}" in vocab:
        k += 1
    return f"CAT{k}"


def _common_prefix(a: Sequence[str], b: Sequence[str]) -> int:
    n = 0
    while n < len(a) and n < len(b) and a[n] == b[n]:
        n += 1
    return n


def induce_slots(corpus: Sequence[Statement]) -> Program:
    """Greedy single-slot factoring of a corpus into templates + categories.

    Sentences sharing all tokens except one contiguous span form a group;
    each group of size >= 2 gets a fresh category word and a template with
    the category bracket at the varying span.
    """
    sents = [s.words for s in corpus]
    vocab = {w for s in sents for w in s}

    # candidate (prefix, suffix) signatures from maximal pairwise overlap
    sigs: dict[tuple[tuple[str, ...], tuple[str, ...]], None] = {}
    for a, b in combinations(sents, 2):
        p = _common_prefix(a, b)
        s = _common_prefix(a[::-1], b[::-1])
        s = min(s, min(len(a), len(b)) - p)
        if p + s < 2:
            continue
        sigs[(a[:p], a[len(a) - s:] if s else ())] = None

    def members(sig: tuple[tuple[str, ...], tuple[str, ...]],
                pool: Iterable[int]) -> list[int]:
        prefix, suffix = sig
        k = len(prefix) + len(suffix)
        out = []
        for i in pool:
            t = sents[i]
            if len(t) >= k and t[: len(prefix)] == prefix and \
                    (not suffix or t[len(t) - len(suffix):] == suffix):
                out.append(i)
        return out

    ordered = sorted(
        sigs,
        key=lambda sig: (-len(members(sig, range(len(sents))))
                         * (len(sig[0]) + len(sig[1])), sig))
    unassigned = list(range(len(sents)))
    statements: list[Statement] = []
    cat_start = 0
    for sig in ordered:
        group = members(sig, unassigned)
        if len(group) < 2:
            continue
        prefix, suffix = sig
        cat = _fresh_category(vocab, cat_start)
        cat_start = int(cat[3:]) + 1
        for i in group:
            t = sents[i]
            middle = t[len(prefix): len(t) - len(suffix)]
            statements.append(Statement((cat, *middle)))
        statements.append(Statement(prefix + (Bracket((cat,)),) + suffix))
        unassigned = [i for i in unassigned if i not in group]
    for i in unassigned:
        statements.append(corpus[i])
    return Program(statements)


# ---------------------------------------------------------------------------
# Move grammar


def _bracket_words(elements: Iterable[Element], out: set[str]) -> None:
    for e in elements:
        if isinstance(e, Bracket):
            if len(e.elements) == 1 and isinstance(e.elements[0], str):
                out.add(e.elements[0])
            _bracket_words(e.elements, out)


def _categories(prog: Program) -> list[str]:
    """Words that occur both as a one-word bracket content and as the head
    of a bracket-free statement."""
    in_brackets: set[str] = set()
    for st in prog:
        _bracket_words(st.elements, in_brackets)
    heads = {st.words[0] for st in prog if st.is_bracket_free() and st.words}
    return sorted(in_brackets & heads)


def _rename(elements: Sequence[Element], old: str, new: str) -> tuple[Element, ...]:
    out: list[Element] = []
    for e in elements:
        if isinstance(e, Bracket):
            out.append(Bracket(_rename(e.elements, old, new)))
        elif e == old:
            out.append(new)
        else:
            out.append(e)
    return tuple(out)


def neighbors(cand: Candidate, corpus: Sequence[Statement],
              config: SearchConfig, rng: random.Random) -> list[Program]:
    """All bounded mutations of a candidate program, deterministic order."""
    prog = cand.program
    stmts = list(prog)
    cats = _categories(prog)
    vocab = {w for s in corpus for w in s.words}
    for st in stmts:
        if st.is_bracket_free():
            vocab.update(st.words)
    results: dict[str, Program] = {}

    def emit(statements: Iterable[Statement]) -> None:
        p = Program(statements)
        if len(p) and str(p) != str(prog):
            results.setdefault(str(p), p)

    # (a) merge two categories
    for w1, w2 in combinations(cats, 2):
        emit(Statement(_rename(st.elements, w2, w1)) for st in stmts)

    # (b) delete one statement
    if len(stmts) > 1:
        for i in range(len(stmts)):
            emit(stmts[:i] + stmts[i + 1:])

    # (c) add one uncovered corpus sentence verbatim
    covered = closure(prog, config.limits).bracket_free_set
    for sent in corpus:
        if sent not in covered:
            emit(stmts + [sent])

    # (d) widen a category with a corpus-aligned variant
    for st in stmts:
        slot = [i for i, e in enumerate(st.elements) if isinstance(e, Bracket)]
        if len(slot) != 1:
            continue
        br = st.elements[slot[0]]
        assert isinstance(br, Bracket)
        if len(br.elements) != 1 or br.elements[0] not in cats:
            continue
        cat = br.elements[0]
        prefix = st.elements[: slot[0]]
        suffix = st.elements[slot[0] + 1:]
        k = len(prefix) + len(suffix)
        for sent in corpus:
            t = sent.words
            if len(t) >= k and t[: len(prefix)] == prefix and \
                    (not suffix or t[len(t) - len(suffix):] == suffix):
                middle = t[len(prefix): len(t) - len(suffix)]
                variant = Statement((cat, *middle))
                if variant not in prog:
                    emit(stmts + [variant])

    # (e) factor a constant token into an existing category slot; the alias
    # device keeps a repeated category independent under the same-content rule
    for idx, st in enumerate(stmts):
        if st.is_bracket_free():
            continue
        for pos, e in enumerate(st.elements):
            if not isinstance(e, str):
                continue
            for cat in cats:
                if Statement((cat, e)) not in prog:
                    continue
                extra: list[Statement] = []
                if any(isinstance(x, Bracket) and x.elements == (cat,)
                       for x in st.elements):
                    alias = _fresh_category(vocab | set(cats))
                    extra.append(Statement((alias, Bracket((cat,)))))
                    bracket = Bracket((alias,))
                else:
                    bracket = Bracket((cat,))
                new_st = Statement(
                    st.elements[:pos] + (bracket,) + st.elements[pos + 1:])
                emit(stmts[:idx] + [new_st] + stmts[idx + 1:] + extra)

    ordered = [results[k] for k in sorted(results)]
    if len(ordered) > _MAX_NEIGHBORS:
        keep = sorted(rng.sample(range(len(ordered)), _MAX_NEIGHBORS))
        ordered = [ordered[i] for i in keep]
    return ordered


# ---------------------------------------------------------------------------
# Beam search


def evaluate_program(program: Program, corpus: Iterable[Statement],
                     config: SearchConfig) -> Candidate:
    """Score a candidate with the exact closure + metrics pipeline."""
    size = program_size(program)
    result = closure(program, config.limits)
    report = evaluate(result.bracket_free, corpus, size, result.truncated.any)
    if size <= config.budget_chars:
        objective = float(report.completeness) + \
            config.lambda_accuracy * float(report.accuracy)
    else:
        objective = float("-inf")
    return Candidate(program, report, objective)


def _greedy_prefix(corpus: Sequence[Statement], budget: int) -> Program:
    picked: list[Statement] = []
    total = 0
    for sent in corpus:
        extra = len(str(sent)) + (1 if picked else 0)
        if total + extra <= budget:
            picked.append(sent)
            total += extra
    return Program(picked)


def _better(a: Candidate, b: Candidate) -> bool:
    """Deterministic strict improvement of a over b."""
    if a.objective != b.objective:
        return a.objective > b.objective
    return str(a.program) < str(b.program)


def compress(corpus: Sequence[Statement], config: SearchConfig) -> Candidate:
    """Best within-budget candidate found by beam search.

    Starts from slot induction and from the verbatim greedy prefix (the
    near-100%-accuracy extreme), so a within-budget program always exists.
    """
    corpus = list(dict.fromkeys(corpus))
    if not corpus:
        raise BudgetTooSmall("corpus is empty")
    if config.budget_chars < min(len(str(s)) for s in corpus):
        raise BudgetTooSmall(
            f"budget {config.budget_chars} fits no single corpus statement")

    c_set = frozenset(corpus)
    seen: dict[str, Candidate] = {}

    def score(program: Program) -> Candidate:
        key = str(program)
        if key not in seen:
            seen[key] = evaluate_program(program, c_set, config)
        return seen[key]

    starts = [_greedy_prefix(corpus, config.budget_chars), induce_slots(corpus)]
    beam = [score(p) for p in dict.fromkeys(starts, None)]
    beam.sort(key=lambda c: (-c.objective, str(c.program)))
    beam = beam[: config.beam_width]
    best = beam[0]

    rng = random.Random(config.seed)
    for _ in range(config.max_iterations):
        produced: list[Candidate] = []
        for cand in beam:
            for prog in neighbors(cand, corpus, config, rng):
                if str(prog) not in seen:
                    produced.append(score(prog))
        if not produced:
            break
        merged = {str(c.program): c for c in beam + produced}
        ranked = sorted(merged.values(),
                        key=lambda c: (-c.objective, str(c.program)))
        new_beam = ranked[: config.beam_width]
        if _better(new_beam[0], best):
            best = new_beam[0]
        if [str(c.program) for c in new_beam] == [str(c.program) for c in beam]:
            break
        beam = new_beam
    return best


# ---------------------------------------------------------------------------
# Frontier


def reference_points(corpus: Sequence[Statement]) -> list[FrontierPoint]:
    """The comparison points a (half corpus), b (half plus as many novel
    statements) and c (corpus verbatim)."""
    corpus = list(dict.fromkeys(corpus))
    c_set = frozenset(corpus)
    half = corpus[: len(corpus) // 2]
    vocab = {w for s in corpus for w in s.words}
    novel: list[Statement] = []
    i = 0
    while len(novel) < len(half):
        word = f"NOVEL{i}"
        i += 1
        if word not in vocab:
            novel.append(Statement((word, word)))
    points = []
    for label, m in (("a", half), ("b", half + novel), ("c", corpus)):
        size = program_size(Program(m))
        points.append(FrontierPoint(size, evaluate(m, c_set, size), label))
    return points


def frontier_sweep(corpus: Sequence[Statement], budgets: Sequence[int],
                   config: SearchConfig) -> list[FrontierPoint]:
    """One compressed point per budget plus the three reference points.

    Budgets too small for any program are skipped (and logged by the CLI
    layer); each budget gets an independent seed derived from config.seed.
    """
    if not budgets or any(b < 1 for b in budgets):
        raise ValueError("budgets must be non-empty and positive")
    points: list[FrontierPoint] = []
    for i, budget in enumerate(budgets):
        try:
            cand = compress(corpus, replace(config, budget_chars=budget,
                                            seed=config.seed + i))
        except BudgetTooSmall:
            continue
        points.append(FrontierPoint(budget, cand.report, "compress"))
    points.extend(reference_points(corpus))
    return points
