import random
from fractions import Fraction

import pytest

from bracketc import (BudgetTooSmall, ExpansionLimits, Program, SearchConfig,
                      closure, compress, evaluate, frontier_sweep,
                      induce_slots, neighbors, parse_statement, program_size,
                      reference_points, words)
from bracketc.compress import evaluate_program, _greedy_prefix


def config(budget, **kw):
    kw.setdefault("seed", 1)
    kw.setdefault("max_iterations", 4)
    kw.setdefault("beam_width", 8)
    return SearchConfig(budget_chars=budget, **kw)


# ---------------------------------------------------------------------------
# induce_slots


def test_induce_slots_father_template():
    corpus = [parse_statement(f"TOM IS {n} 'S FATHER")
              for n in ("SALLY", "ERICA", "JAMES")]
    program = induce_slots(corpus)
    assert {str(s) for s in program} == {
        "CAT0 SALLY", "CAT0 ERICA", "CAT0 JAMES",
        "TOM IS [CAT0] 'S FATHER"}


def test_induce_slots_singleton_corpus():
    corpus = [words("ONLY", "ONE", "SENTENCE")]
    assert list(induce_slots(corpus)) == corpus


def test_induce_slots_no_shared_structure():
    corpus = [words("AA", "BB"), words("CC", "DD"), words("EE", "FF")]
    program = induce_slots(corpus)
    assert list(program) == corpus
    result = closure(program, ExpansionLimits())
    report = evaluate(result.bracket_free, corpus, program_size(program))
    assert report.accuracy == 1 and report.completeness == 1


def test_induce_slots_closure_covers_corpus(templated_corpus):
    program = induce_slots(templated_corpus)
    covered = closure(program, ExpansionLimits()).bracket_free_set
    assert set(templated_corpus) <= covered


def test_induce_slots_category_avoids_vocab():
    corpus = [words("CAT0", "A", "X"), words("CAT0", "A", "Y"),
              words("CAT0", "B", "X")]
    program = induce_slots(corpus)
    # the fresh category word must not collide with the corpus word CAT0
    fresh = {s.words[0] for s in program
             if s.is_bracket_free() and s not in corpus}
    assert fresh and "CAT0" not in fresh


# ---------------------------------------------------------------------------
# neighbors


def test_neighbors_deterministic(templated_corpus):
    cfg = config(200)
    cand = evaluate_program(induce_slots(templated_corpus),
                            templated_corpus, cfg)
    a = neighbors(cand, templated_corpus, cfg, random.Random(3))
    b = neighbors(cand, templated_corpus, cfg, random.Random(3))
    assert [str(p) for p in a] == [str(p) for p in b]


def test_neighbors_delete_shrinks(templated_corpus):
    cfg = config(300)
    cand = evaluate_program(induce_slots(templated_corpus),
                            templated_corpus, cfg)
    base_cover = closure(cand.program, cfg.limits).bracket_free_set
    base_size = program_size(cand.program)
    stmts = list(cand.program)
    deletions = [p for p in neighbors(cand, templated_corpus, cfg,
                                      random.Random(0))
                 if len(p) == len(stmts) - 1 and all(s in cand.program for s in p)]
    assert deletions
    for p in deletions:
        assert program_size(p) < base_size
        assert closure(p, cfg.limits).bracket_free_set <= base_cover


def test_neighbors_add_verbatim_raises_completeness(templated_corpus):
    cfg = config(400)
    half = Program(templated_corpus[:6])
    cand = evaluate_program(half, templated_corpus, cfg)
    n = len(templated_corpus)
    adds = [p for p in neighbors(cand, templated_corpus, cfg, random.Random(0))
            if len(p) == len(half) + 1 and all(s in p for s in half)]
    assert adds
    for p in adds:
        after = evaluate_program(p, templated_corpus, cfg)
        gain = after.report.completeness - cand.report.completeness
        assert gain == Fraction(1, n)


def test_neighbors_merge_cross_product():
    corpus = [parse_statement(x) for x in
              ("F SALLY X", "F ERICA X", "G JAMES Y", "G BELLA Y")]
    program = Program([parse_statement(x) for x in
                       ("CAT0 SALLY", "CAT0 ERICA", "F [CAT0] X",
                        "CAT1 JAMES", "CAT1 BELLA", "G [CAT1] Y")])
    cfg = config(300)
    cand = evaluate_program(program, corpus, cfg)
    merged = [p for p in neighbors(cand, corpus, cfg, random.Random(0))
              if "CAT1" not in str(p)]
    assert merged
    cover = closure(merged[0], cfg.limits).bracket_free_set
    for name in ("SALLY", "ERICA", "JAMES", "BELLA"):
        assert parse_statement(f"F {name} X") in cover
        assert parse_statement(f"G {name} Y") in cover


# ---------------------------------------------------------------------------
# compress


def test_compress_budget_too_small(templated_corpus):
    with pytest.raises(BudgetTooSmall):
        compress(templated_corpus, config(3))


def test_compress_full_budget(templated_corpus):
    raw = program_size(Program(templated_corpus))
    cand = compress(templated_corpus, config(raw))
    assert cand.report.accuracy == 1 and cand.report.completeness == 1
    assert program_size(cand.program) <= raw


def test_compress_tiny_budget(templated_corpus):
    budget = len(str(templated_corpus[0])) + 1 + len(str(templated_corpus[1]))
    cand = compress(templated_corpus, config(budget))
    assert cand.report.accuracy == 1
    assert cand.report.completeness == Fraction(2, 12)
    assert program_size(cand.program) <= budget


def test_compress_never_over_budget(templated_corpus):
    raw = program_size(Program(templated_corpus))
    for frac in (0.3, 0.6, 1.0):
        cand = compress(templated_corpus, config(int(raw * frac)))
        assert program_size(cand.program) <= int(raw * frac)


def test_compress_beats_starts(templated_corpus):
    cfg = config(160)
    starts = [_greedy_prefix(templated_corpus, cfg.budget_chars),
              induce_slots(templated_corpus)]
    cand = compress(templated_corpus, cfg)
    for start in starts:
        assert cand.objective >= evaluate_program(
            start, templated_corpus, cfg).objective


def test_compress_deterministic(templated_corpus):
    cfg = config(170, seed=9)
    a = compress(templated_corpus, cfg)
    b = compress(templated_corpus, cfg)
    assert str(a.program) == str(b.program)
    assert a.objective == b.objective


def test_compress_report_matches_pipeline(templated_corpus):
    cfg = config(170)
    cand = compress(templated_corpus, cfg)
    result = closure(cand.program, cfg.limits)
    fresh = evaluate(result.bracket_free, templated_corpus,
                     program_size(cand.program), result.truncated.any)
    assert fresh == cand.report


# ---------------------------------------------------------------------------
# frontier


def test_reference_points(templated_corpus):
    pts = {p.method_label: p.report for p in reference_points(templated_corpus)}
    assert (pts["a"].accuracy, pts["a"].completeness) == (1, Fraction(1, 2))
    assert (pts["b"].accuracy, pts["b"].completeness) == \
        (Fraction(1, 2), Fraction(1, 2))
    assert (pts["c"].accuracy, pts["c"].completeness) == (1, 1)


def test_frontier_sweep_rows(templated_corpus):
    raw = program_size(Program(templated_corpus))
    pts = frontier_sweep(templated_corpus, [raw], config(raw))
    assert len(pts) == 4
    by_label = {p.method_label for p in pts}
    assert by_label == {"compress", "a", "b", "c"}
    best = next(p for p in pts if p.method_label == "compress")
    assert best.report.accuracy == 1 and best.report.completeness == 1


def test_frontier_sweep_skips_tiny_budget(templated_corpus):
    raw = program_size(Program(templated_corpus))
    pts = frontier_sweep(templated_corpus, [2, raw], config(raw))
    assert len(pts) == 4  # tiny budget skipped, references still present
