"""Bracket Compression: a loose-compression rewriting system for corpora."""

from .compress import (Candidate, SearchConfig, compress, frontier_sweep,
                       induce_slots, neighbors, reference_points)
from .corpus import TokenizerOptions, corpus_from_text, load_corpus
from .encoders import (ARROW, CFG, Atom, HornProgram, HornRule, Var,
                       cfg_enumerate, cfg_to_bc, horn_to_bc, parse_cfg,
                       parse_horn)
from .engine import (ClosureResult, ExpansionLimits, closure, expand_statement,
                     match_endings, ripe_contents, sample)
from .errors import (BCError, BracketInCorpus, BudgetTooSmall, EmptyCorpus,
                     EmptyStatement, NoBracketedStatements,
                     ReservedSymbolClash, UnbalancedBrackets, UnsupportedRule)
from .metrics import (CSV_HEADER, FrontierPoint, MetricsReport, evaluate,
                      pareto_filter)
from .syntax import (Bracket, Program, Statement, load_program,
                     parse_program, parse_statement, program_size,
                     serialize_statement, words)

__all__ = [
    "ARROW", "Atom", "BCError", "Bracket", "BracketInCorpus", "BudgetTooSmall",
    "CFG", "CSV_HEADER", "Candidate", "ClosureResult", "EmptyCorpus",
    "EmptyStatement", "ExpansionLimits", "FrontierPoint", "HornProgram",
    "HornRule", "MetricsReport", "NoBracketedStatements", "Program",
    "ReservedSymbolClash", "SearchConfig", "Statement", "TokenizerOptions",
    "UnbalancedBrackets", "UnsupportedRule", "Var", "cfg_enumerate",
    "cfg_to_bc", "closure", "compress", "corpus_from_text", "evaluate",
    "expand_statement", "frontier_sweep", "horn_to_bc", "induce_slots",
    "load_corpus", "load_program", "match_endings", "neighbors",
    "pareto_filter", "parse_cfg", "parse_horn", "parse_program",
    "parse_statement", "program_size", "reference_points", "ripe_contents",
    "sample", "serialize_statement", "words",
]
