"""Command-line entry point: every pipeline stage, scriptable and stable.

Exit codes: 0 success, 1 input error, 2 internal error.  All randomized
subcommands take a seed (defaulted and printed, so every run is
reproducible from its own output).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .compress import SearchConfig, compress, frontier_sweep
from .corpus import TokenizerOptions, load_corpus
from .encoders import cfg_to_bc, horn_to_bc, parse_cfg, parse_horn
from .engine import ExpansionLimits, closure, sample
from .errors import BCError
from .metrics import CSV_HEADER, evaluate
from .syntax import Program, load_program, program_size


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-rounds", type=int, default=100)
    parser.add_argument("--max-statements", type=int, default=100_000)
    parser.add_argument("--max-tokens", type=int, default=64)


def _limits(args: argparse.Namespace) -> ExpansionLimits:
    return ExpansionLimits(max_rounds=args.max_rounds,
                           max_statements=args.max_statements,
                           max_tokens_per_statement=args.max_tokens)


def _add_corpus_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--fold-case", action="store_true",
                        help="uppercase the corpus while loading")
    parser.add_argument("--keep-punctuation", action="store_true",
                        help="do not split punctuation into separate tokens")
    parser.add_argument("--sentences", action="store_true",
                        help="split on sentence boundaries instead of lines")


def _tokenizer(args: argparse.Namespace) -> TokenizerOptions:
    return TokenizerOptions(split_punctuation=not args.keep_punctuation,
                            fold_case=args.fold_case,
                            one_statement_per_line=not args.sentences)


def _truncation_header(result, limits: ExpansionLimits) -> list[str]:
    if not result.truncated.any:
        return []
    tripped = [name for name in ("rounds", "statements", "tokens")
               if getattr(result.truncated, name)]
    return [f"# truncated: {','.join(tripped)} "
            f"(max_rounds={limits.max_rounds} "
            f"max_statements={limits.max_statements} "
            f"max_tokens={limits.max_tokens_per_statement})"]


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_check(args: argparse.Namespace) -> int:
    program = load_program(args.program)
    print(f"{len(program)} statements")
    if program.duplicates_dropped:
        print(f"# {program.duplicates_dropped} duplicate lines dropped",
              file=sys.stderr)
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    program = load_program(args.program)
    limits = _limits(args)
    result = closure(program, limits)
    lines = _truncation_header(result, limits)
    originals = [s for s in result.bracket_free if s in program]
    derived = sorted((s for s in result.bracket_free if s not in program),
                     key=str)
    lines += [str(s) for s in originals + derived]
    if args.residual:
        lines.append("# residual")
        res_orig = [s for s in result.residual if s in program]
        res_derived = sorted((s for s in result.residual if s not in program),
                             key=str)
        lines += [str(s) for s in res_orig + res_derived]
    print("\n".join(lines))
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    program = load_program(args.program)
    statements = sample(program, _limits(args), args.seed, args.count)
    print(f"# seed {args.seed}")
    for s in statements:
        print(s)
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    program = load_program(args.program)
    corpus = load_corpus(args.corpus, _tokenizer(args))
    limits = _limits(args)
    result = closure(program, limits)
    report = evaluate(result.bracket_free, corpus, program_size(program),
                      result.truncated.any)
    if args.csv:
        print(CSV_HEADER)
        from .metrics import FrontierPoint
        print(FrontierPoint(report.size_chars, report, "bc").as_csv_row())
    else:
        for line in _truncation_header(result, limits):
            print(line)
        print(report.as_kv())
    return 0


def _cmd_encode_cfg(args: argparse.Namespace) -> int:
    with open(args.grammar, encoding="utf-8") as fh:
        grammar = parse_cfg(fh.read())
    _write(args.output, str(cfg_to_bc(grammar)))
    return 0


def _cmd_encode_horn(args: argparse.Namespace) -> int:
    with open(args.rules, encoding="utf-8") as fh:
        horn = parse_horn(fh.read())
    _write(args.output, str(horn_to_bc(horn)))
    return 0


def _cmd_compress(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus, _tokenizer(args))
    config = SearchConfig(
        budget_chars=args.budget,
        lambda_accuracy=getattr(args, "lambda"),
        seed=args.seed,
        max_iterations=args.iterations,
        beam_width=args.beam,
        limits=_limits(args),
    )
    cand = compress(corpus, config)
    _write(args.output, str(cand.program))
    print(f"# seed {args.seed}", file=sys.stderr)
    print(cand.report.as_kv(), file=sys.stderr)
    return 0


def _cmd_frontier(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus, _tokenizer(args))
    budgets = [int(b) for b in args.budgets.split(",") if b.strip()]
    config = SearchConfig(
        budget_chars=max(budgets),
        lambda_accuracy=getattr(args, "lambda"),
        seed=args.seed,
        max_iterations=args.iterations,
        beam_width=args.beam,
        limits=_limits(args),
    )
    points = frontier_sweep(corpus, budgets, config)
    skipped = len(budgets) + 3 - len(points)
    if skipped:
        print(f"# {skipped} budget(s) skipped: too small for any program",
              file=sys.stderr)
    rows = [CSV_HEADER] + [p.as_csv_row() for p in points]
    _write(args.csv, "\n".join(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracketc",
        description="Bracket Compression corpus-analysis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a program")
    p.add_argument("program")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("expand", help="print the bracket-free closure")
    p.add_argument("program")
    p.add_argument("--residual", action="store_true")
    _add_limit_flags(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("sample", help="pseudo-random grounded statements")
    p.add_argument("program")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, required=True)
    _add_limit_flags(p)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("metrics", help="score a program against a corpus")
    p.add_argument("program")
    p.add_argument("corpus")
    p.add_argument("--csv", action="store_true")
    _add_limit_flags(p)
    _add_corpus_flags(p)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("encode-cfg", help="translate a CFG file")
    p.add_argument("grammar")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_encode_cfg)

    p = sub.add_parser("encode-horn", help="translate a fact/rule file")
    p.add_argument("rules")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_encode_horn)

    p = sub.add_parser("compress", help="search for a size-bounded program")
    p.add_argument("corpus")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--lambda", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--beam", type=int, default=8)
    p.add_argument("--iterations", type=int, default=8)
    p.add_argument("-o", "--output", default=None)
    _add_limit_flags(p)
    _add_corpus_flags(p)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("frontier", help="sweep budgets, emit frontier CSV")
    p.add_argument("corpus")
    p.add_argument("--budgets", required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--lambda", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--beam", type=int, default=8)
    p.add_argument("--iterations", type=int, default=8)
    _add_limit_flags(p)
    _add_corpus_flags(p)
    p.set_defaults(func=_cmd_frontier)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (BCError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
