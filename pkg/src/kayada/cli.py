"""Command-line entry point: ``kayada matrix|generate|evaluate|stats``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__, markov
from .corpus import (
    auto_rate, header_lines, read_corpus, records_from_result,
    result_settings, write_corpus, write_stats,
)
from .evalstats import (
    EvaluationConfig, StatsError, chi_square_test, expected_frequencies,
    parse_contingency, parse_pairs, parse_ratings, pearson, ritchie_criteria,
)
from .markov import MarkovError
from .memetic import ConfigError, EvolutionConfig, evolve
from .notation import NotationError, load_theme
from .rules import RuleError, extract_ruleset


class CLIError(Exception):
    pass


def _load(path, acyclic=False):
    try:
        spec = load_theme(path)
    except FileNotFoundError:
        raise CLIError(f"{path}: no such file") from None
    except UnicodeDecodeError:
        raise CLIError(f"{path}: theme files must be plain ASCII") from None
    except NotationError as exc:
        raise CLIError(f"{path}: {exc}") from None
    if acyclic:
        spec.composition = replace(spec.composition, cyclic=False)
    return spec


def _read(path):
    try:
        return Path(path).read_text()
    except FileNotFoundError:
        raise CLIError(f"{path}: no such file") from None


def _open_out(path, default):
    if path in (None, "-"):
        return default, False
    return open(path, "w", newline="\n"), True


def cmd_matrix(args, out):
    spec = _load(args.theme, args.acyclic)
    comp = spec.composition
    matrix = markov.build_matrix(comp.bhari, comp.cyclic)
    print(f"# tool: kayada {__version__}", file=out)
    print("# command: matrix", file=out)
    print(f"# theme_path: {args.theme}", file=out)
    print(f"# cyclic: {comp.cyclic}", file=out)
    for kind in ("counts", "relative", "cumulative"):
        print(f"\n# {kind}", file=out)
        print(markov.format_table(matrix, kind), file=out)


def _evolution_config(args) -> EvolutionConfig:
    return EvolutionConfig(
        population_size=args.population_size,
        length=args.length,
        max_generations=args.generations,
        mutation_rate=args.mutation_rate,
        crossover_rate=args.crossover_rate,
        goal_proportion=args.goal_proportion,
        rng_seed=args.rng_seed,
    )


def cmd_generate(args, out):
    spec = _load(args.theme, args.acyclic)
    ruleset = extract_ruleset(spec.composition, spec.seeds, spec.highlighted)
    result = evolve(spec.composition, _evolution_config(args), ruleset)
    header = header_lines("generate", result_settings(result, args.theme))
    stream, close = _open_out(args.out, out)
    try:
        write_corpus(stream, records_from_result(result), header)
    finally:
        if close:
            stream.close()
    if args.stats_out:
        with open(args.stats_out, "w", newline="\n") as fh:
            write_stats(fh, result.stats, header)


def cmd_evaluate(args, out):
    config = EvaluationConfig(args.alpha, args.beta, args.inspiring_size)
    if args.ratings and args.corpus:
        raise CLIError("give either a ratings file or --corpus, not both")
    if args.corpus:
        settings, records = read_corpus(_read(args.corpus))
        if not records:
            raise CLIError(f"{args.corpus}: corpus has no records")
        items = auto_rate(records, settings.get("theme_bhari"))
        source = "auto-rated"
    elif args.ratings:
        items = parse_ratings(_read(args.ratings))
        source = f"ratings file {args.ratings}"
    else:
        raise CLIError("need a ratings file or --corpus")
    report = ritchie_criteria(items, config)
    report.source = source
    print(f"# tool: kayada {__version__}", file=out)
    print("# command: evaluate", file=out)
    print(f"# alpha: {config.alpha}", file=out)
    print(f"# beta: {config.beta}", file=out)
    print(f"# inspiring_set_size: {config.inspiring_set_size}", file=out)
    print(f"# items: {len(items)}", file=out)
    print(report.format(), file=out)


def cmd_stats(args, out):
    text = _read(args.input)
    if args.stat == "pearson":
        r = pearson(parse_pairs(text))
        print(f"r = {r:.6f}", file=out)
    else:
        table = parse_contingency(text)
        res = chi_square_test(table)
        if args.show_expected:
            exp = expected_frequencies(table)
            print("\t".join([""] + table.col_labels), file=out)
            for label, row in zip(table.row_labels, exp):
                print("\t".join([label] + [f"{v:g}" for v in row]), file=out)
        print(f"X2 = {res.statistic:.5f}, DF = {res.dof}", file=out)
        print(f"p = {res.p_value:.6f}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kayada", description=__doc__)
    parser.add_argument("--version", action="version", version=f"kayada {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print count/relative/cumulative transition tables")
    p.add_argument("theme")
    p.add_argument("--acyclic", action="store_true", help="drop the wrap-around transition")
    p.set_defaults(func=cmd_matrix)

    d = EvolutionConfig()
    p = sub.add_parser("generate", help="evolve variations of a theme")
    p.add_argument("theme")
    p.add_argument("--rng-seed", type=int, default=d.rng_seed)
    p.add_argument("--population-size", type=int, default=d.population_size)
    p.add_argument("--generations", type=int, default=d.max_generations)
    p.add_argument("--goal-proportion", type=float, default=d.goal_proportion)
    p.add_argument("--mutation-rate", type=float, default=d.mutation_rate)
    p.add_argument("--crossover-rate", type=float, default=d.crossover_rate)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--out", default=None, help="corpus file (default stdout)")
    p.add_argument("--stats-out", default=None, help="per-generation stats file")
    p.set_defaults(func=cmd_generate)

    e = EvaluationConfig()
    p = sub.add_parser("evaluate", help="Ritchie's criteria over rated items")
    p.add_argument("ratings", nargs="?")
    p.add_argument("--corpus", help="auto-rate a corpus file instead of reading ratings")
    p.add_argument("--alpha", type=float, default=e.alpha)
    p.add_argument("--beta", type=float, default=e.beta)
    p.add_argument("--inspiring-size", type=int, default=e.inspiring_set_size)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="Pearson r or chi-square independence test")
    p.add_argument("stat", choices=("pearson", "chisq"))
    p.add_argument("input")
    p.add_argument("--show-expected", action="store_true")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (CLIError, NotationError, RuleError, MarkovError, ConfigError, StatsError, ValueError, OSError) as exc:
        print(f"kayada {args.command}: error: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
