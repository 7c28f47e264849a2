"""Command line entry point: ``supplycat check SUITE`` and ``supplycat list``."""
from __future__ import annotations

import argparse
import sys

from .suites import SUITES, SuiteConfig, UsageError, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supplycat", description="Bounded checks of supplies in symmetric monoidal categories.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", help="list the available suites")

    check = sub.add_parser("check", help="run one suite and print its report")
    check.add_argument("suite")
    check.add_argument("--instance", help="restrict to one named instance of the suite")
    check.add_argument("--max-leaf", type=int, help="largest atom size sampled")
    check.add_argument("--max-depth", type=int, help="deepest object word sampled")
    check.add_argument("--max-arity", type=int, help="largest prop arity enumerated")
    check.add_argument("--max-apex", type=int, help="largest cospan apex enumerated")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--presentation", help="presentation file (suite 'presentation')")
    check.add_argument("--target", help="target prop name (suite 'presentation')")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "list":
        width = max(map(len, SUITES))
        for name, (summary, _) in SUITES.items():
            print(f"{name:<{width}}  {summary}")
        return EXIT_PASS

    try:
        cfg = SuiteConfig(args.suite, args.instance, args.max_leaf, args.max_depth, args.max_arity,
                          args.max_apex, args.format, args.seed, args.presentation, args.target)
        report = run_suite(cfg)
    except UsageError as exc:
        print(f"supplycat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    print(report.dumps() if args.format == "json" else report.render_text())
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
