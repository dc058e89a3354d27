"""`verify`: oracle checks of K-means and Big-means on tiny instances."""

import argparse

from eval.tiny_suite import tiny_suite
from eval.verification import run_verification
from vls_cli.services.run_service import positive_int


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("verify", help="Check algorithms against exhaustive optima")
    parser.add_argument("--instances", type=positive_int, default=20, help="Tiny instances (default: 20)")
    parser.add_argument("--suite-seed", type=int, default=0, help="Seed for the instance generator")
    parser.add_argument("--iters", type=positive_int, default=50, help="Big-means iterations per instance")
    parser.add_argument("--seed", type=int, default=0, help="Big-means seed")
    parser.add_argument(
        "--corrupt",
        metavar="NAME",
        default=None,
        help="Lower K-means objectives on the named instance to exercise failure reporting",
    )
    parser.set_defaults(handler=cmd_verify, command_parser=parser)
    return parser


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    instances = tiny_suite(args.instances, args.suite_seed)
    if args.corrupt is not None and args.corrupt not in {i.name for i in instances}:
        parser.error(f"unknown instance {args.corrupt!r}")

    reports = run_verification(instances, seed=args.seed, iterations=args.iters, corrupt=args.corrupt)

    print(f"{'instance':<10} {'s':>2} {'p':>2} {'optimum':>12} {'kmeans best':>12} {'big-means':>12}  status")
    for report in reports:
        status = "ok" if report.passed else "FAIL"
        print(
            f"{report.name:<10} {report.s:>2} {report.p:>2} {report.oracle:>12.6g} "
            f"{report.kmeans_best:>12.6g} {report.big_means:>12.6g}  {status}"
        )
        for violation in report.violations():
            print(f"    {violation['key']}: {violation['detail']}")

    failed = sum(not report.passed for report in reports)
    print(f"\n{len(reports) - failed}/{len(reports)} instances passed")
    return 1 if failed else 0
