"""``verify`` command line: run verification suites, emit JSON-line reports.

Usage:
    verify metric --n 3 --seed 42
    verify classify --n 2..5 --trials 1000 --seed 7
    verify all --config verify.json --out report.jsonl

One JSON object is printed per check, then a summary object.  Exit
status is 0 iff every check passed.  Reports are byte-reproducible for
a given seed and configuration except for the elapsed-time fields.
"""

import argparse
import json
import os
import sys

from .harness import SUITES, Settings, run_suite

CONFIG_ENV_VAR = "QIG_VERIFY_CONFIG"


def parse_dimensions(text):
    """Parse "3" or "2..5" into a tuple of dimensions."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo < 2 or hi < lo:
            raise argparse.ArgumentTypeError("dimension range must be ascending, >= 2")
        return tuple(range(lo, hi + 1))
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("dimension must be >= 2")
    return (n,)


def parse_override(text):
    name, _, value = text.partition("=")
    if not _:
        raise argparse.ArgumentTypeError("tolerance override must be name=value")
    return name, float(value)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run the deterministic verification suites.")
    parser.add_argument("suite", choices=sorted(SUITES) + ["all"],
                        help="which suite to run")
    parser.add_argument("--n", type=parse_dimensions, default=None,
                        metavar="N or LO..HI", help="dimension(s) to test")
    parser.add_argument("--trials", type=int, default=None,
                        help="override the per-check trial counts")
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (per-check seeds derive from it)")
    parser.add_argument("--tol", action="append", type=parse_override,
                        default=[], metavar="NAME=VALUE",
                        help="tolerance override, repeatable")
    parser.add_argument("--config", default=None,
                        help=f"JSON config file (default ${CONFIG_ENV_VAR})")
    parser.add_argument("--out", default=None,
                        help="write the report stream to a file instead of stdout")
    return parser


def load_settings(args):
    config = {}
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if path:
        with open(path) as fh:
            config = json.load(fh)
    seed = args.seed if args.seed is not None else config.get("seed", 12345)
    dimensions = args.n or tuple(config.get("dimensions", (2, 3, 4, 5)))
    trials = dict(config.get("trials", {}))
    if args.trials is not None:
        # a flat --trials value applies to every trial-count knob
        trials = {key: args.trials for key in (
            "metric", "classify", "classify_agreement", "born_pairs",
            "compose_pairs", "energy_trials", "haar_maps", "composition",
            "subsystem_trials", "dynamics_trials")}
    tolerances = dict(config.get("tolerances", {}))
    tolerances.update(dict(args.tol))
    return Settings(seed=int(seed), dimensions=tuple(dimensions),
                    trials=trials, tolerances=tolerances)


def main(argv=None):
    args = build_parser().parse_args(argv)
    settings = load_settings(args)
    suites = sorted(SUITES) if args.suite == "all" else [args.suite]
    stream = open(args.out, "w") if args.out else sys.stdout

    counts = {"pass": 0, "fail": 0, "error": 0}
    try:
        for report in run_suite(suites, settings):
            counts[report["status"]] += 1
            stream.write(json.dumps(report) + "\n")
            stream.flush()
        summary = {
            "summary": True,
            "suites": suites,
            "seed": settings.seed,
            "checks": sum(counts.values()),
            **counts,
        }
        stream.write(json.dumps(summary) + "\n")
    finally:
        if args.out:
            stream.close()
    return 0 if counts["fail"] == 0 and counts["error"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
