"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error, 3 resource cap.
"""

import argparse
import logging
import os
import sys

from . import io
from ._rng import DATA_STREAM, MODEL_STREAM, make_rng
from .diagnostics import skewness_report
from .discovery import discover
from .evaluation import BenchGrid, evaluate, run_benchmark, y_structure_confusion
from .exceptions import DataError, ResourceLimitError
from .generator import GenConfig, random_model, sample_dataset
from .validation import DEFAULT_MAX_WIDTH

log = logging.getLogger("bexsam")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _int_list(text):
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _noise_kwargs(args):
    if args.pe is None:
        return {"noise_mode": "uniform", "p_e": None}
    return {"noise_mode": "fixed", "p_e": args.pe}


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def cmd_generate(args):
    try:
        config = GenConfig(d=args.d, n=args.n, p_a=args.pa, seed=args.seed, **_noise_kwargs(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    model = random_model(config, make_rng(args.seed, MODEL_STREAM))
    data = sample_dataset(model, args.n, make_rng(args.seed, DATA_STREAM))
    os.makedirs(args.out_dir, exist_ok=True)
    model_path = os.path.join(args.out_dir, args.model)
    data_path = os.path.join(args.out_dir, args.data)
    io.save_model(model, model_path)
    io.save_dataset(data, data_path)
    print("wrote %s and %s (d=%d, n=%d)" % (model_path, data_path, args.d, args.n))


def cmd_discover(args):
    data, names = io.load_dataset(args.data)
    log.info("read %s: n=%d, d=%d", args.data, data.n, data.d)
    result = discover(data, max_width=args.max_width)
    io.save_result(result, args.out)
    print("causal order: " + " -> ".join(names[lab] for lab in result.order))
    for step in reversed(result.steps):
        print("  %-8s MI_s=%.6g" % (names[step.target], step.mi_score))
    print("wrote %s" % args.out)


def cmd_eval(args):
    model = io.load_model(args.model)
    result = io.load_result(args.result)
    try:
        rep = evaluate(model, result)
    except ValueError as exc:
        raise DataError(str(exc))
    print("F(A)  = %.4f  (P=%.4f, R=%.4f)" % (rep.f_A, rep.precision_A, rep.recall_A))
    print("F(TT) = %.4f  (P=%.4f, R=%.4f)" % (rep.f_TT, rep.precision_TT, rep.recall_TT))
    if args.out:
        io.save_json(rep.to_dict(), args.out)


def cmd_bench(args):
    try:
        grid = BenchGrid(
            d=args.d, n=args.n, p_a=args.pa, trials=args.trials, seed=args.seed, **_noise_kwargs(args)
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    log.info("bench: %d cells x %d trials, seed %d", len(grid.cells()), grid.trials, grid.seed)
    rows = run_benchmark(grid, jobs=args.jobs, max_width=args.max_width)
    fh, close = _open_out(args.out)
    try:
        io.write_bench_csv(rows, fh)
    finally:
        if close:
            fh.close()


def cmd_ystruct(args):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    conf = y_structure_confusion(args.trials, args.n, args.variant, args.seed, exact=args.exact)
    fh, close = _open_out(args.out)
    try:
        io.write_confusion_csv(conf, fh)
    finally:
        if close:
            fh.close()


def cmd_check(args):
    data, names = io.load_dataset(args.data)
    if args.threshold is not None and args.threshold < 0:
        raise UsageError("--threshold must be non-negative")
    rep = skewness_report(data, args.threshold)
    print(rep.format(names))
    if args.json:
        io.save_json(rep.to_dict(), args.json)


def build_parser():
    p = _Parser(prog="bexsam", description="Causal discovery in binary XOR-noise acyclic models.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("generate", help="draw a random model and a dataset")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--pa", type=float, default=0.5, help="parent-inclusion probability")
    g.add_argument("--pe", type=float, default=None, help="fixed noise probability (default: uniform)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out-dir", default=".")
    g.add_argument("--model", default="model.json", help="model file name inside --out-dir")
    g.add_argument("--data", default="data.csv", help="dataset file name inside --out-dir")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("discover", help="estimate causal order and truth tables")
    d.add_argument("--data", default="data.csv")
    d.add_argument("--out", default="result.json")
    d.add_argument("--max-width", type=int, default=DEFAULT_MAX_WIDTH)
    d.set_defaults(func=cmd_discover)

    e = sub.add_parser("eval", help="score a result against a ground-truth model")
    e.add_argument("--model", default="model.json")
    e.add_argument("--result", default="result.json")
    e.add_argument("--out", default=None, help="write the report as JSON")
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("bench", help="benchmark grid over d and n")
    b.add_argument("--d", type=_int_list, required=True)
    b.add_argument("--n", type=_int_list, required=True)
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--pa", type=float, default=0.5)
    b.add_argument("--pe", type=float, default=None)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--max-width", type=int, default=DEFAULT_MAX_WIDTH)
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_bench)

    y = sub.add_parser("ystruct", help="confusion counts on the Y-structure model")
    y.add_argument("--trials", type=int, default=20)
    y.add_argument("--n", type=int, default=10000)
    y.add_argument("--variant", choices=("AND", "OR"), default="AND")
    y.add_argument("--seed", type=int, default=0)
    y.add_argument("--exact", action="store_true", help="use the exact distribution")
    y.add_argument("--out", default="-")
    y.set_defaults(func=cmd_ystruct)

    c = sub.add_parser("check", help="marginal skewness report")
    c.add_argument("--data", default="data.csv")
    c.add_argument("--threshold", type=float, default=None)
    c.add_argument("--json", default=None)
    c.set_defaults(func=cmd_check)
    return p


def run_cli(argv=None):
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2))
        args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except DataError as exc:
        print("data error: %s" % exc, file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print("data error: %s: %s" % (exc.filename, exc.strerror), file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main():
    sys.exit(run_cli())
