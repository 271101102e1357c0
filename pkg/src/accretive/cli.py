"""Command-line front end.

Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or parse
error, 3 a numerical kernel failed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from accretive.errors import AccretiveError, DimensionMismatch, NotAccretive
from accretive.matcore import dump_matrix, load_matrix, matrix_to_dict
from accretive.matfunc import parse_fn
from accretive.report import to_csv, to_jsonl
from accretive.sector import random_sector

ALPHA_CAP = 1.45
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_KERNEL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _alpha(text: str) -> float:
    value = float(text)
    if not 0 <= value <= ALPHA_CAP:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, {ALPHA_CAP}], got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _opts(args) -> dict:
    return {
        "fn": parse_fn(args.fn) if args.fn else None,
        "t": args.t,
        "r": args.r,
        "lam": args.lam,
        "literal": args.logmean_literal,
    }


def _exit_code(reports) -> int:
    if any(not r.passed and r.reason is None for r in reports):
        return EXIT_VIOLATION
    if any(r.reason is not None for r in reports):
        return EXIT_KERNEL
    return EXIT_OK


# --- commands -----------------------------------------------------------------------

def cmd_gen(args) -> int:
    S = random_sector(args.n, args.alpha, args.fill, args.seed)
    meta = {"alpha": args.alpha, "fill": args.fill, "seed": args.seed}
    if args.out in (None, "-"):
        _write(json.dumps(matrix_to_dict(S.base, angle=S.angle, **meta)) + "\n", None)
        return EXIT_OK
    dump_matrix(S.base, args.out)
    with open(args.out + ".angle.json", "w") as fh:
        json.dump({"angle": S.angle, "re_min": S.re_min, "n": args.n, **meta}, fh)
        fh.write("\n")
    return EXIT_OK


def _load_accretive(path):
    A = load_matrix(path)
    if np.linalg.eigvalsh((A + A.conj().T) / 2)[0] <= 0:
        raise UsageError(f"{path}: matrix is not accretive")
    return A


def _eval_entropy(spec: str, A, B):
    from accretive.entropy import perspective_diff, rel_entropy, tsallis

    kind, _, arg = spec.partition(":")
    if kind == "tsallis" and arg:
        return tsallis(A, B, float(arg)), "geometric"
    if kind == "relative":
        return rel_entropy(A, B), "diagonalization"
    if kind == "diff" and "," in arg:
        f_spec, g_spec = arg.split(",", 1)
        d = perspective_diff(parse_fn(f_spec), parse_fn(g_spec), A, B)
        return d.value, "/".join(d.routes)
    raise ValueError(f"unknown entropy spec {spec!r}")


def cmd_eval(args) -> int:
    from accretive.matfunc import evaluate
    from accretive.means import parse_mean

    mats = [_load_accretive(p) for p in args.inputs]
    need = 1 if args.kind == "fn" else 2
    if len(mats) != need:
        raise UsageError(f"eval {args.kind} takes {need} input file(s)")
    meta = {"kind": args.kind, "spec": args.spec}
    if args.kind == "fn":
        res = evaluate(parse_fn(args.spec), mats[0])
        value, meta["route"], meta["residual"] = res.value, res.route, res.residual
    elif args.kind == "mean":
        res = parse_mean(args.spec, args.logmean_literal)(*mats)
        value, meta["route"], meta["residual"] = res.value, res.route, res.residual
    else:
        value, meta["route"] = _eval_entropy(args.spec, *mats)
    _write(json.dumps(matrix_to_dict(value, **meta)) + "\n", args.out)
    return EXIT_OK


def _ids(args):
    from accretive.verify import resolve_ids

    try:
        return resolve_ids(args.ids)
    except KeyError as exc:
        raise UsageError(f"unknown theorem id {exc.args[0]!r}") from None


def _emit(reports, summaries, args):
    if args.format == "csv":
        _write(to_csv(summaries), args.out)
    else:
        _write(to_jsonl(reports), args.out)
    for s in summaries:
        print(
            f"{s.theorem:24s} alpha={s.alpha:.4f} trials={s.trials} "
            f"violations={s.violations} errors={s.errors} min_margin={s.min_margin:.3e}",
            file=sys.stderr,
        )


def cmd_check(args) -> int:
    from accretive.report import summarize
    from accretive.verify.runner import run_many, trial_seed

    reports, summaries = [], []
    for th in _ids(args):
        jobs = [(th, args.n, args.alpha, args.seed if k == 0 else trial_seed(args.seed, th, 0, k))
                for k in range(args.trials)]
        rs = run_many(jobs, _opts(args), args.jobs)
        reports.extend(rs)
        summaries.append(summarize(th, args.alpha, args.seed, rs, str(args.n)))
    _emit(reports, summaries, args)
    return _exit_code(reports)


def cmd_fuzz(args) -> int:
    from accretive.verify import ALPHA_GRID, fuzz

    alphas = ALPHA_GRID if args.alpha is None else (args.alpha,)
    reports, summaries = [], []
    for th in _ids(args):
        rs, ss = fuzz(th, args.trials, alphas, args.seed, args.n, _opts(args), args.jobs)
        reports.extend(rs)
        summaries.extend(ss)
    _emit(reports, summaries, args)
    return _exit_code(reports)


def cmd_sharpness(args) -> int:
    from accretive.verify import sharpness

    alpha = 0.0 if args.alpha is None else args.alpha
    n = 4 if args.n is None else args.n
    records = [sharpness(th, args.trials, n, alpha, args.seed, _opts(args), args.jobs) for th in _ids(args)]
    if args.format == "csv":
        _write(to_csv([r["summary"] for r in records]), args.out)
    else:
        text = "".join(
            json.dumps({k: v for k, v in r.items() if k != "summary"}, sort_keys=True) + "\n"
            for r in records
        )
        _write(text, args.out)
    return EXIT_VIOLATION if any(r["violations"] for r in records) else EXIT_OK


# --- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output path (default stdout)")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--t", type=float, default=None)
    params.add_argument("--r", type=float, default=None)
    params.add_argument("--lambda", dest="lam", type=float, default=None)
    params.add_argument("--fn", default=None, help='function spec such as "power:0.5"')
    params.add_argument("--logmean-literal", action="store_true",
                        help="weight the upper logmean integral by 1 instead of t/(1-t)")
    params.add_argument("--trials", type=_positive, default=None)
    params.add_argument("--jobs", type=_positive, default=1)
    params.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="accretive", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a random sectorial matrix")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--alpha", type=_alpha, default=0.0)
    p.add_argument("--fill", type=float, default=1.0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", parents=[common], help="evaluate a function, mean or entropy")
    p.add_argument("kind", choices=("fn", "mean", "entropy"))
    p.add_argument("spec")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--logmean-literal", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common, params], help="run theorem checks")
    p.add_argument("ids", nargs="+")
    p.add_argument("--n", type=_positive, default=4)
    p.add_argument("--alpha", type=_alpha, default=0.0)
    p.set_defaults(func=cmd_check, default_trials=1)

    for name, func, trials, helptext in (
        ("fuzz", cmd_fuzz, 100, "seeded sweep over angles and dimensions"),
        ("sharpness", cmd_sharpness, 200, "how much of each bound constant is used"),
    ):
        p = sub.add_parser(name, parents=[common, params], help=helptext)
        p.add_argument("ids", nargs="+")
        p.add_argument("--n", type=_positive, default=None)
        p.add_argument("--alpha", type=_alpha, default=None)
        p.set_defaults(func=func, default_trials=trials)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 0) is None:
        args.trials = args.default_trials
    try:
        return args.func(args)
    except (NotAccretive, DimensionMismatch, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AccretiveError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_KERNEL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
