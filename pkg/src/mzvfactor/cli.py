"""Command-line front end.

    mzvfactor compute {mzv,pi-freq,pi-amp,p-eval} [flags]
    mzvfactor verify SUITE [flags]
    mzvfactor bijection-dump --k K --bound B --kind {alpha,beta} [flags]

Exit codes: 0 all pass, 1 verification failure, 2 usage error, 3 resource
error. Reports are newline-delimited JSON, CSV, or aligned text, emitted in
claim-id order; identical configurations (including --seed) produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import bijection, pfunc, pi_constants, series
from .numeric import DomainError, ResourceError
from .report import RunConfig, all_passed, make_record, render
from .suites import SUITES, run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _add_shared(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--j-max", dest="j_max", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--x", type=_parse_fraction)
    p.add_argument("--precision", dest="precision_bits", type=int, default=128)
    p.add_argument("--tolerance", type=_parse_fraction)
    p.add_argument("--format", dest="output_format",
                   choices=["json", "csv", "text"], default="text")
    p.add_argument("--out", dest="output_path")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvfactor",
        description="compute and verify the zeta({2}^k) factorization, the "
                    "sine-type product, and the pi constants it generates")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print values with certified errors")
    p_compute.add_argument("target", choices=["mzv", "pi-freq", "pi-amp", "p-eval"])
    _add_shared(p_compute)

    p_verify = sub.add_parser("verify", help="run a registered verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    _add_shared(p_verify)

    p_dump = sub.add_parser("bijection-dump", help="enumerate and dump components")
    p_dump.add_argument("--kind", choices=["alpha", "beta"], default="alpha")
    p_dump.add_argument("--m-sweep", dest="m_sweep",
                        help="comma-separated beta truncations, e.g. 20,40,80")
    _add_shared(p_dump)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    sweep: tuple[int, ...] = ()
    if getattr(args, "m_sweep", None):
        sweep = tuple(int(s) for s in args.m_sweep.split(","))
    return RunConfig(
        command=args.command,
        suite=getattr(args, "suite", ""),
        k=args.k, N=args.N, M=args.M, j=args.j,
        n_max=args.n_max, j_max=args.j_max, bound=args.bound, x=args.x,
        precision_bits=args.precision_bits, tolerance=args.tolerance,
        output_format=args.output_format, output_path=args.output_path,
        seed=args.seed, kind=getattr(args, "kind", "alpha"), m_sweep=sweep,
    )


def _emit(records, config: RunConfig) -> None:
    text = render(records, config.output_format)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    config = _config_from(args)
    prec = config.precision_bits
    records = []
    if args.target == "mzv":
        k = config.k if config.k is not None else 2
        v = series.mzv_limit(k, prec, config.N)
        records.append(make_record(
            f"compute.mzv.k{k}", v.value, v.value, v.err, Fraction(0),
            params={"k": k, "precision_bits": prec}))
    elif args.target == "pi-freq":
        est = pi_constants.pi_freq(prec, config.N)
        records.append(make_record(
            "compute.pi_freq", est.value.value, est.value.value, est.value.err,
            Fraction(0), params=est.truncation))
    elif args.target == "pi-amp":
        n = config.N if config.N is not None else 1000
        est = pi_constants.pi_amp(n, prec)
        params = dict(est.truncation)
        if est.exact_partial is not None:
            params["exact_partial"] = (f"{est.exact_partial.numerator}"
                                       f"/{est.exact_partial.denominator}")
        records.append(make_record(
            "compute.pi_amp", est.value.value, est.value.value, est.value.err,
            Fraction(0), params=params))
    else:  # p-eval
        x = config.x if config.x is not None else Fraction(0)
        n = config.N if config.N is not None else 1000
        v = pfunc.p_eval(x, n, prec)
        records.append(make_record(
            f"compute.p_eval.x{x.numerator}_{x.denominator}", v.value, v.value,
            v.err, Fraction(0), params={"x": str(x), "N": n}))
    _emit(records, config)
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace) -> int:
    config = _config_from(args)
    records = run_suite(args.suite, config)
    _emit(records, config)
    return EXIT_PASS if all_passed(records) else EXIT_FAIL


def cmd_bijection_dump(args: argparse.Namespace) -> int:
    config = _config_from(args)
    k = config.k if config.k is not None else 2
    bound = config.bound if config.bound is not None else 10
    if not 2 <= k <= 5 or bound > 60:
        raise DomainError("bijection-dump needs k in 2..5 and bound <= 60")
    out_dir = config.output_path or "."
    os.makedirs(out_dir, exist_ok=True)
    components = []
    if config.kind == "alpha":
        components = bijection.alpha_components_up_to(k, bound)
        path = os.path.join(out_dir, f"alpha_k{k}_b{bound}.components.txt")
        with open(path, "w", encoding="utf-8") as fh:
            for c in components:
                fh.write(bijection.format_component(c))
                fh.write("\n")
        # residual vertices dump separately as singletons
        singles = [bijection.component(v, "alpha", k)
                   for v in bijection.iter_vertices(k, bound)
                   if bijection.is_alpha_residual(v, k)]
        spath = os.path.join(out_dir, f"alpha_k{k}_b{bound}.residual_singletons.txt")
        with open(spath, "w", encoding="utf-8") as fh:
            for c in singles:
                fh.write(bijection.format_component(c))
                fh.write("\n")
    else:
        sweep = config.m_sweep or (bound,)
        path = os.path.join(out_dir, f"beta_k{k}.components.txt")
        seed_vertex = bijection.V1((), 1) if k == 2 else bijection.V1((1,), 2)
        with open(path, "w", encoding="utf-8") as fh:
            for m in sweep:
                c = bijection.component(seed_vertex, "beta", k, M=m)
                components.append(c)
                fh.write(f"# M={m}\n")
                fh.write(bijection.format_component(c))
                fh.write("\n")
    sizes = sorted(c.size() for c in components)
    largest = max((abs(c.weight_sum) for c in components), default=Fraction(0))
    sys.stdout.write(f"components: {len(components)}\n")
    sys.stdout.write(f"size histogram: {_histogram(sizes)}\n")
    sys.stdout.write(
        f"max |weight_sum|: {largest.numerator}/{largest.denominator}\n")
    sys.stdout.write(f"dump: {path}\n")
    return EXIT_PASS


def _histogram(sizes: list[int]) -> str:
    counts: dict[int, int] = {}
    for s in sizes:
        counts[s] = counts.get(s, 0) + 1
    return " ".join(f"{size}x{count}" for size, count in sorted(counts.items()))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_bijection_dump(args)
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, KeyError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
