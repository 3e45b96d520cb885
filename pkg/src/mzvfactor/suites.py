"""The registered verification suites behind `verify`.

Each suite returns a list of VerificationReport records; a suite passes when
every record does. Default parameters are sized for a few minutes on a
laptop; heavier runs opt in through the CLI flags.
"""

from __future__ import annotations

import math
import os
import random
from fractions import Fraction

from . import bijection, pfunc, pi_constants, product, series
from .numeric import ZERO, pi_oracle
from .report import (
    RunConfig,
    VerificationReport,
    bool_record,
    make_record,
    rational_str,
)

TEN = Fraction(10)


def _tol(config: RunConfig, default: Fraction) -> Fraction:
    return config.tolerance if config.tolerance is not None else default


# ---------------------------------------------------------------------------

def suite_basel(config: RunConfig) -> list[VerificationReport]:
    """zeta({2}^k) brackets against pi^(2k)/(2k+1)! from the oracle."""
    k_max = config.k or 8
    prec = config.precision_bits
    width_tol = _tol(config, TEN ** -20)
    out = []
    pi = pi_oracle(prec)
    for k in range(1, k_max + 1):
        z = series.mzv_limit(k, prec)
        closed = pi.power(2 * k) * Fraction(1, math.factorial(2 * k + 1))
        out.append(make_record(
            f"eq2.k{k}", z.value, closed.value, z.err + closed.err, ZERO,
            params={"k": k, "precision_bits": prec}))
        out.append(make_record(
            f"eq2.width.k{k}", 2 * z.err, ZERO, ZERO, width_tol,
            params={"k": k, "precision_bits": prec}))
    return out


def suite_factorization(config: RunConfig) -> list[VerificationReport]:
    """(2k+1)(2k) zeta({2}^k) = zeta({2}^{k-1}) 6 zeta(2), certified."""
    k_max = config.k or 8
    prec = config.precision_bits
    err_tol = _tol(config, TEN ** -20)
    out = []
    for k in range(1, k_max + 1):
        rep = bijection.factorization_check(k, prec)
        out.append(make_record(
            f"factorization.k{k}", rep.lhs.value, rep.rhs.value,
            rep.recursion_budget, ZERO, params={"k": k, "precision_bits": prec}))
        out.append(make_record(
            f"factorization.err.k{k}", rep.recursion_budget, ZERO, ZERO, err_tol,
            params={"k": k}))
        out.append(bool_record(
            f"factorization.closed_form.k{k}", rep.closed_form_contained,
            params={"k": k}))
    return out


def suite_p_constant(config: RunConfig) -> list[VerificationReport]:
    """The exact core of the constancy argument plus its numeric shadow."""
    n_max = config.n_max or 200
    j_max = config.j_max or 10
    out = []
    for j in range(1, j_max + 1):
        worst = ZERO
        for n in range(1, n_max + 1):
            w = pfunc.p_coefficient_witness(n, j)
            worst = max(worst, abs(w.tail_part + w.finite_part + w.diagonal_part))
        out.append(make_record(
            f"p.witness.j{j}", worst, ZERO, ZERO, ZERO,
            params={"n_max": n_max, "j": j}))

    rng = random.Random(config.seed)
    trials = 200
    ok = 0
    for _ in range(trials):
        l1 = rng.randint(1, 40)
        l2 = rng.randint(l1 + 1, l1 + 40)
        x = Fraction(rng.randint(-400, 400), rng.randint(401, 800))
        if pfunc.partial_fraction_check(x, l1, l2):
            ok += 1
    out.append(make_record(
        "p.partial_fraction.random", Fraction(ok), Fraction(trials), ZERO, ZERO,
        params={"seed": config.seed, "trials": trials}))

    for x in (Fraction(1, 2), Fraction(1, 10)):
        out.append(bool_record(
            f"p.interchange_bound.x{x.numerator}_{x.denominator}",
            pfunc.interchange_bound_check(x, 50), params={"N": 50, "x": str(x)}))

    n_small = config.N or 1000
    n_large = 10 * n_small
    dev_small = _constancy_deviation(n_small)
    dev_large = _constancy_deviation(n_large)
    out.append(make_record(
        f"p.constancy.N{n_small}", dev_small, ZERO, ZERO, _tol(config, Fraction(5, 100)),
        params={"N": n_small, "grid": "0,0.1,...,0.9"}))
    out.append(bool_record(
        f"p.constancy.shrink.N{n_large}", dev_large * 3 <= dev_small,
        params={"N_small": n_small, "N_large": n_large,
                "dev_small": rational_str(dev_small),
                "dev_large": rational_str(dev_large)}))

    for n in range(1, 13):
        if not pfunc.fpp_assembly_identity(n):
            out.append(bool_record(f"p.assembly.N{n}", False, params={"N": n}))
            break
    else:
        out.append(bool_record("p.assembly.N1..12", True, params={"N_max": 12}))
    return out


def _constancy_deviation(N: int) -> Fraction:
    base = pfunc.p_eval(Fraction(0), N)
    worst = ZERO
    for i in range(1, 10):
        v = pfunc.p_eval(Fraction(i, 10), N)
        worst = max(worst, abs(v.value - base.value) + v.err + base.err)
    return worst


def suite_bijection_alpha(config: RunConfig) -> list[VerificationReport]:
    """Every alpha component with entries <= bound cancels exactly."""
    ks = (config.k,) if config.k else (2, 3, 4)
    bound = config.bound or 20
    out = []
    for k in ks:
        try:
            comps = bijection.alpha_components_up_to(k, bound)
        except bijection.StructuralFailure as exc:
            path = _dump_failure(config, f"alpha_overflow_k{k}", str(exc))
            out.append(bool_record(f"alpha.cancel.k{k}", False, params={"k": k},
                                   artifact_path=path, counterexample_on_fail=True))
            continue
        worst = max((abs(c.weight_sum) for c in comps), default=ZERO)
        bad = [c for c in comps if c.weight_sum != 0]
        path = None
        if bad:
            path = _dump_failure(config, f"alpha_noncancel_k{k}",
                                 "".join(bijection.format_component(c) for c in bad))
        out.append(make_record(
            f"alpha.cancel.k{k}", worst, ZERO, ZERO, ZERO,
            params={"k": k, "bound": bound, "components": len(comps),
                    "largest": max((c.size() for c in comps), default=0)},
            artifact_path=path, counterexample_on_fail=True))
    return out


def suite_bijection_beta(config: RunConfig) -> list[VerificationReport]:
    """Sampled beta components: truncated sums shrink like 1/M."""
    sweep = config.m_sweep or ((config.M, 2 * config.M) if config.M
                               else (25, 50, 100, 200))
    out = []
    samples = [
        (2, bijection.V1((), 3), "k2.empty"),
        (3, bijection.V1((1,), 2), "k3.star12"),
        (3, bijection.V1((4,), 7), "k3.star47"),
    ]
    if config.k:
        samples = [s for s in samples if s[0] == config.k] or samples
    for k, seed_vertex, label in samples:
        sums = []
        for M in sweep:
            comp = bijection.component(seed_vertex, "beta", k, M=M)
            sums.append((M, abs(comp.weight_sum)))
        decreasing = all(a[1] > b[1] for a, b in zip(sums, sums[1:]))
        scaled = [m * s for m, s in sums]
        stable = max(scaled) <= 2 * min(scaled) if min(scaled) > 0 else False
        out.append(bool_record(
            f"beta.vanish.{label}", decreasing and stable,
            params={"k": k, "sweep": list(sweep),
                    "sums": [rational_str(s) for _, s in sums],
                    "fitted_C": [rational_str(c) for c in scaled]}))
    return out


def suite_residuals(config: RunConfig) -> list[VerificationReport]:
    """Exact residual identities on both edge systems, the classification
    cross-check, and the multiplicity identity."""
    ks = (config.k,) if config.k else (2, 3, 4)
    N = config.N or 40
    out = []
    for k in ks:
        lhs, rhs = bijection.alpha_residual_identity(k, N)
        out.append(make_record(f"alpha.residual.k{k}", lhs, rhs, ZERO, ZERO,
                               params={"k": k, "N": N}))
        lhs, rhs = bijection.beta_residual_identity(k, N)
        out.append(make_record(f"beta.residual.k{k}", lhs, rhs, ZERO, ZERO,
                               params={"k": k, "N": N}))
        out.append(bool_record(
            f"residual.classes.k{k}",
            bijection.residual_classification_consistent(k, min(10, N)),
            params={"k": k, "bound": min(10, N)}))
    mult_max = 64
    bad = [k for k in range(1, mult_max + 1) if not bijection.multiplicity_identity(k)]
    out.append(bool_record("multiplicity.k1..64", not bad,
                           params={"k_max": mult_max, "failures": bad}))
    return out


def suite_pi_equality(config: RunConfig) -> list[VerificationReport]:
    prec = config.precision_bits
    tol = _tol(config, TEN ** -20 if prec >= 128 else TEN ** -8)
    rep = pi_constants.three_way_pi_compare(prec, tol)
    out = []
    for pair in rep.pairs:
        out.append(make_record(
            f"pi.{pair.first}_vs_{pair.second}",
            pair.distance, ZERO, pair.combined_err, tol,
            params={"precision_bits": prec}))
    out.append(make_record("pi.tight_trio", rep.tight_trio_max_distance, ZERO,
                           ZERO, tol, params={"precision_bits": prec,
                                              "members": "freq,arc,oracle"}))
    parity_ok = _wallis_parity(prec)
    out.append(bool_record("pi.wallis_parity", parity_ok,
                           params={"half_steps": "1..12"}))
    return out


def _wallis_parity(prec: int) -> bool:
    oracle = pi_oracle(prec)
    for m in range(1, 13):
        v = pi_constants.wallis_partial(m)
        gap = v - oracle.value
        expected_positive = m % 2 == 1
        if abs(gap) <= oracle.err:
            return False
        if (gap > 0) != expected_positive:
            return False
    return True


def suite_product_structure(config: RunConfig) -> list[VerificationReport]:
    """Oddness, integer zeros, the two product displays, the periodicity
    sign, the shifted-form gap bound, and the rise/fall scan."""
    N = config.N or 100
    grid = config.bound or 1001
    out = []
    xs = [Fraction(1, 3), Fraction(2, 7), Fraction(5, 4), Fraction(9, 2)]
    odd_ok = all(product.eval_F(-x, N) == -product.eval_F(x, N) for x in xs)
    out.append(bool_record("product.oddness", odd_ok, params={"N": N}))
    zeros_ok = all(product.eval_F(Fraction(m), N) == 0
                   for m in range(-N, N + 1))
    out.append(bool_record("product.zeros", zeros_ok, params={"N": N}))
    forms_ok = all(product.eval_F(x, N) == product.eval_F_factored(x, N)
                   for x in xs)
    out.append(bool_record("product.two_forms", forms_ok, params={"N": N}))
    signs = []
    for x in (Fraction(1, 2), Fraction(1, 3), Fraction(7, 5)):
        for nn in (1, 2, 5, 25):
            signs.append(product.periodicity_sign_report(x, nn).matched_sign)
    out.append(bool_record("product.periodicity_sign", all(s == -1 for s in signs),
                           params={"matched_sign": -1, "cases": len(signs)}))
    gap_ok = True
    for x in xs[:2]:
        gap = abs(product.eval_F(x, N) - product.eval_F_shifted(x, N))
        if gap > product.shifted_truncation_gap_bound(x, N):
            gap_ok = False
    out.append(bool_record("product.shifted_gap", gap_ok, params={"N": N}))
    scan = product.monotonicity_scan(N, grid)
    out.append(bool_record("product.monotonicity", scan.passed,
                           params={"N": N, "grid": grid,
                                   "first_violation": str(scan.first_violation)}))
    return out


SUITES = {
    "basel": suite_basel,
    "factorization": suite_factorization,
    "p-constant": suite_p_constant,
    "bijection-alpha": suite_bijection_alpha,
    "bijection-beta": suite_bijection_beta,
    "residuals": suite_residuals,
    "pi-equality": suite_pi_equality,
    "product-structure": suite_product_structure,
}


def run_suite(name: str, config: RunConfig) -> list[VerificationReport]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](config)


def _dump_failure(config: RunConfig, label: str, payload: str) -> str:
    base = config.output_path or "."
    directory = base if os.path.isdir(base) else os.path.dirname(base) or "."
    path = os.path.join(directory, f"{label}.counterexample.txt")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)
    return path
