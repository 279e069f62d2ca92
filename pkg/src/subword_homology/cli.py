"""Command-line front end.

Every command writes a report {"command", "params", "results", "checks"}
as JSON (sorted keys) or TSV.  Exit status: 0 success, 1 usage error,
2 a check failed, 3 a conjecture counterexample was found.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import conjectures as conj
from . import normal as nw
from .combinatorics import bell_no_singletons, stirling_cycle
from .homology import (ChainCapExceeded, admissible_fix_counts, betti_numbers, chain_character,
                       dual_whitney_dims, lefschetz_character, whitney_dims)
from .symfunc import (HookHVector, g_alternating, g_by_iteration, g_coeff, internal_power,
                      power_basis_determinant, reduction_polynomial, reduction_polynomial_product,
                      refl_power_hook, reflection, to_hook_h, trivial_multiplicity, u_module)
from .tensorpoly import (TensorPowerPoly, alpha_poly, beta_poly, consecutive_ranks_poly,
                         dual_whitney_poly, rank_deletion_poly, rank_sets, two_ranks_chain_forms,
                         two_ranks_poly)
from .words import build_poset, mobius_interval, mobius_recursive, subwords, word

COMMANDS = ("mobius", "betti", "chains", "beta", "hbasis", "reduce", "conjectures",
            "identities", "normal", "selftest")

EXIT_OK, EXIT_USAGE, EXIT_CHECK, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    k: int | None = None
    ranks: tuple[int, ...] | None = None
    output: str = "-"
    format: str = "json"
    chain_cap: int | None = None


# -- serialization ------------------------------------------------------------

def plain(obj):
    """Exact, JSON-ready form: rationals as "p/q", polynomials as sparse maps."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, TensorPowerPoly):
        return {str(j): c for j, c in obj.items()}
    if isinstance(obj, HookHVector):
        return {str(d): plain(c) for d, c in obj.coeffs.items()}
    if isinstance(obj, dict):
        return {str(plain(k)) if not isinstance(k, str) else k: plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return plain(obj.to_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(report: dict) -> str:
    return json.dumps(plain(report), sort_keys=True, indent=2) + "\n"


def _flatten(prefix: str, obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}.{key}" if prefix else key, obj[key], out)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}.{i}", v, out)
    else:
        out.append(f"{prefix}\t{json.dumps(obj, sort_keys=True)}")


def render_tsv(report: dict) -> str:
    data = plain(report)
    lines = [f"command\t{data['command']}"]
    _flatten("params", data["params"], lines)
    _flatten("results", data["results"], lines)
    for c in data["checks"]:
        lines.append("\t".join(["check", c["name"], c["status"],
                                json.dumps(c["expected"], sort_keys=True),
                                json.dumps(c["actual"], sort_keys=True)]))
    return "\n".join(lines) + "\n"


class Checks:
    def __init__(self) -> None:
        self.items: list[dict] = []

    def add(self, name: str, expected, actual) -> bool:
        ok = expected == actual
        self.items.append({"name": name, "status": "pass" if ok else "fail",
                           "expected": expected, "actual": actual})
        return ok

    @property
    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.items)


# -- commands -------------------------------------------------------------------

def _need(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"{cfg.command} needs --{name}")
    if cfg.n is not None and cfg.n < 2 and cfg.command != "mobius":
        raise UsageError("--n must be at least 2")
    if cfg.k is not None and cfg.k < 1:
        raise UsageError("--k must be at least 1")
    if cfg.ranks is not None:
        if cfg.k is None or not cfg.ranks or any(not 1 <= r <= cfg.k for r in cfg.ranks) \
                or list(cfg.ranks) != sorted(set(cfg.ranks)):
            raise UsageError("--ranks must be a nonempty increasing subset of 1..k")


def _ranks(cfg: RunConfig) -> tuple[int, ...]:
    return cfg.ranks if cfg.ranks is not None else tuple(range(1, cfg.k + 1))


def cmd_mobius(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    T = _ranks(cfg)
    mu = build_poset(cfg.n, cfg.k, T).mobius_number()
    expected = (-1) ** (len(T) - 1) * beta_poly(T).dimension(cfg.n)
    if T == tuple(range(1, cfg.k + 1)):
        checks.add("closed-form", (-1) ** (cfg.k - 1) * (cfg.n - 1) ** cfg.k, mu)
    checks.add("signed-homology-dimension", expected, mu)
    return {"mobius": mu}


def cmd_betti(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    T = _ranks(cfg)
    summary = betti_numbers(build_poset(cfg.n, cfg.k, T), cfg.chain_cap)
    checks.add("concentrated-top-degree", {len(T) - 1: beta_poly(T).dimension(cfg.n)},
               summary.nonzero())
    return {"betti": summary.nonzero(), "face_counts": summary.face_counts,
            "reduced_euler": summary.reduced_euler}


def cmd_chains(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    T = _ranks(cfg)
    chi = chain_character(cfg.n, cfg.k, T)
    alpha = alpha_poly(T)
    checks.add("chain-character", {f: alpha.character(f) for f in chi.values}, chi.values)
    return {"alpha": alpha, "character": chi.values, "maximal_chains": chi.dimension}


def cmd_beta(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    T = _ranks(cfg)
    beta = beta_poly(T)
    values = {f: beta.character(f) for f in admissible_fix_counts(cfg.n)}
    chi = lefschetz_character(cfg.n, cfg.k, T)
    checks.add("lefschetz-character", values, chi.values)
    return {"beta": beta, "dimension": beta.dimension(cfg.n), "character": values}


def cmd_hbasis(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    n, k = cfg.n, cfg.k
    T = _ranks(cfg)
    it = g_by_iteration(n, k)
    table = {d: g_coeff(n, k, d) for d in range(0, min(n, k) + 1)}
    checks.add("g-alternating-sum", table, {d: g_alternating(k, d) for d in table})
    checks.add("g-induction-restriction", {d: c for d, c in table.items() if c},
               {d: c for d, c in it.items() if c})
    checks.add("reflection-power", refl_power_hook(n, k),
               to_hook_h(internal_power(reflection(n), k)))
    vec = conj.hook_vector(T, n)
    return {"g": table, "u_module": u_module(n, k), "trivial_multiplicity": trivial_multiplicity(n, k) if k >= 2 else 0,
            "hook_h": vec}


def cmd_reduce(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n")
    if cfg.n < 3:
        raise UsageError("reduce needs --n at least 3")
    coeffs = reduction_polynomial(cfg.n)
    checks.add("product-form", coeffs, reduction_polynomial_product(cfg.n))
    det = power_basis_determinant(cfg.n)
    checks.add("powers-independent", True, det != 0)
    return {"a": {str(i + 1): c for i, c in enumerate(coeffs)}, "determinant": det}


def cmd_conjectures(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    report = conj.scan(cfg.n, cfg.k)
    proven = conj.proven_case_failures(cfg.n, cfg.k)
    checks.add("proven-cases", [], proven)
    witness = report.minimal_witness()
    return {"report": report.to_dict(),
            "failures": {"conj1": len(report.failures(1)), "conj2": len(report.failures(2))},
            "witness": witness.to_dict() if witness else None}


def cmd_identities(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "k")
    K = cfg.k
    for k in range(1, K + 1):
        for r in range(1, k + 1):
            checks.add(f"consecutive[{r},{k}]", consecutive_ranks_poly(r, k),
                       beta_poly(tuple(range(r, k + 1))))
            if k > 1:
                T = tuple(x for x in range(1, k + 1) if x != r)
                checks.add(f"rank-deletion[{k}]-{r}", rank_deletion_poly(r, k), beta_poly(T))
        full = tuple(range(1, k + 1))
        chains = TensorPowerPoly(tuple(stirling_cycle(k + 1, k + 1 - m) for m in range(k + 1)))
        checks.add(f"chains[{k}]", chains, alpha_poly(full))
        for s1 in range(1, k):
            checks.add(f"two-ranks{{{s1},{k}}}", two_ranks_poly(s1, k), beta_poly((s1, k)))
            first, second = two_ranks_chain_forms(s1, k)
            checks.add(f"two-ranks-chains{{{s1},{k}}}", alpha_poly((s1, k)), first)
            checks.add(f"two-ranks-chains-alt{{{s1},{k}}}", first, second)
    results = {"max_k": K}
    if cfg.n is not None:
        n = cfg.n
        for k in range(1, min(K, 4) + 1):
            poly = [dual_whitney_poly(i, k).dimension(n) for i in range(k + 1)]
            dims = dual_whitney_dims(n, k)
            checks.add(f"dual-whitney[{n},{k}]", [1] + poly[::-1], dims)
        results["trivial_multiplicity"] = {k: trivial_multiplicity(n, k) for k in range(2, K + 1)}
        results["no_singleton_partitions"] = {k: bell_no_singletons(k) for k in range(2, K + 1)}
    return results


def cmd_normal(cfg: RunConfig, checks: Checks) -> dict:
    _need(cfg, "n", "k")
    n, k = cfg.n, cfg.k
    mu = nw.normal_mobius_number(n, k)
    checks.add("normal-mobius", (-1) ** (k - 1) * (n - 1) ** k, mu)
    results = {"mobius": mu, "rank_sizes": [len(lv) for lv in nw.build_normal(n, k).levels]}
    if n <= 4 and k <= 4:
        checks.add("whitney-agreement", True, nw.compare_whitney(n, k))
        checks.add("whitney-dimensions", [1] + [n * (n - 1) ** (j - 1) for j in range(1, k + 1)],
                   whitney_dims(n, k, normal=True))
    witness = nw.dual_whitney_witness()
    checks.add("dual-whitney-counterexample", [3, 1],
               [witness.full_value, witness.normal_value])
    ex = nw.n2_examples()
    for row in ex["atoms_deleted"]:
        sign = (-1) ** (row["k"] - 1)
        checks.add(f"two-letter-full[2,{row['k']}]", row["formula_character"], row["full_character"])
        checks.add(f"two-letter-normal[2,{row['k']}]", {0: sign, 2: 1}, row["normal_character"])
    results["dual_whitney"] = {"full": [witness.full_value, len(witness.full_elements)],
                               "normal": [witness.normal_value, len(witness.normal_elements)]}
    results["two_letter_stated_formula_discrepancies"] = nw.n2_discrepancies(ex)
    return results


def cmd_selftest(cfg: RunConfig, checks: Checks) -> dict:
    for n in range(2, 5):
        for k in range(1, 4):
            checks.add(f"mobius[{n},{k}]", (-1) ** (k - 1) * (n - 1) ** k,
                       build_poset(n, k).mobius_number())
    v = word("abab")
    for u in sorted(subwords(v)):
        checks.add(f"interval-mobius[{''.join('ab'[a] for a in u)}]",
                   mobius_recursive(u, v), mobius_interval(u, v))
    for T in rank_sets(3):
        checks.add(f"betti[2,3]{list(T)}", {len(T) - 1: beta_poly(T).dimension(2)},
                   betti_numbers(build_poset(2, 3, T)).nonzero())
    checks.add("cross-validate[3,3]", True, conj.cross_validate(3, 3))
    checks.add("proven-cases[5,5]", [], conj.proven_case_failures(5, 5))
    checks.add("no-singletons", [bell_no_singletons(k) for k in range(2, 7)],
               [trivial_multiplicity(k, k) for k in range(2, 7)])
    checks.add("reduction[5]", [8, -6, -7, 6], reduction_polynomial(5))
    return {"checks_run": len(checks.items)}


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a command; returns (exit status, rendered report)."""
    if cfg.command not in HANDLERS:
        raise UsageError(f"unknown command {cfg.command}")
    if cfg.format not in ("json", "tsv"):
        raise UsageError("--format must be json or tsv")
    if cfg.chain_cap is None and os.environ.get("SUBWORD_CHAIN_CAP"):
        cfg.chain_cap = int(os.environ["SUBWORD_CHAIN_CAP"])
    checks = Checks()
    results = HANDLERS[cfg.command](cfg, checks)
    params = {"n": cfg.n, "k": cfg.k, "ranks": list(cfg.ranks) if cfg.ranks else None}
    report = {"command": cfg.command, "params": params, "results": results,
              "checks": checks.items}
    text = render_json(report) if cfg.format == "json" else render_tsv(report)
    status = EXIT_OK
    if checks.failed:
        status = EXIT_CHECK
    if cfg.command == "conjectures" and results["witness"] is not None:
        status = EXIT_COUNTEREXAMPLE
    return status, text


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rank_list(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad rank list {s!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subword-homology",
                description="Homology of rank-selected subword order and its representations.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, help="alphabet size")
    p.add_argument("--k", type=int, help="maximum word length")
    p.add_argument("--ranks", type=_rank_list, help="rank set, e.g. 1,3")
    p.add_argument("--format", default="json", choices=("json", "tsv"))
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--chain-cap", type=int, help="maximum order-complex size")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage problems by exiting
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = RunConfig(args.command, args.n, args.k, args.ranks, args.out, args.format,
                    args.chain_cap)
    try:
        status, text = run(cfg)
    except (UsageError, ChainCapExceeded) as exc:
        print(f"subword-homology: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
