"""Command-line interface.

Exit codes: 0 success, 2 parse error or bad usage, 3 invalid state, 4 I/O error.
"""
import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import statefile
from .distill import advise, figure1_curves, figure1_thresholds
from .errors import FefError
from .fef import fef_report, fef_two_qubit_exact, fef_upper_bound, normalized_fef
from .generators import build_generator_basis, rotate_basis
from .linalg_core import random_orthogonal
from .oracle import OracleConfig, oracle_fef
from .state import example_family_rho_x, max_entangled_projector, maximally_mixed
from .tripartite import (
    concurrence_ab_c, reduced_ab, schmidt_ab_c, w_closed_forms, w_params_equal, w_state)

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_IO = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def fmt(x):
    return f"{x:.17g}"


def _load(path):
    try:
        return statefile.load(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from exc
    except statefile.StateFileError as exc:
        raise CliError(f"parse error in {path}: {exc}", EXIT_PARSE) from exc
    except FefError as exc:
        mag = "" if exc.magnitude is None else f" (magnitude {exc.magnitude:.6g})"
        raise CliError(f"invalid state in {path}: {type(exc).__name__}: {exc}{mag}",
                       EXIT_INVALID) from exc


def _write_atomic(path, text):
    """Write via a temp file in the target directory; nothing is left on failure."""
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".fefbound-", suffix=".tmp")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from exc
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from exc


def _emit_csv(header, rows, out):
    lines = [",".join(header)] + [",".join(fmt(v) for v in row) for row in rows]
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(out, text)


def cmd_report(args):
    rho = _load(args.state)
    if rho.dim_a != rho.dim_b:
        raise CliError("report needs equal subsystem dimensions", EXIT_INVALID)
    basis = build_generator_basis(rho.d)
    if args.basis_seed is not None:
        o = random_orthogonal(len(basis), np.random.default_rng(args.basis_seed))
        basis = rotate_basis(basis, o)
    cfg = OracleConfig(seed=args.seed, restarts=args.restarts, max_iters=args.iters) if args.oracle else None
    rep = fef_report(rho, basis, cfg)
    print(f"d               {rep.d}")
    print(f"fidelity        {fmt(rep.fidelity)}")
    print(f"threshold 1/d   {fmt(rep.threshold)}")
    print(f"upper_bound     {fmt(rep.upper_bound)}")
    if rep.exact_two_qubit is not None:
        print(f"exact_fef       {fmt(rep.exact_two_qubit)}")
        print(f"kyfan_2qubit    {fmt(rep.kyfan_two_qubit)}")
        print(f"normalized_fef  {fmt(rep.normalized)}")
    if rep.oracle_lower is not None:
        print(f"oracle_lower    {fmt(rep.oracle_lower)}")
    if args.json:
        print(json.dumps(rep.to_dict()))
    return EXIT_OK


def cmd_advise(args):
    rho = _load(args.state)
    if rho.dim_a != rho.dim_b:
        raise CliError("advise needs equal subsystem dimensions", EXIT_INVALID)
    adv = advise(rho)
    print(f"verdict             {adv.verdict}")
    print(f"reduction_min_A     {fmt(adv.reduction_eigenvalues[0])}")
    print(f"reduction_min_B     {fmt(adv.reduction_eigenvalues[1])}")
    print(f"violates_reduction  {adv.violates_reduction}")
    print(f"fidelity            {fmt(adv.fidelity)}")
    print(f"upper_bound         {fmt(adv.upper_bound)}")
    print(f"threshold 1/d       {fmt(adv.threshold)}")
    return EXIT_OK


def cmd_oracle(args):
    rho = _load(args.state)
    if rho.dim_a != rho.dim_b:
        raise CliError("oracle needs equal subsystem dimensions", EXIT_INVALID)
    res = oracle_fef(rho, OracleConfig(seed=args.seed, restarts=args.restarts, max_iters=args.iters))
    ub = fef_upper_bound(rho)
    print(f"oracle_best     {fmt(res.best_value)}")
    print(f"best_restart    {res.best_restart}")
    print(f"upper_bound     {fmt(ub)}")
    print(f"gap             {fmt(ub - res.best_value)}")
    return EXIT_OK


def cmd_sweep_fig1(args):
    xs, fid, ub = figure1_curves(args.steps, args.family)
    _emit_csv(["x", "fidelity_minus_third", "bound_minus_third"], zip(xs, fid, ub), args.out)
    roots = figure1_thresholds(args.steps, args.family)
    print("fidelity sign changes: " + " ".join(f"{r:.4f}" for r in roots["fidelity"]), file=sys.stderr)
    print("bound sign changes:    " + " ".join(f"{r:.4f}" for r in roots["bound"]), file=sys.stderr)
    return EXIT_OK


def figure2_rows(steps):
    rows = []
    for k in range(steps + 1):
        g = k / steps
        p = w_params_equal(g)
        psi = w_state(p)
        fef_n, c = w_closed_forms(p)
        matrix_fef_n = normalized_fef(min(fef_two_qubit_exact(reduced_ab(psi)), 1.0))
        if abs(fef_n - matrix_fef_n) > 1e-9 or abs(c - concurrence_ab_c(psi)) > 1e-9:
            raise AssertionError(f"closed form and matrix path disagree at gamma={g}")
        sd = schmidt_ab_c(psi)
        rows.append((g, fef_n, sd.eta1**2 - sd.eta2**2))
    return rows


def cmd_sweep_fig2(args):
    _emit_csv(["gamma", "fef_n", "bound"], figure2_rows(args.steps), args.out)
    return EXIT_OK


def cmd_make_state(args):
    if args.kind == "rho-x":
        if args.x is None:
            raise CliError("--x is required for rho-x", EXIT_PARSE)
        rho = example_family_rho_x(args.x)
    elif args.kind == "p-plus":
        rho = max_entangled_projector(args.d)
    else:
        rho = maximally_mixed(args.d)
    text = statefile.dumps(rho) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(args.out, text)
    return EXIT_OK


def _steps(text):
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("steps must be >= 2")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fefbound", description="Fully entangled fraction bounds and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="fidelity, Ky Fan bound, exact two-qubit FEF")
    p.add_argument("state")
    p.add_argument("--oracle", action="store_true", help="also run the unitary-search oracle")
    p.add_argument("--restarts", type=_positive, default=32)
    p.add_argument("--iters", type=_positive, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--basis-seed", type=int, default=None,
                   help="evaluate in a randomly rotated generator basis")
    p.add_argument("--json", action="store_true", help="append a JSON line")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("advise", help="reduction criterion and filtering decision")
    p.add_argument("state")
    p.set_defaults(func=cmd_advise)

    p = sub.add_parser("oracle", help="numerical FEF lower bound")
    p.add_argument("state")
    p.add_argument("--restarts", type=_positive, default=32)
    p.add_argument("--iters", type=_positive, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep-fig1", help="CSV of F - 1/3 and bound - 1/3 for the qutrit family")
    p.add_argument("--steps", type=_steps, default=1000)
    p.add_argument("--out", default=None)
    p.add_argument("--family", choices=["fig1", "literal"], default="fig1",
                   help="fig1: operator matching the published curves; literal: normalized mixed family")
    p.set_defaults(func=cmd_sweep_fig1)

    p = sub.add_parser("sweep-fig2", help="CSV of F_N and sqrt(1 - C^2) along the W line alpha = beta")
    p.add_argument("--steps", type=_steps, default=1000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep_fig2)

    p = sub.add_parser("make-state", help="write a state file for a standard state")
    p.add_argument("kind", choices=["rho-x", "p-plus", "mixed"])
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_make_state)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except CliError as exc:
        print(f"fefbound: {exc}", file=sys.stderr)
        return exc.code
    except FefError as exc:
        print(f"fefbound: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"fefbound: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
