"""Command-line entry point: h2moduli <command> [...] prints a JSON report.

Complex numbers are [re, im], infinity is "inf", matrices are row-major.
Exit status: 0 pass, 1 verification failure, 2 usage / input error.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from fractions import Fraction

import numpy as np

from . import flat, gamma, hyperelliptic as he, symplectic, theta as th

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# JSON helpers

def encode(x):
    if isinstance(x, symplectic.IntMat4):
        return x.tolist()
    if isinstance(x, flat.GaussQ):
        return [_num(x.real), _num(x.imag)]
    if isinstance(x, Fraction):
        return _num(x)
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, np.ndarray):
        return [encode(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


def _num(f):
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_json(text: str):
    """json.loads, also accepting bare inf / ∞ tokens."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        fixed = re.sub(r'(?<!")(∞|[-+]?\binf(inity)?\b)(?!")', '"inf"', text, flags=re.I)
        try:
            return json.loads(fixed)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON {text!r}: {exc}") from None


def decode_complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise UsageError(f"complex numbers are [re, im], got {x!r}")
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, str):
        return complex(x.replace(" ", "").replace("i", "j"))
    return complex(x)


def decode_point(x):
    if isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "∞"):
        return math.inf
    return decode_complex(x)


def decode_matrix(x) -> np.ndarray:
    return np.array([[decode_complex(v) for v in row] for row in x], dtype=complex)


def decode_gauss(x):
    if isinstance(x, (list, tuple)):
        return flat.GaussQ(Fraction(str(x[0])), Fraction(str(x[1])))
    return flat.GaussQ(Fraction(str(x)), 0)


# commands

def cmd_group_verify(args):
    details = {}
    failed = []
    ids = gamma.exact_identities()
    details["identities"] = ids
    failed += [k for k, ok in ids.items() if not ok]
    gen = gamma.verify_generation()
    details["generation"] = {
        "corrected": gen["corrected"],
        "elementary_words": gen["elementary_words"],
        "all_elementary_generated": gen["all_elementary_generated"],
        "memberships": gen["memberships"],
    }
    if not gen["all_elementary_generated"]:
        failed.append("elementary generation")
    orb = gamma.orbit_summary()
    details["orbits"] = orb
    if not (orb["O1_matches"] and orb["O2_matches"] and orb["orbit_with_U_size"] == 15):
        failed.append("orbits")
    cert = gamma.membership_certificate()
    details["certificate"] = cert
    if cert != {"order_sp4_f2": 720, "order_gamma_mod2": 120, "index": 6, "gamma_equals_o1_stabilizer": True}:
        failed.append("index six")
    reps = {tag: gamma.coset_of(m).tag for tag, m in gamma.COSET_REPRESENTATIVES.items()}
    if list(reps) != list(reps.values()):
        failed.append("coset representatives")
    try:
        details["coset_table"] = gamma.verify_coset_table()
    except gamma.VerificationError as exc:
        failed.append(f"coset table: {exc}")
    checked = 0
    try:
        for l in range(-3, 4):
            for m in range(-3, 4):
                for n in range(-3, 4):
                    gamma.factor_txy(l, m, n)
                    checked += 1
    except gamma.VerificationError as exc:
        failed.append(f"T^m X^l Y^n factorization: {exc}")
    details["factorizations_checked"] = checked
    details["failed"] = failed
    return not failed, details


def cmd_group_orbits(args):
    orb = gamma.orbit_summary()
    return orb["O1_matches"] and orb["O2_matches"] and orb["orbit_with_U_size"] == 15, orb


def _matrix_arg(text) -> symplectic.IntMat4:
    data = parse_json(text)
    if isinstance(data, str):
        return symplectic.word_matrix(data, {**gamma.SP4_GENERATORS, "P": symplectic.T_PRIME})
    return symplectic.IntMat4(data)


def cmd_group_member(args):
    m = _matrix_arg(args.matrix)
    if not symplectic.is_symplectic(m):
        raise UsageError("matrix is not symplectic")
    label = gamma.coset_of(m)
    return True, {"matrix": m, "in_gamma": gamma.gamma_member(m), "coset": label.tag}


def cmd_group_cosets(args):
    try:
        table = gamma.verify_coset_table()
        return True, {"columns": gamma.COSET_TAGS, "table": table}
    except gamma.VerificationError as exc:
        return False, {"failed": str(exc), "table": gamma.coset_table()}


def cmd_group_factor(args):
    shown, built, word = gamma.factor_txy(args.l, args.m, args.n)
    return True, {"gamma": shown, "word": word, "in_gamma": gamma.gamma_member(built)}


def _theta_inputs(args):
    sigma = th.SiegelPoint(decode_matrix(parse_json(args.sigma)))
    g = sigma.g
    z = np.array([decode_complex(v) for v in parse_json(args.z)], dtype=complex) if args.z else np.zeros(g, complex)
    eps = parse_json(args.eps) if args.eps else [0] * g
    epsp = parse_json(args.eps_prime) if args.eps_prime else [0] * g
    return th.ThetaCharacteristic(eps, epsp), z, sigma


def cmd_theta_eval(args):
    chr_, z, sigma = _theta_inputs(args)
    return True, {"value": th.theta(chr_, z, sigma, args.tol), "characteristic": [chr_.eps, chr_.eps_prime]}


def cmd_theta_check(args):
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(args.samples):
        g = 2
        a = rng.normal(size=(g, g))
        Y = a @ a.T + 0.5 * np.eye(g)
        Xr = rng.uniform(-1, 1, size=(g, g))
        sigma = th.SiegelPoint(0.5 * (Xr + Xr.T) + 1j * Y)
        z = rng.uniform(-1, 1, g) + 1j * rng.uniform(-1, 1, g)
        eps = rng.integers(0, 2, g)
        epsp = rng.integers(0, 2, g)
        k = int(rng.integers(0, g))
        res = th.quasiperiodicity_residuals(th.ThetaCharacteristic(eps, epsp), z, sigma, k, tol=args.tol)
        worst = max(worst, float(res.max()))
    return worst < 1e-10, {"samples": args.samples, "worst_residual": worst, "threshold": 1e-10}


def _lambdas_arg(text) -> he.BranchConfig:
    data = parse_json(text)
    if not isinstance(data, list):
        raise UsageError("--lambdas must be a JSON list")
    try:
        return he.BranchConfig(tuple(decode_point(x) for x in data))
    except he.BranchConfigError as exc:
        raise UsageError(str(exc)) from None


def cmd_periods(args):
    cfg = _lambdas_arg(args.lambdas)
    pd = he.period_matrix(cfg, args.tol)
    return True, {
        "lambdas": cfg.to_json(),
        "Pi": pd.matrix,
        "A": pd.A,
        "B": pd.B,
        "symmetry_defect": pd.symmetry_defect,
        "half_periods": [hp.value for hp in he.half_periods(pd)],
    }


def cmd_recover(args):
    pi = decode_matrix(parse_json(args.pi))
    from .estimators import _period_data

    pd = _period_data(pi)
    cfg = he.recover_all(pd)
    return True, {"lambdas": cfg.to_json()}


def cmd_roundtrip(args):
    cfg = _lambdas_arg(args.lambdas)
    pd = he.period_matrix(cfg, args.tol)
    rec = he.recover_all(pd)
    err = max(abs(a - b) for a, b in zip(rec.finite, cfg.finite))
    return err < args.threshold, {
        "lambdas": cfg.to_json(),
        "recovered": rec.to_json(),
        "Pi": pd.matrix,
        "max_error": err,
        "threshold": args.threshold,
    }


def _chain_arg(text):
    data = parse_json(text)
    if not isinstance(data, list) or len(data) != 4:
        raise UsageError("--chain needs four [re, im] pairs")
    try:
        return flat.ParallelogramChain(*(decode_gauss(x) for x in data))
    except flat.ChainError as exc:
        raise _Fail(str(exc)) from None


class _Fail(Exception):
    pass


def _surface_details(chain):
    return {
        "chain": list(chain.z),
        "area": chain.area(),
        "weierstrass_points": [{"label": w.label, "piece": w.piece, "coordinate": w.coordinate}
                               for w in flat.weierstrass_points(chain)],
    }


def cmd_surface_build(args):
    chain = _chain_arg(args.chain)
    return True, _surface_details(chain)


def cmd_surface_move(args):
    chain = _chain_arg(args.chain)
    d = flat.Decomposition.start(chain)
    for i, mv in enumerate(flat.parse_moves(args.word)):
        nd = flat.apply_move(d, mv)
        if isinstance(nd, flat.NotRealizable):
            return False, {"failed_at": i, "move": mv, "condition": nd.condition, "value": float(nd.value),
                           "chain": list(d.chain.z)}
        d = nd
    details = _surface_details(d.chain)
    details.update({"word": list(d.word), "frame": d.frame, "period_vector": list(flat.period_vector(d)),
                    "in_gamma": gamma.gamma_member(d.frame)})
    return True, details


def cmd_surface_verify(args):
    chain = _chain_arg(args.chain)
    rep = flat.verify_move_matrices(chain, args.word)
    return rep.ok, {"moves": rep.moves, "product": rep.product, "failed_at": rep.failed_at, "reason": rep.reason,
                    "area_preserved": rep.area_preserved, "in_gamma": rep.in_gamma}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS)

    p = _Parser(prog="h2moduli", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    grp = sub.add_parser("group", parents=[common]).add_subparsers(dest="action", required=True, parser_class=_Parser)
    grp.add_parser("verify", parents=[common]).set_defaults(func=cmd_group_verify)
    grp.add_parser("orbits", parents=[common]).set_defaults(func=cmd_group_orbits)
    m = grp.add_parser("member", parents=[common])
    m.add_argument("matrix", help="4x4 JSON matrix or a quoted word such as '\"TSU\"'")
    m.set_defaults(func=cmd_group_member)
    grp.add_parser("cosets", parents=[common]).set_defaults(func=cmd_group_cosets)
    f = grp.add_parser("factor", parents=[common])
    for name in ("l", "m", "n"):
        f.add_argument(f"-{name}", type=int, default=0)
    f.set_defaults(func=cmd_group_factor)

    tht = sub.add_parser("theta", parents=[common]).add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = tht.add_parser("eval", parents=[common])
    e.add_argument("--eps")
    e.add_argument("--eps-prime")
    e.add_argument("--z")
    e.add_argument("--sigma", required=True)
    e.set_defaults(func=cmd_theta_eval, default_tol=1e-12)
    c = tht.add_parser("check", parents=[common])
    c.add_argument("--samples", type=int, default=200)
    c.set_defaults(func=cmd_theta_check, default_tol=1e-12)

    for name, func in (("periods", cmd_periods), ("roundtrip", cmd_roundtrip)):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("--lambdas", required=True)
        q.set_defaults(func=func, default_tol=1e-13)
        if name == "roundtrip":
            q.add_argument("--threshold", type=float, default=1e-6)
    r = sub.add_parser("recover", parents=[common])
    r.add_argument("--pi", required=True)
    r.set_defaults(func=cmd_recover)

    srf = sub.add_parser("surface", parents=[common]).add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = srf.add_parser("build", parents=[common])
    b.add_argument("--chain", required=True)
    b.set_defaults(func=cmd_surface_build)
    for name, func in (("move", cmd_surface_move), ("verify", cmd_surface_verify)):
        q = srf.add_parser(name, parents=[common])
        q.add_argument("--chain", default="[[1,0],[0,1],[-1,0],[0,-1]]")
        q.add_argument("--word", required=True)
        q.set_defaults(func=func)
    return p


def run(argv=None) -> tuple[dict, int]:
    started = time.perf_counter()
    command = "" if argv is None else " ".join(argv)
    try:
        args = build_parser().parse_args(argv)
        command = " ".join(filter(None, [args.command, getattr(args, "action", None)]))
        args.tol = getattr(args, "tol", getattr(args, "default_tol", 1e-13))
        args.seed = getattr(args, "seed", 0)
        args.quiet = getattr(args, "quiet", False)
        args.output = getattr(args, "output", None)
        ok, details = args.func(args)
        status, code = ("pass", EXIT_PASS) if ok else ("fail", EXIT_FAIL)
    except UsageError as exc:
        return {"command": command, "status": "error", "details": {"error": str(exc)},
                "timings": {"seconds": time.perf_counter() - started}}, EXIT_USAGE
    except (_Fail, gamma.VerificationError, he.PeriodMatrixError, he.QuadratureError,
            he.DegenerateIndexError, th.ThetaTruncationError) as exc:
        ok, details, status, code = False, {"error": str(exc)}, "fail", EXIT_FAIL
    except (ValueError, TypeError) as exc:
        return {"command": command, "status": "error", "details": {"error": str(exc)},
                "timings": {"seconds": time.perf_counter() - started}}, EXIT_USAGE
    report = {"command": command, "status": status, "details": encode(details),
              "timings": {"seconds": time.perf_counter() - started}}
    report["_args"] = args
    return report, code


def main(argv=None) -> int:
    report, code = run(sys.argv[1:] if argv is None else argv)
    args = report.pop("_args", None)
    text = json.dumps(report, indent=None if args is not None and args.quiet else 2, ensure_ascii=False)
    if args is not None and args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args is None or not args.quiet or args.output is None:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
