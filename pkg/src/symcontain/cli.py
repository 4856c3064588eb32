"""Command-line interface.

Exit codes: 0 on success (``decide`` reports the verdict in its output, never
through the exit code), 2 on invalid input, 3 when a verification cell fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import combinat, decide, oracle
from .configs import ConfigError, load_config
from .exactalg import format_rational
from .polyring import basis_poly, render

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3

# bounds used by `verify --claim all`; sized for a few seconds per claim
ALL_BOUNDS = {
    "basis_sym": oracle.Bounds(max_degree=10, m_max=3),
    "basis_pow": oracle.Bounds(max_degree=10, r_max=3),
    "containment": oracle.Bounds(max_degree=10, m_max=4, r_max=3),
    "ac_sympow_split": oracle.Bounds(max_degree=12, t_max=2),
    "nci_split_even": oracle.Bounds(max_degree=10, m_max=6),
    "nci_split_odd": oracle.Bounds(max_degree=10, m_max=4),
    "nci_sym_I_product": oracle.Bounds(max_degree=10, m_max=3),
    "madic_1": oracle.Bounds(max_degree=10, r_max=2),
    "madic_2": oracle.Bounds(max_degree=10, t_max=2, m_max=2),
    "alpha": oracle.Bounds(m_max=5, r_max=5),
}

_KIND_ONLY = {"ac_sympow_split": "ac", "nci_split_even": "nci", "nci_split_odd": "nci",
              "nci_sym_I_product": "nci"}


def dumps(doc) -> str:
    """Canonical JSON text (sorted keys, newline-terminated)."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(args, doc, human: str) -> None:
    sys.stdout.write(dumps(doc) if args.json else human.rstrip("\n") + "\n")


def _caveat(cfg) -> None:
    if cfg.kind == "nci" and cfg.n == 1:
        print("note: nearly complete intersections with n = 1 are evaluated for completeness; "
              "the containment results are of main interest for n > 1", file=sys.stderr)


def _ideal_arg(args):
    if getattr(args, "symbolic", None) is not None:
        return ("symbolic", args.symbolic)
    if getattr(args, "power", None) is not None:
        return ("power", args.power)
    return None


def cmd_decide(args, cfg) -> int:
    method = {"closed-form": "closed_form", "lattice": "lattice_witness",
              "oracle": "oracle"}[args.method]
    v = decide.contains(cfg, args.m, args.r, method=method, max_degree=args.max_degree)
    doc = v.to_json(cfg)
    rel = "is contained in" if v.contained else "is NOT contained in"
    human = f"I^({v.m}) {rel} I^{v.r}  [{v.method}; threshold {format_rational(v.threshold)}]"
    if v.witness is not None:
        human += f"\nwitness {tuple(v.witness)} = {render(basis_poly(cfg, v.witness))}"
    if v.max_degree is not None:
        human += f"\nchecked graded pieces up to degree {v.max_degree}"
    _emit(args, doc, human)
    return EXIT_OK


def cmd_resurgence(args, cfg) -> int:
    rho = decide.resurgence(cfg)
    doc = {"cfg": cfg.to_json(), "resurgence": format_rational(rho)}
    human = format_rational(rho)
    if args.estimate is not None:
        q, m, r = decide.resurgence_estimate(cfg, args.estimate, with_pair=True)
        doc["estimate"] = {"N": args.estimate, "value": format_rational(q), "m": m, "r": r}
        human += f"\nestimate over 1 <= m, r <= {args.estimate}: {format_rational(q)} (m={m}, r={r})"
    _emit(args, doc, human)
    return EXIT_OK


def cmd_alpha(args, cfg) -> int:
    ideal = _ideal_arg(args)
    value = decide.alpha(cfg, ideal)
    kind, k = ideal
    doc = {"cfg": cfg.to_json(), "ideal": kind, "k": k, "alpha": value}
    name = f"I^({k})" if kind == "symbolic" else f"I^{k}"
    human = f"alpha({name}) = {value}"
    if args.oracle:
        spec = oracle.Symbolic(k) if kind == "symbolic" else oracle.Power(k)
        got = oracle.alpha_oracle(cfg, spec, limit=value + 1)
        doc["oracle"] = got
        human += f"  (oracle: {got})"
    _emit(args, doc, human)
    return EXIT_OK


def cmd_basis(args, cfg) -> int:
    ideal = _ideal_arg(args)
    elems = combinat.enumerate_basis(cfg, args.degree, ideal)
    label = "all" if ideal is None else f"{ideal[0]} {ideal[1]}"
    doc = {"cfg": cfg.to_json(), "degree": args.degree, "filter": label,
           "count": len(elems), "elements": [e.to_json(cfg) for e in elems]}
    lines = [f"{len(elems)} basis elements of degree {args.degree} ({label})"]
    lines += [f"  {tuple(e)}  {render(basis_poly(cfg, e))}" for e in elems]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    if args.claim == "all":
        claims = [c for c in oracle.CLAIMS if _KIND_ONLY.get(c, cfg.kind) == cfg.kind]
    else:
        claims = [args.claim]
    reports = []
    for claim in claims:
        if args.claim == "all":
            bounds = ALL_BOUNDS[claim]
        else:
            base = oracle.Bounds()
            bounds = oracle.Bounds(
                max_degree=args.max_degree,
                m_max=args.m_max if args.m_max is not None else base.m_max,
                r_max=args.r_max if args.r_max is not None else base.r_max,
                t_max=args.t_max if args.t_max is not None else base.t_max,
            )
        reports.append(oracle.verify_claim(cfg, claim, bounds, jobs=args.jobs))
    ok = all(r.all_pass for r in reports)
    if len(reports) == 1:
        doc = reports[0].to_json()
    else:
        doc = {"cfg": cfg.to_json(), "reports": [r.to_json() for r in reports], "all_pass": ok}
    lines = []
    for r in reports:
        status = "PASS" if r.all_pass else "FAIL"
        lines.append(f"{status} {r.claim}: {len(r.cells) - len(r.failures())}/{len(r.cells)} cells "
                     f"(degrees <= {r.max_degree})")
        for c in r.failures():
            lines.append(f"    {c.params} d={c.d}: {c.detail}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcontain",
        description="Symbolic versus ordinary powers for almost collinear points "
                    "and nearly complete intersections in P^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="configuration JSON file")
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("decide", help="decide whether I^(m) is contained in I^r")
    common(p)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--method", choices=("closed-form", "lattice", "oracle"), default="closed-form")
    p.add_argument("--max-degree", type=_nonneg, default=None,
                   help="degree bound for --method oracle")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("resurgence", help="exact resurgence, optionally a finite-box estimate")
    common(p)
    p.add_argument("--estimate", type=int, metavar="N", default=None)
    p.set_defaults(func=cmd_resurgence)

    p = sub.add_parser("alpha", help="initial degree of I^(m) or I^r")
    common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", dest="symbolic", type=_positive)
    g.add_argument("--r", dest="power", type=_positive)
    p.add_argument("--oracle", action="store_true", help="also compute it by linear algebra")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("basis", help="list adapted basis elements of one degree")
    common(p)
    p.add_argument("--degree", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--symbolic", type=_positive, metavar="M")
    g.add_argument("--power", type=_positive, metavar="R")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="check a claim against the brute-force oracle")
    common(p)
    p.add_argument("--claim", required=True, choices=oracle.CLAIMS + ("all",))
    p.add_argument("--m-max", type=_positive, default=None)
    p.add_argument("--r-max", type=_positive, default=None)
    p.add_argument("--t-max", type=_positive, default=None)
    p.add_argument("--max-degree", type=_nonneg, default=None)
    p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ConfigError) as exc:
        print(f"symcontain: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _caveat(cfg)
    try:
        return args.func(args, cfg)
    except ValueError as exc:
        print(f"symcontain: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
