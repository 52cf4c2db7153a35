"""Command-line front end: ``oreq <command> ...``.

Exit status: 0 success, 1 a check failed (or a computation could not be
completed), 2 usage error.  Defaults may come from the environment
(``OREQ_RING``, ``OREQ_TRUNC``, ``OREQ_SEED``, ``OREQ_METHOD``,
``OREQ_TRIALS``); an explicit flag always wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .errors import ExprSyntaxError, OreError, ValidationError
from .expr import GRAMMAR, evaluate, evaluate_element, parse_expression, validate_ring_only
from .harness import LEMMA_IDS, lemma_suite, inject_delta_fault
from .orepoly import MINUS_INFINITY, coeff_at, mul_goodearl, mul_naive
from .oreseries import DEFAULT_TRUNC, detect_polynomial, quasi_inverse
from .qbinom import gauss_binom, qbinom_eval
from .rings import RingSpec, nildeg, tordeg
from .scalars import Scalar, parse_field

EPILOG = f"""expression grammar:
{GRAMMAR}

rings: QP:p,m,q  TRUNCQ:m  NILQ:p,m,q
environment: OREQ_RING, OREQ_TRUNC, OREQ_SEED, OREQ_METHOD, OREQ_TRIALS (flags take precedence)
exit status: 0 ok, 1 check failure, 2 usage error"""


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    ring: RingSpec | None
    trunc: int = DEFAULT_TRUNC
    seed: int = 0
    mode: str = "text"
    method: str = "both"
    guard: int | None = None
    trials: int = 20
    json_path: str | None = None

    @classmethod
    def from_args(cls, args) -> RunConfig:
        env = os.environ

        def pick(flag, var, default, conv=str):
            if flag is not None:
                return flag
            if var in env and env[var] != "":
                try:
                    return conv(env[var])
                except ValueError:
                    raise UsageError(f"bad value for {var}: {env[var]!r}") from None
            return default

        ring_text = pick(getattr(args, "ring", None), "OREQ_RING", None)
        try:
            ring = RingSpec.parse(ring_text) if ring_text else None
        except ValueError as e:
            raise UsageError(str(e)) from None
        cfg = cls(
            ring=ring,
            trunc=pick(getattr(args, "trunc", None), "OREQ_TRUNC", DEFAULT_TRUNC, int),
            seed=pick(getattr(args, "seed", None), "OREQ_SEED", 0, int),
            method=pick(getattr(args, "method", None), "OREQ_METHOD", "both"),
            guard=getattr(args, "guard", None),
            trials=pick(getattr(args, "trials", None), "OREQ_TRIALS", 20, int),
            json_path=getattr(args, "json", None),
        )
        cfg.mode = "json" if cfg.json_path is not None else "text"
        if cfg.method not in ("naive", "goodearl", "both"):
            raise UsageError(f"--method must be naive, goodearl or both, not {cfg.method!r}")
        if cfg.trunc < 1:
            raise UsageError("--trunc must be positive")
        if cfg.trials < 0:
            raise UsageError("--trials must be nonnegative")
        return cfg

    def context(self):
        if self.ring is None:
            raise UsageError("this command needs --ring (or OREQ_RING)")
        try:
            return self.ring.build()
        except ValueError as e:
            raise UsageError(str(e)) from None


def _common(p: argparse.ArgumentParser, ring=True):
    if ring:
        p.add_argument("--ring", help="base ring, e.g. QP:5,3,2, TRUNCQ:4, NILQ:5,4,2")
    p.add_argument("--json", nargs="?", const="-", metavar="PATH",
                   help="JSON output to PATH (stdout if PATH omitted)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oreq", description="Exact arithmetic in q-skew Ore extensions.",
                                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def cmd(name, help_):
        return sub.add_parser(name, help=help_, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)

    p = cmd("qbinom", "Gaussian binomial [n choose i]_t, or its value at q")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--q", dest="q_value", metavar="VALUE")
    p.add_argument("--field", default="Q", help="Q or GF:p (default Q)")
    _common(p, ring=False)

    p = cmd("mul", "product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--method", help="naive | goodearl | both (default both)")
    _common(p)

    p = cmd("expand", "normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--method", help="naive | goodearl | both (default both)")
    _common(p)

    p = cmd("coeff", "left coefficient of x^k")
    p.add_argument("expr")
    p.add_argument("k", type=int)
    p.add_argument("--method", help="naive | goodearl | both (default both)")
    _common(p)

    p = cmd("quasi-inverse", "quasi-inverse as a series truncated at x^T")
    p.add_argument("expr")
    p.add_argument("--trunc", type=int, help=f"truncation order T (default {DEFAULT_TRUNC})")
    p.add_argument("--guard", type=int, help="trailing zero coefficients needed to certify a polynomial (default T/2)")
    _common(p)

    for name in ("nildeg", "tordeg"):
        p = cmd(name, f"{name} of a base-ring element")
        p.add_argument("expr")
        _common(p)

    p = cmd("verify", "run the lemma verification suite")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--trunc", type=int)
    p.add_argument("--only", choices=LEMMA_IDS, metavar="LEMMA_ID", help=f"one of: {', '.join(LEMMA_IDS)}")
    p.add_argument("--timing", action="store_true", help="record millis (output then differs run to run)")
    p.add_argument("--inject-delta-fault", metavar="ROW,COL[,VALUE]", nargs="?", const="",
                   help="corrupt one entry of the delta matrix before verifying")
    _common(p)
    return parser


def _emit(cfg: RunConfig, record: dict, text: str, out):
    if cfg.mode == "json":
        payload = json.dumps(record, indent=2, sort_keys=False) + "\n"
        if cfg.json_path == "-":
            out.write(payload)
        else:
            with open(cfg.json_path, "w", encoding="utf-8") as fh:
                fh.write(payload)
            out.write(text)
    else:
        out.write(text)


def _record(command, cfg, passed, result, witnesses=()):
    return {
        "lemma_id": command,
        "ring": str(cfg.ring) if cfg.ring else None,
        "seed": cfg.seed,
        "trials": 1,
        "passed": passed,
        "witnesses": list(witnesses),
        "millis": None,
        "result": result,
    }


def _parse(src, ring_only=False):
    node = parse_expression(src)
    if ring_only:
        validate_ring_only(node)
    return node


def _evaluate_all(nodes, cfg, ctx):
    """Evaluate with the configured method(s); returns (polys, agree, per-method map)."""
    methods = ("naive", "goodearl") if cfg.method == "both" else (cfg.method,)
    results = {m: [evaluate(n, ctx, m) for n in nodes] for m in methods}
    first = results[methods[0]]
    agree = all(results[m] == first for m in methods)
    return first, agree, results


def _agreement_line(cfg, agree):
    if cfg.method != "both":
        return ""
    return "methods agree\n" if agree else "methods DISAGREE\n"


def cmd_qbinom(args, cfg, out):
    if args.q_value is None:
        g = gauss_binom(args.n, args.i)
        rec = _record("qbinom", cfg, True, str(g))
        rec["coeffs"] = list(g.coeffs)
        _emit(cfg, rec, f"{g}\n", out)
        return 0
    try:
        F = parse_field(args.field)
    except ValueError as e:
        raise UsageError(str(e)) from None
    q = Scalar.parse(args.q_value, F)
    v = qbinom_eval(args.n, args.i, q)
    _emit(cfg, _record("qbinom", cfg, True, str(v)), f"{v}\n", out)
    return 0


def cmd_mul(args, cfg, out):
    ctx = cfg.context()
    f_node, g_node = _parse(args.left), _parse(args.right)
    methods = ("naive", "goodearl") if cfg.method == "both" else (cfg.method,)
    mults = {"naive": mul_naive, "goodearl": mul_goodearl}
    products = {}
    for m in methods:
        f, g = evaluate(f_node, ctx, m), evaluate(g_node, ctx, m)
        products[m] = mults[m](f, g)
    first = products[methods[0]]
    agree = all(p == first for p in products.values())
    witnesses = [] if agree else [{m: str(p) for m, p in products.items()}]
    text = f"{first}\n" + _agreement_line(cfg, agree)
    _emit(cfg, _record("mul", cfg, agree, str(first), witnesses), text, out)
    return 0 if agree else 1


def cmd_expand(args, cfg, out):
    ctx = cfg.context()
    (f,), agree, res = _evaluate_all([_parse(args.expr)], cfg, ctx)
    witnesses = [] if agree else [{m: str(v[0]) for m, v in res.items()}]
    _emit(cfg, _record("expand", cfg, agree, str(f), witnesses), f"{f}\n" + _agreement_line(cfg, agree), out)
    return 0 if agree else 1


def cmd_coeff(args, cfg, out):
    ctx = cfg.context()
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    (f,), agree, res = _evaluate_all([_parse(args.expr)], cfg, ctx)
    c = coeff_at(f, args.k)
    witnesses = [] if agree else [{m: str(v[0]) for m, v in res.items()}]
    _emit(cfg, _record("coeff", cfg, agree, str(c), witnesses), f"{c}\n" + _agreement_line(cfg, agree), out)
    return 0 if agree else 1


def cmd_quasi_inverse(args, cfg, out):
    ctx = cfg.context()
    T = cfg.trunc
    guard = cfg.guard if cfg.guard is not None else T // 2
    if not 0 <= guard < T:
        raise UsageError(f"--guard must lie in [0, {T})")
    method = "goodearl" if cfg.method == "both" else cfg.method
    r = evaluate(_parse(args.expr), ctx, method)
    s = quasi_inverse(r, T)
    deg = detect_polynomial(s, guard)
    lines = []
    coeffs = []
    for k in range(T):
        c = s.coeff(k)
        if not c.is_zero():
            lines.append(f"x^{k}: {c}")
            coeffs.append({"power": k, "coeff": str(c)})
    if deg is None:
        verdict = f"not certified polynomial at order {T} (guard {guard})"
        degree = None
    else:
        degree = -1 if deg is MINUS_INFINITY else deg
        shown = "-inf" if deg is MINUS_INFINITY else str(deg)
        verdict = f"certified polynomial of degree {shown} to order {T} (guard {guard})"
    text = "\n".join(lines + [verdict]) + "\n"
    rec = _record("quasi-inverse", cfg, True, str(s))
    rec.update(trunc=T, guard=guard, coefficients=coeffs, certified=deg is not None,
               degree=None if deg is None else (None if deg is MINUS_INFINITY else degree))
    _emit(cfg, rec, text, out)
    return 0


def cmd_degree(args, cfg, out, which):
    ctx = cfg.context()
    a = evaluate_element(_parse(args.expr, ring_only=True), ctx)
    v = nildeg(ctx, a) if which == "nildeg" else tordeg(ctx, a)
    _emit(cfg, _record(which, cfg, True, v), f"{v}\n", out)
    return 0


def cmd_verify(args, cfg, out):
    ctx = cfg.context()
    if args.inject_delta_fault is not None:
        spec = args.inject_delta_fault.strip()
        if spec:
            try:
                parts = [int(x) for x in spec.split(",")]
            except ValueError:
                raise UsageError("--inject-delta-fault expects ROW,COL[,VALUE]") from None
            if len(parts) not in (2, 3) or not all(0 <= x < ctx.dim for x in parts[:2]):
                raise UsageError("--inject-delta-fault expects ROW,COL[,VALUE] within the basis")
            ctx = inject_delta_fault(ctx, parts[0], parts[1], parts[2] if len(parts) == 3 else None)
        else:
            ctx = inject_delta_fault(ctx)
    suite = lemma_suite(ctx, seed=cfg.seed, trials=cfg.trials, only=args.only, trunc=cfg.trunc,
                        timing=args.timing)
    lines = [f"ring {ctx.name}  seed {cfg.seed}  trials {cfg.trials}"]
    width = max(len(r.lemma_id) for r in suite.reports)
    for r in suite.reports:
        line = f"{r.status.upper():4} {r.lemma_id:<{width}}  checks {r.trials}"
        if args.timing and r.millis is not None:
            line += f"  {r.millis} ms"
        if r.note:
            line += f"  [{r.note}]"
        lines.append(line)
        for w in r.witnesses:
            lines.append("       witness: " + " ".join(f"{k}={v}" for k, v in w.items()))
    n_fail = sum(r.passed is False for r in suite.reports)
    n_pass = sum(r.passed is True for r in suite.reports)
    n_skip = sum(r.passed is None for r in suite.reports)
    lines.append(f"result: {'PASS' if suite.passed else 'FAIL'} ({n_pass} passed, {n_fail} failed, {n_skip} skipped)")
    text = "\n".join(lines) + "\n"
    record = [r.to_dict() for r in suite.reports]
    _emit(cfg, record, text, out)
    return suite.exit_status


COMMANDS = {
    "qbinom": cmd_qbinom,
    "mul": cmd_mul,
    "expand": cmd_expand,
    "coeff": cmd_coeff,
    "quasi-inverse": cmd_quasi_inverse,
    "nildeg": lambda a, c, o: cmd_degree(a, c, o, "nildeg"),
    "tordeg": lambda a, c, o: cmd_degree(a, c, o, "tordeg"),
    "verify": cmd_verify,
}


def dispatch(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](args, cfg, out)
    except (UsageError, ExprSyntaxError, ValidationError) as e:
        err.write(f"oreq {args.command}: error: {e}\n\n{EPILOG}\n")
        return 2
    except OreError as e:
        err.write(f"oreq {args.command}: {type(e).__name__}: {e}\n")
        return 1


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
