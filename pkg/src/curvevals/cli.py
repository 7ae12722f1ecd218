"""Command line front end: ``curvevals {analyze,dual,poincare,strata}``.

Exit codes: 0 success, 2 input error, 3 computation error, 4 invariant
violation.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .curve import LiftError
from .ideal import dual_direct
from .io import InputError, curve_from_json, ideal_from_json, load_json, plan_from_json
from .lattice import symmetric_dual
from .logres import InvariantViolation, curve_report
from .poincare import poincare_of_values, poincare_symmetry_check
from .stdbasis import AlgorithmError
from .series import INF, IndeterminateOrderError, TruncationError

log = logging.getLogger("curvevals")

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE, EXIT_INVARIANT = 0, 2, 3, 4


@dataclass
class JobConfig:
    command: str
    input: str
    output_format: str = "json"
    truncation: int | None = None
    verify: str = "cross-check"
    seed: int = 0
    dmax: int | None = None
    threads: int = 1
    ideal: str | None = None


def _load_curve(cfg: JobConfig):
    data = load_json(cfg.input)
    curve_data = data.get("curve", data) if isinstance(data, dict) else data
    curve = curve_from_json(curve_data, cfg.truncation)
    if cfg.truncation is not None and any(b.trunc != INF for b in curve.branches):
        bound = 2 * max(curve.gamma) + 8
        if cfg.truncation < bound:
            log.warning("--truncation %d is below the automatic bound %d; using it as forced", cfg.truncation, bound)
    return data, curve


def _ideal_spec(cfg: JobConfig, data):
    if cfg.ideal is not None:
        try:
            return json.loads(cfg.ideal)
        except json.JSONDecodeError:
            return cfg.ideal
    if isinstance(data, dict) and "ideal" in data:
        return data["ideal"]
    return "O_D"


def cmd_analyze(cfg: JobConfig) -> dict:
    _, curve = _load_curve(cfg)
    return curve_report(curve, cfg.verify, cfg.dmax)


def cmd_dual(cfg: JobConfig) -> dict:
    data, curve = _load_curve(cfg)
    I = ideal_from_json(_ideal_spec(cfg, data), curve)
    D = symmetric_dual(I.values, curve.gamma)
    out = {
        "ideal": I.name,
        "gamma": list(curve.gamma),
        "val_I": I.values.to_json(),
        "val_dual": D.to_json(),
        "checks": {},
        "caveats": [] if curve.gorenstein_certified else ["Gorenstein property assumed, not verified"],
    }
    if cfg.verify != "none":
        direct = dual_direct(I)
        ok = direct.values.same_as(D)
        out["checks"]["dual_direct_agrees"] = ok
        if not ok:
            if curve.gorenstein_certified:
                raise InvariantViolation("symmetric dual values differ from the direct dual")
            out["caveats"].append("direct dual differs: the curve is not Gorenstein")
        if cfg.verify == "full":
            back = symmetric_dual(D, curve.gamma)
            out["checks"]["double_dual"] = back.same_as(I.values)
    return out


def cmd_poincare(cfg: JobConfig) -> dict:
    data, curve = _load_curve(cfg)
    I = ideal_from_json(_ideal_spec(cfg, data), curve)
    rep = poincare_symmetry_check(I)
    out = {
        "ideal": I.name,
        "p": curve.p,
        "gamma": list(curve.gamma),
        "P": rep.P.to_json(),
        "P_text": str(rep.P),
        "P_dual": rep.P_dual.to_json(),
        "P_dual_text": str(rep.P_dual),
        "sign": 1 if curve.p % 2 else -1,
        "symmetric": rep.ok,
        "checks": {},
        "caveats": [] if curve.gorenstein_certified else ["Gorenstein property assumed, not verified"],
    }
    if not rep.ok and curve.gorenstein_certified:
        raise InvariantViolation("Poincaré symmetry fails")
    if cfg.verify != "none":
        direct = dual_direct(I)
        ok = poincare_of_values(direct.values) == rep.P_dual
        out["checks"]["direct_dual_poincare"] = ok
        if not ok:
            if curve.gorenstein_certified:
                raise InvariantViolation("Poincaré polynomial of the direct dual differs")
            out["caveats"].append("direct dual differs: the curve is not Gorenstein")
    return out


def cmd_strata(cfg: JobConfig) -> dict:
    from .strata import markdown_table, scan_strata

    data = load_json(cfg.input)
    F, points, seeds = plan_from_json(data, cfg.seed)
    res = scan_strata(F, points, cfg.truncation, seeds, cfg.dmax, cfg.threads)
    if cfg.verify != "none":
        for s in res.samples:
            if any(f.startswith("tau mismatch") or f.startswith("mu mismatch") for f in s.flags):
                raise InvariantViolation(f"sample {s.point}: {s.flags}")
    out = res.to_json()
    out["markdown"] = markdown_table(res)
    return out


COMMANDS = {"analyze": cmd_analyze, "dual": cmd_dual, "poincare": cmd_poincare, "strata": cmd_strata}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvevals", description="Values of fractional ideals of curve singularities.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", "-i", required=True, help="JSON input file")
        sp.add_argument("--output-format", choices=("json", "markdown"), default="json")
        sp.add_argument("--truncation", type=int, default=None, help="branch precision t^N")
        sp.add_argument("--verify", choices=("none", "cross-check", "full"), default="cross-check")
        sp.add_argument("--seed", type=int, default=0, help="seed for random sample plans")
        sp.add_argument("--dmax", type=int, default=None, help="degree cap for the direct Tjurina/Milnor numbers")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--log-level", default="WARNING")
        if name in ("dual", "poincare"):
            sp.add_argument("--ideal", default=None, help="preset name or JSON ideal spec")
    return ap


def _markdown(command: str, out: dict) -> str:
    if command == "strata":
        return out["markdown"]
    lines = ["| field | value |", "|---|---|"]
    for k, v in out.items():
        if isinstance(v, dict) and "box" in v:
            v = f"lambda={v['lambda']} nu={v['nu']} ({len(v['box'])} box points)"
        elif isinstance(v, dict) and "terms" in v:
            continue
        lines.append(f"| {k} | {v} |")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING))
    cfg = JobConfig(
        command=args.command,
        input=args.input,
        output_format=args.output_format,
        truncation=args.truncation,
        verify=args.verify,
        seed=args.seed,
        dmax=args.dmax,
        threads=args.threads,
        ideal=getattr(args, "ideal", None),
    )
    if cfg.truncation is not None and cfg.truncation < 1:
        print("error: --truncation must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        out = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (TruncationError, IndeterminateOrderError) as exc:
        print(f"computation error ({cfg.command}): {exc}; raise --truncation", file=sys.stderr)
        return EXIT_COMPUTE
    except (LiftError, ValueError, ArithmeticError, AlgorithmError) as exc:
        print(f"computation error ({cfg.command}): {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if cfg.output_format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(_markdown(cfg.command, out), end="")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
