"""Command-line front end.

    wild-mckay motive --p 3 --m 2 --a 2 --rep 3:1
    wild-mckay invariants --p 3 --m 2 --a 2 --rep 3:0 --rep 3:0 --json

Exit status is 0 on success, 1 when the input is well formed but violates a
mathematical precondition, and 2 when it cannot be parsed at all.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .errors import WildMcKayError
from .group import MetacyclicGroup, gamma_reduction, new_group
from .invariants import classify_singularities, crepant_euler, invariant_report
from .moduli import count_extensions, enumerate_jumps, stratum_info, window
from .motive import euler_from_motive, euler_number, stringy_motive, window_exponents
from .polynomial import PuiseuxPoly, RationalExpr
from .representation import Representation, age
from .selftest import run_selftest
from .vfunction import v_rep

WINDOW_ENV = "WILD_MCKAY_WINDOW_MULT"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MALFORMED = 2

COMMANDS = ("group", "vfn", "dim", "motive", "euler", "count", "invariants", "classify", "selftest")
_INT_KEYS = ("p", "m", "a", "gamma", "r", "q", "bound", "window_multiplier")


class MalformedInput(Exception):
    """Input that cannot be turned into a job at all."""


@dataclass
class JobConfig:
    p: int | None = None
    m: int | None = None
    a: int | None = None
    representation: list[list[int]] = field(default_factory=list)
    gamma: int | None = None
    r: int | None = None
    q: int | None = None
    bound: int | None = None
    window_multiplier: int = 1

    def echo(self) -> dict[str, Any]:
        out: dict[str, Any] = {"p": self.p, "m": self.m, "a": self.a}
        if self.representation:
            out["representation"] = self.representation
        for key in ("gamma", "r", "q", "bound"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        out["window_multiplier"] = self.window_multiplier
        return out


def parse_rep(text: str) -> list[int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise MalformedInput(f"representation summand {text!r} is not of the form d:s")
    try:
        return [int(parts[0]), int(parts[1])]
    except ValueError:
        raise MalformedInput(f"representation summand {text!r} has non-integer parts") from None


def _as_int(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput(f"config value {key}={value!r} is not an integer")
    return value


def load_config(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read config {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedInput(f"config {path} must hold a JSON object")
    unknown = set(data) - set(_INT_KEYS) - {"representation"}
    if unknown:
        raise MalformedInput(f"unknown config keys: {', '.join(sorted(unknown))}")
    out: dict[str, Any] = {}
    for key in _INT_KEYS:
        if key in data:
            out[key] = _as_int(key, data[key])
    if "representation" in data:
        rep = data["representation"]
        if not isinstance(rep, list):
            raise MalformedInput("config representation must be a list of [d, s] pairs")
        pairs = []
        for item in rep:
            if isinstance(item, str):
                pairs.append(parse_rep(item))
            elif isinstance(item, list) and len(item) == 2:
                pairs.append([_as_int("d", item[0]), _as_int("s", item[1])])
            else:
                raise MalformedInput(f"representation entry {item!r} is not a [d, s] pair")
        out["representation"] = pairs
    return out


def _env_window() -> int:
    raw = os.environ.get(WINDOW_ENV)
    if raw is None or raw == "":
        return 1
    try:
        return int(raw)
    except ValueError:
        raise MalformedInput(f"{WINDOW_ENV}={raw!r} is not an integer") from None


def build_config(args: argparse.Namespace) -> JobConfig:
    """Merge defaults, environment, config file and flags (later wins)."""
    merged: dict[str, Any] = {"window_multiplier": _env_window()}
    if args.config:
        merged.update(load_config(args.config))
    for key in _INT_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if args.rep:
        merged["representation"] = [parse_rep(x) for x in args.rep]
    cfg = JobConfig(**merged)
    if cfg.window_multiplier < 1:
        raise MalformedInput(f"window multiplier {cfg.window_multiplier} must be >= 1")
    return cfg


def _fraction(x: Fraction | int) -> str:
    return str(Fraction(x))


def _motive_json(value: PuiseuxPoly | RationalExpr | None) -> Any:
    if value is None:
        return None
    if isinstance(value, RationalExpr):
        return {"text": str(value), "rational": value.to_json()}
    return {"text": str(value), "terms": value.to_json()}


def _need(cfg: JobConfig, *keys: str) -> None:
    missing = [k for k in keys if getattr(cfg, k) is None]
    if missing:
        raise MalformedInput(f"missing required parameter(s): {', '.join(missing)}")


def _group(cfg: JobConfig) -> MetacyclicGroup:
    _need(cfg, "p", "m", "a")
    return new_group(cfg.p, cfg.m, cfg.a)


def _rep(cfg: JobConfig, G: MetacyclicGroup) -> Representation:
    if not cfg.representation:
        raise MalformedInput("a representation is required (--rep d:s, repeatable)")
    return Representation.from_pairs(cfg.representation, G)


def _gammas(cfg: JobConfig, G: MetacyclicGroup) -> list[int]:
    if cfg.gamma is None:
        return list(range(G.m))
    if not 0 <= cfg.gamma < G.m:
        raise WildMcKayError(f"gamma={cfg.gamma} must lie in 0..{G.m - 1}")
    return [cfg.gamma]


def _jumps(cfg: JobConfig, G: MetacyclicGroup, gamma: int) -> list[int]:
    if cfg.r is not None:
        return [cfg.r]
    if cfg.bound is not None:
        return enumerate_jumps(G, gamma, cfg.bound)
    return window(G, gamma)


# each handler returns (result document, text lines)
Handler = Callable[[JobConfig], tuple[dict[str, Any], list[str]]]


def cmd_group(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    info = G.describe()
    gammas = []
    for gamma in range(G.m):
        gd = gamma_reduction(G, gamma)
        gammas.append({"gamma": gamma, "gcd": gd.g, "m_gamma": gd.m_gamma,
                       "gamma_dagger": gd.gamma_dagger, "rho": gd.rho})
    lines = [f"{k} = {v}" for k, v in info.items()]
    lines += [f"gamma={x['gamma']}: m_gamma={x['m_gamma']} rho={x['rho']}" for x in gammas]
    return {"order": G.order, "abelian": G.is_abelian, "gamma_data": gammas}, lines


def cmd_vfn(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    V = _rep(cfg, G)
    rows, lines = [], []
    for gamma in _gammas(cfg, G):
        for r in _jumps(cfg, G, gamma):
            v = v_rep(G, V, gamma, r)
            rows.append({"gamma": gamma, "r": r, "v": _fraction(v)})
            lines.append(f"gamma={gamma} r={r} v={v}")
    tame = [{"k": k, "age": _fraction(age(G, V, k))} for k in range(G.m)]
    lines += [f"tame k={t['k']} age={t['age']}" for t in tame]
    return {"wild": rows, "tame": tame}, lines


def cmd_dim(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    rows, lines = [], []
    for gamma in _gammas(cfg, G):
        for r in _jumps(cfg, G, gamma):
            info = stratum_info(G, gamma, r)
            rows.append({"gamma": gamma, "r": r, "dim": info.dim,
                         "mu_order": info.mu_order, "components": info.components})
            lines.append(f"gamma={gamma} r={r} dim={info.dim} mu={info.mu_order}")
    return {"strata": rows}, lines


def cmd_motive(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    V = _rep(cfg, G)
    result = stringy_motive(G, V)
    doc: dict[str, Any] = {"kind": result.kind, "D_V": V.D_V, "dim": V.dim}
    if not result.converges:
        doc["motive"] = None
        doc["euler"] = None
        return doc, [f"divergent (D_V={V.D_V} < p={G.p})"]
    doc["motive"] = _motive_json(result.simplified())
    doc["unsimplified"] = _motive_json(result.value)
    doc["window"] = [{"gamma": g, "s": s, "dim_minus_v": _fraction(e)}
                     for g, s, e in window_exponents(G, V)]
    e = euler_from_motive(G, V)
    doc["euler"] = _fraction(e)
    return doc, [str(result), f"euler = {e}"]


def cmd_euler(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    V = _rep(cfg, G)
    closed = euler_number(G, V)
    limit = euler_from_motive(G, V)
    doc = {"euler": _fraction(closed), "from_motive": _fraction(limit), "agree": closed == limit}
    return doc, [str(closed)]


def cmd_count(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    _need(cfg, "q", "gamma", "r")
    n = count_extensions(G, cfg.q, cfg.gamma, cfg.r)
    return {"count": n}, [str(n)]


def cmd_invariants(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    V = _rep(cfg, G)
    report = invariant_report(G, V, cfg.window_multiplier)
    crepant = crepant_euler(G, V)
    doc = report.to_json()
    doc["crepant_euler"] = {
        "value": _fraction(crepant.value),
        "valid_only_if_crepant_resolution_exists": crepant.valid_only_if_crepant_resolution_exists,
    }
    state = "attained" if report.a_attained else "not attained"
    lines = [
        f"a = {report.a_value} ({state})",
        f"b = {report.b_value}",
        f"classification = {report.classification}",
        f"sup(dim - v) = {report.sup_dim_minus_v}",
        f"crepant euler = {crepant.value} (valid only if a crepant resolution exists)",
    ]
    lines += [f"  attained at {x.label()} v={x.v} dim={x.dim}" for x in report.attaining]
    return doc, lines


def cmd_classify(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    G = _group(cfg)
    V = _rep(cfg, G)
    cls = classify_singularities(G, V)
    ages = [{"k": k, "age": _fraction(age(G, V, k))} for k in range(1, G.m)]
    return {"classification": cls, "tame_ages": ages}, [cls]


def cmd_selftest(cfg: JobConfig) -> tuple[dict[str, Any], list[str]]:
    checks = run_selftest()
    rows = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return {"checks": rows, "all_passed": passed == len(checks)}, lines


HANDLERS: dict[str, Handler] = {
    "group": cmd_group,
    "vfn": cmd_vfn,
    "dim": cmd_dim,
    "motive": cmd_motive,
    "euler": cmd_euler,
    "count": cmd_count,
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "selftest": cmd_selftest,
}


def run(command: str, cfg: JobConfig) -> tuple[dict[str, Any], list[str], int]:
    """Execute one job; returns (document, text lines, exit status)."""
    doc: dict[str, Any] = {"command": command, "inputs": cfg.echo()}
    try:
        if command != "selftest":
            doc["group"] = _group(cfg).describe()
        result, lines = HANDLERS[command](cfg)
    except MalformedInput as exc:
        doc["error"] = {"type": "MalformedInput", "message": str(exc)}
        return doc, [], EXIT_MALFORMED
    except WildMcKayError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return doc, [], EXIT_DOMAIN
    doc["result"] = result
    status = EXIT_OK
    if command == "selftest" and not result["all_passed"]:
        status = EXIT_DOMAIN
    return doc, lines, status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="characteristic (prime)")
    common.add_argument("--m", type=int, help="order of the tame part")
    common.add_argument("--a", type=int, help="action exponent, a^m = 1 mod p")
    common.add_argument("--rep", action="append", metavar="D:S",
                        help="indecomposable summand; repeat for direct sums")
    common.add_argument("--gamma", type=int, help="component of the torsor moduli")
    common.add_argument("--r", type=int, help="ramification jump")
    common.add_argument("--q", type=int, help="size of the residue field")
    common.add_argument("--bound", type=int, help="largest jump listed by vfn/dim")
    common.add_argument("--window-mult", dest="window_multiplier", type=int,
                        help=f"invariant scan window multiplier (default ${WINDOW_ENV} or 1)")
    common.add_argument("--config", help="JSON file with the same keys; flags win")
    common.add_argument("--json", action="store_true", help="emit a JSON document")

    parser = argparse.ArgumentParser(prog="wild-mckay", description="Wild McKay correspondence calculator.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "group": "derived group invariants",
        "vfn": "v-function table over jumps, plus tame ages",
        "dim": "stratum dimensions",
        "motive": "stringy motive",
        "euler": "stringy Euler number",
        "count": "count local extensions over F_q((t))",
        "invariants": "a/b-invariants and classification",
        "classify": "canonical/terminal test",
        "selftest": "reproduce the worked S_3 examples",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
    except MalformedInput as exc:
        print(f"wild-mckay: error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    doc, lines, status = run(args.command, cfg)
    if "error" in doc:
        print(f"wild-mckay: {doc['error']['type']}: {doc['error']['message']}", file=sys.stderr)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
