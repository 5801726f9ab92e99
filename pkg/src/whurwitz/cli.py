"""Command-line interface.

Every command writes one JSON document (or CSV / aligned text with
``--format``) to stdout or ``--output``.  Errors are reported as a JSON
object ``{"error": kind, "message": ...}`` with a nonzero exit status.
Options may also come from a JSON ``--config`` file; flags win.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import config, weightgen
from .characters import table
from .errors import HurwitzError, ParameterError, RouteMismatch
from .group_algebra import count_paths_by_signature, factorization_count, path_count_total
from .hurwitz import ROUTES, hurwitz_classical, hurwitz_table, macdonald_decompose, multispecies_F
from .partitions import all_partitions, partition
from .tau import toda_block
from .verify import CORE_PRESETS, compare_routes, fmt, run_suite

DEFAULTS = {"format": "json", "output": None, "jobs": 1, "cap_n": None, "path_cap": None,
            "n": None, "degree": 3, "preset": None, "route": "character"}


@dataclass
class RunConfig:
    command: str
    n: int = None
    degree: int = 3
    preset: str = None
    route: str = "character"
    cap_n: int = None
    path_cap: int = None
    format: str = "json"
    output: str = None
    jobs: int = 1
    extra: dict = field(default_factory=dict)


# -- parsing helpers -----------------------------------------------------------


def parse_partition(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParameterError(f"partitions are written as bracketed lists, got {text!r}")
    body = text[1:-1].strip()
    try:
        parts = [int(x) for x in body.split(",")] if body else []
        return partition(parts)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


def parse_profiles(text):
    return [parse_partition(p) for p in text.split(";") if p.strip()]


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"malformed rational {text!r}") from exc


# -- rendering -----------------------------------------------------------------


def _render_rows(rows, fmt_name):
    if fmt_name == "json":
        return json.dumps(rows) + "\n"
    buf = io.StringIO()
    if not rows:
        return ""
    keys = list(rows[0])
    if fmt_name == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        for r in rows:
            writer.writerow([json.dumps(r[k]) if isinstance(r[k], list) else r[k] for k in keys])
        return buf.getvalue()
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
    lines += ["  ".join(str(r[k]).ljust(widths[k]) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


def _render(obj, fmt_name):
    if fmt_name == "pretty":
        return json.dumps(obj, indent=2) + "\n"
    return json.dumps(obj) + "\n"


def _table_rows(tab):
    return [dict(r, value=fmt(r["value"])) for r in tab.rows()]


# -- commands ------------------------------------------------------------------


def cmd_characters(cfg):
    tab = table(cfg.n)
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in tab.chi:
            writer.writerow([int(v) for v in row])
        return buf.getvalue()
    return _render(tab.to_json(), cfg.format)


def cmd_frobenius(cfg):
    profiles = parse_profiles(cfg.extra["profiles"])
    count = factorization_count(profiles, cap=cfg.cap_n, workers=cfg.jobs)
    n = sum(profiles[0])
    value = Fraction(count, _factorial(n))
    return _render({"value": fmt(value), "count_raw": str(count)}, cfg.format)


def _factorial(n):
    from math import factorial
    return factorial(n)


def cmd_paths_count(cfg):
    mu, nu = parse_partition(cfg.extra["mu"]), parse_partition(cfg.extra["nu"])
    lam = parse_partition(cfg.extra["signature"])
    if cfg.n is not None and (sum(mu) != cfg.n or sum(nu) != cfg.n):
        raise ParameterError("--mu and --nu must be partitions of --n")
    total = path_count_total(mu, nu, lam, cfg.cap_n, cfg.path_cap)
    value = count_paths_by_signature(mu, nu, lam, cfg.cap_n, cfg.path_cap)
    return _render({"value": fmt(value), "count_raw": str(total)}, cfg.format)


def cmd_hurwitz_classical(cfg):
    value = hurwitz_classical(parse_profiles(cfg.extra["profiles"]))
    return _render({"value": fmt(value)}, cfg.format)


def cmd_hurwitz_weighted(cfg):
    if cfg.route == "all":
        report = compare_routes(cfg.preset, cfg.n, cfg.degree)
        if report["status"] != "pass":
            raise RouteMismatch(json.dumps(report["first_mismatch"]))
        route = "character"
    elif cfg.route in ROUTES:
        route = cfg.route
    else:
        raise ParameterError(f"unknown route {cfg.route!r}")
    G = weightgen.parse_preset(cfg.preset)
    return _render_rows(_table_rows(hurwitz_table(G, cfg.n, cfg.degree, route)), cfg.format)


def cmd_tau_table(cfg):
    G = weightgen.parse_preset(cfg.preset)
    block = toda_block(G, cfg.n, cfg.degree)
    order = {p: i for i, p in enumerate(all_partitions(cfg.n))}
    rows = [{"d": d, "mu": list(mu), "nu": list(nu), "value": fmt(v)}
            for (d, mu, nu), v in sorted(block.powersum_coeffs.items(),
                                         key=lambda kv: (kv[0][0], order[kv[0][1]], order[kv[0][2]]))]
    return _render_rows(rows, cfg.format)


def _parse_factor(text):
    preset, sep, degree = text.rpartition("@")
    if not sep:
        raise ParameterError(f"factors are written PRESET@DEGREE, got {text!r}")
    return weightgen.parse_preset(preset), int(degree)


def cmd_multispecies(cfg):
    factors = [_parse_factor(f) for f in cfg.extra["factor"]]
    parts = all_partitions(cfg.n)
    m = multispecies_F(factors, cfg.n)
    rows = [{"mu": list(mu), "nu": list(nu), "value": fmt(m[i, j])}
            for i, mu in enumerate(parts) for j, nu in enumerate(parts)]
    return _render_rows(rows, cfg.format)


def cmd_macdonald_decompose(cfg):
    x = cfg.extra
    q = parse_rational(x["q"])
    c = [parse_rational(v) for v in x["c"].split(",")]
    samples = [parse_rational(v) for v in x["t_samples"].split(",")] if x.get("t_samples") else None
    mu, nu = parse_partition(x["mu"]), parse_partition(x["nu"])
    coeffs = macdonald_decompose(q, samples, c, mu, nu, cfg.degree)
    return _render({"mu": list(mu), "nu": list(nu), "d": cfg.degree,
                    "coefficients": [fmt(v) for v in coeffs]}, cfg.format)


def cmd_verify(cfg):
    report = run_suite(cfg.extra.get("suite") or "core", cfg.n or 4, cfg.degree, cfg.jobs)
    text = _render(report, cfg.format)
    if report["status"] != "pass":
        return text, 1
    return text


def seed_tables(out_dir, n_max=4, degree=3):
    """Write golden tables for regression fixtures; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    chars = {str(n): table(n).to_json() for n in range(1, 7)}
    path = out / "characters.json"
    path.write_text(json.dumps(chars, indent=1) + "\n")
    written.append(path)
    tables = {}
    for preset in CORE_PRESETS:
        G = weightgen.parse_preset(preset)
        tables[preset] = {str(n): _table_rows(hurwitz_table(G, n, degree)) for n in range(1, n_max + 1)}
    path = out / "hurwitz_character_tables.json"
    path.write_text(json.dumps(tables, indent=1) + "\n")
    written.append(path)
    return written


def cmd_seed_table(cfg):
    paths = seed_tables(cfg.extra.get("out") or "tests/fixtures", cfg.n or 4, cfg.degree)
    return _render({"written": [str(p) for p in paths]}, cfg.format)


COMMANDS = {
    "characters": cmd_characters,
    "frobenius": cmd_frobenius,
    "paths count": cmd_paths_count,
    "hurwitz classical": cmd_hurwitz_classical,
    "hurwitz weighted": cmd_hurwitz_weighted,
    "tau table": cmd_tau_table,
    "multispecies": cmd_multispecies,
    "macdonald decompose": cmd_macdonald_decompose,
    "verify": cmd_verify,
    "seed-table": cmd_seed_table,
}


# -- argument parsing ------------------------------------------------------------


def _common(p):
    p.add_argument("--format", choices=("json", "csv", "pretty"))
    p.add_argument("--output")
    p.add_argument("--jobs", type=int)
    p.add_argument("--cap-n", dest="cap_n", type=int)
    p.add_argument("--path-cap", dest="path_cap", type=int)
    p.add_argument("--config")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="whurwitz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = _common(sub.add_parser("characters", help="character table of S_n"))
    p.add_argument("--n", type=int)

    p = _common(sub.add_parser("frobenius", help="count factorizations of the identity"))
    p.add_argument("--profiles", required=True)

    paths = sub.add_parser("paths").add_subparsers(dest="sub", required=True)
    p = _common(paths.add_parser("count", help="class-averaged path count by signature"))
    p.add_argument("--n", type=int)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--signature", required=True)

    hur = sub.add_parser("hurwitz").add_subparsers(dest="sub", required=True)
    p = _common(hur.add_parser("classical"))
    p.add_argument("--profiles", required=True)
    p = _common(hur.add_parser("weighted"))
    p.add_argument("--preset")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--route", choices=ROUTES + ("all",))

    tau = sub.add_parser("tau").add_subparsers(dest="sub", required=True)
    p = _common(tau.add_parser("table"))
    p.add_argument("--preset")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)

    p = _common(sub.add_parser("multispecies"))
    p.add_argument("--n", type=int)
    p.add_argument("--factor", action="append", required=True, help="PRESET@DEGREE, repeatable")

    mac = sub.add_parser("macdonald").add_subparsers(dest="sub", required=True)
    p = _common(mac.add_parser("decompose"))
    p.add_argument("--q", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--t-samples", dest="t_samples")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--degree", type=int)

    p = _common(sub.add_parser("verify"))
    p.add_argument("--suite", choices=("core", "tau", "quantum", "multispecies", "all"))
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)

    p = _common(sub.add_parser("seed-table"))
    p.add_argument("--out")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    return parser


def make_config(args):
    """Merge flags over an optional JSON config file over built-in defaults."""
    ns = vars(args).copy()
    file_cfg = {}
    if ns.get("config"):
        file_cfg = json.loads(Path(ns["config"]).read_text())
    command = ns.pop("command")
    if ns.get("sub"):
        command = f"{command} {ns.pop('sub')}"
    ns.pop("config", None)
    ns.pop("sub", None)
    merged = dict(DEFAULTS)
    merged.update({k.replace("-", "_"): v for k, v in file_cfg.items()})
    merged.update({k: v for k, v in ns.items() if v is not None})
    known = {f for f in RunConfig.__dataclass_fields__ if f not in ("command", "extra")}
    cfg = RunConfig(command, **{k: merged[k] for k in known if k in merged})
    cfg.extra = {k: v for k, v in merged.items() if k not in known}
    return cfg


def _validate(cfg):
    if cfg.command in ("characters", "hurwitz weighted", "tau table", "multispecies") and cfg.n is None:
        raise ParameterError("--n is required")
    if cfg.command in ("hurwitz weighted", "tau table") and not cfg.preset:
        raise ParameterError("--preset is required")
    if cfg.jobs < 1:
        raise ParameterError("--jobs must be positive")


def run(cfg):
    """Execute a command; returns (exit status, text)."""
    if cfg.cap_n is not None:
        os.environ["HURWITZ_CAP_N"] = str(cfg.cap_n)
    try:
        _validate(cfg)
        result = COMMANDS[cfg.command](cfg)
    except HurwitzError as exc:
        return 1, json.dumps({"error": exc.kind, "message": str(exc)}) + "\n"
    if isinstance(result, tuple):
        text, status = result
        return status, text
    return 0, result


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stdout.write(json.dumps({"error": "config_error", "message": str(exc)}) + "\n")
        return 2
    status, text = run(cfg)
    if cfg.output and status == 0:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
