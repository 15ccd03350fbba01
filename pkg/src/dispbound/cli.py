"""Command-line surface: enumeration, solving, auditing, verification.

Subcommands mirror the library layers.  Exit codes form a stable contract:
0 success, 1 verification failure, 2 usage or input error.  Given the same
rank, seed, and tolerances, output bytes are identical across runs; the
one exception is that failed timing rows in verify reports include the
measured duration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .checks import CheckContext, run_checks
from .functions import function_family
from .hypgeom import MoebiusMap, audit_pair, schottky_certificate, schottky_sample
from .optimize import analytic_solve, minmax_numeric
from .relations import enumerate_relations, relations_to_csv, relations_to_json, validate_relation
from .words import PsiTable, word_class, word_to_str


@dataclass(frozen=True)
class RunConfig:
    n: int = 2
    seed: int = 0
    fmt: str = "table"
    output: str | None = None
    bisection_tol: float = 1e-12
    minmax_tol: float = 1e-4
    identity_tol: float = 1e-9


def _load_toml(path: str) -> dict:
    try:
        import tomllib
    except ImportError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _config_from_file(path: str) -> dict:
    data = _load_toml(path)
    out = {}
    for key in ("n", "seed", "output"):
        if key in data:
            out[key] = data[key]
    if "format" in data:
        out["fmt"] = data["format"]
    tol = data.get("tolerances", {})
    for key, field in (
        ("bisection", "bisection_tol"),
        ("minmax", "minmax_tol"),
        ("identity", "identity_tol"),
    ):
        if key in tol:
            out[field] = float(tol[key])
    return out


def resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **_config_from_file(args.config))
    overrides = {}
    for attr, field in (
        ("n", "n"),
        ("seed", "seed"),
        ("format", "fmt"),
        ("output", "output"),
        ("bisection_tol", "bisection_tol"),
        ("minmax_tol", "minmax_tol"),
        ("identity_tol", "identity_tol"),
    ):
        value = getattr(args, attr, None)
        if value is not None:
            overrides[field] = value
    cfg = replace(cfg, **overrides)
    if cfg.fmt not in ("json", "csv", "table"):
        raise ValueError(f"unknown format: {cfg.fmt}")
    for tol in (cfg.bisection_tol, cfg.minmax_tol, cfg.identity_tol):
        if not tol > 0:
            raise ValueError("tolerances must be positive")
    if cfg.n < 2:
        raise ValueError("rank must be at least 2")
    return cfg


def _emit(text: str, cfg: RunConfig) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    return str(value)


# ---------------------------------------------------------------------------
# subcommands


def cmd_psi(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = PsiTable.build(cfg.n)
    if cfg.fmt == "json":
        _emit(table.to_json(), cfg)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["idx", "word", "class"])
        for i, w in enumerate(table.words):
            writer.writerow([i + 1, word_to_str(w), word_class(w)])
        _emit(buf.getvalue(), cfg)
    else:
        rows = [
            [str(i + 1), word_to_str(w), word_class(w)]
            for i, w in enumerate(table.words)
        ]
        _emit(_table(["idx", "word", "class"], rows), cfg)
    return 0


def cmd_relations(args: argparse.Namespace, cfg: RunConfig) -> int:
    rels = enumerate_relations(cfg.n)
    rels = sorted(rels, key=lambda r: -r.cancellation)
    code = 0
    if args.check:
        table = PsiTable.build(cfg.n)
        depth = max(len(r.gamma) + len(r.s) for r in rels) + 1
        if not all(validate_relation(r, depth=depth, table=table) for r in rels):
            code = 1
    if cfg.fmt == "json":
        _emit(relations_to_json(rels, cfg.n), cfg)
    elif cfg.fmt == "csv":
        _emit(relations_to_csv(rels), cfg)
    else:
        table = PsiTable.build(cfg.n)
        rows = [
            [
                word_to_str(r.gamma),
                word_to_str(r.s),
                str(r.cancellation),
                ",".join(str(i) for i in r.all_out),
                ",".join(word_to_str(w) for w in r.residue),
            ]
            for r in rels
        ]
        _emit(_table(["gamma", "s", "canc", "S", "residue"], rows), cfg)
    return code


def _solve_report(cfg: RunConfig, method: str, iters: int, starts: int) -> tuple[dict, int]:
    report: dict = {"n": cfg.n, "method": method}
    code = 0
    if method in ("analytic", "both"):
        report["analytic"] = analytic_solve(cfg.n).to_dict()
    if method in ("numeric", "both"):
        specs = function_family(cfg.n)
        res = minmax_numeric(specs, iters=iters, starts=starts, seed=cfg.seed)
        value = res["value"]
        report["numeric"] = {
            "value": value,
            "half_log": 0.5 * math.log(value),
            "bound": 2.0 * math.sinh(0.25 * math.log(value)) ** 2,
            "iters": res["iters"],
            "starts": res["starts"],
            "seed": res["seed"],
            "x": [float(v) for v in res["x"]],
        }
    if method == "both":
        gap = abs(report["analytic"]["alpha"] - report["numeric"]["value"])
        report["agreement"] = gap
        report["within_tol"] = gap <= cfg.minmax_tol
        if not report["within_tol"]:
            code = 1
    return report, code


def _flatten(prefix: str, value, rows: list[list[str]]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    else:
        rows.append([prefix, _fmt(value)])


def cmd_solve(args: argparse.Namespace, cfg: RunConfig) -> int:
    report, code = _solve_report(cfg, args.method, args.iters, args.starts)
    if cfg.fmt == "json":
        _emit(json.dumps(report, indent=2, sort_keys=True), cfg)
        return code
    rows: list[list[str]] = []
    slim = dict(report)
    if "numeric" in slim:
        slim["numeric"] = {k: v for k, v in slim["numeric"].items() if k != "x"}
    _flatten("", slim, rows)
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        _emit(buf.getvalue(), cfg)
    else:
        _emit(_table(["key", "value"], rows), cfg)
    return code


def _parse_matrix(text: str) -> MoebiusMap:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 8:
        raise ValueError(
            "matrix needs 8 comma-separated reals: "
            "a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im"
        )
    try:
        v = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"matrix entries must be numbers: {text!r}") from None
    return MoebiusMap(
        complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5]), complex(v[6], v[7])
    )


def cmd_audit(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.schottky:
        pairs = schottky_sample(args.count, seed=cfg.seed)
    elif args.xi and args.eta:
        pairs = [(_parse_matrix(args.xi), _parse_matrix(args.eta))]
    else:
        raise ValueError("provide --xi and --eta, or --schottky")

    reports = []
    failures = 0
    for idx, (x, y) in enumerate(pairs):
        report = audit_pair(x, y, alpha=args.alpha)
        report["pair"] = idx
        report["certified"] = schottky_certificate(x, y)
        jorg = report["jorgensen"]
        report["identity_ok"] = (
            abs(jorg - report["jorgensen_frame"]) <= cfg.identity_tol * (1.0 + abs(jorg))
        )
        if report["certified"] and report["hypothesis"] and not report["bound"]:
            failures += 1
        reports.append(report)

    payload = {"count": len(reports), "failures": failures, "reports": reports}
    if cfg.fmt == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True), cfg)
    else:
        headers = [
            "pair", "certified", "jorgensen", "threshold",
            "hypothesis", "bound", "identity_ok",
        ]
        rows = [[_fmt(r[h]) for h in headers] for r in reports]
        if cfg.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(headers)
            writer.writerows(rows)
            _emit(buf.getvalue(), cfg)
        else:
            _emit(_table(headers, rows), cfg)
    return 1 if failures else 0


def _verify_payload(reports: list[dict]) -> list[dict]:
    out = []
    for rep in reports:
        rows = []
        for row in rep["rows"]:
            row = dict(row)
            if row.get("timing") and row["ok"]:
                row["got"] = None
            rows.append(row)
        out.append({**rep, "rows": rows})
    return out


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    reports = _verify_payload(run_checks(args.suite, CheckContext(seed=cfg.seed)))
    passed = all(r["passed"] for r in reports)
    if cfg.fmt == "json":
        _emit(json.dumps({"passed": passed, "checks": reports}, indent=2, sort_keys=True), cfg)
        return 0 if passed else 1
    rows = []
    for rep in reports:
        for row in rep["rows"]:
            got = "-" if row["got"] is None else _fmt(row["got"])
            rows.append([
                rep["name"],
                row["name"],
                _fmt(row["expected"]),
                got,
                "-" if row["tol"] is None else _fmt(row["tol"]),
                "ok" if row["ok"] else "FAIL",
            ])
    headers = ["check", "assertion", "expected", "got", "tolerance", "status"]
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        summary = f"{sum(r['passed'] for r in reports)}/{len(reports)} checks passed"
        text = _table(headers, rows) + "\n" + summary
    _emit(text, cfg)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dispbound",
        description="Displacement lower bounds: word tables, min-max level, audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rank: bool = True) -> None:
        if rank:
            p.add_argument("--n", type=int, default=None, help="free group rank")
        p.add_argument("--format", choices=["json", "csv", "table"], default=None)
        p.add_argument("--output", default=None, help="write to file instead of stdout")
        p.add_argument("--config", default=None, help="TOML config file")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("psi", help="print the head word table")
    common(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("relations", help="print the derived relations")
    common(p)
    p.add_argument("--check", action="store_true", help="brute-force validate each row")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("solve", help="solve the min-max problem")
    common(p)
    p.add_argument("--method", choices=["analytic", "numeric", "both"], default="analytic")
    p.add_argument("--iters", type=int, default=200000)
    p.add_argument("--starts", type=int, default=1)
    p.add_argument("--bisection-tol", type=float, default=None, dest="bisection_tol")
    p.add_argument("--minmax-tol", type=float, default=None, dest="minmax_tol")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("audit", help="audit isometry pairs in upper half-space")
    common(p, rank=False)
    p.add_argument("--xi", default=None, help="8 reals: a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im")
    p.add_argument("--eta", default=None, help="second matrix, same layout")
    p.add_argument("--schottky", action="store_true", help="sample random certified pairs")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--alpha", type=float, default=None, help="audit against this level")
    p.add_argument("--identity-tol", type=float, default=None, dest="identity_tol")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("verify", help="run the acceptance checks")
    common(p, rank=False)
    p.add_argument("--suite", choices=["all", "relations", "optimize", "geometry"], default="all")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
