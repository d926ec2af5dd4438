"""Command line front-end: ``picardck verify <suite>|all [--scenario F] [--out F] [--truncation N]``.

Exit codes: 0 when no check fails, 1 when some check fails, 2 on usage or
scenario errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import checks, curves, l2local

REPORT_SCHEMA = "picardck-report/1"


class ParseError(ValueError):
    pass


class UnknownSuite(ValueError):
    pass


@dataclass
class Scenario:
    suites: list = field(default_factory=lambda: list(checks.SUITES))
    truncation_bound: int = l2local.DEFAULT_BOUND
    axioms: curves.AxiomRegistry = field(default_factory=curves.default_axioms)
    output: str | None = None

    def to_dict(self) -> dict:
        return {"suites": list(self.suites), "truncation_bound": self.truncation_bound,
                "axioms": self.axioms.to_rows(), "output": self.output}


def _suites(value) -> list[str]:
    if value == "all":
        return list(checks.SUITES)
    if isinstance(value, str):
        value = [value]
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ParseError("suites must be 'all' or a list of suite names")
    if "all" in value:
        return list(checks.SUITES)
    unknown = [s for s in value if s not in checks.SUITES]
    if unknown:
        raise UnknownSuite(f"unknown suite(s): {', '.join(unknown)}")
    return [s for s in checks.SUITES if s in value]


def parse_scenario(text: str) -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("scenario must be a JSON object")
    extra = set(data) - {"suites", "truncation_bound", "axioms", "output"}
    if extra:
        raise ParseError(f"unknown scenario keys: {sorted(extra)}")
    sc = Scenario()
    if "suites" in data:
        sc.suites = _suites(data["suites"])
    if "truncation_bound" in data:
        tb = data["truncation_bound"]
        if not isinstance(tb, int) or isinstance(tb, bool):
            raise ParseError("truncation_bound must be an integer")
        sc.truncation_bound = tb
    if "axioms" in data:
        rows = data["axioms"]
        if not isinstance(rows, list):
            raise ParseError("axioms must be a list")
        for row in rows:
            if not isinstance(row, dict) or not {"id", "group"} <= set(row):
                raise ParseError("each axiom needs 'id' and 'group'")
            for key in ("h0", "h1"):
                if row.get(key) is not None and (not isinstance(row[key], int) or row[key] < 0):
                    raise ParseError(f"axiom {row['id']}: {key} must be a nonnegative integer or null")
        sc.axioms = curves.AxiomRegistry.from_rows(rows)
    if "output" in data:
        sc.output = data["output"]
    return sc


def _truncation_checks(sc: Scenario) -> list[checks.Check]:
    if sc.truncation_bound >= 2:
        return []
    err = l2local.TruncationTooSmall(f"truncation_bound {sc.truncation_bound} < 2")
    return [checks.Check("scenario.truncation_bound", checks.FAIL,
                         {"error": type(err).__name__, "message": str(err)}, "plumbing")]


def run(sc: Scenario, workers: int = 4) -> dict:
    """Run the selected suites and assemble the report in suite order."""
    ctx = checks.Context(sc.axioms, sc.truncation_bound)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {s: pool.submit(checks.RUNNERS[s], ctx) for s in sc.suites}
        results = [c for s in sc.suites for c in futures[s].result()]
    results = _truncation_checks(sc) + results
    summary = {checks.PASS: 0, checks.FAIL: 0, checks.BOUNDED: 0}
    for c in results:
        summary[c.status] += 1
    report = {
        "schema": REPORT_SCHEMA,
        "scenario": {"suites": sc.suites, "truncation_bound": sc.truncation_bound,
                     "axioms": sc.axioms.to_rows()},
        "summary": summary,
        "ok": summary[checks.FAIL] == 0,
        "checks": [c.to_dict() for c in results],
    }
    return checks.jsonable(report)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="picardck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run check suites and write a JSON report")
    v.add_argument("suite", help=f"'all' or one of: {', '.join(checks.SUITES)}")
    v.add_argument("--scenario", type=Path, help="scenario JSON file")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    v.add_argument("--truncation", type=int, help="truncation bound for module comparisons")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        sc = parse_scenario(args.scenario.read_text()) if args.scenario else Scenario()
        if args.scenario is None or args.suite != "all":
            sc.suites = _suites(args.suite)
        if args.truncation is not None:
            sc.truncation_bound = args.truncation
    except (ParseError, UnknownSuite, OSError) as exc:
        print(f"picardck: {exc}", file=sys.stderr)
        return 2
    report = run(sc)
    text = dumps(report)
    out = args.out or (Path(sc.output) if sc.output else None)
    if out:
        out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
