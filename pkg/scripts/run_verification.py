#!/usr/bin/env python3
"""Run the full verification over a range of n and write a JSON report.

Example:
    python scripts/run_verification.py --range 4..10 --seed 42 --out report.json
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from dsolid.report import RunConfig, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--range", default="4..10")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--filter", default="*")
    ap.add_argument("--out", default="report.json")
    args = ap.parse_args()

    lo, hi = (int(x) for x in args.range.split(".."))
    cfg = RunConfig(
        ns=tuple(range(lo, hi + 1)),
        seed=args.seed,
        instances=args.instances,
        filter=args.filter,
        fmt="json",
    )
    report = run(cfg)
    Path(args.out).write_text(json.dumps(report.to_json(), indent=1, sort_keys=True))
    s = report.summary()
    print(f"wrote {args.out}: {s['pass']} pass, {s['fail']} fail, {s['flagged']} flagged")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
