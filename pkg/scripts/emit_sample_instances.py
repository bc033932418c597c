#!/usr/bin/env python3
"""Emit a batch of quartic instances as JSON files and re-verify them on reload.

Example:
    python scripts/emit_sample_instances.py --n 6 --count 5 --outdir instances/
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from dsolid.scroll import (
    double_conic_verify,
    random_instance,
    read_instance,
    write_instance,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="instances")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    for k in range(args.count):
        inst = random_instance(args.n, rng)
        path = outdir / f"instance_n{args.n}_{k}.json"
        write_instance(inst, path)
        back = read_instance(path)
        assert back == inst and double_conic_verify(back, random.Random(0))
        print(f"{path}: ok (roots={[f'{p}:{q}' for p, q in inst.roots]})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
