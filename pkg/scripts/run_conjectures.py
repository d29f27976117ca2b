"""Full seeded conjecture sweep over every family; writes one JSON report per run.

    python scripts/run_conjectures.py --trials 50 --rows 10 --out results/
"""

import argparse
import json
import time
from pathlib import Path

from sdrmatrix.harness import guaranteed_candidates, run_harness, summarize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--rows", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--minor-sizes", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    runs = [("inverse", None)] + [("minor", j) for j in args.minor_sizes]
    bad = 0
    for conj, j in runs:
        t0 = time.perf_counter()
        recs = run_harness(conj, "all", args.trials, args.rows, args.seed, j=j or 2)
        name = conj if j is None else f"{conj}-{j}"
        (args.out / f"{name}.json").write_text(json.dumps([r.to_json() for r in recs], indent=1))
        print(f"== {name} ({time.perf_counter() - t0:.1f}s)")
        for fam, counts in summarize(recs).items():
            print(f"  {fam:22s} {counts}")
        cands = guaranteed_candidates(recs)
        bad += len(cands)
        for r in cands:
            print(f"  SELF-TEST FAILURE: {r.case.family} seed {r.case.seed}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
