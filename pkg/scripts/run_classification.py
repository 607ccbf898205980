#!/usr/bin/env python3
"""Run the full small-rank classification and archive the evidence.

Writes one summary JSON per rank plus the per-table certificates, then
prints a compact table.  Everything is deterministic, so re-runs are
diffable against earlier output.
"""

import argparse
import json
import time
from pathlib import Path

from geodesy.ladder import verify_theorem


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=4)
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    print(f"{'p':>3} {'tables':>7} {'feasible':>9} {'infeasible':>11} {'seconds':>8}")
    for p in range(1, args.max_p + 1):
        start = time.monotonic()
        summary = verify_theorem(p, jobs=args.jobs)
        elapsed = time.monotonic() - start
        with open(args.out / f"summary_p{p}.json", "w", encoding="utf-8") as fh:
            json.dump(summary.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        cert_dir = args.out / f"certificates_p{p}"
        cert_dir.mkdir(exist_ok=True)
        for result in summary.results:
            path = cert_dir / f"{result.weight_data.digest()}.json"
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(result.to_json_dict(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        print(
            f"{p:>3} {summary.enumerated:>7} {summary.feasible:>9} "
            f"{summary.infeasible:>11} {elapsed:>8.2f}"
        )
        for cls in summary.classes:
            flag = " [non-embedding]" if cls.non_embedding else ""
            print(f"      {cls.label()}{flag}: {cls.weight_data.describe()}")


if __name__ == "__main__":
    main()
