#!/usr/bin/env python3
"""Run the whole verification battery over the preset triangles and print a
verdict table.

For every preset this checks, in exact arithmetic:
  * log-concavity of each row,
  * strong q-log-convexity of the row generating functions,
  * TP_2 of the triangle's matrix truncation,
and for presets expressible with constant five-term weights additionally:
  * the four q-log-convexity conditions and the TP_2 recurrence matrix,
  * the deleted-row factorization and the tail-sum recurrence identity,
  * transform preservation of strong q-log-convexity for s = 1, 2, 3.

Usage:
  python scripts/survey_properties.py [--n 20] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from tripos.algebra import mat_mul
from tripos.conditions import q_log_convexity_conditions, verify_tail_recurrence
from tripos.properties import NumSeq, PolySeq, is_log_concave, is_strongly_q_log_convex, is_tp_r
from tripos.transforms import check_preservation
from tripos.triangles import (
    PRESET_NAMES,
    build_preset,
    from_const_params,
    preset,
    recurrence_matrix,
    row_polys,
)


def survey_preset(name: str, n_max: int) -> dict:
    t = build_preset(name, n_max, s=2 if name == "s_pascal" else None)
    rows_ok = all(is_log_concave(NumSeq(row)).holds for row in t.rows)
    gens = PolySeq(tuple(row_polys(t)))
    qlcx = is_strongly_q_log_convex(gens).holds
    size = min(n_max + 1, 12)
    tp2 = is_tp_r(t.to_matrix(size, size), 2).holds
    out = {
        "rows-log-concave": rows_ok,
        "rowgen-strong-qlcx": qlcx,
        "matrix-tp2": tp2,
    }

    p = preset(name).const_params if name != "s_pascal" else None
    if p is not None:
        report = q_log_convexity_conditions(p)
        out["conditions-established"] = report.established
        out["recurrence-matrix-tp2"] = is_tp_r(recurrence_matrix(p, 10), 2).holds
        out["tail-recurrence"] = verify_tail_recurrence(p, 8).holds
        tc = from_const_params(p, 12)
        a = tc.to_matrix(10, 10)
        shifted = [[tc.entry(i + 1, j) for j in range(10)] for i in range(10)]
        out["deleted-row-identity"] = mat_mul(a, recurrence_matrix(p, 10)) == shifted
        if qlcx:
            checks = []
            for s in (1, 2, 3):
                depth = min(8, (len(gens) - 1) // s)
                window = PolySeq(gens.polys[: s * depth + 1])
                checks.append(check_preservation(window, s, depth, "convex").holds)
            out["transform-preserves"] = all(checks)
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20, help="rows per triangle")
    parser.add_argument("--json", metavar="PATH", help="write results as JSON")
    args = parser.parse_args()

    started = time.perf_counter()
    results = {}
    for name in PRESET_NAMES:
        results[name] = survey_preset(name, args.n)
        flags = "  ".join(f"{k}={'Y' if v else 'N'}" for k, v in results[name].items())
        print(f"{name:<16} {flags}")
    elapsed = time.perf_counter() - started
    print(f"\n{len(results)} presets surveyed in {elapsed:.1f}s (rows 0..{args.n}, exact)")

    failures = {
        name: {k: v for k, v in flags.items() if not v}
        for name, flags in results.items()
        if not all(flags.values())
    }
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)
        print(f"wrote {args.json}")
    if failures:
        print(f"FAILURES: {failures}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
