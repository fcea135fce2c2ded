#!/usr/bin/env python3
"""Regenerate the committed minor-form fixtures in tests/data/.

This is the brute-force route, kept independent of the library on purpose:
coefficient rows come from plain list convolution of (1, 1, ..., 1), and the
bilinear expansion of B_{n-1} B_{m+1} - B_n B_m is an explicit double loop.
The acceptance suite diffs tripos.transforms.transform_minor_form against
these files, so regenerate them only if the expansion convention changes.
"""

from __future__ import annotations

import sys
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

CASES = [(1, 1, 2), (1, 2, 2), (2, 2, 2)]


def coeff_row(n: int, s: int) -> list[int]:
    row = [1]
    for _ in range(n):
        out = [0] * (len(row) + s)
        for i, x in enumerate(row):
            for j in range(s + 1):
                out[i + j] += x
        row = out
    return row


def minor_form(n: int, m: int, s: int) -> dict[tuple[int, int], int]:
    form: dict[tuple[int, int], int] = {}

    def add(row_a: list[int], row_b: list[int], sign: int) -> None:
        for i, a in enumerate(row_a):
            for j, b in enumerate(row_b):
                key = (min(i, j), max(i, j))
                form[key] = form.get(key, 0) + sign * a * b

    add(coeff_row(n - 1, s), coeff_row(m + 1, s), +1)
    add(coeff_row(n, s), coeff_row(m, s), -1)
    return {k: v for k, v in form.items() if v != 0}


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for n, m, s in CASES:
        form = minor_form(n, m, s)
        path = OUT_DIR / f"minor_form_s{s}_n{n}_m{m}.txt"
        with path.open("w") as fh:
            for (i, j), c in sorted(form.items()):
                fh.write(f"{i} {j} {c}\n")
        print(f"wrote {path} ({len(form)} terms)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
