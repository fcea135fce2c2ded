"""Property checkers for exact sequences and matrices.

Every checker returns a :class:`PropertyReport` rather than a bare boolean:
the report names the property, records the finite index range that was
actually certified, and on failure carries a witness pinpointing the first
violation.  Verdicts are decided by exact rational (or exact polynomial)
comparisons; there is no tolerance anywhere.

A verdict of ``inapplicable`` means a stated precondition of the property
(e.g. nonnegativity for log-concavity) failed, which is distinct from the
property itself failing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import ExactRat, QPoly, det_exact, format_exact, poly_geq_q
from .errors import SequenceRangeError

HOLDS = "holds"
FAILS = "fails"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class NumSeq:
    """Finite window of a rational sequence; ``values[0]`` has index ``offset``."""

    values: tuple[ExactRat, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise SequenceRangeError("NumSeq must not be empty")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PolySeq:
    """Finite window of a polynomial sequence; ``polys[0]`` has index ``offset``."""

    polys: tuple[QPoly, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if not self.polys:
            raise SequenceRangeError("PolySeq must not be empty")

    def __len__(self) -> int:
        return len(self.polys)


@dataclass(frozen=True)
class PropertyReport:
    """Verdict of one property check over an explicit finite range.

    ``checked`` is the inclusive index window the verdict certifies (for
    matrix properties: the minor orders covered).  ``witness`` is present
    exactly when ``verdict == FAILS`` and records the first failure found;
    enumeration order is deterministic, so the witness is reproducible.
    """

    prop: str
    checked: tuple[int, int]
    verdict: str
    witness: dict | None = None
    note: str | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = {k: _jsonable(v) for k, v in self.witness.items()}
        return {
            "property": self.prop,
            "checked": {"from": self.checked[0], "to": self.checked[1]},
            "verdict": self.verdict,
            "witness": w,
            "note": self.note,
        }


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, QPoly):
        return str(v)
    if isinstance(v, (int, str)) or v is None:
        return v
    return format_exact(v)


# -- scalar sequences ---------------------------------------------------------


def _check_three_term(s: NumSeq, prop: str, concave: bool) -> PropertyReport:
    lo, hi = s.offset, s.offset + len(s) - 1
    for i, v in enumerate(s.values):
        if v < 0:
            return PropertyReport(
                prop, (lo, hi), INAPPLICABLE,
                witness={"index": s.offset + i, "value": v},
                note="sequence has a negative entry; property undefined",
            )
    # Fewer than three values: no interior index, vacuously true.
    vals = s.values
    for n in range(1, len(vals) - 1):
        mid = vals[n] * vals[n]
        outer = vals[n - 1] * vals[n + 1]
        bad = mid < outer if concave else mid > outer
        if bad:
            return PropertyReport(
                prop, (lo, hi), FAILS,
                witness={"index": s.offset + n, "lhs": mid, "rhs": outer},
            )
    return PropertyReport(prop, (lo, hi), HOLDS)


def is_log_concave(s: NumSeq) -> PropertyReport:
    """x_n^2 >= x_{n-1} x_{n+1} at every interior index of a nonneg sequence."""
    return _check_three_term(s, "log-concave", concave=True)


def is_log_convex(s: NumSeq) -> PropertyReport:
    """x_n^2 <= x_{n-1} x_{n+1} at every interior index of a nonneg sequence."""
    return _check_three_term(s, "log-convex", concave=False)


# -- polynomial sequences -----------------------------------------------------


def _check_pairs(ps: PolySeq, prop: str, convex: bool, adjacent_only: bool) -> PropertyReport:
    """Shared engine for the (strong) q-log-convexity/-concavity checks.

    Checks f_{n-1} f_{m+1} >=_q f_n f_m (convex) or the reverse (concave)
    for all pairs m >= n with both ends inside the data window; the weak
    variants restrict to m == n.  Pairs are scanned in lexicographic (n, m)
    order so the reported witness is the least failure.
    """
    polys = ps.polys
    lo, hi = ps.offset, ps.offset + len(polys) - 1
    for ni in range(1, len(polys) - 1):
        m_range = (ni,) if adjacent_only else range(ni, len(polys) - 1)
        for mi in m_range:
            outer = polys[ni - 1] * polys[mi + 1]
            inner = polys[ni] * polys[mi]
            verdict = poly_geq_q(outer, inner) if convex else poly_geq_q(inner, outer)
            if not verdict:
                return PropertyReport(
                    prop, (lo, hi), FAILS,
                    witness={
                        "n": ps.offset + ni,
                        "m": ps.offset + mi,
                        "coeff_index": verdict.index,
                        "coeff": verdict.value,
                    },
                )
    return PropertyReport(prop, (lo, hi), HOLDS)


def is_strongly_q_log_convex(ps: PolySeq) -> PropertyReport:
    return _check_pairs(ps, "strongly-q-log-convex", convex=True, adjacent_only=False)


def is_strongly_q_log_concave(ps: PolySeq) -> PropertyReport:
    return _check_pairs(ps, "strongly-q-log-concave", convex=False, adjacent_only=False)


def is_q_log_convex(ps: PolySeq) -> PropertyReport:
    return _check_pairs(ps, "q-log-convex", convex=True, adjacent_only=True)


def is_q_log_concave(ps: PolySeq) -> PropertyReport:
    return _check_pairs(ps, "q-log-concave", convex=False, adjacent_only=True)


# -- structured matrices ------------------------------------------------------


def toeplitz(s: NumSeq, size: int) -> list[list[ExactRat]]:
    """Lower-triangular Toeplitz window: entry (i, j) = a_{i-j} for i >= j."""
    if size > len(s):
        raise SequenceRangeError(
            f"toeplitz window {size} needs index {size - 1}, "
            f"sequence has {len(s)} values"
        )
    vals = s.values
    return [[vals[i - j] if i >= j else 0 for j in range(size)] for i in range(size)]


def hankel(s: NumSeq, size: int) -> list[list[ExactRat]]:
    """Hankel window: entry (i, j) = a_{i+j}; needs indices up to 2*size - 2."""
    if 2 * size - 1 > len(s):
        raise SequenceRangeError(
            f"hankel window {size} needs index {2 * size - 2}, "
            f"sequence has {len(s)} values"
        )
    vals = s.values
    return [[vals[i + j] for j in range(size)] for i in range(size)]


def is_tp_r(matrix: Sequence[Sequence[ExactRat]], r: int) -> PropertyReport:
    """Total positivity of order r: every minor of order <= r is nonnegative.

    Minors are enumerated by increasing order, then lexicographically by row
    and column subsets, short-circuiting on the first negative one.
    """
    if r < 1:
        raise ValueError("minor order r must be >= 1")
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    note = None
    r_eff = min(r, nrows, ncols)
    if r_eff < r:
        note = f"r clamped from {r} to {r_eff} (matrix is {nrows}x{ncols})"
    for order in range(1, r_eff + 1):
        for rows in combinations(range(nrows), order):
            for cols in combinations(range(ncols), order):
                minor = det_exact([[matrix[i][j] for j in cols] for i in rows])
                if minor < 0:
                    return PropertyReport(
                        "totally-positive", (1, r_eff), FAILS,
                        witness={"rows": rows, "cols": cols, "minor": minor},
                        note=note,
                    )
    return PropertyReport("totally-positive", (1, max(r_eff, 0)), HOLDS, note=note)


def is_pf_r(s: NumSeq, r: int, window: int) -> PropertyReport:
    """Polya frequency of order r, certified on a finite Toeplitz window only."""
    report = is_tp_r(toeplitz(s, window), r)
    note = f"verdict for the {window}x{window} Toeplitz window only"
    if report.note:
        note = f"{note}; {report.note}"
    return PropertyReport(
        "polya-frequency", report.checked, report.verdict,
        witness=report.witness, note=note,
    )


def is_q_tp2(matrix: Sequence[Sequence[QPoly]]) -> PropertyReport:
    """Every 2x2 minor of a polynomial matrix is >=_q 0."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for rows in combinations(range(nrows), 2):
        for cols in combinations(range(ncols), 2):
            i1, i2 = rows
            j1, j2 = cols
            minor = matrix[i1][j1] * matrix[i2][j2] - matrix[i1][j2] * matrix[i2][j1]
            verdict = poly_geq_q(minor, QPoly.ZERO)
            if not verdict:
                return PropertyReport(
                    "q-totally-positive-2", (1, 2), FAILS,
                    witness={
                        "rows": rows, "cols": cols,
                        "coeff_index": verdict.index, "coeff": verdict.value,
                    },
                )
    return PropertyReport("q-totally-positive-2", (1, 2), HOLDS)
