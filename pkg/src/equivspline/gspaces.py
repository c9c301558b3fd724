"""Dimension bookkeeping for the spline spaces G(X) and their module versions.

``G(X)`` splits as a sum over rational subspaces r of copies of D(X ∩ r),
and the filtration level ``G(X)_i`` keeps the summands with ``dim r >= i``.
Only dimensions are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import GradedDims, monomial_count, rank as matrix_rank
from .arrangement import VectorList, rational_subspaces, restrict, tutte
from .dmspace import dspace_dims
from .errors import InvariantError, PreconditionError


def restricted_dspace_dims(X: VectorList, sub) -> GradedDims:
    """Graded dims of D(X ∩ r) in intrinsic coordinates; constants for the origin."""
    Xr = restrict(X, sub)
    if Xr is None:
        return GradedDims((1,))
    return dspace_dims(Xr)


@dataclass
class FiltrationReport:
    levels: list  # dim G(X)_i for i = 0..s
    per_subspace: dict  # i -> list of (index set, dim D(X ∩ r))
    total: int

    def to_json(self) -> dict:
        return {
            "levels": [{"i": i, "dim": d} for i, d in enumerate(self.levels)],
            "subspaces": [
                {"i": i, "indices": list(idx), "dim_D": dim}
                for i in sorted(self.per_subspace)
                for idx, dim in self.per_subspace[i]
            ],
            "total": self.total,
        }


def filtration_report(X: VectorList) -> FiltrationReport:
    X.require_spanning()
    subs = rational_subspaces(X)
    per = {
        i: [(r.index_set, restricted_dspace_dims(X, r).total) for r in subs[i]]
        for i in range(X.s + 1)
    }
    levels = [sum(dim for j in range(i, X.s + 1) for _, dim in per[j]) for i in range(X.s + 1)]
    report = FiltrationReport(levels, per, levels[0])
    independent = tutte(X)(2, 1)
    if report.total != independent:
        raise InvariantError(f"dim G(X) = {report.total} but X has {independent} independent sublists")
    return report


def independent_sublists_by_span(X: VectorList) -> list[int]:
    """Count independent sublists (empty one included) by the dimension of their span."""
    counts = [0] * (X.s + 1)
    counts[0] = 1
    for size in range(1, X.s + 1):
        for sub in combinations(range(X.m), size):
            if matrix_rank([X[i] for i in sub]) == size:
                counts[size] += 1
    return counts


def exact_sequence_check(X: VectorList, i: int) -> bool:
    """``dim G_i = dim G_(i+1) + sum_{r in S_X(i)} dim D(X ∩ r)``, with G dims from sublist counts."""
    if not 0 <= i < X.s:
        raise PreconditionError(f"i must lie in 0..{X.s - 1}")
    counts = independent_sublists_by_span(X)
    g_i = sum(counts[i:])
    g_next = sum(counts[i + 1 :])
    pieces = sum(restricted_dspace_dims(X, r).total for r in rational_subspaces(X)[i])
    return g_i == g_next + pieces


@dataclass
class CompactSupportTable:
    level: int
    entries: dict  # cohomological degree -> dim
    truncated: bool = False
    metadata: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "entries": [{"degree": h, "dim": v} for h, v in sorted(self.entries.items())],
            "truncated": self.truncated,
            "conventions": self.metadata,
        }


def compact_support_betti_fin(X: VectorList, max_h: int | None = None) -> CompactSupportTable:
    """Compactly supported Betti numbers of the finite-stabilizer stratum, read off D(X).

    Degree h carries D(X) in polynomial degree ``(4m - 2s - h) / 2``.
    """
    X.require_spanning()
    top = 4 * X.m - 2 * X.s
    if max_h is None:
        max_h = top
    dims = dspace_dims(X)
    entries = {}
    for h in range(max_h + 1):
        if h % 2 or h > top:
            entries[h] = 0
        else:
            entries[h] = dims[(top - h) // 2]
    return CompactSupportTable(
        X.s,
        entries,
        truncated=max_h < top,
        metadata={"reflection": top, "rule": "h = 4m - 2s - 2 * polynomial_degree"},
    )


def _series_product(a: list[int], free_vars: int, length: int) -> list[int]:
    # multiply by 1 / (1 - q)^free_vars, i.e. by the Hilbert series of a polynomial ring
    ring = [monomial_count(free_vars, d) for d in range(length)]
    out = [0] * length
    for i, ai in enumerate(a[:length]):
        for j in range(length - i):
            out[i + j] += ai * ring[j]
    return out


def stratum_betti_series(X: VectorList, i: int, max_degree: int | None = None) -> CompactSupportTable:
    """Graded dimensions of the module generated by ``G(X)_i``.

    Each rational r of dimension >= i contributes the series of D(X ∩ r)
    times that of a polynomial ring in ``s - dim r`` variables.  Entries
    are keyed by cohomological degree ``2 * d``; this grading is a reporting
    convention (see metadata), with no shift applied.
    """
    X.require_spanning()
    if not 0 <= i <= X.s:
        raise PreconditionError(f"stratum level must lie in 0..{X.s}")
    if max_degree is None:
        max_degree = X.m
    length = max_degree + 1
    total = [0] * length
    for j, subs in rational_subspaces(X).items():
        if j < i:
            continue
        for r in subs:
            piece = _series_product(list(restricted_dspace_dims(X, r).dims), X.s - j, length)
            total = [a + b for a, b in zip(total, piece)]
    entries = {}
    for d, v in enumerate(total):
        entries[2 * d] = v
        entries[2 * d + 1] = 0
    finite = i == X.s
    return CompactSupportTable(
        i,
        entries,
        truncated=not finite and any(total),
        metadata={
            "grading": "cohomological degree = 2 * (polynomial degree of the D-part + transverse degree)",
            "offset": 0,
            "compact_support_reflection": 4 * X.m - 2 * X.s if finite else None,
            "convention": "reporting convention, not fixed by the source theory for i < s",
        },
    )
