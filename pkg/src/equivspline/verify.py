"""Per-list verification suites, shared by the CLI and the acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import determinant, product_operator
from .arrangement import VectorList, enumerate_bases, positive_functional, rational_subspaces, tutte
from .dmspace import annihilator_check, deletion_image_check, dspace_dims, duality_pairing_matrix
from .gspaces import (
    compact_support_betti_fin,
    exact_sequence_check,
    filtration_report,
    independent_sublists_by_span,
)
from .ideals import IdealSpec, downward_closure, external_activity_series, hilbert, verify_lamain
from .splines import eval_T, local_piece, probe_witnesses, verify_deletion

SUITES = ("lamain", "duality", "exactseq", "tutte", "spline")


def admissible_sets(X: VectorList, limit: int | None = None, seed: int = 0) -> list[list]:
    """Admissible sets of rational subspaces, as downward closures of antichains.

    With ``limit`` set and more candidates than that, a seeded sample is
    returned instead of the full list.
    """
    flats = [r for k in sorted(rational_subspaces(X)) for r in rational_subspaces(X)[k]]
    antichains: list[tuple] = []

    def grow(start: int, chosen: tuple):
        antichains.append(chosen)
        for j in range(start, len(flats)):
            f = flats[j]
            if all(not f.contains(c) and not c.contains(f) for c in chosen):
                grow(j + 1, chosen + (f,))

    grow(0, ())
    antichains = [a for a in antichains if a]
    if limit is not None and len(antichains) > limit:
        antichains = random.Random(seed).sample(antichains, limit)
    return [downward_closure(X, a) for a in antichains]


def lamain_suite(X: VectorList, limit: int | None = None, seed: int = 0) -> dict:
    checks = []
    for Q in admissible_sets(X, limit, seed):
        top = max(r.dim for r in Q)
        for s in Q:
            if s.dim != top:
                continue
            report = verify_lamain(X, Q, s)
            checks.append(
                {
                    "Q": [list(r.index_set) for r in Q],
                    "s": list(s.index_set),
                    "holds": report.holds,
                }
            )
    return {"passed": all(c["holds"] for c in checks), "checks": checks}


def duality_suite(X: VectorList) -> dict:
    dims = dspace_dims(X)
    hil = hilbert(X, IdealSpec.full())
    nonsingular = []
    for d in range(X.m - X.s + 1):
        mat = duality_pairing_matrix(X, d)
        square = len(mat) == dims[d] and all(len(row) == dims[d] for row in mat)
        nonsingular.append(square and (dims[d] == 0 or determinant(mat) != 0))
    annihilated = [annihilator_check(X, k) for k in range(X.s + 1)]
    deletions = [deletion_image_check(X, i) for i in range(X.m)]
    checks = {
        "dims_match_hilbert": dims == hil,
        "pairing_nonsingular": all(nonsingular),
        "annihilator": all(annihilated),
        "deletion_onto": all(v is not False for v in deletions),
    }
    return {
        "passed": all(checks.values()),
        "checks": checks,
        "dspace_dims": list(dims.dims),
        "hilbert": list(hil.dims),
    }


def exactseq_suite(X: VectorList) -> dict:
    report = filtration_report(X)
    counts = independent_sublists_by_span(X)
    by_counting = [sum(counts[i:]) for i in range(X.s + 1)]
    cs = compact_support_betti_fin(X)
    support = [h for h, v in cs.entries.items() if v]
    checks = {
        "exact_at_every_level": all(exact_sequence_check(X, i) for i in range(X.s)),
        "total_is_independent_count": report.total == tutte(X)(2, 1),
        "levels_two_ways": report.levels == by_counting,
        "top_level_is_bases": report.levels[X.s] == len(enumerate_bases(X)),
        "compact_support_even": all(h % 2 == 0 for h in support),
        "compact_support_range": all(2 * X.m <= h <= 4 * X.m - 2 * X.s for h in support),
        "compact_support_total": cs.total == len(enumerate_bases(X)),
    }
    return {"passed": all(checks.values()), "checks": checks, "levels": report.levels}


def tutte_suite(X: VectorList) -> dict:
    T = tutte(X)
    hil = hilbert(X, IdealSpec.full())
    bases = len(enumerate_bases(X))
    checks = {
        "bases_is_T11": T(1, 1) == bases,
        "hilbert_total_is_bases": hil.total == bases and not hil.truncated,
        "hilbert_is_external_activity": hil == external_activity_series(X),
        "T21_is_independent_count": T(2, 1) == sum(independent_sublists_by_span(X)),
    }
    return {"passed": all(checks.values()), "checks": checks}


def spline_suite(X: VectorList) -> dict:
    phi = positive_functional(X)
    if phi is None:
        return {"passed": True, "skipped": "no functional is positive on all of X", "checks": {}}
    witnesses = probe_witnesses(X)
    deletion = [verify_deletion(X, i) for i in range(X.m)]
    all_ops_kill = True
    homogeneous = True
    support = True
    degree = X.m - X.s
    for w in witnesses:
        piece = local_piece(X, w, phi).polynomial
        if X.m > X.s and not product_operator(piece, X.vectors).is_zero():
            all_ops_kill = False
        if not piece.is_zero() and (piece.degree() != degree or not piece.is_homogeneous()):
            homogeneous = False
        for lam in (Fraction(2), Fraction(1, 3)):
            if eval_T(X, [lam * v for v in w], phi) != lam**degree * eval_T(X, w, phi):
                homogeneous = False
        if sum(p * v for p, v in zip(phi, w)) < 0 and eval_T(X, w, phi) != 0:
            support = False
    checks = {
        "deletion_identity": all(v is not False for v in deletion),
        "pieces_killed_by_full_operator": all_ops_kill,
        "homogeneity": homogeneous,
        "support_in_halfspace": support,
    }
    return {"passed": all(checks.values()), "checks": checks, "chambers": len(witnesses)}


def run_suite(name: str, X: VectorList) -> dict:
    X.require_spanning()
    if name == "all":
        results = {n: run_suite(n, X) for n in SUITES}
        return {"passed": all(r["passed"] for r in results.values()), "suites": results}
    runner = {
        "lamain": lamain_suite,
        "duality": duality_suite,
        "exactseq": exactseq_suite,
        "tutte": tutte_suite,
        "spline": spline_suite,
    }.get(name)
    if runner is None:
        raise ValueError(f"unknown suite {name!r}")
    return runner(X)
