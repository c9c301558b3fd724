"""Acceptance checks, one per criterion, each printing a single PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest
(``pytest tests/test_acceptance.py -s`` shows the lines).  Every comparison
is exact: values are Fractions or integers and tolerance is zero.

Instance families come from ``equivspline.instances``.  The algebra family
covers every multiset of primitive lines from [-2, 2]^s with m <= 6 for
s <= 2, the rank-3 lines from [-1, 1]^3 with m <= 4, a seeded sample of
rank-3 lists with m = 5 and 6, plus 1^{k+1} for k <= 5 and a few lists with
repeated, scaled and negated vectors.
"""

from __future__ import annotations

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

from equivspline.arrangement import enumerate_bases, tutte
from equivspline.dmspace import dspace_dims
from equivspline.gspaces import compact_support_betti_fin, filtration_report
from equivspline.ideals import IdealSpec, external_activity_series, hilbert
from equivspline.instances import algebra_family, one_power, spline_family
from equivspline.splines import eval_T
from equivspline.verify import duality_suite, exactseq_suite, lamain_suite, spline_suite

LAMAIN_S3_SAMPLE = 6
LAMAIN_SEED = 1


def _report(number: int, title: str, ok: bool, detail: str, seconds: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number}: {title} ({detail}; {seconds:.1f} s)")


def _first_failures(items, limit=3):
    return ", ".join(repr(X) for X in items[:limit])


def criterion_1():
    bad = []
    points = [Fraction(1, 3), Fraction(1), Fraction(5, 2), Fraction(4), Fraction(22, 7)]
    for k in range(6):
        X = one_power(k)
        if dspace_dims(X).dims != (1,) * (k + 1):
            bad.append(f"dims k={k}")
        for c in points:
            if eval_T(X, [c]) != c**k / math.factorial(k):
                bad.append(f"T k={k} x={c}")
        if filtration_report(X).total != k + 2:
            bad.append(f"G k={k}")
    return not bad, "1^{k+1}, k=0..5, 5 points each" + (f"; failed: {bad}" if bad else "")


def criterion_2():
    fam = algebra_family()
    bad = []
    for X in fam:
        r = duality_suite(X)
        if not (r["checks"]["dims_match_hilbert"] and r["checks"]["pairing_nonsingular"]):
            bad.append(X)
    return not bad, f"{len(fam)} lists" + (f"; failed: {_first_failures(bad)}" if bad else "")


def criterion_3():
    fam = algebra_family()
    bad = []
    for X in fam:
        dims = hilbert(X, IdealSpec.full())
        n = len(enumerate_bases(X))
        if dims.truncated or dims.total != n or tutte(X)(1, 1) != n:
            bad.append(X)
    return not bad, f"{len(fam)} lists" + (f"; failed: {_first_failures(bad)}" if bad else "")


def criterion_4():
    fam = algebra_family()
    bad, checked = [], 0
    for X in fam:
        if X.s == 2:
            r = lamain_suite(X)
        elif X.s == 3:
            r = lamain_suite(X, limit=LAMAIN_S3_SAMPLE, seed=LAMAIN_SEED)
        else:
            continue
        checked += len(r["checks"])
        if not r["passed"]:
            bad.append(X)
    detail = f"{checked} (Q, s) pairs; all admissible Q for s=2, {LAMAIN_S3_SAMPLE} sampled Q per list for s=3"
    return not bad, detail + (f"; failed: {_first_failures(bad)}" if bad else "")


def criterion_5():
    fam = algebra_family()
    bad = [X for X in fam if hilbert(X, IdealSpec.full()) != external_activity_series(X)]
    return not bad, f"{len(fam)} lists, dims[d] = #bases with external activity m-s-d" + (
        f"; failed: {_first_failures(bad)}" if bad else ""
    )


def criterion_6():
    fam = algebra_family()
    bad = []
    for X in fam:
        c = exactseq_suite(X)["checks"]
        if not (c["exact_at_every_level"] and c["total_is_independent_count"] and c["levels_two_ways"]):
            bad.append(X)
    return not bad, f"{len(fam)} lists" + (f"; failed: {_first_failures(bad)}" if bad else "")


def criterion_7():
    fam = spline_family()
    bad, chambers = [], 0
    for X in fam:
        r = spline_suite(X)
        chambers += r.get("chambers", 0)
        if not r["passed"]:
            bad.append(X)
    return not bad, f"{len(fam)} acute lists, {chambers} chambers" + (
        f"; failed: {_first_failures(bad)}" if bad else ""
    )


def criterion_8():
    fam = algebra_family()
    bad = []
    for X in fam:
        table = compact_support_betti_fin(X)
        support = [h for h, v in table.entries.items() if v]
        ok = all(h % 2 == 0 and 2 * X.m <= h <= 4 * X.m - 2 * X.s for h in support)
        if not ok or table.total != len(enumerate_bases(X)):
            bad.append(X)
    return not bad, f"{len(fam)} lists" + (f"; failed: {_first_failures(bad)}" if bad else "")


DETERMINISM_INPUTS = [
    {"dim": 2, "vectors": [[1, 0], [0, 1], [1, 1]]},
    {"dim": 1, "vectors": [[1], [1], [1]]},
    {"dim": 3, "vectors": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]},
    {"dim": 2, "vectors": [[1, 0], [0, 1], [-1, -1]]},
]


def _cli_once(doc):
    proc = subprocess.run(
        [sys.executable, "-m", "equivspline.cli", "verify", "--suite", "all"],
        input=json.dumps(doc).encode(),
        capture_output=True,
        check=False,
    )
    return proc.returncode, proc.stdout


def criterion_9():
    bad = []
    for doc in DETERMINISM_INPUTS:
        a, b = _cli_once(doc), _cli_once(doc)
        if a != b or a[0] != 0:
            bad.append(doc["vectors"])
    return not bad, f"{len(DETERMINISM_INPUTS)} inputs, two processes each" + (f"; differed: {bad}" if bad else "")


CRITERIA = [
    (1, "one-dimensional lists 1^{k+1}", criterion_1),
    (2, "D(X) dual to S/I_X", criterion_2),
    (3, "scheme length equals number of bases", criterion_3),
    (4, "intersection formula for admissible Q", criterion_4),
    (5, "Hilbert series equals external activity", criterion_5),
    (6, "filtration exactness and independent sublists", criterion_6),
    (7, "spline deletion identity and local pieces", criterion_7),
    (8, "compact-support grading", criterion_8),
    (9, "determinism of verify --suite all", criterion_9),
]


def _run(number):
    _, title, fn = CRITERIA[number - 1]
    started = time.perf_counter()
    ok, detail = fn()
    _report(number, title, ok, detail, time.perf_counter() - started)
    return ok


def test_criterion_1():
    assert _run(1)


def test_criterion_2():
    assert _run(2)


def test_criterion_3():
    assert _run(3)


def test_criterion_4():
    assert _run(4)


def test_criterion_5():
    assert _run(5)


def test_criterion_6():
    assert _run(6)


def test_criterion_7():
    assert _run(7)


def test_criterion_8():
    assert _run(8)


def test_criterion_9():
    assert _run(9)


if __name__ == "__main__":
    results = [_run(n) for n, _, _ in CRITERIA]
    sys.exit(0 if all(results) else 1)
