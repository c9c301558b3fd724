"""Deterministic families of small vector lists used by the verification suites.

Every invariant checked here depends on X only through the multiset of its
lines (each vector up to sign and scale), except the spline checks, which
need an acute list.  The families therefore enumerate multisets of
primitive line representatives from ``[-2, 2]^s``, oriented to be positive
on a fixed functional, and add a few lists with repeated, scaled and
negated vectors so the list-level code paths are still exercised.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, product

from .arrangement import VectorList, canonical_line


def primitive_lines(s: int, bound: int = 2) -> list[tuple[int, ...]]:
    """Primitive integer vectors in ``[-bound, bound]^s`` up to sign, positive on (1, 1/10, 1/100, ...)."""
    lines = set()
    for v in product(range(-bound, bound + 1), repeat=s):
        if any(v):
            lines.add(canonical_line(v))
    return sorted(lines, reverse=True)


def line_multisets(s: int, max_m: int, bound: int = 2, min_m: int | None = None):
    lines = primitive_lines(s, bound)
    for m in range(min_m or s, max_m + 1):
        for combo in combinations_with_replacement(lines, m):
            X = VectorList(s, combo)
            if X.spans:
                yield X


def one_power(k: int) -> VectorList:
    """The list ``1^{k+1}`` in dimension one."""
    return VectorList(1, ((1,),) * (k + 1))


EXTRAS = [
    VectorList(2, ((1, 0), (2, 0), (0, 1))),
    VectorList(2, ((1, 0), (0, 1), (-1, -1))),
    VectorList(2, ((2, 1), (-1, 2), (1, 0), (1, 0))),
    VectorList(1, ((2,), (-1,), (1,))),
    VectorList(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (2, 0, -2))),
]


def sample_multisets(s: int, m_range, count: int, seed: int, bound: int = 2) -> list[VectorList]:
    """Seeded random spanning multisets of lines, without repeats."""
    rng = random.Random(seed)
    lines = primitive_lines(s, bound)
    seen, out = set(), []
    attempts = 0
    while len(out) < count and attempts < 100 * count:
        attempts += 1
        m = rng.choice(list(m_range))
        combo = tuple(sorted(rng.choices(lines, k=m), reverse=True))
        if combo in seen:
            continue
        X = VectorList(s, combo)
        if X.spans:
            seen.add(combo)
            out.append(X)
    return out


def algebra_family() -> list[VectorList]:
    """Family for the ideal, D-space and filtration suites."""
    fam = [one_power(k) for k in range(6)]
    fam += list(line_multisets(1, 6))
    fam += list(line_multisets(2, 6))
    fam += list(line_multisets(3, 4, bound=1))
    fam += sample_multisets(3, range(5, 7), 60, seed=7)
    fam += EXTRAS
    return _dedupe(fam)


def spline_family() -> list[VectorList]:
    """Acute lists for the spline suite (all positive on (1, 1/10, 1/100))."""
    fam = [one_power(k) for k in range(6)]
    fam += list(line_multisets(2, 4))
    fam += sample_multisets(2, range(5, 7), 24, seed=11)
    fam += list(line_multisets(3, 3, bound=1))
    fam += sample_multisets(3, range(4, 5), 40, seed=13)
    fam += sample_multisets(3, range(5, 6), 10, seed=17)
    fam.append(VectorList(2, ((1, 0), (0, 1), (1, 1))))
    return _dedupe(fam)


def _dedupe(fam):
    seen, out = set(), []
    for X in fam:
        if X not in seen:
            seen.add(X)
            out.append(X)
    return out
