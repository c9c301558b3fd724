import random
from fractions import Fraction
from itertools import combinations

import pytest

from equivspline.arrangement import (
    VectorList,
    canonical_line,
    chambers,
    cocircuits,
    enumerate_bases,
    face_from_point,
    positive_functional,
    primitive,
    rank,
    rational_subspaces,
    restrict,
    span_subspace,
    tutte,
)
from equivspline.errors import NotSpanningError
from equivspline.instances import EXTRAS, line_multisets, one_power

THREE = VectorList.of([(1, 0), (0, 1), (1, 1)])


def rank_generating_tutte(X):
    """T(x, y) = sum over all sublists A of (x-1)^(r - r(A)) (y-1)^(|A| - r(A)), expanded."""
    from math import comb

    r = X.full_rank
    coeffs = {}
    for size in range(X.m + 1):
        for A in combinations(range(X.m), size):
            ra = rank(X, A)
            p, q = r - ra, size - ra
            for i in range(p + 1):
                for j in range(q + 1):
                    c = comb(p, i) * comb(q, j) * (-1) ** (p - i + q - j)
                    coeffs[(i, j)] = coeffs.get((i, j), 0) + c
    return {k: v for k, v in coeffs.items() if v}


def small_lists():
    yield from (one_power(k) for k in range(4))
    yield from line_multisets(2, 4, bound=1)
    yield from line_multisets(3, 4, bound=1)
    yield from EXTRAS


def test_three_vector_example():
    assert enumerate_bases(THREE) == [(0, 1), (0, 2), (1, 2)]
    subs = rational_subspaces(THREE)
    assert [len(subs[k]) for k in range(3)] == [1, 3, 1]
    assert tutte(THREE).coefficients == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert len(cocircuits(THREE)) == 3


def test_vector_normalisation():
    assert primitive((2, -4)) == (1, -2)
    assert canonical_line((0, -3)) == (0, 1)
    with pytest.raises(ValueError):
        VectorList.of([(0, 0)])
    with pytest.raises(NotSpanningError):
        VectorList(2, ((1, 0), (2, 0))).require_spanning()


def test_tutte_matches_rank_generating_function():
    for X in small_lists():
        T = tutte(X)
        assert T.coefficients == rank_generating_tutte(X), X
        assert T(1, 1) == len(enumerate_bases(X))


def test_subspaces_are_spans_of_what_they_contain():
    for X in list(small_lists())[:40]:
        for k, subs in rational_subspaces(X).items():
            for r in subs:
                assert r.dim == k
                assert span_subspace(X, r.index_set) == r


def _chambers_by_sampling(X, trials=4000, seed=3):
    rng = random.Random(seed)
    seen = set()
    for _ in range(trials):
        phi = [Fraction(rng.randint(-60, 60), rng.randint(1, 7)) for _ in range(X.s)]
        vals = [sum(p * c for p, c in zip(phi, a)) for a in X.vectors]
        if all(vals):
            seen.add(tuple(1 if v > 0 else -1 for v in vals))
    return seen


@pytest.mark.parametrize(
    "X",
    [THREE, one_power(2), VectorList.of([(1, 0), (0, 1), (1, 1), (1, -1)]), VectorList.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])],
    ids=repr,
)
def test_chambers_agree_with_random_functionals(X):
    found = {f.signs for f in chambers(X)}
    assert found == _chambers_by_sampling(X)
    for face in chambers(X):
        assert face_from_point(X, face.witness) == face


def test_chamber_count_matches_zaslavsky():
    # number of regions of a central arrangement = |chi(-1)| = T(2, 0) on distinct lines
    for X in list(line_multisets(2, 4, bound=1)) + list(line_multisets(3, 4, bound=1)):
        assert len(chambers(X)) == tutte(X)(2, 0)


def test_positive_functional_and_restriction():
    assert positive_functional(THREE) is not None
    assert positive_functional(VectorList.of([(1,), (-1,)])) is None
    line = span_subspace(THREE, [2])
    Xr = restrict(THREE, line)
    assert Xr.s == 1 and Xr.m == 1
    assert restrict(THREE, rational_subspaces(THREE)[0][0]) is None
