"""The Dahmen-Micchelli space D(X): polynomials killed by every cocircuit operator."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial

from .algebra import (
    GradedDims,
    MultiPoly,
    apply_operator,
    coordinates,
    graded_kernel,
    ideal_degree_rows,
    monomials,
    product_operator,
    rank,
)
from .arrangement import VectorList, cocircuits, enumerate_bases, rational_subspaces
from .errors import InvariantError, PreconditionError
from .ideals import IdealSpec, generators


@dataclass(frozen=True)
class DSpaceBasis:
    by_degree: dict

    @property
    def dims(self) -> GradedDims:
        top = max(self.by_degree, default=-1)
        dims = [len(self.by_degree.get(d, ())) for d in range(top + 1)]
        while dims and dims[-1] == 0:
            dims.pop()
        return GradedDims(tuple(dims))

    def elements(self) -> list[MultiPoly]:
        return [f for d in sorted(self.by_degree) for f in self.by_degree[d]]

    def to_json(self) -> dict:
        return {
            str(d): [f.to_json() for f in fs] for d, fs in sorted(self.by_degree.items())
        }


def cocircuit_operators(X: VectorList) -> list:
    """The operators ``d_Y``, one per cocircuit Y, as callables on polynomials."""
    return [partial(product_operator, vectors=[X[i] for i in c.complement]) for c in cocircuits(X)]


def dspace_basis(X: VectorList) -> DSpaceBasis:
    """Reduced grlex basis of D(X), degree by degree up to m - s."""
    X.require_spanning()
    return _dspace_basis(X)


@lru_cache(maxsize=8192)
def _dspace_basis(X: VectorList) -> DSpaceBasis:
    ops = cocircuit_operators(X)
    top = X.m - X.s
    by_degree = {d: graded_kernel(ops, X.s, d) for d in range(top + 1)}
    total = sum(len(v) for v in by_degree.values())
    expected = len(enumerate_bases(X))
    if total != expected:
        raise InvariantError(f"D(X) has dimension {total}, expected {expected} bases")
    if graded_kernel(ops, X.s, top + 1):
        raise InvariantError(f"D(X) is nonzero in degree {top + 1} > m - s")
    return DSpaceBasis(by_degree)


def dspace_dims(X: VectorList) -> GradedDims:
    return dspace_basis(X).dims


def standard_monomials(X: VectorList, d: int) -> list[tuple[int, ...]]:
    """Degree-d monomials, chosen greedily in grlex order, whose classes span (S/I_X)_d."""
    gens = generators(X, IdealSpec.full())
    rows = ideal_degree_rows(gens, X.s, d)
    basis = monomials(X.s, d)
    current = rank(rows) if rows else 0
    chosen = []
    for e in basis:
        trial = rows + [coordinates(MultiPoly.monomial(e), basis)]
        r = rank(trial)
        if r > current:
            rows, current = trial, r
            chosen.append(e)
    return chosen


def duality_pairing_matrix(X: VectorList, d: int) -> list[list[Fraction]]:
    """Pairing ``(p(d) f)(0)`` between standard monomials p and the D(X) basis in degree d."""
    if not 0 <= d <= X.m - X.s:
        raise PreconditionError(f"degree {d} is outside 0..{X.m - X.s}")
    basis = dspace_basis(X).by_degree[d]
    monos = standard_monomials(X, d)
    return [
        [apply_operator(MultiPoly.monomial(e), f).coefficient((0,) * X.s) for f in basis]
        for e in monos
    ]


def annihilator_check(X: VectorList, k: int) -> bool:
    """For every rational t with dim t < k, ``d_{X minus t}`` kills all of D(X)."""
    if not 0 <= k <= X.s:
        raise PreconditionError(f"k must lie in 0..{X.s}")
    elements = dspace_basis(X).elements()
    for dim, subs in rational_subspaces(X).items():
        if dim >= k:
            continue
        for t in subs:
            Y = [X[i] for i in X.complement(t.index_set)]
            if any(not product_operator(f, Y).is_zero() for f in elements):
                return False
    return True


def deletion_image_check(X: VectorList, index: int) -> bool | None:
    """``d_a`` maps D(X) onto D(X minus a); None when X minus a does not span."""
    Xa = X.without(index)
    if not Xa.spans:
        return None
    a = X[index]
    source = dspace_basis(X)
    target = dspace_basis(Xa)
    for d, fs in target.by_degree.items():
        basis = monomials(X.s, d)
        images = [product_operator(f, [a]) for f in source.by_degree.get(d + 1, [])]
        image_rows = [coordinates(g, basis) for g in images if not g.is_zero()]
        target_rows = [coordinates(f, basis) for f in fs]
        r_img = rank(image_rows) if image_rows else 0
        if r_img != len(target_rows):
            return False
        if target_rows and rank(image_rows + target_rows) != r_img:
            return False
    return True
