"""Cocircuit ideals, their Hilbert functions, and equivariant Betti tables of strata."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import GradedDims, MultiPoly, graded_ideal_dims, ideal_degree_rows, monomial_count, rank
from .arrangement import (
    RationalSubspace,
    VectorList,
    enumerate_bases,
    rational_subspaces,
    tutte,
)
from .errors import PreconditionError


def d_poly(X: VectorList, indices: Iterable[int]) -> MultiPoly:
    """Product of the linear forms of the selected vectors (1 for the empty set)."""
    indices = tuple(indices)
    for i in indices:
        if not 0 <= i < X.m:
            raise IndexError(f"index {i} out of range for a list of length {X.m}")
    return _d_poly(X, indices)


@lru_cache(maxsize=65536)
def _d_poly(X: VectorList, indices: tuple[int, ...]) -> MultiPoly:
    p = MultiPoly.constant(X.s)
    for i in indices:
        p = p * MultiPoly.linear_form(X[i])
    return p


@dataclass(frozen=True)
class IdealSpec:
    """Which ideal to build: ``full`` (I_X), ``level`` (I_k) or ``subspaces`` (I_Q)."""

    kind: str
    k: int | None = None
    subspaces: tuple[RationalSubspace, ...] = ()

    @classmethod
    def full(cls) -> "IdealSpec":
        return cls("full")

    @classmethod
    def level(cls, k: int) -> "IdealSpec":
        return cls("level", k=k)

    @classmethod
    def of_subspaces(cls, Q: Iterable[RationalSubspace]) -> "IdealSpec":
        return cls("subspaces", subspaces=tuple(Q))


def _check_member(X: VectorList, sub: RationalSubspace, catalog) -> None:
    if sub not in catalog.get(sub.dim, ()):
        raise PreconditionError(f"{sub.index_set} is not a rational subspace of X")


def generators(X: VectorList, spec: IdealSpec) -> list[MultiPoly]:
    X.require_spanning()
    subs = rational_subspaces(X)
    if spec.kind == "full":
        chosen = subs[X.s - 1]
    elif spec.kind == "level":
        if spec.k is None or not 0 <= spec.k <= X.s - 1:
            raise PreconditionError(f"level k must lie in 0..{X.s - 1}, got {spec.k}")
        chosen = subs[spec.k]
    elif spec.kind == "subspaces":
        for r in spec.subspaces:
            _check_member(X, r, subs)
        chosen = spec.subspaces
    else:
        raise PreconditionError(f"unknown ideal kind {spec.kind!r}")
    return [d_poly(X, X.complement(r.index_set)) for r in chosen]


def hilbert(X: VectorList, spec: IdealSpec, max_degree: int | None = None) -> GradedDims:
    """Hilbert function of ``S / I`` up to ``max_degree`` (default: the length of X)."""
    gens = generators(X, spec)
    if max_degree is None:
        max_degree = X.m
    return graded_ideal_dims(gens, max_degree, X.s)


def external_activity_series(X: VectorList) -> GradedDims:
    """Number of bases by external activity, read so that degree d counts e(B) = m - s - d."""
    top = X.m - X.s
    dims = [0] * (top + 1)
    for e in tutte(X).external.values():
        dims[top - e] += 1
    while dims and dims[-1] == 0:
        dims.pop()
    return GradedDims(tuple(dims))


@dataclass(frozen=True)
class BettiTable:
    """Dimensions keyed by cohomological degree (twice the polynomial degree)."""

    entries: dict
    max_degree: int
    truncated: bool

    @classmethod
    def from_dims(cls, dims: GradedDims, max_degree: int) -> "BettiTable":
        entries = {}
        for d in range(max_degree + 1):
            entries[2 * d] = dims[d]
            entries[2 * d + 1] = 0
        return cls(entries, max_degree, dims.truncated)

    def to_json(self) -> dict:
        return {
            "entries": [
                {"cohomological_degree": h, "polynomial_degree": h // 2 if h % 2 == 0 else None, "dim": v}
                for h, v in sorted(self.entries.items())
            ],
            "truncated": self.truncated,
        }


def betti_open_stratum(
    X: VectorList, Q: Sequence[RationalSubspace], max_degree: int | None = None
) -> BettiTable:
    """Equivariant Betti numbers of the open set attached to Q: ``S / I_Q`` regraded by 2."""
    X.require_spanning()
    if max_degree is None:
        max_degree = X.m
    if not Q:
        dims = GradedDims(tuple(monomial_count(X.s, d) for d in range(max_degree + 1)), True)
    else:
        dims = hilbert(X, IdealSpec.of_subspaces(Q), max_degree)
    return BettiTable.from_dims(dims, max_degree)


def is_admissible(X: VectorList, Q: Iterable[RationalSubspace]) -> bool:
    Qs = set(Q)
    for sub_list in rational_subspaces(X).values():
        for t in sub_list:
            if t not in Qs and any(s.contains(t) for s in Qs):
                return False
    return True


def downward_closure(X: VectorList, Q: Iterable[RationalSubspace]) -> list[RationalSubspace]:
    """Q together with every rational subspace contained in one of its members."""
    Qs = list(Q)
    out = []
    for k, subs in sorted(rational_subspaces(X).items()):
        out.extend(t for t in subs if any(s.contains(t) for s in Qs))
    return out


def _ideal_dim(X: VectorList, subs: Iterable[RationalSubspace], d: int) -> int:
    """dim of the degree-d part of the ideal generated by d_{X minus r}, r in subs."""
    key = tuple(sorted({r.index_set for r in subs}))
    return _ideal_dim_cached(X, key, d)


@lru_cache(maxsize=200_000)
def _ideal_dim_cached(X: VectorList, index_sets: tuple, d: int) -> int:
    if not index_sets:
        return 0
    gens = [d_poly(X, X.complement(idx)) for idx in index_sets]
    return rank(ideal_degree_rows(gens, X.s, d))


@dataclass
class IntersectionReport:
    holds: bool
    per_degree: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"holds": self.holds, "per_degree": self.per_degree}


def verify_lamain(
    X: VectorList,
    Q: Sequence[RationalSubspace],
    s: RationalSubspace,
    max_degree: int | None = None,
) -> IntersectionReport:
    """Check ``I_s ∩ I_{Q minus s}`` against the sum of ``I_t`` over hyperplanes t of s.

    Works degree by degree: the intersection dimension comes from
    ``dim A + dim B - dim(A + B)`` and the right-hand side is additionally
    checked to sit inside both ideals by stacked ranks.
    """
    X.require_spanning()
    Q = list(Q)
    if s not in Q:
        raise PreconditionError("s must belong to Q")
    if not is_admissible(X, Q):
        raise PreconditionError("Q is not admissible: it must contain every rational subspace of its members")
    if any(r.dim > s.dim for r in Q):
        raise PreconditionError("s must have maximal dimension in Q")
    if max_degree is None:
        max_degree = X.m
    rest = [r for r in Q if r != s]
    k = s.dim
    faces = [t for t in rational_subspaces(X).get(k - 1, []) if s.contains(t)] if k > 0 else []
    holds = True
    per_degree = []
    for d in range(max_degree + 1):
        dim_s = _ideal_dim(X, [s], d)
        dim_rest = _ideal_dim(X, rest, d)
        inter = dim_s + dim_rest - _ideal_dim(X, Q, d)
        dim_rhs = _ideal_dim(X, faces, d)
        # a sum of ideals lies inside J exactly when adding its generators leaves dim J unchanged
        inside_s = _ideal_dim(X, [s, *faces], d) == dim_s
        inside_rest = _ideal_dim(X, rest + faces, d) == dim_rest
        ok = inter == dim_rhs and inside_s and inside_rest
        holds &= ok
        per_degree.append(
            {"degree": d, "intersection": inter, "rhs": dim_rhs, "contained": inside_s and inside_rest, "ok": ok}
        )
    return IntersectionReport(holds, per_degree)


def scheme_length(X: VectorList) -> int:
    return len(enumerate_bases(X))
