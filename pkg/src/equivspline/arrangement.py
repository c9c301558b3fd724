"""Matroid and arrangement combinatorics of an integer vector list.

Indices into a list are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .algebra import determinant, nullspace, rank as matrix_rank, row_reduce, solve
from .errors import NotSpanningError

IndexSet = tuple[int, ...]


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(v) for v in vec]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def canonical_line(vec: Sequence) -> tuple[int, ...]:
    """Primitive integer vector with first nonzero entry positive."""
    p = primitive(vec)
    lead = next((v for v in p if v), 0)
    return tuple(-v for v in p) if lead < 0 else p


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class VectorList:
    """The ordered list X = (a_1, ..., a_m) of nonzero integer vectors in Z^s."""

    s: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(int(v) for v in a) for a in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if self.s < 1:
            raise ValueError("ambient dimension must be positive")
        for a in vecs:
            if len(a) != self.s:
                raise ValueError(f"vector {a} does not have {self.s} entries")
            if not any(a):
                raise ValueError("vectors of X must be nonzero")

    @classmethod
    def of(cls, vectors: Iterable[Sequence[int]], s: int | None = None) -> "VectorList":
        vecs = tuple(tuple(v) for v in vectors)
        if s is None:
            if not vecs:
                raise ValueError("dimension needed for an empty list")
            s = len(vecs[0])
        return cls(s, vecs)

    @property
    def m(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    @cached_property
    def full_rank(self) -> int:
        return matrix_rank(self.vectors) if self.vectors else 0

    @property
    def spans(self) -> bool:
        return self.full_rank == self.s

    def require_spanning(self) -> None:
        if not self.spans:
            raise NotSpanningError(self.full_rank, self.s)

    def sublist(self, indices: Iterable[int]) -> "VectorList":
        return VectorList(self.s, tuple(self.vectors[i] for i in indices))

    def without(self, index: int) -> "VectorList":
        return self.sublist(i for i in range(self.m) if i != index)

    def complement(self, indices: Iterable[int]) -> IndexSet:
        drop = set(indices)
        return tuple(i for i in range(self.m) if i not in drop)

    def to_json(self) -> dict:
        return {"dim": self.s, "vectors": [list(a) for a in self.vectors]}


def rank(X: VectorList, subset: Iterable[int]) -> int:
    idx = list(subset)
    for i in idx:
        if not 0 <= i < X.m:
            raise IndexError(f"index {i} out of range for a list of length {X.m}")
    if not idx:
        return 0
    return matrix_rank([X[i] for i in idx])


def is_basis(X: VectorList, subset: Sequence[int]) -> bool:
    return len(subset) == X.s and determinant([X[i] for i in subset]) != 0


def enumerate_bases(X: VectorList) -> list[IndexSet]:
    """All bases of X as sorted index tuples, in lexicographic order."""
    X.require_spanning()
    return [B for B in combinations(range(X.m), X.s) if is_basis(X, B)]


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace spanned by the vectors of X it contains.

    ``index_set`` is the maximal set of indices whose vectors lie in the
    subspace; ``basis`` is its reduced row echelon form with each row scaled
    to a primitive integer vector.
    """

    index_set: IndexSet
    dim: int
    basis: tuple[tuple[int, ...], ...]

    def contains(self, other: "RationalSubspace") -> bool:
        return set(other.index_set) <= set(self.index_set)

    def to_json(self) -> dict:
        return {
            "indices": list(self.index_set),
            "dim": self.dim,
            "basis": [list(r) for r in self.basis],
        }


def _span_key(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    red, _ = row_reduce(rows)
    return tuple(primitive(r) for r in red)


def _closure(X: VectorList, basis: Sequence[Sequence[int]], dim: int) -> IndexSet:
    if dim == 0:
        return ()
    return tuple(i for i in range(X.m) if matrix_rank(list(basis) + [X[i]]) == dim)


def span_subspace(X: VectorList, indices: Iterable[int]) -> RationalSubspace:
    """The rational subspace spanned by the given sublist, closed to its maximal index set."""
    idx = list(indices)
    if not idx:
        return RationalSubspace((), 0, ())
    key = _span_key([X[i] for i in idx])
    return RationalSubspace(_closure(X, key, len(key)), len(key), key)


def rational_subspaces(X: VectorList) -> dict[int, list[RationalSubspace]]:
    """Rational subspaces grouped by dimension 0..rank(X), each list sorted by index set."""
    return {k: list(v) for k, v in _rational_subspaces(X).items()}


@lru_cache(maxsize=8192)
def _rational_subspaces(X: VectorList) -> dict[int, tuple[RationalSubspace, ...]]:
    found: dict[tuple, RationalSubspace] = {(): RationalSubspace((), 0, ())}
    frontier = [found[()]]
    # grow spans one vector at a time; every rational subspace of dim k+1 is
    # the span of one of dim k plus a vector outside it
    while frontier:
        nxt = []
        for sub in frontier:
            inside = set(sub.index_set)
            for i in range(X.m):
                if i in inside:
                    continue
                key = _span_key(list(sub.basis) + [X[i]])
                if key not in found:
                    found[key] = RationalSubspace(_closure(X, key, len(key)), len(key), key)
                    nxt.append(found[key])
        frontier = nxt
    out: dict[int, list[RationalSubspace]] = {k: [] for k in range(X.full_rank + 1)}
    for sub in found.values():
        out[sub.dim].append(sub)
    return {k: tuple(sorted(v, key=lambda r: r.index_set)) for k, v in out.items()}


@dataclass(frozen=True)
class Cocircuit:
    hyperplane: RationalSubspace
    complement: IndexSet


def cocircuits(X: VectorList) -> list[Cocircuit]:
    X.require_spanning()
    hyperplanes = rational_subspaces(X)[X.s - 1]
    return [Cocircuit(h, X.complement(h.index_set)) for h in hyperplanes]


def orthogonal_complement(rows: Sequence[Sequence[int]], s: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the vectors orthogonal to all ``rows``."""
    return [primitive(v) for v in nullspace(rows, s)] if rows else [
        tuple(int(i == j) for j in range(s)) for i in range(s)
    ]


@dataclass(frozen=True)
class TuttePoly:
    """Tutte polynomial as ``{(i, j): c}`` for ``c x^i y^j``, with per-basis activities."""

    coefficients: dict
    internal: dict = field(default_factory=dict)
    external: dict = field(default_factory=dict)

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coefficients.items())

    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": i, "y": j, "coefficient": c}
                for (i, j), c in sorted(self.coefficients.items(), reverse=True)
            ],
            "bases": [
                {"basis": list(B), "internal": self.internal[B], "external": self.external[B]}
                for B in sorted(self.external)
            ],
        }


def tutte(X: VectorList) -> TuttePoly:
    """Tutte polynomial via internal/external activity of bases, using the list order."""
    bases = enumerate_bases(X)
    basis_set = set(bases)
    coeffs: dict[tuple[int, int], int] = {}
    internal, external = {}, {}
    for B in bases:
        Bs = set(B)
        ext = 0
        for e in range(X.m):
            if e in Bs:
                continue
            # fundamental circuit of e: e with the b in B it can replace
            circuit = [b for b in B if tuple(sorted(Bs - {b} | {e})) in basis_set]
            if e < min(circuit):
                ext += 1
        inn = 0
        for b in B:
            cocircuit = [e for e in range(X.m) if e not in Bs and tuple(sorted(Bs - {b} | {e})) in basis_set]
            if b < min(cocircuit, default=X.m):
                inn += 1
        internal[B], external[B] = inn, ext
        coeffs[(inn, ext)] = coeffs.get((inn, ext), 0) + 1
    return TuttePoly(coeffs, internal, external)


# ---------------------------------------------------------------------------
# chambers of the arrangement {a^perp : a in X}


@dataclass(frozen=True)
class RegularFace:
    """A chamber of the arrangement of hyperplanes ``a^perp``, with an interior point."""

    signs: tuple[int, ...]
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "signs": "".join("+" if v > 0 else "-" for v in self.signs),
            "witness": list(self.witness),
        }


def _cells(normals: list[tuple], s: int) -> list[list[Fraction]]:
    """One interior point per chamber of the central arrangement with the given normals.

    Hyperplanes are inserted one at a time.  A chamber is cut by the new
    hyperplane exactly when it contains a chamber of the restricted
    arrangement, so the restriction is solved recursively in dimension s-1
    and each of its witnesses is pushed off the hyperplane to both sides.
    """
    if s == 0:
        return [[]]
    distinct: list[tuple] = []
    seen = set()
    for n in normals:
        if any(n):
            key = canonical_line(n)
            if key not in seen:
                seen.add(key)
                distinct.append(key)
    cells: list[list[Fraction]] = [[Fraction(int(i == 0)) for i in range(s)]]
    for k, h in enumerate(distinct):
        prior = distinct[:k]
        if s == 1:
            cells = [[Fraction(1)], [Fraction(-1)]]
            continue
        frame = nullspace([h], s)  # rows spanning h^perp
        restricted = [tuple(dot(n, f) for f in frame) for n in prior]
        split = {}
        for psi_coords in _cells(restricted, s - 1):
            psi = [sum(c * f[j] for c, f in zip(psi_coords, frame)) for j in range(s)]
            split[tuple(_sign(dot(n, psi)) for n in prior)] = psi
        new_cells = []
        for w in cells:
            sig = tuple(_sign(dot(n, w)) for n in prior)
            psi = split.get(sig)
            if psi is None:
                new_cells.append(w)
                continue
            bounds = [abs(dot(n, psi)) / abs(dot(n, h)) for n in prior if dot(n, h)]
            eps = min(bounds, default=Fraction(2)) / 2
            new_cells.append([p + eps * hj for p, hj in zip(psi, h)])
            new_cells.append([p - eps * hj for p, hj in zip(psi, h)])
        cells = new_cells
    return cells


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def chambers(X: VectorList) -> list[RegularFace]:
    """All regular faces of X, sorted by sign vector with ``+`` before ``-``."""
    faces = {}
    for w in _cells(list(X.vectors), X.s):
        witness = primitive(w)
        signs = tuple(_sign(dot(a, witness)) for a in X.vectors)
        if 0 in signs:
            raise AssertionError("chamber witness lies on a hyperplane")
        faces.setdefault(signs, witness)
    return [RegularFace(sig, faces[sig]) for sig in sorted(faces, reverse=True)]


def face_from_point(X: VectorList, phi: Sequence) -> RegularFace:
    signs = tuple(_sign(dot(a, phi)) for a in X.vectors)
    if 0 in signs:
        raise ValueError("functional vanishes on a vector of X")
    return RegularFace(signs, primitive(phi))


def face_split(X: VectorList, face: RegularFace) -> tuple[IndexSet, IndexSet]:
    if len(face.signs) != X.m:
        raise ValueError("face does not match the list")
    A = tuple(i for i, v in enumerate(face.signs) if v > 0)
    B = tuple(i for i, v in enumerate(face.signs) if v < 0)
    return A, B


def positive_functional(X: VectorList) -> tuple[int, ...] | None:
    """An integer functional positive on every vector of X, or None if X is not acute."""
    for face in chambers(X):
        if all(v > 0 for v in face.signs):
            return face.witness
    return None


def coordinates_in(sub: RationalSubspace, vec: Sequence[int]) -> list[Fraction]:
    """Coordinates of ``vec`` in the row basis of ``sub``."""
    k = sub.dim
    # pick k pivot columns where the echelon basis is invertible
    _, pivots = row_reduce(sub.basis)
    mat = [[sub.basis[r][c] for r in range(k)] for c in pivots]
    return solve(mat, [vec[c] for c in pivots])


def restrict(X: VectorList, sub: RationalSubspace) -> VectorList | None:
    """The list X ∩ sub in intrinsic integer coordinates of ``sub`` (None for the origin)."""
    if sub.dim == 0:
        return None
    # each vector is rescaled to a primitive integer one; D-spaces and bases
    # only see the lines, not the scale
    return VectorList(sub.dim, tuple(primitive(coordinates_in(sub, X[i])) for i in sub.index_set))
