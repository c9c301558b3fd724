"""Exact pointwise evaluation of multivariate truncated powers and their local pieces.

``T_X`` is the pushforward of Lebesgue measure on the positive orthant
along ``t -> sum t_i a_i``.  Its density is evaluated by peeling one vector
at a time::

    T_X(x) = integral_0^inf T_{X minus a}(x - t a) dt

Between consecutive crossings of the walls of ``X minus a`` the integrand is
a polynomial of degree ``m - 1 - s`` in t, so each piece is integrated
exactly from ``m - s`` interior samples.  Points on walls are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra import MultiPoly, as_fraction, determinant, directional_derivative, interpolate_and_integrate, monomials, solve
from .arrangement import (
    RegularFace,
    VectorList,
    canonical_line,
    chambers,
    dot,
    face_split,
    orthogonal_complement,
    positive_functional,
    rational_subspaces,
)
from .errors import InvariantError, NonAcuteError, NonGenericPointError, PreconditionError


def wall_hyperplanes(X: VectorList) -> list[tuple[int, ...]]:
    """Primitive normals of the hyperplanes spanned by rank s-1 sublists of X."""
    X.require_spanning()
    return _walls(X.vectors, X.s)


@lru_cache(maxsize=4096)
def _walls(vectors: tuple, s: int) -> list[tuple[int, ...]]:
    X = VectorList(s, vectors)
    normals = set()
    for h in rational_subspaces(X).get(s - 1, []):
        (normal,) = orthogonal_complement(h.basis, s)
        normals.add(canonical_line(normal))
    return sorted(normals, reverse=True)


def _as_point(x, s: int) -> tuple[Fraction, ...]:
    if not isinstance(x, (list, tuple)):
        x = (x,)
    if len(x) != s:
        raise PreconditionError(f"point must have {s} coordinates")
    return tuple(as_fraction(v) for v in x)


def _check_generic(point, normals) -> None:
    for n in normals:
        if dot(n, point) == 0:
            raise NonGenericPointError(f"point {tuple(str(v) for v in point)} lies on the wall with normal {n}")


def _basis_value(vectors: tuple, point: tuple) -> Fraction:
    """Density of T_B for a basis B: 1/|det B| inside the open cone, 0 outside."""
    s = len(point)
    mat = [[vectors[j][i] for j in range(s)] for i in range(s)]
    try:
        coeffs = solve(mat, point)
    except ZeroDivisionError:
        raise InvariantError("base case reached with a dependent list") from None
    if any(c == 0 for c in coeffs):
        raise NonGenericPointError("point lies on the boundary of a simplicial cone")
    if any(c < 0 for c in coeffs):
        return Fraction(0)
    return 1 / abs(determinant(mat))


def _peel_index(vectors: tuple, s: int) -> int:
    """Last position whose removal leaves a spanning list."""
    for i in range(len(vectors) - 1, -1, -1):
        rest = vectors[:i] + vectors[i + 1 :]
        if VectorList(s, rest).spans:
            return i
    raise InvariantError("no removable vector in a spanning list longer than s")


@lru_cache(maxsize=4096)
def _cone_frames(vectors: tuple, s: int) -> tuple:
    """Inverse matrices of every basis in the list, for cone membership tests."""
    frames = []
    for B in combinations(range(len(vectors)), s):
        mat = [[vectors[j][i] for j in B] for i in range(s)]
        if determinant(mat) == 0:
            continue
        cols = [solve(mat, [int(i == k) for i in range(s)]) for k in range(s)]
        frames.append(tuple(tuple(cols[k][r] for k in range(s)) for r in range(s)))
    return tuple(frames)


def _in_open_cone(vectors: tuple, point: tuple) -> bool:
    # a generic point of the cone lies in the open cone of some basis
    for inv in _cone_frames(vectors, len(point)):
        if all(dot(row, point) > 0 for row in inv):
            return True
    return False


@lru_cache(maxsize=200_000)
def _eval(vectors: tuple, phi: tuple, point: tuple) -> Fraction:
    s = len(point)
    if dot(phi, point) <= 0:
        return Fraction(0)
    if len(vectors) == s:
        return _basis_value(vectors, point)
    i = _peel_index(vectors, s)
    a = vectors[i]
    rest = vectors[:i] + vectors[i + 1 :]
    t_max = dot(phi, point) / dot(phi, a)
    cuts = {Fraction(0), t_max}
    for n in _walls(rest, s):
        na = dot(n, a)
        if na:
            t = dot(n, point) / na
            if 0 < t < t_max:
                cuts.add(t)
    cuts = sorted(cuts)
    degree = len(rest) - s
    total = Fraction(0)
    for lo, hi in zip(cuts, cuts[1:]):
        # the cone boundary lies on walls, so each piece is wholly in or out
        mid = (lo + hi) / 2
        if not _in_open_cone(rest, tuple(p - mid * c for p, c in zip(point, a))):
            continue
        step = (hi - lo) / (degree + 2)
        samples = []
        for j in range(1, degree + 2):
            t = lo + j * step
            y = tuple(p - t * c for p, c in zip(point, a))
            samples.append((t, _eval(rest, phi, y)))
        if any(v for _, v in samples):
            total += interpolate_and_integrate(samples, degree, (lo, hi))
    return total


def _prepare(X: VectorList, x, phi=None):
    X.require_spanning()
    point = _as_point(x, X.s)
    if phi is None:
        phi = positive_functional(X)
        if phi is None:
            raise NonAcuteError()
    elif any(dot(phi, a) <= 0 for a in X.vectors):
        raise NonAcuteError()
    _check_generic(point, _walls(X.vectors, X.s))
    return point, tuple(phi)


def eval_T(X: VectorList, x, phi: Sequence[int] | None = None) -> Fraction:
    """Value of the truncated power ``T_X`` at a generic rational point."""
    point, phi = _prepare(X, x, phi)
    return _eval(X.vectors, phi, point)


def flipped(X: VectorList, face: RegularFace) -> VectorList:
    """The list ``(A, -B)``, keeping the original positions."""
    return VectorList(X.s, tuple(a if sg > 0 else tuple(-v for v in a) for a, sg in zip(X.vectors, face.signs)))


def eval_TF(X: VectorList, face: RegularFace, x) -> Fraction:
    """``T_X^F = (-1)^{|B|} T_{(A, -B)}`` at a generic point."""
    _, B = face_split(X, face)
    value = eval_T(flipped(X, face), x, face.witness)
    return -value if len(B) % 2 else value


@dataclass(frozen=True)
class SplinePiece:
    witness: tuple
    polynomial: MultiPoly

    def to_json(self) -> dict:
        return {"witness": [str(v) for v in self.witness], "polynomial": self.polynomial.to_json()}


def _sample_points(w: tuple, delta: Fraction, d: int) -> list[tuple]:
    """Principal lattice of degree d on the simplex spanned by ``w + delta e_i``.

    Homogeneous polynomials of degree d are determined by their values on
    this lattice, which lies on an affine hyperplane missing the origin.
    """
    s = len(w)
    corners = [tuple(wj + (delta if j == i else 0) for j, wj in enumerate(w)) for i in range(s)]
    pts = []
    for alpha in monomials(s, d):
        if d == 0:
            pts.append(corners[0])
            continue
        pts.append(tuple(sum(alpha[i] * corners[i][j] for i in range(s)) / d for j in range(s)))
    return pts


def local_piece(X: VectorList, witness, phi: Sequence[int] | None = None) -> SplinePiece:
    """The homogeneous polynomial that agrees with ``T_X`` near ``witness``."""
    w, phi = _prepare(X, witness, phi)
    return _local_piece(X, w, phi)


@lru_cache(maxsize=4096)
def _local_piece(X: VectorList, w: tuple, phi: tuple) -> SplinePiece:
    walls = _walls(X.vectors, X.s)
    d = X.m - X.s
    margin = min(abs(dot(n, w)) / (sum(abs(c) for c in n) + 1) for n in walls)
    delta = margin / 2
    basis = monomials(X.s, d)
    for _ in range(6):
        pts = _sample_points(w, delta, d)
        rows = [[MultiPoly.monomial(e)(p) for e in basis] for p in pts]
        values = [_eval(X.vectors, phi, p) for p in pts]
        try:
            coeffs = solve(rows, values)
        except ZeroDivisionError:
            delta /= 3
            continue
        poly = MultiPoly(X.s, {e: c for e, c in zip(basis, coeffs)})
        holdout = tuple(v + delta * Fraction(j + 1, 2 * X.s + 3) for j, v in enumerate(w))
        if poly(holdout) != _eval(X.vectors, phi, holdout):
            raise InvariantError("local piece disagrees with T_X at a holdout point in the same chamber")
        return SplinePiece(w, poly)
    raise InvariantError("interpolation points stayed degenerate after retries")


def probe_witnesses(X: VectorList) -> list[tuple[int, ...]]:
    """One generic point in each chamber of the wall arrangement of X."""
    walls = wall_hyperplanes(X)
    return [face.witness for face in chambers(VectorList(X.s, tuple(walls)))]


def verify_deletion(X: VectorList, index: int) -> bool | None:
    """Check ``d_a`` of each local piece of ``T_X`` equals the piece of ``T_{X minus a}``.

    Returns None when X minus a does not span.
    """
    Xa = X.without(index)
    if not Xa.spans:
        return None
    phi = positive_functional(X)
    if phi is None:
        raise NonAcuteError()
    a = X[index]
    for w in probe_witnesses(X):
        lhs = directional_derivative(local_piece(X, w, phi).polynomial, a)
        rhs = local_piece(Xa, w, phi).polynomial
        if lhs != rhs:
            return False
    return True
