"""Exact polynomial and linear algebra over the rationals.

Polynomials are sparse maps ``exponent tuple -> Fraction``.  Monomials of a
fixed degree are always listed in graded-lexicographic order, largest first
(``x^d, x^(d-1) y, ..., z^d``), and every echelon form in this package is
taken with respect to that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and ``"p/q"`` strings into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of total ``degree`` in grlex order, largest first."""
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_count(nvars: int, degree: int) -> int:
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(degree + nvars - 1, nvars - 1)


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear_form(cls, a: Sequence[int]) -> "MultiPoly":
        """The linear form ``<a, .> = sum a_i x_i``."""
        n = len(a)
        terms = {}
        for i, ai in enumerate(a):
            if ai:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = Fraction(ai)
        return cls._raw(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_fraction(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, 0) + c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def partial(self, i: int) -> "MultiPoly":
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return MultiPoly._raw(self.nvars, out)

    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong dimension")
        pt = [as_fraction(v) for v in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in grlex order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exp), "coefficient": format_fraction(c)}
            for exp, c in self.sorted_terms()
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "xyzuvw" if self.nvars <= 6 else None
        parts = []
        for exp, c in self.sorted_terms():
            mono = []
            for i, e in enumerate(exp):
                if e:
                    name = names[i] if names else f"x{i}"
                    mono.append(name if e == 1 else f"{name}^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts)


def directional_derivative(p: MultiPoly, a: Sequence[int]) -> MultiPoly:
    """Derivative of ``p`` in direction ``a``: ``sum_i a_i dp/dx_i``."""
    if len(a) != p.nvars:
        raise ValueError(f"direction has {len(a)} entries, polynomial has {p.nvars} variables")
    out: dict[Exponent, Fraction] = {}
    for i, ai in enumerate(a):
        if not ai:
            continue
        for exp, c in p.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                e = tuple(e)
                v = out.get(e, 0) + c * exp[i] * ai
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
    return MultiPoly._raw(p.nvars, out)


def product_operator(p: MultiPoly, vectors: Iterable[Sequence[int]]) -> MultiPoly:
    """Apply ``prod_{a in vectors} d_a`` to ``p``."""
    for a in vectors:
        if len(a) != p.nvars:
            raise ValueError(f"direction has {len(a)} entries, polynomial has {p.nvars} variables")
        if p.is_zero():
            return p
        p = directional_derivative(p, a)
    return p


def apply_operator(op: MultiPoly, f: MultiPoly) -> MultiPoly:
    """Act by ``op(d)`` on ``f``, where monomial ``x^a`` becomes ``d^a``."""
    op._check(f)
    out = MultiPoly.zero(f.nvars)
    for exp, c in op.terms.items():
        g = f
        for i, e in enumerate(exp):
            for _ in range(e):
                g = g.partial(i)
        out = out + g * c
    return out


# ---------------------------------------------------------------------------
# exact linear algebra


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.  Returns (nonzero rows, pivot columns)."""
    mat = [[as_fraction(v) for v in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        if lead != 1:
            mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        if all(type(v) is int for v in row):
            out.append(list(row))
            continue
        fr = [as_fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        out.append([int(v * den) for v in fr])
    return out


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q, by fraction-free elimination on integer-scaled rows."""
    mat = [r for r in _integer_rows(rows) if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        prow = mat[rk]
        p = prow[col]
        for i in range(rk + 1, len(mat)):
            f = mat[i][col]
            if f:
                row = [p * a - f * b for a, b in zip(mat[i], prow)]
                g = 0
                for v in row:
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = [v // g for v in row]
                mat[i] = row
        rk += 1
        if rk == len(mat):
            break
    return rk


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, returned in reduced echelon form (as rows)."""
    red, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[fcol]
        basis.append(v)
    echelon, _ = row_reduce(basis)
    return echelon


def determinant(mat: Sequence[Sequence]) -> Fraction:
    m = [[as_fraction(v) for v in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] / m[col][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve the square nonsingular system ``mat @ x = rhs`` exactly."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def coordinates(poly: MultiPoly, basis: Sequence[Exponent]) -> list[Fraction]:
    """Coefficient vector of ``poly`` against an explicit monomial list."""
    index = {e: i for i, e in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for exp, c in poly.terms.items():
        if exp not in index:
            raise ValueError(f"monomial {exp} outside the given basis")
        vec[index[exp]] = c
    return vec


# ---------------------------------------------------------------------------
# graded pieces


@dataclass(frozen=True)
class GradedDims:
    """Dimensions per polynomial degree.

    When ``truncated`` is false every degree past the end of ``dims`` has
    dimension zero; when true the sequence was cut at a degree bound.
    """

    dims: tuple[int, ...]
    truncated: bool = False

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.dims):
            return self.dims[d]
        if self.truncated and d >= len(self.dims):
            raise IndexError(f"degree {d} lies beyond the truncation bound")
        return 0

    @property
    def total(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "truncated": self.truncated}


def graded_kernel(
    operators: Sequence[Callable[[MultiPoly], MultiPoly]], nvars: int, degree: int
) -> list[MultiPoly]:
    """Joint kernel of linear operators on homogeneous polynomials of one degree.

    The result is the reduced echelon basis in grlex order: each element has
    a leading monomial with coefficient 1 that appears in no other element.
    """
    basis = monomials(nvars, degree)
    images = [[op(MultiPoly.monomial(e)) for e in basis] for op in operators]
    rows: list[list[Fraction]] = []
    for imgs in images:
        targets = sorted({e for img in imgs for e in img.terms})
        for t in targets:
            rows.append([img.coefficient(t) for img in imgs])
    kernel = nullspace(rows, len(basis))
    return [
        MultiPoly(nvars, {basis[i]: c for i, c in enumerate(vec) if c}) for vec in kernel
    ]


def ideal_degree_rows(generators: Sequence[MultiPoly], nvars: int, degree: int) -> list[list]:
    """Rows ``m * g`` spanning the degree-``degree`` piece of the ideal.

    Entries are plain ints whenever the generator has integer coefficients.
    """
    basis = monomials(nvars, degree)
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for g in generators:
        dg = g.degree()
        if dg > degree or dg < 0:
            continue
        terms = [(e, int(c) if c.denominator == 1 else c) for e, c in g.terms.items()]
        for m in monomials(nvars, degree - dg):
            row = [0] * len(basis)
            for e, c in terms:
                row[index[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(row)
    return rows


def graded_ideal_dims(generators: Sequence[MultiPoly], max_degree: int, nvars: int | None = None) -> GradedDims:
    """Hilbert function of ``S / <generators>`` for degrees ``0..max_degree``.

    Generators must be homogeneous.  Trailing zeros are dropped once the
    quotient vanishes; if degree ``max_degree`` is still nonzero the result
    is flagged as truncated.
    """
    if nvars is None:
        if not generators:
            raise ValueError("nvars is required when there are no generators")
        nvars = generators[0].nvars
    for g in generators:
        if g.nvars != nvars:
            raise ValueError("generators live in different rings")
        if g.is_zero():
            raise ValueError("generators must be nonzero")
        if not g.is_homogeneous():
            raise ValueError("graded_ideal_dims needs homogeneous generators")
    dims = []
    for d in range(max_degree + 1):
        rows = ideal_degree_rows(generators, nvars, d)
        dims.append(monomial_count(nvars, d) - (rank(rows) if rows else 0))
    truncated = bool(dims) and dims[-1] != 0
    if not truncated:
        while dims and dims[-1] == 0:
            dims.pop()
    return GradedDims(tuple(dims), truncated)


# ---------------------------------------------------------------------------
# univariate helpers


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients listed from the constant term up."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [as_fraction(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly(tuple(v * c for v in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        t = as_fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def antiderivative(self) -> "UniPoly":
        return UniPoly((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    def integrate(self, t0, t1) -> Fraction:
        F = self.antiderivative()
        return F(t1) - F(t0)


def lagrange_interpolant(samples: Sequence[tuple]) -> UniPoly:
    nodes = [as_fraction(t) for t, _ in samples]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate interpolation nodes")
    total = UniPoly()
    for i, (ti, (_, vi)) in enumerate(zip(nodes, samples)):
        vi = as_fraction(vi)
        if not vi:
            continue
        basis = UniPoly((Fraction(1),))
        denom = Fraction(1)
        for j, tj in enumerate(nodes):
            if j != i:
                basis = basis * UniPoly((-tj, Fraction(1)))
                denom *= ti - tj
        total = total + basis * (vi / denom)
    return total


def interpolate_and_integrate(samples: Sequence[tuple], degree_bound: int, interval: tuple) -> Fraction:
    """Integrate over ``interval`` the polynomial of degree <= ``degree_bound`` through ``samples``."""
    if len(samples) != degree_bound + 1:
        raise ValueError(f"need exactly {degree_bound + 1} samples, got {len(samples)}")
    q = lagrange_interpolant(samples)
    t0, t1 = interval
    return q.integrate(as_fraction(t0), as_fraction(t1))
