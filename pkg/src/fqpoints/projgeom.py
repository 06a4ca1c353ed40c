"""Projective spaces over finite fields: points, subspaces, hyperplanes.

Points are coordinate tuples normalized so the first nonzero entry is 1.
Subspaces are stored as RREF bases of their underlying linear spaces, which
makes equality and hashing canonical. q-ary counts use pi(j) = |P^j(F_q)|,
with pi(j) = 0 for negative j.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .errors import InconsistentFiltersError
from .gf import FieldElement, FieldSpec
from .mpoly import Polynomial


def pi(j: int, q: int) -> int:
    """Number of points of P^j over GF(q); zero for j < 0."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")
    if j < 0:
        return 0
    return (q ** (j + 1) - 1) // (q - 1)


class PiSequence:
    """Cached pi(0..J) for one q, for tight loops over many indices."""

    def __init__(self, q: int, J: int):
        if J < 0:
            raise ValueError("J must be nonnegative")
        self.q = q
        self.J = J
        self._vals = [pi(j, q) for j in range(J + 1)]

    def pi(self, j: int) -> int:
        if j < 0:
            return 0
        if j <= self.J:
            return self._vals[j]
        return pi(j, self.q)


def _normalized_tuples(field: FieldSpec, length: int) -> Iterator[tuple]:
    """All length-tuples with first nonzero entry 1, leading-1 position first."""
    els = list(field.elements())
    zero, one = field.zero(), field.one()
    for lead in range(length):
        for tail in itertools.product(els, repeat=length - lead - 1):
            yield (zero,) * lead + (one,) + tail


class ProjectivePoint:
    """A point of P^n, stored in normalized coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: FieldSpec, coords: tuple):
        self.field = field
        self.coords = coords

    @classmethod
    def from_coords(cls, field: FieldSpec, coords: Sequence) -> "ProjectivePoint":
        vals = [field.element(c) for c in coords]
        lead = next((v for v in vals if v), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = lead.inverse()
        return cls(field, tuple(v * inv for v in vals))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def sort_key(self):
        return tuple(c.coeffs for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"<point {self} over {self.field}>"


def point_from_text(text: str, field: FieldSpec, n: int) -> ProjectivePoint:
    """Parse `(1:0:2)` or `1,0,2` into a point of P^n."""
    s = text.strip().lstrip("(").rstrip(")")
    sep = ":" if ":" in s else ","
    parts = [part.strip() for part in s.split(sep)]
    if len(parts) != n + 1:
        raise ValueError(f"expected {n + 1} coordinates, got {len(parts)}")
    coords = []
    for part in parts:
        if part.lstrip("-").isdigit():
            coords.append(field.element(int(part)))
        else:
            # allow generator expressions like a+1 through the poly parser
            from .mpoly import parse_poly
            c = parse_poly(part, field, 1)
            coords.append(c.evaluate([field.zero()]))
    return ProjectivePoint.from_coords(field, coords)


def enumerate_points(n: int, field: FieldSpec) -> Iterator[ProjectivePoint]:
    """All pi(n) points of P^n, deterministic order, normalized."""
    if n < 0:
        raise ValueError("ambient dimension must be nonnegative")
    for coords in _normalized_tuples(field, n + 1):
        yield ProjectivePoint(field, coords)


# --- exact linear algebra over a FieldSpec ---

def rref(rows: Sequence[Sequence[FieldElement]], field: FieldSpec):
    """(reduced row echelon rows without zero rows, pivot column list)."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows, field: FieldSpec) -> int:
    return len(rref(rows, field)[0])


def nullspace(rows: Sequence[Sequence[FieldElement]], field: FieldSpec,
              ncols: int) -> list:
    """RREF basis of {v : M v = 0} for the row matrix M."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = field.zero(), field.one()
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][f]
        basis.append(tuple(vec))
    if not basis:
        return []
    return rref(basis, field)[0]


class LinearSubspace:
    """A projective linear subspace, canonically an RREF basis of rows."""

    __slots__ = ("field", "n", "rows", "_dual")

    def __init__(self, field: FieldSpec, n: int, rows: tuple):
        self.field = field
        self.n = n
        self.rows = rows
        self._dual = None

    @classmethod
    def from_spanning(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "LinearSubspace":
        wrapped = [[field.element(c) for c in row] for row in rows]
        if not wrapped:
            raise ValueError("need at least one spanning row")
        n = len(wrapped[0]) - 1
        red, _ = rref(wrapped, field)
        if not red:
            raise ValueError("spanning rows are all zero")
        return cls(field, n, tuple(red))

    @classmethod
    def from_dual_form(cls, field: FieldSpec, form: Sequence) -> "LinearSubspace":
        w = tuple(field.element(c) for c in form)
        sol = nullspace([w], field, len(w))
        out = cls(field, len(w) - 1, tuple(sol))
        out._dual = (w,)
        return out

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    def dual_forms(self) -> tuple:
        """Basis of linear forms vanishing on the subspace (n - dim of them)."""
        if self._dual is None:
            self._dual = tuple(nullspace(self.rows, self.field, self.n + 1))
        return self._dual

    def contains(self, point) -> bool:
        coords = list(point.coords if isinstance(point, ProjectivePoint) else point)
        for row in self.rows:
            piv = next(i for i, v in enumerate(row) if v)
            c = coords[piv]
            if c:
                coords = [a - c * b for a, b in zip(coords, row)]
        return not any(coords)

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def points(self) -> Iterator[ProjectivePoint]:
        for combo in _normalized_tuples(self.field, len(self.rows)):
            coords = [self.field.zero()] * (self.n + 1)
            for c, row in zip(combo, self.rows):
                if c:
                    coords = [a + c * b for a, b in zip(coords, row)]
            yield ProjectivePoint(self.field, tuple(coords))

    def intersection(self, other: "LinearSubspace") -> Optional["LinearSubspace"]:
        """The intersection subspace, or None when it is empty."""
        stacked = list(self.dual_forms()) + list(other.dual_forms())
        sol = nullspace(stacked, self.field, self.n + 1)
        if not sol:
            return None
        return LinearSubspace(self.field, self.n, tuple(sol))

    def span_with(self, other: "LinearSubspace") -> "LinearSubspace":
        return LinearSubspace.from_spanning(
            self.field, list(self.rows) + list(other.rows))

    def form_polynomials(self, nvars: Optional[int] = None) -> list:
        """dual_forms as linear Polynomial objects."""
        nvars = self.n + 1 if nvars is None else nvars
        out = []
        for w in self.dual_forms():
            items = [(tuple(1 if j == i else 0 for j in range(nvars)), c)
                     for i, c in enumerate(w)]
            out.append(Polynomial.from_terms(self.field, nvars, items))
        return out

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.n, self.rows))

    def __repr__(self):
        basis = "; ".join(
            "(" + ",".join(str(c) for c in row) + ")" for row in self.rows)
        return f"<subspace dim {self.dim} of P^{self.n}: {basis}>"


def enumerate_hyperplanes(n: int, field: FieldSpec,
                          through: Optional[ProjectivePoint] = None,
                          containing: Optional[LinearSubspace] = None,
                          excluding_containing: Optional[LinearSubspace] = None
                          ) -> Iterator[LinearSubspace]:
    """Hyperplanes of P^n by normalized dual form, with incidence filters.

    `through` keeps hyperplanes on a point, `containing` those containing a
    subspace, `excluding_containing` those NOT containing one. When `through`
    and `excluding_containing` are combined the point must lie on the excluded
    subspace; that is the configuration the counting identities cover.
    """
    if through is not None and excluding_containing is not None:
        if not excluding_containing.contains(through):
            raise InconsistentFiltersError(
                "through-point must lie on the subspace being excluded")
    for w in _normalized_tuples(field, n + 1):
        if through is not None:
            acc = field.zero()
            for a, b in zip(w, through.coords):
                acc = acc + a * b
            if acc:
                continue
        if containing is not None and not _form_vanishes_on(w, containing):
            continue
        if excluding_containing is not None and _form_vanishes_on(
                w, excluding_containing):
            continue
        yield LinearSubspace.from_dual_form(field, w)


def _form_vanishes_on(w: tuple, sub: LinearSubspace) -> bool:
    zero = sub.field.zero()
    for row in sub.rows:
        acc = zero
        for a, b in zip(w, row):
            acc = acc + a * b
        if acc:
            return False
    return True
