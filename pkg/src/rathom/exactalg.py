"""Exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` entries.  Matrices are
immutable; the elimination routines copy their input into mutable row lists
before working on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "RationalMatrix",
    "SubspaceBasis",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "complement_basis",
    "span",
    "independent_subset",
    "as_fraction",
]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class RationalMatrix:
    """A dense ``rows x cols`` matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        for c in columns:
            if len(c) != rows:
                raise ValueError("column length does not match row count")
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self.entries]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = [other.column(j) for j in range(other.cols)]
        return RationalMatrix.from_columns([self.apply(c) for c in cols], self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent vectors spanning a subspace of Q^ambient_dim."""

    ambient_dim: int
    vectors: tuple

    def __post_init__(self):
        vecs = tuple(tuple(as_fraction(x) for x in v) for v in self.vectors)
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has the wrong length")
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def contains(self, v: Sequence) -> bool:
        return _rank_rows([list(u) for u in self.vectors] + [list(v)], self.ambient_dim) == self.dim

    def is_independent(self) -> bool:
        return _rank_rows([list(u) for u in self.vectors], self.ambient_dim) == self.dim


def _eliminate(rows: list[list[Fraction]], ncols: int, reduced: bool = True) -> list[int]:
    """In-place Gauss-Jordan elimination; returns pivot columns.

    After the call the first ``len(pivots)`` rows are the nonzero echelon rows.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = 1 / lead
            prow[:] = [x * inv if x else x for x in prow]
        nz = [j for j in range(c, ncols) if prow[j]]
        start = 0 if reduced else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def _rank_rows(rows: list[list[Fraction]], ncols: int) -> int:
    return len(_eliminate(rows, ncols, reduced=False))


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    rows = [list(r) for r in m.entries]
    pivots = _eliminate(rows, m.cols)
    return RationalMatrix(rows, m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return _rank_rows([list(r) for r in m.entries], m.cols)


def kernel_basis(m: RationalMatrix) -> SubspaceBasis:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    rows = [list(r) for r in m.entries]
    pivots = _eliminate(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][free]
        basis.append(v)
    return SubspaceBasis(m.cols, tuple(basis))


def solve(m: RationalMatrix, b: Sequence) -> list[Fraction] | None:
    """A particular solution of ``m x = b``, or None when b is not in the column space."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    rows = [list(r) + [as_fraction(x)] for r, x in zip(m.entries, b)]
    pivots = _eliminate(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols]
    return x


def span(ambient_dim: int, vectors: Iterable[Sequence]) -> SubspaceBasis:
    """Echelon basis of the span of arbitrary (possibly dependent) vectors."""
    rows = [[as_fraction(x) for x in v] for v in vectors]
    pivots = _eliminate(rows, ambient_dim)
    return SubspaceBasis(ambient_dim, tuple(rows[: len(pivots)]))


def complement_basis(sub: SubspaceBasis) -> SubspaceBasis:
    """Standard basis vectors at the non-pivot coordinates of ``sub``."""
    rows = [list(v) for v in sub.vectors]
    pivots = set(_eliminate(rows, sub.ambient_dim))
    out = []
    for j in range(sub.ambient_dim):
        if j not in pivots:
            e = [0] * sub.ambient_dim
            e[j] = 1
            out.append(e)
    return SubspaceBasis(sub.ambient_dim, tuple(out))


def independent_subset(
    ambient_dim: int, candidates: Sequence[Sequence], base: Iterable[Sequence] = ()
) -> list[int]:
    """Indices of a greedy maximal subset of ``candidates`` independent modulo ``base``.

    Scans candidates in order, keeping each one that raises the rank.
    """
    echelon: list[tuple[int, list[Fraction]]] = []

    def reduce(v: list[Fraction]) -> list[Fraction]:
        for p, row in echelon:
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def push(v: list[Fraction]) -> bool:
        v = reduce(v)
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        for k, (q, row) in enumerate(echelon):
            f = row[p]
            if f:
                echelon[k] = (q, [a - f * b for a, b in zip(row, v)])
        echelon.append((p, v))
        return True

    for v in base:
        push([as_fraction(x) for x in v])
    chosen = []
    for i, v in enumerate(candidates):
        if len(v) != ambient_dim:
            raise ValueError("candidate vector has the wrong length")
        if push([as_fraction(x) for x in v]):
            chosen.append(i)
    return chosen
