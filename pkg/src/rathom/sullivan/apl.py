"""The PL de Rham algebra A_PL(X) of a finite simplicial set.

A global form assigns a polynomial form to every nondegenerate simplex so that
restricting to a face agrees with the form on that face (degenerate faces are
handled by pulling back along their degeneracy operator).  ``F_D A_PL(X)``
bounds the filtration degree (t-degree plus number of dt factors) by ``D``;
it is a finite-dimensional subcomplex, and the whole algebra is the union of
these.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from ..cdga import CohomologyGroup
from ..exactalg import RationalMatrix, SubspaceBasis, as_fraction, independent_subset, kernel_basis, rref
from ..simplicial import FiniteSimplicialSet, cohomology as simplicial_cohomology, validate
from .forms import PolynomialForm, face_pullback, form_keys, surjection_pullback

__all__ = [
    "GlobalForm",
    "AplAlgebra",
    "AplCohomologyReport",
    "InconclusiveError",
    "apl_basis",
    "apl_cohomology",
]


class InconclusiveError(RuntimeError):
    """No stabilization of the polynomial-degree filtration within the allowed bound."""


class GlobalForm:
    """A compatible family of forms, keyed by nondegenerate simplex ``(dim, index)``."""

    __slots__ = ("algebra", "forms")

    def __init__(self, algebra: "AplAlgebra", forms: Mapping):
        self.algebra = algebra
        self.forms = {cell: forms.get(cell, PolynomialForm.zero(cell[0])) for cell in algebra.cells}

    def _zip(self, other, op):
        if not isinstance(other, GlobalForm) or other.algebra is not self.algebra:
            raise TypeError("global forms on different spaces")
        return GlobalForm(self.algebra, {c: op(self.forms[c], other.forms[c]) for c in self.forms})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return GlobalForm(self.algebra, {c: -f for c, f in self.forms.items()})

    def __mul__(self, other):
        if isinstance(other, GlobalForm):
            return self._zip(other, lambda a, b: a * b)
        q = as_fraction(other)
        return GlobalForm(self.algebra, {c: f.scale(q) for c, f in self.forms.items()})

    def __rmul__(self, q):
        return self * q

    def d(self) -> "GlobalForm":
        return GlobalForm(self.algebra, {c: f.d() for c, f in self.forms.items()})

    def degree(self) -> int | None:
        degs = set()
        for f in self.forms.values():
            degs |= f.form_degrees()
        if len(degs) > 1:
            raise ValueError("global form is not homogeneous")
        return next(iter(degs), None)

    def filtration_degree(self) -> int:
        return max((f.filtration_degree() for f in self.forms.values()), default=-1)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.forms.values())

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GlobalForm):
            return NotImplemented
        return self.algebra is other.algebra and self.forms == other.forms

    def __hash__(self):
        return hash(tuple(sorted(self.forms.items())))

    def is_compatible(self) -> bool:
        return self.algebra.is_compatible(self)

    def format(self) -> str:
        return "; ".join(f"{k}-simplex {s}: {self.forms[(k, s)]}" for k, s in self.algebra.cells)

    def __repr__(self):
        return f"GlobalForm({self.format()})"


@dataclass(frozen=True)
class AplCohomologyReport:
    degree: int
    value: int | None
    status: str
    stabilized_at: int | None
    sequence: tuple
    simplicial: int

    @property
    def agrees(self) -> bool:
        return self.status == "stable" and self.value == self.simplicial

    def format(self) -> str:
        seq = " ".join(f"D{D}:{h}" for D, h in self.sequence)
        if self.status == "stable":
            head = f"H^{self.degree}={self.value} (stable at D={self.stabilized_at})"
        else:
            head = f"H^{self.degree}=? (inconclusive)"
        return f"{head} simplicial={self.simplicial} [{seq}]"


@lru_cache(maxsize=None)
def _face_term(n: int, key: tuple, i: int) -> dict:
    return face_pullback(PolynomialForm(n, {key: 1}), i).terms


@lru_cache(maxsize=None)
def _degeneracy_term(n: int, key: tuple, sigma: tuple) -> dict:
    return surjection_pullback(PolynomialForm(n, {key: 1}), sigma).terms


class AplAlgebra:
    """A_PL(X) with finite-dimensional access through the filtration ``F_D``.

    Implements the cochain-algebra protocol of :mod:`rathom.cdga`, so it can
    serve as the target of a minimal model.  ``d_max`` caps every search over
    the filtration degree.
    """

    def __init__(self, X: FiniteSimplicialSet, d_max: int = 8):
        v = validate(X)
        if v is not None:
            raise ValueError(f"invalid simplicial set: {v}")
        self.X = X
        self.d_max = d_max
        self.cells = [(k, s) for k in range(X.dimension_bound + 1) for s in X.nondegenerate(k)]
        self.face_nf = {}
        for k, s in self.cells:
            if k:
                self.face_nf[(k, s)] = [X.normal_form(k - 1, f) for f in X.levels[k][s].faces]
        self.top_dimension = max(k for k, _ in self.cells)
        self._coords: dict = {}
        self._basis: dict = {}
        self._dcols: dict = {}
        self._hcache: dict = {}

    # -- coordinates ------------------------------------------------------

    def coords(self, m: int, D: int) -> tuple[list, dict]:
        """Ambient coordinates for m-forms at level D: list of (cell, key) and its index."""
        key = (m, D)
        if key not in self._coords:
            keys = [(cell, k) for cell in self.cells for k in form_keys(cell[0], m, D)]
            self._coords[key] = (keys, {k: i for i, k in enumerate(keys)})
        return self._coords[key]

    def vector(self, g: GlobalForm, m: int, D: int) -> list[Fraction]:
        keys, idx = self.coords(m, D)
        v = [Fraction(0)] * len(keys)
        for cell, f in g.forms.items():
            for k, c in f.terms.items():
                if (cell, k) not in idx:
                    raise ValueError(f"form has a term outside F_{D} in degree {m}")
                v[idx[(cell, k)]] = c
        return v

    def from_vector(self, v: Sequence, m: int, D: int) -> GlobalForm:
        keys, _ = self.coords(m, D)
        forms: dict = defaultdict(dict)
        for (cell, k), c in zip(keys, v):
            if c:
                forms[cell][k] = c
        return GlobalForm(self, {cell: PolynomialForm(cell[0], t) for cell, t in forms.items()})

    def _constraint_matrix(self, m: int, D: int) -> RationalMatrix:
        """Rows: d_i(omega_x) - sigma^*(omega_y) for every face i of every cell x."""
        keys, idx = self.coords(m, D)
        by_cell: dict = defaultdict(list)
        for j, (cell, k) in enumerate(keys):
            by_cell[cell].append((j, k))
        cols = [defaultdict(Fraction) for _ in keys]
        for other, faces in self.face_nf.items():
            for i, (md, y, sigma) in enumerate(faces):
                for j, k in by_cell[other]:
                    for k2, c in _face_term(other[0], k, i).items():
                        cols[j][(other, i, k2)] += c
                for j, k in by_cell[(md, y)]:
                    for k2, c in _degeneracy_term(md, k, sigma).items():
                        cols[j][(other, i, k2)] -= c
        rows: dict = {}
        for col in cols:
            for r, c in col.items():
                if c:
                    rows.setdefault(r, len(rows))
        dense = []
        for col in cols:
            v = [0] * len(rows)
            for r, c in col.items():
                if c:
                    v[rows[r]] = c
            dense.append(v)
        return RationalMatrix.from_columns(dense, len(rows))

    def basis(self, m: int, D: int) -> SubspaceBasis:
        """Basis of the degree-m part of F_D A_PL(X), in ambient coordinates."""
        key = (m, D)
        if key not in self._basis:
            keys, _ = self.coords(m, D)
            if not keys:
                self._basis[key] = SubspaceBasis(0, ())
            else:
                self._basis[key] = kernel_basis(self._constraint_matrix(m, D))
        return self._basis[key]

    def is_compatible(self, g: GlobalForm) -> bool:
        for other, faces in self.face_nf.items():
            for i, (md, y, sigma) in enumerate(faces):
                if face_pullback(g.forms[other], i) != surjection_pullback(g.forms[(md, y)], sigma):
                    return False
        return True

    def _d_columns(self, m: int, D: int) -> list[list[Fraction]]:
        """d of each basis vector of A^m_D, in ambient (m+1, D) coordinates."""
        key = (m, D)
        if key not in self._dcols:
            _, idx = self.coords(m + 1, D)
            keys, _ = self.coords(m, D)
            dkey = {}
            for cell, k in keys:
                dkey[(cell, k)] = PolynomialForm(cell[0], {k: 1}).d().terms
            out = []
            for v in self.basis(m, D):
                col = [Fraction(0)] * len(idx)
                for (cell, k), c in zip(keys, v):
                    if c:
                        for k2, e in dkey[(cell, k)].items():
                            col[idx[(cell, k2)]] += c * e
                out.append(col)
            self._dcols[key] = out
        return self._dcols[key]

    def cohomology_at(self, m: int, D: int) -> tuple[int, list[GlobalForm]]:
        """H^m of F_D A_PL(X): dimension and representative cocycles."""
        if m < 0:
            return 0, []
        key = (m, D)
        if key in self._hcache:
            return self._hcache[key]
        basis = self.basis(m, D)
        ambient = len(self.coords(m, D)[0])
        if not basis.dim:
            self._hcache[key] = (0, [])
            return self._hcache[key]
        dcols = self._d_columns(m, D)
        n_next = len(self.coords(m + 1, D)[0])
        combos = kernel_basis(RationalMatrix.from_columns(dcols, n_next))
        cycles = [[sum((c * b[t] for c, b in zip(combo, basis.vectors) if c), Fraction(0))
                   for t in range(ambient)] for combo in combos]
        bounds = self._d_columns(m - 1, D) if m >= 1 else []
        keep = independent_subset(ambient, cycles, bounds)
        reps = [self.from_vector(cycles[i], m, D) for i in keep]
        self._hcache[key] = (len(reps), reps)
        return self._hcache[key]

    def stable_cohomology(self, m: int, d_max: int | None = None) -> AplCohomologyReport:
        """Scan D = m+1, m+2, ... until two consecutive values of dim H^m(F_D) agree."""
        d_max = self.d_max if d_max is None else d_max
        simp = simplicial_cohomology(self.X)[m]
        if m > self.top_dimension:
            # no m-forms on any simplex: zero at every level D
            return AplCohomologyReport(m, 0, "stable", 0, ((0, 0),), simp)
        seq = []
        value, status, at = None, "inconclusive", None
        for D in range(m + 1, d_max + 1):
            h, _ = self.cohomology_at(m, D)
            seq.append((D, h))
            if len(seq) >= 2 and seq[-2][1] == h:
                value, status, at = h, "stable", seq[-2][0]
                break
        return AplCohomologyReport(m, value, status, at, tuple(seq), simp)

    # -- cochain-algebra protocol ----------------------------------------

    def one(self) -> GlobalForm:
        return GlobalForm(self, {c: PolynomialForm.constant(c[0]) for c in self.cells})

    def zero(self) -> GlobalForm:
        return GlobalForm(self, {})

    def d(self, g: GlobalForm) -> GlobalForm:
        return g.d()

    def cohomology(self, n: int) -> CohomologyGroup:
        if n < 0:
            return CohomologyGroup(n, 0, ())
        report = self.stable_cohomology(n)
        if report.status != "stable":
            raise InconclusiveError(f"H^{n}(A_PL) did not stabilize up to D={self.d_max}")
        _, reps = self.cohomology_at(n, report.stabilized_at)
        return CohomologyGroup(n, len(reps), tuple(reps))

    def exact_relations(self, elements: Sequence[GlobalForm], n: int) -> list[tuple[list, GlobalForm]]:
        """Basis of ``{c : sum c_i e_i is exact}``, searching F_D until the answer stabilizes."""
        if not elements:
            return []
        k = len(elements)
        if n > self.top_dimension or n < 0:
            return [([Fraction(int(i == j)) for j in range(k)], self.zero()) for i in range(k)]
        start = max(max(e.filtration_degree() for e in elements), n, 1)
        if start > self.d_max:
            raise InconclusiveError(f"elements exceed the filtration cap D={self.d_max}")
        previous = None
        for D in range(start, self.d_max + 1):
            rels = self._relations_at(elements, n, D)
            if len(rels) == k or (previous is not None and len(previous) == len(rels)):
                return rels
            previous = rels
        raise InconclusiveError(f"exactness in degree {n} undecided up to D={self.d_max}")

    def _relations_at(self, elements, n, D):
        ambient = len(self.coords(n, D)[0])
        ecols = [self.vector(e, n, D) for e in elements]
        dcols = self._d_columns(n - 1, D) if n >= 1 else []
        k = len(elements)
        if dcols:
            _, pivots = rref(RationalMatrix.from_columns(dcols, ambient))
        else:
            pivots = []
        cols = ecols + [dcols[j] for j in pivots]
        ker = kernel_basis(RationalMatrix.from_columns(cols, ambient))
        out = []
        prev_basis = self.basis(n - 1, D).vectors if n >= 1 else ()
        prev_ambient = len(self.coords(n - 1, D)[0]) if n >= 1 else 0
        for v in ker:
            prim = [Fraction(0)] * prev_ambient
            for t, j in enumerate(pivots):
                c = v[k + t]
                if c:
                    prim = [a - c * b for a, b in zip(prim, prev_basis[j])]
            g = self.from_vector(prim, n - 1, D) if n >= 1 else self.zero()
            out.append((list(v[:k]), g))
        return out


def apl_basis(X: FiniteSimplicialSet, m: int, D: int) -> list[GlobalForm]:
    """Basis of the degree-m part of F_D A_PL(X)."""
    A = AplAlgebra(X, d_max=D)
    return [A.from_vector(v, m, D) for v in A.basis(m, D)]


def apl_cohomology(X: FiniteSimplicialSet, n: int, d_max: int) -> AplCohomologyReport:
    """H^n(A_PL(X)) by filtration stabilization, compared with simplicial cohomology."""
    return AplAlgebra(X, d_max=d_max).stable_cohomology(n)
