"""Minimal models, rational homotopy ranks and realization points.

The construction is the usual degree-by-degree one for simply connected
algebras.  In degree n it adds

* closed generators hitting a complement of the image of H^n(M) -> H^n(A);
* generators of degree n whose differentials are the cocycles spanning the
  kernel of H^{n+1}(M) -> H^{n+1}(A), mapped to chosen primitives in A.

With no degree-1 generators, a new degree-n generator only appears in
monomials of degree >= n+2, so one pass per degree suffices.  The target only
needs the cochain-algebra protocol (``one``, ``zero``, ``d``, ``cohomology``,
``exact_relations``), so both presented cdgas and ``AplAlgebra`` work.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..cdga import (
    CdgaMorphism,
    CdgaPresentation,
    is_minimal_simply_connected,
    is_quasi_iso,
)
from ..simplicial import FiniteSimplicialSet
from .apl import AplAlgebra
from .forms import PolynomialForm, nabla

__all__ = [
    "MinimalModelResult",
    "NotSimplyConnectedError",
    "minimal_model",
    "rational_homotopy_dims",
    "is_realization_point",
]


class NotSimplyConnectedError(ValueError):
    """The input violates H^0 = Q, H^1 = 0 (or has nondegenerate edges)."""

    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


@dataclass(frozen=True)
class MinimalModelResult:
    M: CdgaPresentation
    f: CdgaMorphism
    built_up_to: int

    def generator_counts(self) -> list[tuple[int, int]]:
        """(degree, number of generators) for 2 <= degree <= built_up_to."""
        return [(n, self.M.degrees.count(n)) for n in range(2, self.built_up_to + 1)]

    def verify(self, up_to: int | None = None) -> bool:
        return is_minimal_simply_connected(self.M) and is_quasi_iso(
            self.f, self.built_up_to if up_to is None else up_to
        )

    def to_json(self) -> dict:
        return {
            "model": self.M.to_json(),
            "map": self.f.to_json(),
            "built_up_to": self.built_up_to,
            "generator_counts": {str(n): c for n, c in self.generator_counts()},
        }


class _Builder:
    def __init__(self, A):
        self.A = A
        self.gens: list[tuple[str, int]] = []
        self.diffs: dict[str, str] = {}
        self.images: dict = {}
        self.M = CdgaPresentation([])
        self.f = CdgaMorphism(self.M, A, {})

    def add(self, n: int, d_text: str, image) -> None:
        name = f"e{n}_{sum(1 for _, k in self.gens if k == n) + 1}"
        self.gens.append((name, n))
        if d_text != "0":
            self.diffs[name] = d_text
        self.images[name] = image

    def rebuild(self) -> None:
        self.M = CdgaPresentation(self.gens, self.diffs)
        self.f = CdgaMorphism(self.M, self.A, self.images)


def minimal_model(A, N: int) -> MinimalModelResult:
    """Minimal model M -> A through degree N (A simply connected, finite type to N+1)."""
    if N < 1:
        raise ValueError("degree bound must be >= 1")
    h0 = A.cohomology(0).dim
    if h0 != 1:
        raise NotSimplyConnectedError(f"H^0 has dimension {h0}, expected 1 (degree 0)", 0)
    h1 = A.cohomology(1).dim
    if h1:
        raise NotSimplyConnectedError(f"H^1 has dimension {h1}, expected 0 (degree 1)", 1)
    b = _Builder(A)
    for n in range(2, N + 1):
        # surjectivity in degree n
        images = [b.f(z) for z in b.M.cohomology(n).representatives]
        for rep in A.cohomology(n).representatives:
            rels = A.exact_relations(images + [rep], n)
            if any(c[-1] for c, _ in rels):
                continue
            b.add(n, "0", rep)
            images.append(rep)
        b.rebuild()
        # injectivity in degree n+1
        zs = b.M.cohomology(n + 1).representatives
        if zs:
            for c, prim in A.exact_relations([b.f(z) for z in zs], n + 1):
                lead = next(q for q in c if q)
                c, prim = [q / lead for q in c], prim * (1 / lead)
                dz = b.M.zero()
                for q, z in zip(c, zs):
                    if q:
                        dz = dz + z * q
                b.add(n, b.M.format(dz), prim)
            b.rebuild()
    return MinimalModelResult(b.M, b.f, N)


def _simply_connected_check(X: FiniteSimplicialSet) -> None:
    edges = X.nondegenerate(1) if X.dimension_bound >= 1 else []
    if edges:
        raise NotSimplyConnectedError(
            f"{len(edges)} nondegenerate 1-simplices: only edge-free simplicial sets are supported", 1
        )


def rational_homotopy_dims(X, N: int, d_max: int = 8) -> list[tuple[int, int]]:
    """(n, dim V^n) for 2 <= n <= N, read off a minimal model.

    ``X`` is a finite simplicial set (modelled by A_PL) or a cdga presentation
    assumed quasi-isomorphic to A_PL of some space.  dim V^n is the rank of
    pi_n tensored with Q.
    """
    if isinstance(X, CdgaPresentation):
        A = X
    else:
        _simply_connected_check(X)
        A = AplAlgebra(X, d_max=d_max)
    return minimal_model(A, N).generator_counts()


def is_realization_point(A: CdgaPresentation, assignment: Mapping, n: int) -> bool:
    """Whether generator -> form on the n-simplex extends to a cdga map A -> nabla_n."""
    target = nabla(n)
    images = {}
    for name, form in assignment.items():
        if not isinstance(form, PolynomialForm):
            form = PolynomialForm.parse(str(form), n)
        if form.n != n:
            raise ValueError(f"form for {name!r} lives on the {form.n}-simplex, expected {n}")
        images[name] = form
    f = CdgaMorphism(A, target, images)
    return f.check() is None
