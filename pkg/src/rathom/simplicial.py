"""Finite simplicial sets and their rational (co)homology.

A :class:`FiniteSimplicialSet` stores every simplex up to ``dimension_bound``,
degenerate ones included, with face and degeneracy maps as index tables.  The
builders describe a space by its nondegenerate cells only and materialize the
degeneracies through the Eilenberg-Zilber normal form ``sigma^* x`` (``x``
nondegenerate, ``sigma`` a monotone surjection).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .exactalg import RationalMatrix, rank

__all__ = [
    "Simplex",
    "FiniteSimplicialSet",
    "BettiTable",
    "Violation",
    "validate",
    "chain_complex",
    "homology",
    "cohomology",
    "euler_characteristic",
    "from_cells",
    "simplex",
    "point",
    "sphere",
    "boundary_of_simplex",
    "torus",
    "wedge",
]


@dataclass(frozen=True)
class Simplex:
    faces: tuple = ()
    degeneracies: tuple = ()
    degenerate: bool = False


@dataclass(frozen=True)
class Violation:
    """First failing simplicial identity found by :func:`validate`."""

    rule: str
    dim: int
    simplex: int
    indices: tuple = ()

    def __str__(self):
        idx = ",".join(str(i) for i in self.indices)
        return f"{self.rule} fails on {self.dim}-simplex {self.simplex} (i,j={idx})"


@dataclass(frozen=True)
class BettiTable:
    betti: tuple
    cohomological: bool = False

    def __getitem__(self, k):
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def __iter__(self):
        return iter(self.betti)

    def __len__(self):
        return len(self.betti)

    def items(self):
        return list(enumerate(self.betti))

    def format(self) -> str:
        tag = "H^" if self.cohomological else "H"
        return " ".join(f"{tag}{k}={b}" for k, b in enumerate(self.betti))


@dataclass
class FiniteSimplicialSet:
    dimension_bound: int
    levels: list = field(default_factory=list)
    _ez: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.levels) != self.dimension_bound + 1:
            raise ValueError("need one simplex list per dimension 0..dimension_bound")

    def size(self, k: int) -> int:
        return len(self.levels[k]) if 0 <= k <= self.dimension_bound else 0

    def face(self, k: int, s: int, i: int) -> int:
        return self.levels[k][s].faces[i]

    def degeneracy(self, k: int, s: int, j: int) -> int:
        return self.levels[k][s].degeneracies[j]

    def nondegenerate(self, k: int) -> list[int]:
        if not 0 <= k <= self.dimension_bound:
            return []
        return [i for i, s in enumerate(self.levels[k]) if not s.degenerate]

    def top_dimension(self) -> int:
        return max((k for k in range(self.dimension_bound + 1) if self.nondegenerate(k)), default=-1)

    def normal_form(self, k: int, s: int) -> tuple[int, int, tuple]:
        """(m, x, sigma): simplex ``s`` of dim k equals sigma^* x, x nondegenerate of dim m."""
        key = (k, s)
        if key not in self._ez:
            simp = self.levels[k][s]
            if not simp.degenerate:
                self._ez[key] = (k, s, tuple(range(k + 1)))
            else:
                for j in range(k):
                    z = simp.faces[j]
                    if self.levels[k - 1][z].degeneracies[j] == s:
                        m, x, sigma = self.normal_form(k - 1, z)
                        self._ez[key] = (m, x, sigma[: j + 1] + sigma[j:])
                        break
                else:
                    raise ValueError(f"degenerate {k}-simplex {s} is not s_j of its face d_j")
        return self._ez[key]

    def cells(self) -> list[tuple]:
        """Nondegenerate data: (dim, index, faces as normal forms) per cell."""
        out = []
        for k in range(self.dimension_bound + 1):
            for s in self.nondegenerate(k):
                faces = tuple(self.normal_form(k - 1, f) for f in self.levels[k][s].faces) if k else ()
                out.append((k, s, faces))
        return out

    def to_json(self) -> dict:
        simplices = []
        for k, level in enumerate(self.levels):
            for i, s in enumerate(level):
                simplices.append({
                    "dim": k,
                    "id": i,
                    "faces": list(s.faces),
                    "degeneracies": list(s.degeneracies),
                    "degenerate": s.degenerate,
                })
        return {"dimension_bound": self.dimension_bound, "simplices": simplices}

    @classmethod
    def from_json(cls, data) -> "FiniteSimplicialSet":
        """Build from the JSON table format; ids are arbitrary and unique per dimension."""
        if isinstance(data, str):
            data = json.loads(data)
        bound = int(data["dimension_bound"])
        raw = [[] for _ in range(bound + 1)]
        for entry in data["simplices"]:
            k = int(entry["dim"])
            if not 0 <= k <= bound:
                raise ValueError(f"simplex {entry.get('id')!r} has dim {k} outside 0..{bound}")
            raw[k].append(entry)
        ids = [{e["id"]: i for i, e in enumerate(level)} for level in raw]
        for k, level in enumerate(raw):
            if len(ids[k]) != len(level):
                raise ValueError(f"duplicate simplex ids in dimension {k}")
        levels = []
        for k, level in enumerate(raw):
            out = []
            for e in level:
                try:
                    faces = tuple(ids[k - 1][f] for f in e.get("faces", [])) if k else ()
                    degs = tuple(ids[k + 1][d] for d in e.get("degeneracies", [])) if k < bound else ()
                except KeyError as exc:
                    raise ValueError(f"{k}-simplex {e['id']!r} refers to unknown id {exc}") from None
                out.append(Simplex(faces, degs, bool(e.get("degenerate", False))))
            levels.append(out)
        return cls(bound, levels)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ----------------------------------------------------------------------------
# validation

def validate(X: FiniteSimplicialSet) -> Violation | None:
    """Check table shapes and all simplicial identities; None when X is valid."""
    N = X.dimension_bound
    L = X.levels
    for k in range(N + 1):
        for s, simp in enumerate(L[k]):
            nf = k + 1 if k else 0
            nd = k + 1 if k < N else 0
            if len(simp.faces) != nf:
                return Violation("face table length", k, s)
            if len(simp.degeneracies) != nd:
                return Violation("degeneracy table length", k, s)
            if any(not 0 <= f < X.size(k - 1) for f in simp.faces):
                return Violation("face index range", k, s)
            if any(not 0 <= d < X.size(k + 1) for d in simp.degeneracies):
                return Violation("degeneracy index range", k, s)
    for k in range(2, N + 1):
        for s in range(X.size(k)):
            for j in range(k + 1):
                for i in range(j):
                    if X.face(k - 1, X.face(k, s, j), i) != X.face(k - 1, X.face(k, s, i), j - 1):
                        return Violation("d_i d_j = d_{j-1} d_i", k, s, (i, j))
    for k in range(N):
        for s in range(X.size(k)):
            for j in range(k + 1):
                t = X.degeneracy(k, s, j)
                for i in range(k + 2):
                    lhs = X.face(k + 1, t, i)
                    if i in (j, j + 1):
                        rhs = s
                    elif i < j:
                        rhs = X.degeneracy(k - 1, X.face(k, s, i), j - 1)
                    else:
                        rhs = X.degeneracy(k - 1, X.face(k, s, i - 1), j)
                    if lhs != rhs:
                        return Violation("d_i s_j", k, s, (i, j))
    for k in range(N - 1):
        for s in range(X.size(k)):
            for j in range(k + 1):
                for i in range(j + 1):
                    lhs = X.degeneracy(k + 1, X.degeneracy(k, s, j), i)
                    rhs = X.degeneracy(k + 1, X.degeneracy(k, s, i), j + 1)
                    if lhs != rhs:
                        return Violation("s_i s_j = s_{j+1} s_i", k, s, (i, j))
    image = [set() for _ in range(N + 1)]
    for k in range(N):
        for simp in L[k]:
            image[k + 1].update(simp.degeneracies)
    for k in range(1, N + 1):
        for s, simp in enumerate(L[k]):
            if simp.degenerate != (s in image[k]):
                return Violation("degenerate flag matches image of degeneracies", k, s)
    return None


def _require_valid(X: FiniteSimplicialSet):
    v = validate(X)
    if v is not None:
        raise ValueError(f"invalid simplicial set: {v}")


# ----------------------------------------------------------------------------
# (co)homology on normalized chains

def chain_complex(X: FiniteSimplicialSet) -> list[RationalMatrix]:
    """Boundary maps on normalized chains; entry k is d_k : C_k -> C_{k-1}."""
    out = [RationalMatrix.zeros(0, len(X.nondegenerate(0)))]
    for k in range(1, X.dimension_bound + 1):
        src = X.nondegenerate(k)
        tgt = X.nondegenerate(k - 1)
        row = {s: i for i, s in enumerate(tgt)}
        cols = []
        for s in src:
            col = [0] * len(tgt)
            for i, f in enumerate(X.levels[k][s].faces):
                if f in row:
                    col[row[f]] += (-1) ** i
            cols.append(col)
        out.append(RationalMatrix.from_columns(cols, len(tgt)))
    return out


def _betti(X: FiniteSimplicialSet, transpose: bool) -> tuple:
    _require_valid(X)
    maps = chain_complex(X)
    if transpose:
        maps = [m.transpose() for m in maps]
    ranks = [rank(m) for m in maps] + [0]
    return tuple(
        len(X.nondegenerate(k)) - ranks[k] - ranks[k + 1] for k in range(X.dimension_bound + 1)
    )


def homology(X: FiniteSimplicialSet) -> BettiTable:
    return BettiTable(_betti(X, False))


def cohomology(X: FiniteSimplicialSet) -> BettiTable:
    return BettiTable(_betti(X, True), cohomological=True)


def euler_characteristic(X: FiniteSimplicialSet) -> int:
    return sum((-1) ** k * len(X.nondegenerate(k)) for k in range(X.dimension_bound + 1))


# ----------------------------------------------------------------------------
# builders

def _surjections(k: int, m: int) -> list[tuple]:
    """Monotone surjections [k] -> [m] as value tuples, lexicographic order."""
    out = []
    for jumps in combinations(range(1, k + 1), m):
        sigma, v = [], 0
        for t in range(k + 1):
            if v < m and t == jumps[v]:
                v += 1
            sigma.append(v)
        out.append(tuple(sigma))
    return out


def from_cells(cells: Sequence, bound: int | None = None) -> FiniteSimplicialSet:
    """Materialize a simplicial set from nondegenerate cells.

    ``cells`` is a list of ``(name, dim, faces)`` with string names; each face is either the name
    of a cell one dimension lower or a pair ``(name, sigma)`` meaning
    ``sigma^* name`` for a monotone surjection ``sigma`` given by its values.
    """
    dims, face_nf = {}, {}
    order = []
    for name, dim, faces in cells:
        if name in dims:
            raise ValueError(f"duplicate cell {name!r}")
        if len(faces) != (dim + 1 if dim else 0):
            raise ValueError(f"cell {name!r} of dim {dim} needs {dim + 1 if dim else 0} faces")
        dims[name] = dim
        order.append(name)
    for name, dim, faces in cells:
        nf = []
        for f in faces:
            y, sigma = (f, None) if isinstance(f, str) else (f[0], tuple(f[1]))
            if y not in dims:
                raise ValueError(f"cell {name!r} has unknown face {y!r}")
            if sigma is None:
                sigma = tuple(range(dims[y] + 1))
            if len(sigma) != dim or sorted(set(sigma)) != list(range(dims[y] + 1)) \
                    or list(sigma) != sorted(sigma):
                raise ValueError(f"bad degeneracy {sigma} on face {y!r} of {name!r}")
            nf.append((y, sigma))
        face_nf[name] = nf
    top = max(dims.values(), default=0)
    N = top if bound is None else bound
    if N < top:
        raise ValueError("dimension bound below the top cell")
    levels_keys = []
    for k in range(N + 1):
        keys = [(x, tuple(range(k + 1))) for x in order if dims[x] == k]
        for x in order:
            if dims[x] < k:
                keys += [(x, s) for s in _surjections(k, dims[x])]
        levels_keys.append(keys)
    index = [{key: i for i, key in enumerate(keys)} for keys in levels_keys]

    def face_key(key, i):
        x, sigma = key
        tau = sigma[:i] + sigma[i + 1:]
        m = dims[x]
        if len(set(tau)) == m + 1:
            return (x, tau)
        j = sigma[i]
        tau = tuple(t - 1 if t > j else t for t in tau)
        y, rho = face_nf[x][j]
        return (y, tuple(rho[t] for t in tau))

    levels = []
    for k, keys in enumerate(levels_keys):
        level = []
        for key in keys:
            faces = tuple(index[k - 1][face_key(key, i)] for i in range(k + 1)) if k else ()
            degs = ()
            if k < N:
                x, sigma = key
                degs = tuple(index[k + 1][(x, sigma[: j + 1] + sigma[j:])] for j in range(k + 1))
            level.append(Simplex(faces, degs, len(set(key[1])) != k + 1))
        levels.append(level)
    return FiniteSimplicialSet(N, levels)


def _subset_cells(vertices: int, top: int) -> list:
    def name(sub):
        return "v" + "".join(str(v) for v in sub) if vertices <= 10 else "v" + "_".join(map(str, sub))

    cells = []
    for k in range(top + 1):
        for sub in combinations(range(vertices), k + 1):
            faces = [name(sub[:i] + sub[i + 1:]) for i in range(k + 1)] if k else []
            cells.append((name(sub), k, faces))
    return cells


def simplex(n: int, bound: int | None = None) -> FiniteSimplicialSet:
    """The standard n-simplex: one cell per nonempty vertex subset."""
    return from_cells(_subset_cells(n + 1, n), bound)


def point(bound: int = 0) -> FiniteSimplicialSet:
    return simplex(0, bound)


def boundary_of_simplex(n: int, bound: int | None = None) -> FiniteSimplicialSet:
    """The boundary of the (n+1)-simplex, a model of S^n with n+2 vertices."""
    return from_cells(_subset_cells(n + 2, n), bound)


def sphere(n: int, bound: int | None = None) -> FiniteSimplicialSet:
    """S^n as one vertex and one n-cell whose faces all collapse to the vertex."""
    if n == 0:
        return from_cells([("v", 0, []), ("w", 0, [])], bound)
    collapse = ("v", (0,) * n)
    return from_cells([("v", 0, []), ("e", n, [collapse] * (n + 1))], bound)


def torus(bound: int | None = None) -> FiniteSimplicialSet:
    """One vertex, edges a, b and diagonal c, two triangles."""
    return from_cells(
        [
            ("v", 0, []),
            ("a", 1, ["v", "v"]),
            ("b", 1, ["v", "v"]),
            ("c", 1, ["v", "v"]),
            ("U", 2, ["b", "c", "a"]),
            ("L", 2, ["a", "c", "b"]),
        ],
        bound,
    )


def wedge(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, bound: int | None = None) -> FiniteSimplicialSet:
    """One-point union identifying vertex 0 of X with vertex 0 of Y."""
    cells = []

    def add(tag, Z, glue):
        def name(m, x):
            return "X0_0" if glue and m == 0 and x == 0 else f"{tag}{m}_{x}"

        for k, s, faces in Z.cells():
            if glue and k == 0 and s == 0 and tag == "Y":
                continue
            cells.append((name(k, s), k, [(name(m, y), sigma) for m, y, sigma in faces]))

    add("X", X, False)
    add("Y", Y, True)
    N = max(X.dimension_bound, Y.dimension_bound) if bound is None else bound
    return from_cells(cells, N)
