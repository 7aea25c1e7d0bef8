"""Free graded-commutative differential algebras over Q.

A :class:`CdgaPresentation` is ``Lambda(V)`` on finitely many generators of
positive degree with a differential given on generators.  Monomials are
exponent vectors over the generators sorted by (degree, name); odd
generators appear at most once.  Every computation is degreewise: degree
bases are finite, so cohomology and the ``A(n, m)`` filtration reduce to
rank computations.

Cochain-algebra protocol
------------------------
:func:`is_quasi_iso` and the minimal-model construction accept any target
providing ``one()``, ``zero()``, ``d(x)``, ``cohomology(n)`` and
``exact_relations(elements, n)``, whose elements support ``+``, scalar ``*``,
the algebra product ``*`` and ``degree()``.  :class:`CdgaPresentation` is one
such target; the PL de Rham algebra of a simplicial set is another.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from .exactalg import (
    RationalMatrix,
    SubspaceBasis,
    as_fraction,
    independent_subset,
    kernel_basis,
    rref,
    span,
)

__all__ = [
    "CdgaPresentation",
    "Polynomial",
    "CdgaMorphism",
    "CohomologyGroup",
    "DifferentialViolation",
    "GradedSubspace",
    "monomial_normal_form",
    "check_differential",
    "degree_basis",
    "cohomology",
    "is_quasi_iso",
    "is_minimal_simply_connected",
    "filtration_stage",
    "filtration_minimal",
    "contractible",
    "tensor",
]

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class Polynomial:
    """An element of a :class:`CdgaPresentation`: monomial exponent vector -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "CdgaPresentation", terms: Mapping | None = None):
        self.algebra = algebra
        self.terms = {m: as_fraction(c) for m, c in (terms or {}).items() if c}

    def _same(self, other):
        if not isinstance(other, Polynomial) or other.algebra is not self.algebra:
            if isinstance(other, Polynomial) and other.algebra == self.algebra:
                return
            raise TypeError("polynomials from different algebras")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Polynomial(self.algebra, t)

    def __neg__(self):
        return Polynomial(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.algebra.mul(self, other)
        q = as_fraction(other)
        return Polynomial(self.algebra, {m: q * c for m, c in self.terms.items()})

    def __rmul__(self, other):
        q = as_fraction(other)
        return Polynomial(self.algebra, {m: q * c for m, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self.terms}

    def degree(self) -> int | None:
        """Total degree of a homogeneous polynomial; None for zero."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return next(iter(ds), None)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def format(self) -> str:
        return self.algebra.format(self)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()})"


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    dim: int
    representatives: tuple


@dataclass(frozen=True)
class DifferentialViolation:
    generator: str
    residue: object

    def __str__(self):
        return f"d(d({self.generator})) = {self.residue} != 0"


class CdgaPresentation:
    """Lambda(generators) with a differential; generators have degree >= 1."""

    def __init__(self, generators: Sequence, differential: Mapping | None = None):
        gens = []
        for g in generators:
            name, deg = (g["name"], g["degree"]) if isinstance(g, Mapping) else g
            if not isinstance(name, str) or not _NAME.fullmatch(name):
                raise ValueError(f"bad generator name {name!r}")
            if int(deg) < 1:
                raise ValueError(f"generator {name!r} has degree {deg}; degrees must be >= 1")
            gens.append((name, int(deg)))
        gens.sort(key=lambda g: (g[1], g[0]))
        self.names = tuple(g[0] for g in gens)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.degrees = tuple(g[1] for g in gens)
        self.index = {n: i for i, n in enumerate(self.names)}
        self._odd = tuple(d % 2 == 1 for d in self.degrees)
        self._dcache: dict = {}
        self._basis_cache: dict = {}
        self._dmat_cache: dict = {}
        self._diff: dict[str, Polynomial] = {}
        for name, expr in (differential or {}).items():
            if name not in self.index:
                raise ValueError(f"differential given for unknown generator {name!r}")
            p = expr if isinstance(expr, Polynomial) else self.parse(str(expr))
            if p.algebra is not self:
                p = Polynomial(self, p.terms)
            want = self.degrees[self.index[name]] + 1
            for m in p.terms:
                if self.monomial_degree(m) != want:
                    raise ValueError(
                        f"d({name}) must have degree {want}, found a term of degree "
                        f"{self.monomial_degree(m)}"
                    )
            if p:
                self._diff[name] = p

    # -- structure ---------------------------------------------------------

    @property
    def generators(self) -> list[tuple[str, int]]:
        return list(zip(self.names, self.degrees))

    def differential_of(self, name: str) -> Polynomial:
        return self._diff.get(name, self.zero())

    def __eq__(self, other):
        if not isinstance(other, CdgaPresentation):
            return NotImplemented
        return self.generators == other.generators and {
            k: v.terms for k, v in self._diff.items()
        } == {k: v.terms for k, v in other._diff.items()}

    def __hash__(self):
        return hash(tuple(self.generators))

    def __repr__(self):
        gens = ", ".join(f"{n}_{d}" for n, d in self.generators)
        diff = "; ".join(f"d{n}={p}" for n, p in sorted(self._diff.items()))
        return f"CdgaPresentation(Lambda({gens}){'; ' + diff if diff else ''})"

    def monomial_degree(self, m: tuple) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def unit_monomial(self) -> tuple:
        return (0,) * len(self.names)

    def one(self) -> Polynomial:
        return Polynomial(self, {self.unit_monomial(): 1})

    def zero(self) -> Polynomial:
        return Polynomial(self)

    def gen(self, name: str) -> Polynomial:
        m = [0] * len(self.names)
        m[self.index[name]] = 1
        return Polynomial(self, {tuple(m): 1})

    # -- products ----------------------------------------------------------

    def mul_monomials(self, a: tuple, b: tuple) -> tuple[int, tuple | None]:
        """(sign, a*b in normal form); sign 0 when the product vanishes."""
        odd = self._odd
        sign = 1
        for j, (x, y) in enumerate(zip(a, b)):
            if odd[j] and y:
                if x:
                    return 0, None
                # moving b's odd generator j past a's odd generators to its right
                if sum(1 for i in range(j + 1, len(a)) if odd[i] and a[i]) % 2:
                    sign = -sign
        return sign, tuple(x + y for x, y in zip(a, b))

    def mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for a, c in p.terms.items():
            for b, e in q.terms.items():
                s, m = self.mul_monomials(a, b)
                if s:
                    out[m] += s * c * e
        return Polynomial(self, {m: c for m, c in out.items() if c})

    # -- differential ------------------------------------------------------

    def _d_monomial(self, m: tuple) -> Polynomial:
        if m in self._dcache:
            return self._dcache[m]
        total = self.zero()
        prefix_deg = 0
        for i, e in enumerate(m):
            if not e:
                continue
            name = self.names[i]
            dg = self._diff.get(name)
            if dg is not None:
                before = tuple(m[:i]) + (0,) * (len(m) - i)
                rest = [0] * len(m)
                rest[i] = e - 1
                rest[i + 1:] = m[i + 1:]
                sign = -1 if prefix_deg % 2 else 1
                # d(g^e) = e g^(e-1) dg for even g; odd g has e = 1
                term = Polynomial(self, {before: sign * e}) * dg
                term = term * Polynomial(self, {tuple(rest): 1})
                total = total + term
            prefix_deg += e * self.degrees[i]
        self._dcache[m] = total
        return total

    def d(self, p: Polynomial) -> Polynomial:
        out = self.zero()
        for m, c in p.terms.items():
            out = out + self._d_monomial(m) * c
        return out

    # -- degreewise linear algebra -----------------------------------------

    def degree_basis(self, n: int) -> list[tuple]:
        """Normal-form monomials of total degree n, in a fixed order."""
        if n in self._basis_cache:
            return self._basis_cache[n]
        out = []
        k = len(self.names)

        def rec(i, remaining, acc):
            if i == k:
                if remaining == 0:
                    out.append(tuple(acc))
                return
            d = self.degrees[i]
            top = 1 if self._odd[i] else remaining // d
            for e in range(min(top, remaining // d), -1, -1):
                acc.append(e)
                rec(i + 1, remaining - e * d, acc)
                acc.pop()

        if n >= 0:
            rec(0, n, [])
        self._basis_cache[n] = out
        return out

    def vector(self, p: Polynomial, n: int) -> list[Fraction]:
        basis = self.degree_basis(n)
        idx = {m: i for i, m in enumerate(basis)}
        v = [Fraction(0)] * len(basis)
        for m, c in p.terms.items():
            if m not in idx:
                raise ValueError(f"{p} has a term outside degree {n}")
            v[idx[m]] = c
        return v

    def from_vector(self, v: Sequence, n: int) -> Polynomial:
        return Polynomial(self, dict(zip(self.degree_basis(n), v)))

    def d_matrix(self, n: int) -> RationalMatrix:
        """Matrix of d : A^n -> A^(n+1) in the degree bases."""
        if n not in self._dmat_cache:
            cols = [self.vector(self._d_monomial(m), n + 1) for m in self.degree_basis(n)]
            self._dmat_cache[n] = RationalMatrix.from_columns(cols, len(self.degree_basis(n + 1)))
        return self._dmat_cache[n]

    def cohomology(self, n: int) -> CohomologyGroup:
        return cohomology(self, n)

    def exact_relations(self, elements: Sequence[Polynomial], n: int) -> list[tuple[list, Polynomial]]:
        """Basis of ``{c : sum c_i e_i is exact}`` with a primitive for each relation."""
        prev = self.degree_basis(n - 1)
        dm = self.d_matrix(n - 1)
        _, pivots = rref(dm)
        cols = [self.vector(e, n) for e in elements] + [list(dm.column(j)) for j in pivots]
        ker = kernel_basis(RationalMatrix.from_columns(cols, dm.rows))
        k = len(elements)
        out = []
        for v in ker:
            prim = Polynomial(self, {prev[j]: -v[k + t] for t, j in enumerate(pivots)})
            out.append((list(v[:k]), prim))
        return out

    # -- text --------------------------------------------------------------

    def format_monomial(self, m: tuple) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def format(self, p: Polynomial) -> str:
        if not p.terms:
            return "0"
        out = []
        for m in sorted(p.terms, key=lambda m: (self.monomial_degree(m), tuple(-e for e in m))):
            c = p.terms[m]
            mono = self.format_monomial(m)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def parse(self, text: str) -> Polynomial:
        """Parse ``"x^2 - 1/2*x*y"``; factors multiply left to right with the sign rule."""
        return _PolyParser(self, text).parse()

    def to_json(self) -> dict:
        return {
            "generators": [{"name": n, "degree": d} for n, d in self.generators],
            "differential": {n: self._diff[n].format() for n in self.names if n in self._diff},
        }

    @classmethod
    def from_json(cls, data) -> "CdgaPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        unknown = set(data) - {"generators", "differential"}
        if unknown:
            raise ValueError(f"unknown keys in cdga JSON: {sorted(unknown)}")
        return cls(data["generators"], data.get("differential", {}))


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _PolyParser:
    def __init__(self, algebra: CdgaPresentation, text: str):
        self.A = algebra
        self.text = text
        self.tokens = []
        pos = 0
        s = text.strip()
        while pos < len(s):
            m = _TOKEN.match(s, pos)
            num, name, sym = m.groups()
            self.tokens.append(("num", num) if num else ("name", name) if name else ("sym", sym))
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def fail(self, what):
        raise ValueError(f"{what} at token {self.pos} in {self.text!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty expression")
        total = self.A.zero()
        first = True
        while self.pos < len(self.tokens):
            sign = 1
            if self.peek() in (("sym", "+"), ("sym", "-")):
                sign = -1 if self.peek()[1] == "-" else 1
                self.pos += 1
            elif not first:
                self.fail("expected '+' or '-'")
            total = total + self.term() * sign
            first = False
        return total

    def term(self) -> Polynomial:
        result = self.A.one()
        seen = False
        while True:
            kind, val = self.peek()
            if kind == "num":
                self.pos += 1
                result = result * Fraction(val)
            elif kind == "name":
                self.pos += 1
                if val not in self.A.index:
                    self.fail(f"unknown generator {val!r}")
                factor = self.A.gen(val)
                if self.peek() == ("sym", "^"):
                    self.pos += 1
                    k, e = self.peek()
                    if k != "num" or "/" in e:
                        self.fail("expected an integer exponent")
                    self.pos += 1
                    power = self.A.one()
                    for _ in range(int(e)):
                        power = power * factor
                    factor = power
                result = result * factor
            elif (kind, val) == ("sym", "("):
                self.pos += 1
                depth_start = self.pos
                inner_tokens = []
                depth = 1
                while self.pos < len(self.tokens):
                    t = self.tokens[self.pos]
                    self.pos += 1
                    if t == ("sym", "("):
                        depth += 1
                    elif t == ("sym", ")"):
                        depth -= 1
                        if depth == 0:
                            break
                    inner_tokens.append(t)
                if depth:
                    self.pos = depth_start
                    self.fail("unbalanced parenthesis")
                sub = _PolyParser(self.A, "")
                sub.tokens, sub.text = inner_tokens, self.text
                result = result * sub.parse()
            else:
                if not seen:
                    self.fail(f"unexpected {val!r}")
                return result
            seen = True
            if self.peek() == ("sym", "*"):
                self.pos += 1


# ----------------------------------------------------------------------------
# module-level operations

def monomial_normal_form(A: CdgaPresentation, factors: Sequence[str]) -> tuple[int, tuple | None]:
    """Sort a product of generators into normal form: (sign, monomial), sign 0 if it vanishes."""
    sign, mono = 1, A.unit_monomial()
    for name in factors:
        if name not in A.index:
            raise ValueError(f"unknown generator {name!r}")
        g = [0] * len(A.names)
        g[A.index[name]] = 1
        s, mono = A.mul_monomials(mono, tuple(g))
        if not s:
            return 0, None
        sign *= s
    return sign, mono


def check_differential(A: CdgaPresentation) -> DifferentialViolation | None:
    """First generator g with d(d(g)) != 0, or None."""
    for name in A.names:
        residue = A.d(A.differential_of(name))
        if residue:
            return DifferentialViolation(name, residue)
    return None


def degree_basis(A: CdgaPresentation, n: int) -> list[Polynomial]:
    return [Polynomial(A, {m: 1}) for m in A.degree_basis(n)]


def cohomology(A: CdgaPresentation, n: int) -> CohomologyGroup:
    """H^n(A) with representative cocycles chosen greedily from an echelon kernel basis."""
    basis = A.degree_basis(n)
    if not basis:
        return CohomologyGroup(n, 0, ())
    cycles = kernel_basis(A.d_matrix(n))
    bounds = []
    if n >= 1:
        dm = A.d_matrix(n - 1)
        bounds = [dm.column(j) for j in range(dm.cols)]
    keep = independent_subset(len(basis), cycles.vectors, bounds)
    reps = tuple(A.from_vector(cycles.vectors[i], n) for i in keep)
    return CohomologyGroup(n, len(reps), reps)


class CdgaMorphism:
    """A map of cdgas given on generators; ``target`` follows the cochain-algebra protocol."""

    def __init__(self, source: CdgaPresentation, target, images: Mapping):
        self.source = source
        self.target = target
        self.images = {}
        for name in source.names:
            img = images.get(name, target.zero())
            if isinstance(target, CdgaPresentation) and not isinstance(img, Polynomial):
                img = target.parse(str(img))
            if img:
                deg = img.degree()
                want = source.degrees[source.index[name]]
                if deg != want:
                    raise ValueError(f"image of {name!r} has degree {deg}, expected {want}")
            self.images[name] = img
        extra = set(images) - set(source.names)
        if extra:
            raise ValueError(f"images given for unknown generators {sorted(extra)}")

    def apply(self, p: Polynomial):
        out = self.target.zero()
        cache: dict = {}
        for m, c in p.terms.items():
            term = self.target.one()
            for name, e in zip(self.source.names, m):
                if e:
                    key = (name, e)
                    if key not in cache:
                        power = self.target.one()
                        for _ in range(e):
                            power = power * self.images[name]
                        cache[key] = power
                    term = term * cache[key]
            out = out + term * c
        return out

    __call__ = apply

    def check(self) -> str | None:
        """First generator on which f d != d f, or None for a chain map."""
        for name in self.source.names:
            lhs = self.apply(self.source.differential_of(name))
            rhs = self.target.d(self.images[name])
            if lhs != rhs and (lhs - rhs):
                return name
        return None

    @classmethod
    def identity(cls, A: CdgaPresentation) -> "CdgaMorphism":
        return cls(A, A, {n: A.gen(n) for n in A.names})

    def to_json(self) -> dict:
        return {n: img.format() for n, img in self.images.items()}


def is_quasi_iso(f: CdgaMorphism, up_to: int) -> bool:
    """True iff H^n(f) is bijective for every n <= up_to."""
    bad = f.check()
    if bad is not None:
        raise ValueError(f"not a chain map: fails on generator {bad!r}")
    for n in range(up_to + 1):
        hs = f.source.cohomology(n)
        ht = f.target.cohomology(n)
        if hs.dim != ht.dim:
            return False
        if hs.dim and f.target.exact_relations([f(r) for r in hs.representatives], n):
            return False
    return True


def is_minimal_simply_connected(M: CdgaPresentation) -> bool:
    """Every generator's differential is decomposable; M must have no degree-1 generators."""
    low = [n for n, d in M.generators if d == 1]
    if low:
        raise ValueError(
            f"degree-1 generators {low}: not simply connected; use filtration_minimal instead"
        )
    for name in M.names:
        for m in M.differential_of(name).terms:
            if sum(m) < 2:
                return False
    return True


# ----------------------------------------------------------------------------
# the A(n), A(n, m) filtration

@dataclass(frozen=True)
class GradedSubspace:
    """Degreewise subspaces of A, as SubspaceBasis in degree-basis coordinates."""

    algebra: CdgaPresentation
    parts: tuple

    def dims(self) -> tuple:
        return tuple(p.dim for p in self.parts)

    def basis(self, k: int) -> list[Polynomial]:
        return [self.algebra.from_vector(v, k) for v in self.parts[k].vectors]

    def __eq__(self, other):
        return isinstance(other, GradedSubspace) and self.dims() == other.dims() and all(
            span(p.ambient_dim, list(p.vectors) + list(q.vectors)).dim == p.dim
            for p, q in zip(self.parts, other.parts)
        )

    def __hash__(self):
        return hash(self.dims())


def _generated(A: CdgaPresentation, gens: Mapping[int, list], bound: int) -> GradedSubspace:
    """Subalgebra generated by homogeneous vectors ``gens[k]`` (k >= 1), through ``bound``."""
    parts = [span(len(A.degree_basis(0)), [A.vector(A.one(), 0)])]
    for k in range(1, bound + 1):
        dim = len(A.degree_basis(k))
        cands = list(gens.get(k, []))
        for j in range(1, k):
            left = [A.from_vector(v, j) for v in gens.get(j, [])]
            right = [A.from_vector(v, k - j) for v in parts[k - j].vectors]
            for s, u in iproduct(left, right):
                cands.append(A.vector(s * u, k))
        parts.append(span(dim, cands))
    return GradedSubspace(A, tuple(parts))


def _stage_n(A: CdgaPresentation, n: int, bound: int) -> GradedSubspace:
    if n < 0:
        return _generated(A, {}, bound)
    gens: dict[int, list] = defaultdict(list)
    for k in range(1, n + 1):
        dim = len(A.degree_basis(k))
        gens[k] += [[int(i == j) for j in range(dim)] for i in range(dim)]
    dm = A.d_matrix(n)
    gens[n + 1] += [list(dm.column(j)) for j in range(dm.cols)]
    return _generated(A, gens, bound)


def _preimage(A: CdgaPresentation, n: int, target: SubspaceBasis) -> list:
    """Basis of {a in A^n : d a in target}."""
    dm = A.d_matrix(n)
    cols = [list(dm.column(j)) for j in range(dm.cols)] + [list(v) for v in target.vectors]
    ker = kernel_basis(RationalMatrix.from_columns(cols, dm.rows))
    return span(dm.cols, [v[: dm.cols] for v in ker]).vectors


def filtration_stage(A: CdgaPresentation, n: int, m: int | None, degree_bound: int) -> GradedSubspace:
    """A(n, m) through ``degree_bound``; ``m=None`` gives A(n) and ``n=-1`` gives Q.1."""
    if n < 0 or m is None:
        return _stage_n(A, n, degree_bound)
    bound = max(degree_bound, n + 1)
    cur = _stage_n(A, n - 1, bound)
    for _ in range(m):
        nxt = _grow(A, n, cur, bound)
        if nxt == cur:
            break
        cur = nxt
    return GradedSubspace(A, cur.parts[: degree_bound + 1])


def _grow(A: CdgaPresentation, n: int, cur: GradedSubspace, bound: int) -> GradedSubspace:
    gens = {k: list(cur.parts[k].vectors) for k in range(1, bound + 1)}
    gens[n] = gens.get(n, []) + list(_preimage(A, n, cur.parts[n + 1]))
    return _generated(A, gens, bound)


def filtration_minimal(M: CdgaPresentation, degree_bound: int) -> bool:
    """Check M(n) = union over m of M(n, m) in degrees <= degree_bound, for 1 <= n <= degree_bound."""
    for n in range(1, degree_bound + 1):
        bound = max(degree_bound, n + 1)
        full = _stage_n(M, n, bound)
        cur = _stage_n(M, n - 1, bound)
        while True:
            nxt = _grow(M, n, cur, bound)
            if nxt == cur:
                break
            cur = nxt
        if cur.dims()[: degree_bound + 1] != full.dims()[: degree_bound + 1]:
            return False
    return True


# ----------------------------------------------------------------------------
# constructions

def contractible(n: int, a: str = "a", b: str = "b") -> CdgaPresentation:
    """T(n): free on a (degree n) and b = da (degree n+1)."""
    return CdgaPresentation([(a, n), (b, n + 1)], {a: b})


def tensor(A: CdgaPresentation, B: CdgaPresentation) -> CdgaPresentation:
    """A (x) B on the disjoint union of generators (names must not clash)."""
    if set(A.names) & set(B.names):
        raise ValueError("generator names clash")
    gens = A.generators + B.generators
    diff = {n: A.differential_of(n).format() for n in A.names}
    diff.update({n: B.differential_of(n).format() for n in B.names})
    return CdgaPresentation(gens, {k: v for k, v in diff.items() if v != "0"})
