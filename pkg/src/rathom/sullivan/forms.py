"""Polynomial differential forms on the standard simplices.

``nabla_n`` is ``Q[t_0..t_n] (x) Lambda(dt_0..dt_n)`` modulo ``sum t_i = 1`` and
``sum dt_i = 0``.  We eliminate ``t_0`` and ``dt_0``, so a form on the
n-simplex is a polynomial in ``t_1..t_n`` times wedge monomials in
``dt_1..dt_n``.  The ``t_i`` have degree 0 and the ``dt_i`` degree 1.

A term key is ``(exponents, dts)`` with ``exponents`` a length-n tuple and
``dts`` a strictly increasing tuple of indices in ``1..n``.
"""
from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from ..exactalg import RationalMatrix, as_fraction, rank

__all__ = [
    "PolynomialForm",
    "Nabla",
    "nabla",
    "face_pullback",
    "degeneracy_pullback",
    "form_keys",
    "surjection_pullback",
]


def _wedge_sign(a: tuple, b: tuple) -> tuple[int, tuple | None]:
    """Sign and sorted index tuple of dt_a ^ dt_b; sign 0 on repeats."""
    if set(a) & set(b):
        return 0, None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1) ** inversions, tuple(sorted(a + b))


class PolynomialForm:
    """A polynomial differential form on the ``n``-simplex."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean = {}
        for (exps, dts), c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                clean[(tuple(exps), tuple(dts))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, n: int, c=1) -> "PolynomialForm":
        return cls(n, {((0,) * n, ()): c})

    @classmethod
    def zero(cls, n: int) -> "PolynomialForm":
        return cls._raw(n, {})

    @classmethod
    def t(cls, n: int, i: int) -> "PolynomialForm":
        """The coordinate t_i, including t_0 = 1 - t_1 - ... - t_n."""
        if i == 0:
            out = {((0,) * n, ()): Fraction(1)}
            for j in range(1, n + 1):
                e = [0] * n
                e[j - 1] = 1
                out[(tuple(e), ())] = Fraction(-1)
            return cls._raw(n, out)
        if not 1 <= i <= n:
            raise ValueError(f"t_{i} does not exist on the {n}-simplex")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {(tuple(e), ()): Fraction(1)})

    @classmethod
    def dt(cls, n: int, i: int) -> "PolynomialForm":
        return cls.t(n, i).d()

    def _check(self, other):
        if not isinstance(other, PolynomialForm) or other.n != self.n:
            raise ValueError("forms live on different simplices")

    def __add__(self, other: "PolynomialForm") -> "PolynomialForm":
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return PolynomialForm._raw(self.n, t)

    def __neg__(self):
        return PolynomialForm._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q) -> "PolynomialForm":
        q = as_fraction(q)
        if not q:
            return PolynomialForm.zero(self.n)
        return PolynomialForm._raw(self.n, {k: q * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PolynomialForm):
            return self.scale(other)
        self._check(other)
        out: dict = defaultdict(Fraction)
        for (e1, s1), c1 in self.terms.items():
            for (e2, s2), c2 in other.terms.items():
                sign, dts = _wedge_sign(s1, s2)
                if sign:
                    out[(tuple(a + b for a, b in zip(e1, e2)), dts)] += sign * c1 * c2
        return PolynomialForm._raw(self.n, {k: c for k, c in out.items() if c})

    def __rmul__(self, q):
        return self.scale(q)

    def d(self) -> "PolynomialForm":
        out: dict = defaultdict(Fraction)
        for (exps, dts), c in self.terms.items():
            for i, e in enumerate(exps):
                if not e or (i + 1) in dts:
                    continue
                sign, new = _wedge_sign((i + 1,), dts)
                lowered = exps[:i] + (e - 1,) + exps[i + 1:]
                out[(lowered, new)] += sign * e * c
        return PolynomialForm._raw(self.n, {k: c for k, c in out.items() if c})

    def form_degrees(self) -> set[int]:
        return {len(dts) for _, dts in self.terms}

    def degree(self) -> int | None:
        """Form degree of a homogeneous form; None for zero."""
        ds = self.form_degrees()
        if len(ds) > 1:
            raise ValueError("form is not homogeneous")
        return next(iter(ds), None)

    def filtration_degree(self) -> int:
        """Max over terms of (polynomial degree + number of dt factors); -1 for zero."""
        return max((sum(e) + len(s) for e, s in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PolynomialForm):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (exps, dts), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), sum(kv[0][0]), kv[0][1], tuple(-e for e in kv[0][0]))):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"t{i + 1}")
                elif e > 1:
                    factors.append(f"t{i + 1}^{e}")
            factors += [f"dt{i}" for i in dts]
            mono = "*".join(factors)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, n: int) -> "PolynomialForm":
        """Parse e.g. ``"2*t1^2*dt1 - t0*dt2"``; ``t0``/``dt0`` are eliminated."""
        return _parse_form(text, n)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PolynomialForm(n={self.n}: {self.format()})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(dt\d+|t\d+)|(\S))")


def _parse_form(text: str, n: int) -> PolynomialForm:
    tokens = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        num, var, sym = m.groups()
        tokens.append(("num", num) if num else ("var", var) if var else ("sym", sym))
        pos = m.end()
    if not tokens:
        raise ValueError("empty form expression")
    total = PolynomialForm.zero(n)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i] in (("sym", "+"), ("sym", "-")):
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' in {text!r}")
        term = PolynomialForm.constant(n)
        seen = False
        while i < len(tokens):
            kind, val = tokens[i]
            if kind == "num":
                term = term.scale(Fraction(val))
            elif kind == "var":
                idx = int(val.lstrip("dt"))
                if idx > n:
                    raise ValueError(f"{val} does not exist on the {n}-simplex")
                factor = PolynomialForm.dt(n, idx) if val.startswith("dt") else PolynomialForm.t(n, idx)
                if i + 2 < len(tokens) + 1 and i + 1 < len(tokens) and tokens[i + 1] == ("sym", "^"):
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != "num":
                        raise ValueError(f"expected an exponent in {text!r}")
                    power = PolynomialForm.constant(n)
                    for _ in range(int(tokens[i + 2][1])):
                        power = power * factor
                    factor = power
                    i += 2
                term = term * factor
            else:
                break
            seen = True
            i += 1
            if i < len(tokens) and tokens[i] == ("sym", "*"):
                i += 1
        if not seen:
            raise ValueError(f"unexpected token in {text!r}")
        total = total + term.scale(sign)
        first = False
    return total


# ----------------------------------------------------------------------------
# simplicial structure

def _substitute(form: PolynomialForm, target_n: int, images: list) -> PolynomialForm:
    """Algebra map sending t_i -> images[i-1] (0-forms on the target), dt_i -> d(images)."""
    d_images = [img.d() for img in images]
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            p = PolynomialForm.constant(target_n)
            for _ in range(e):
                p = p * images[i]
            powers[key] = p
        return powers[key]

    out = PolynomialForm.zero(target_n)
    for (exps, dts), c in form.terms.items():
        term = PolynomialForm.constant(target_n, c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        for j in dts:
            term = term * d_images[j - 1]
        out = out + term
    return out


@lru_cache(maxsize=None)
def _face_images(n: int, j: int) -> tuple:
    # d_j : nabla_n -> nabla_{n-1};  t_i -> t_i (i<j), 0 (i=j), t_{i-1} (i>j)
    out = []
    for i in range(1, n + 1):
        if i < j:
            out.append(PolynomialForm.t(n - 1, i))
        elif i == j:
            out.append(PolynomialForm.zero(n - 1))
        else:
            out.append(PolynomialForm.t(n - 1, i - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _degeneracy_images(n: int, j: int) -> tuple:
    # s_j : nabla_n -> nabla_{n+1};  t_i -> t_i (i<j), t_i + t_{i+1} (i=j), t_{i+1} (i>j)
    out = []
    for i in range(1, n + 1):
        if i < j:
            out.append(PolynomialForm.t(n + 1, i))
        elif i == j:
            out.append(PolynomialForm.t(n + 1, i) + PolynomialForm.t(n + 1, i + 1))
        else:
            out.append(PolynomialForm.t(n + 1, i + 1))
    return tuple(out)


def face_pullback(form: PolynomialForm, j: int) -> PolynomialForm:
    """Apply the face operator d_j of nabla: forms on Delta^n -> forms on Delta^(n-1)."""
    n = form.n
    if n < 1 or not 0 <= j <= n:
        raise ValueError(f"face d_{j} undefined on the {n}-simplex")
    return _substitute(form, n - 1, list(_face_images(n, j)))


def degeneracy_pullback(form: PolynomialForm, j: int) -> PolynomialForm:
    """Apply the degeneracy s_j of nabla: forms on Delta^n -> forms on Delta^(n+1)."""
    n = form.n
    if not 0 <= j <= n:
        raise ValueError(f"degeneracy s_{j} undefined on the {n}-simplex")
    return _substitute(form, n + 1, list(_degeneracy_images(n, j)))


def surjection_pullback(form: PolynomialForm, sigma: tuple) -> PolynomialForm:
    """Pull back along a monotone surjection [k] -> [n] given by its values.

    The composite degeneracy sends ``t_i`` to the sum of ``t_l`` over the
    fibre ``sigma^-1(i)``.
    """
    n = form.n
    k = len(sigma) - 1
    if tuple(sigma) == tuple(range(n + 1)):
        return form
    images = []
    for i in range(1, n + 1):
        img = PolynomialForm.zero(k)
        for l, v in enumerate(sigma):
            if v == i:
                img = img + PolynomialForm.t(k, l)
        images.append(img)
    return _substitute(form, k, images)


@lru_cache(maxsize=None)
def form_keys(n: int, m: int, D: int) -> tuple:
    """Term keys of m-forms on Delta^n with polynomial degree + m <= D."""
    if m > n or D < m:
        return ()
    out = []
    for dts in combinations(range(1, n + 1), m):
        for total in range(D - m + 1):
            for exps in _compositions(total, n):
                out.append((exps, dts))
    return tuple(out)


def _compositions(total: int, parts: int) -> list[tuple]:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


class Nabla:
    """nabla_n truncated at filtration degree D, as finite-dimensional cochains."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("simplex dimension must be >= 0")
        self.n = n

    def basis(self, m: int, D: int) -> tuple:
        return form_keys(self.n, m, D)

    def form(self, key) -> PolynomialForm:
        return PolynomialForm._raw(self.n, {key: Fraction(1)})

    def one(self) -> PolynomialForm:
        return PolynomialForm.constant(self.n)

    def zero(self) -> PolynomialForm:
        return PolynomialForm.zero(self.n)

    def d(self, form: PolynomialForm) -> PolynomialForm:
        return form.d()

    def parse(self, text: str) -> PolynomialForm:
        return PolynomialForm.parse(text, self.n)

    def cohomology_dims(self, D: int) -> list[int]:
        """dim H^m of the degree-D truncation, m = 0..n."""
        ranks = []
        for m in range(self.n + 1):
            src, tgt = self.basis(m, D), self.basis(m + 1, D)
            idx = {k: i for i, k in enumerate(tgt)}
            cols = []
            for key in src:
                v = [0] * len(tgt)
                for k2, c in self.form(key).d().terms.items():
                    v[idx[k2]] = c
                cols.append(v)
            ranks.append(rank(RationalMatrix.from_columns(cols, len(tgt))) if cols else 0)
        return [len(self.basis(m, D)) - ranks[m] - (ranks[m - 1] if m else 0)
                for m in range(self.n + 1)]


def nabla(n: int) -> Nabla:
    return Nabla(n)
