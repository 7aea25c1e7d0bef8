"""The group law a*b = log(exp(a)exp(b)) on truncated free Lie algebras.

The universal two-variable BCH polynomial is computed once per class bound in
the truncated free associative algebra on two symbols and rewritten into the
Lyndon basis; :func:`mul` then substitutes actual elements into it.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import as_fraction
from .freelie import LieElement, _tree, bracket, from_associative, hall_basis

__all__ = [
    "BchTable",
    "MalcevElement",
    "bch_table",
    "mul",
    "inv",
    "rational_power",
    "group_commutator",
    "associated_graded_dims",
    "bch_series_oracle",
]

BCH_NAMES = ("a", "b")


# truncated free associative algebra: dict word -> Fraction

def _amul(p: dict, q: dict, n: int) -> dict:
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for u, a in p.items():
        for v, b in q.items():
            if len(u) + len(v) <= n:
                out[u + v] += a * b
    return {w: c for w, c in out.items() if c}


def _aadd(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for w, c in q.items():
        s = out.get(w, 0) + scale * c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def _exp_letter(letter: int, n: int) -> dict:
    return {(letter,) * k: Fraction(1, factorial(k)) for k in range(n + 1)}


def _log_one_plus(z: dict, n: int) -> dict:
    """log(1 + z) for z without constant term, truncated at degree n."""
    out: dict = {}
    power = dict(z)
    for k in range(1, n + 1):
        out = _aadd(out, power, Fraction((-1) ** (k + 1), k))
        power = _amul(power, z, n)
        if not power:
            break
    return out


def bch_series_oracle(class_bound: int) -> dict[tuple, Fraction]:
    """log(exp(a) exp(b)) in the truncated free associative algebra on a=0, b=1."""
    prod = _amul(_exp_letter(0, class_bound), _exp_letter(1, class_bound), class_bound)
    prod.pop((), None)
    return _log_one_plus(prod, class_bound)


@dataclass(frozen=True)
class BchTable:
    """The universal BCH polynomial through a class bound.

    ``terms`` maps a bidegree ``(i, j)`` (degree in ``a``, degree in ``b``) to
    the homogeneous Lie polynomial of that bidegree.
    """

    class_bound: int
    series: LieElement

    @property
    def terms(self) -> dict[tuple[int, int], LieElement]:
        out: dict[tuple[int, int], dict] = defaultdict(dict)
        for w, q in self.series.items():
            out[(w.count(0), w.count(1))][w] = q
        return {k: LieElement(self.class_bound, v) for k, v in sorted(out.items())}

    def weight(self, i: int) -> LieElement:
        return self.series.weight_component(i)

    def format(self) -> str:
        return self.series.format(BCH_NAMES)


_tables: dict[int, BchTable] = {}
_tables_lock = threading.Lock()


def bch_table(class_bound: int) -> BchTable:
    """Universal BCH polynomial, cached per class bound."""
    if class_bound < 1:
        raise ValueError("class bound must be >= 1")
    table = _tables.get(class_bound)
    if table is None:
        series = from_associative(bch_series_oracle(class_bound), class_bound)
        table = BchTable(class_bound, series)
        with _tables_lock:
            table = _tables.setdefault(class_bound, table)
    return table


class MalcevElement:
    """A truncated Lie element viewed as a group element under the BCH product.

    ``g * h`` is the group law, ``~g`` (or :func:`inv`) the inverse and
    ``g ** q`` the rational power.
    """

    __slots__ = ("value",)

    def __init__(self, value: LieElement):
        if not isinstance(value, LieElement):
            raise TypeError("MalcevElement wraps a LieElement")
        self.value = value

    @classmethod
    def identity(cls, class_bound: int) -> "MalcevElement":
        return cls(LieElement.zero(class_bound))

    @property
    def class_bound(self) -> int:
        return self.value.class_bound

    def __mul__(self, other: "MalcevElement") -> "MalcevElement":
        return mul(self, other)

    def __invert__(self) -> "MalcevElement":
        return inv(self)

    def __pow__(self, q) -> "MalcevElement":
        return rational_power(self, q)

    def truncate(self, class_bound: int) -> "MalcevElement":
        return MalcevElement(self.value.truncate(class_bound))

    def is_identity(self) -> bool:
        return self.value.is_zero()

    def __eq__(self, other):
        if not isinstance(other, MalcevElement):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"MalcevElement({self.value.format()})"


def _lie(g) -> LieElement:
    return g.value if isinstance(g, MalcevElement) else g


def mul(g, h) -> MalcevElement:
    """BCH product; accepts MalcevElements or bare LieElements."""
    a, b = _lie(g), _lie(h)
    a._check(b)
    n = a.class_bound
    if a.is_zero():
        return MalcevElement(b)
    if b.is_zero():
        return MalcevElement(a)
    memo: dict = {}

    def evaluate(tree) -> LieElement:
        if tree in memo:
            return memo[tree]
        if isinstance(tree, int):
            val = a if tree == 0 else b
        else:
            val = bracket(evaluate(tree[0]), evaluate(tree[1]))
        memo[tree] = val
        return val

    # a term of weight w involving both symbols lands in weights >= w
    out = a + b
    for w, q in bch_table(n).series.items():
        if len(w) == 1:
            continue
        out = out + evaluate(_tree(w)).scale(q)
    return MalcevElement(out)


def inv(g) -> MalcevElement:
    return MalcevElement(-_lie(g))


def rational_power(g, q) -> MalcevElement:
    """g^q as scalar multiplication of log coordinates."""
    return MalcevElement(_lie(g).scale(as_fraction(q)))


def group_commutator(g, h) -> MalcevElement:
    """g h g^-1 h^-1."""
    return mul(mul(g, h), mul(inv(g), inv(h)))


def associated_graded_dims(class_bound: int, num_generators: int) -> list[int]:
    """dim gr_i of the free class-n object for i = 1..class_bound."""
    return [len(group) for group in hall_basis(num_generators, class_bound)]
