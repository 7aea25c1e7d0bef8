"""Free-group words and their Malcev (log) coordinates.

A word is sent into the truncated power series ring by the Magnus substitution
``x_i -> 1 + X_i``.  Composing with the change of variables
``X_i -> exp(X_i) - 1`` turns this into ``x_i -> exp(X_i)``, whose logarithm is
a Lie element: the coordinates of the word in ``F/F_{n+1} (x) Q``, the n-th
stage of the Q-completion of the free group.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .freelie import (
    NotALieElementError,
    from_associative,
    generator_index,
    generator_name,
)
from .malcev import MalcevElement, _amul, _log_one_plus, mul

__all__ = [
    "FreeGroupWord",
    "TruncatedSeries",
    "LogNotPrimitiveError",
    "parse_word",
    "commutator",
    "magnus",
    "exponential_magnus",
    "log_coordinates",
    "lcs_weight",
    "completion_mul",
]


class LogNotPrimitiveError(RuntimeError):
    """The logarithm of a Magnus image was not a Lie element (a bug, never bad input)."""


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple:
    stack: list[tuple[int, int]] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError("letter exponents must be +1 or -1")
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class FreeGroupWord:
    """A freely reduced word; ``letters`` holds (generator index, +-1) pairs."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(tuple(l) for l in self.letters))

    @classmethod
    def generator(cls, i: int) -> "FreeGroupWord":
        return cls(((i, 1),))

    def __mul__(self, other: "FreeGroupWord") -> "FreeGroupWord":
        return FreeGroupWord(self.letters + other.letters)

    def inverse(self) -> "FreeGroupWord":
        return FreeGroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeGroupWord":
        base = self if k >= 0 else self.inverse()
        return FreeGroupWord(base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            generator_name(g, names) + ("" if e == 1 else "^-1") for g, e in self.letters
        )

    def __str__(self):
        return self.format()


_LETTER = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?")


def parse_word(text: str, names: Sequence[str] | None = None) -> FreeGroupWord:
    """Parse ``"x1 x2^-1 x1"``; integer exponents expand, free reduction is applied."""
    letters = []
    for token in text.replace("*", " ").split():
        if token == "1":
            continue
        m = _LETTER.fullmatch(token)
        if m is None:
            raise ValueError(f"cannot parse letter {token!r} in word {text!r}")
        g = generator_index(m.group(1), names)
        k = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
    return FreeGroupWord(tuple(letters))


def commutator(u: FreeGroupWord, v: FreeGroupWord) -> FreeGroupWord:
    """u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class TruncatedSeries:
    """Noncommutative power series in X_0, X_1, ... truncated above total degree n."""

    class_bound: int
    coeffs: dict

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.class_bound == other.class_bound and self.coeffs == other.coeffs

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.class_bound, other.class_bound)
        return TruncatedSeries(n, _amul(self.coeffs, other.coeffs, n))

    def constant(self) -> Fraction:
        return self.coeffs.get((), Fraction(0))

    def log(self) -> dict:
        if self.constant() != 1:
            raise ValueError("log needs constant coefficient 1")
        z = {w: c for w, c in self.coeffs.items() if w}
        return _log_one_plus(z, self.class_bound)


def _letter_series(g: int, e: int, n: int) -> dict:
    if e == 1:
        return {(): Fraction(1), (g,): Fraction(1)}
    return {(g,) * k: Fraction((-1) ** k) for k in range(n + 1)}


def magnus(w: FreeGroupWord, n: int) -> TruncatedSeries:
    """Image of w under x_i -> 1 + X_i, truncated at total degree n."""
    if n < 1:
        raise ValueError("truncation degree must be >= 1")
    out = {(): Fraction(1)}
    for g, e in w.letters:
        out = _amul(out, _letter_series(g, e, n), n)
    return TruncatedSeries(n, out)


def _exp_minus_one(g: int, n: int) -> dict:
    return {(g,) * k: Fraction(1, factorial(k)) for k in range(1, n + 1)}


def exponential_magnus(w: FreeGroupWord, n: int) -> TruncatedSeries:
    """magnus(w, n) after substituting X_i -> exp(X_i) - 1, i.e. x_i -> exp(X_i)."""
    images: dict[int, dict] = {}
    out: dict = defaultdict(Fraction)
    for word, c in magnus(w, n).coeffs.items():
        term = {(): Fraction(c)}
        for g in word:
            if g not in images:
                images[g] = _exp_minus_one(g, n)
            term = _amul(term, images[g], n)
        for u, q in term.items():
            out[u] += q
    return TruncatedSeries(n, {u: q for u, q in out.items() if q})


def log_coordinates(w: FreeGroupWord, n: int) -> MalcevElement:
    """Hall coordinates of log(exponential_magnus(w, n)) in the class-n free Lie algebra."""
    series = exponential_magnus(w, n).log()
    try:
        return MalcevElement(from_associative(series, n))
    except NotALieElementError as exc:
        raise LogNotPrimitiveError(f"log of the Magnus image of {w} is not primitive") from exc


def lcs_weight(w: FreeGroupWord, n: int) -> int | None:
    """Largest i <= n with w in the i-th rational lower central term; None if beyond n."""
    return log_coordinates(w, n).value.lowest_weight()


def completion_mul(a: MalcevElement, b: MalcevElement) -> MalcevElement:
    """Product in the class-n stage of the Q-completion tower (the BCH product)."""
    return mul(a, b)
