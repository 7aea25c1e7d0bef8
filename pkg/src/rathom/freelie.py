"""Free Lie algebras over Q in the Lyndon basis, truncated at a class bound.

Generators are the integers ``0..k-1``; a basis element is a Lyndon word over
them, bracketed along its standard factorization.  A :class:`LieElement`
lives in ``L / L_{n+1}``: brackets drop every component of weight above the
class bound ``n``.

Text format: ``[x1,[x1,x2]]`` for basis words, ``1/2·[x1,x2] - x3`` for
elements.  Tokens ``x1, x2, ...`` (1-based) name generators; the single
letters ``x, y, z`` are accepted as aliases of ``x1, x2, x3``.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactalg import RationalMatrix, as_fraction, solve

__all__ = [
    "HallWord",
    "LieElement",
    "NotALieElementError",
    "lyndon_words",
    "is_lyndon",
    "standard_factorization",
    "hall_basis",
    "bracket",
    "weight_component",
    "associative_expansion",
    "to_associative",
    "from_associative",
    "generator_index",
    "generator_name",
    "parse_lie",
    "parse_hall_word",
    "format_tree",
]

_ALIASES = {"x": 0, "y": 1, "z": 2}


class NotALieElementError(ValueError):
    """An associative polynomial is not in the image of the free Lie algebra."""


def generator_index(token: str, names: Sequence[str] | None = None) -> int:
    if names is not None:
        try:
            return list(names).index(token)
        except ValueError:
            raise ValueError(f"unknown generator {token!r}; expected one of {list(names)}") from None
    m = re.fullmatch(r"x(\d+)", token)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1)) - 1
    if token in _ALIASES:
        return _ALIASES[token]
    raise ValueError(f"unknown generator {token!r}; use x1, x2, ... (or x, y, z)")


def generator_name(i: int, names: Sequence[str] | None = None) -> str:
    return names[i] if names is not None else f"x{i + 1}"


# ----------------------------------------------------------------------------
# Lyndon words

def is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def standard_factorization(w: tuple) -> tuple[tuple, tuple]:
    """Split a Lyndon word ``w = uv`` with ``v`` its longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("letters have no standard factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def lyndon_words(num_generators: int, max_length: int) -> list[tuple]:
    """All Lyndon words of length <= max_length, in lexicographic order (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_length:
            w.append(w[-m])
        while w and w[-1] == num_generators - 1:
            w.pop()
    return out


@lru_cache(maxsize=None)
def _tree(w: tuple):
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (_tree(u), _tree(v))


def format_tree(tree, names: Sequence[str] | None = None) -> str:
    if isinstance(tree, int):
        return generator_name(tree, names)
    return f"[{format_tree(tree[0], names)},{format_tree(tree[1], names)}]"


def _display(tree, names) -> tuple[int, str]:
    """Sign and text with [X, g] written as -[g, X] when only g is a letter."""
    if isinstance(tree, int):
        return 1, generator_name(tree, names)
    (sl, dl), (sr, dr) = _display(tree[0], names), _display(tree[1], names)
    if isinstance(tree[1], int) and not isinstance(tree[0], int):
        return -sl * sr, f"[{dr},{dl}]"
    return sl * sr, f"[{dl},{dr}]"


@dataclass(frozen=True, order=True)
class HallWord:
    """A Lyndon word with its standard bracketing; sorts by (weight, word)."""

    weight: int
    word: tuple

    def __post_init__(self):
        if self.weight != len(self.word) or not is_lyndon(self.word):
            raise ValueError(f"{self.word} is not a Lyndon word")

    @classmethod
    def of(cls, word: Iterable[int]) -> "HallWord":
        word = tuple(word)
        return cls(len(word), word)

    @property
    def tree(self):
        """Nested pairs of generator indices, e.g. ``(0, (0, 1))``."""
        return _tree(self.word)

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_tree(self.tree, names)

    def __str__(self):
        return self.format()


def hall_basis(num_generators: int, class_bound: int) -> list[list[HallWord]]:
    """Basis of L^1, ..., L^n as lists of Hall words, one list per weight."""
    if num_generators < 1 or class_bound < 1:
        raise ValueError("need at least one generator and class bound >= 1")
    groups: list[list[HallWord]] = [[] for _ in range(class_bound)]
    for w in lyndon_words(num_generators, class_bound):
        groups[len(w) - 1].append(HallWord(len(w), w))
    return groups


# ----------------------------------------------------------------------------
# Bracket rewriting

@lru_cache(maxsize=None)
def _bracket_words(u: tuple, v: tuple) -> tuple:
    """[P(u), P(v)] in the Lyndon basis, as ((word, int coefficient), ...)."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in _bracket_words(v, u))
    if len(u) == 1 or standard_factorization(u)[1] >= v:
        return ((u + v, 1),)
    # u = u1 u2 with u2 < v:  [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    u1, u2 = standard_factorization(u)
    acc: dict[tuple, int] = defaultdict(int)
    for w, c in _bracket_words(u2, v):
        for w2, c2 in _bracket_words(u1, w):
            acc[w2] += c * c2
    for w, c in _bracket_words(u1, v):
        for w2, c2 in _bracket_words(w, u2):
            acc[w2] += c * c2
    return tuple(sorted((w, c) for w, c in acc.items() if c))


# ----------------------------------------------------------------------------
# Elements

class LieElement:
    """An element of the free Lie algebra modulo weights above ``class_bound``.

    Coefficients are stored by Lyndon word; zero coefficients are never kept.
    Supports ``+``, ``-``, scalar ``*`` and :func:`bracket`.
    """

    __slots__ = ("class_bound", "_c")

    def __init__(self, class_bound: int, coeffs: Mapping | None = None):
        if class_bound < 1:
            raise ValueError("class bound must be >= 1")
        self.class_bound = class_bound
        c = {}
        for key, q in (coeffs or {}).items():
            word = key.word if isinstance(key, HallWord) else tuple(key)
            if not is_lyndon(word):
                raise ValueError(f"{word} is not a Lyndon word")
            q = as_fraction(q)
            if len(word) <= class_bound and q:
                c[word] = c.get(word, 0) + q
        self._c = {w: q for w, q in c.items() if q}

    @classmethod
    def _raw(cls, class_bound: int, c: dict) -> "LieElement":
        obj = cls.__new__(cls)
        obj.class_bound = class_bound
        obj._c = c
        return obj

    @classmethod
    def zero(cls, class_bound: int) -> "LieElement":
        return cls._raw(class_bound, {})

    @classmethod
    def generator(cls, i: int, class_bound: int) -> "LieElement":
        return cls._raw(class_bound, {(i,): Fraction(1)})

    @classmethod
    def basis_element(cls, word, class_bound: int) -> "LieElement":
        return cls(class_bound, {word: 1})

    @property
    def coeffs(self) -> dict[HallWord, Fraction]:
        return {HallWord(len(w), w): q for w, q in sorted(self._c.items(), key=_order)}

    def items(self):
        """(Lyndon word, coefficient) pairs in basis order."""
        return sorted(self._c.items(), key=_order)

    def coefficient(self, word) -> Fraction:
        word = word.word if isinstance(word, HallWord) else tuple(word)
        return self._c.get(word, Fraction(0))

    def num_generators(self) -> int:
        return max((max(w) + 1 for w in self._c), default=0)

    def weights(self) -> list[int]:
        return sorted({len(w) for w in self._c})

    def lowest_weight(self) -> int | None:
        return min((len(w) for w in self._c), default=None)

    def _check(self, other: "LieElement"):
        if not isinstance(other, LieElement):
            raise TypeError(f"expected a LieElement, got {type(other).__name__}")
        if other.class_bound != self.class_bound:
            raise ValueError(
                f"class bounds differ: {self.class_bound} vs {other.class_bound}"
            )

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        c = dict(self._c)
        for w, q in other._c.items():
            s = c.get(w, 0) + q
            if s:
                c[w] = s
            else:
                c.pop(w, None)
        return LieElement._raw(self.class_bound, c)

    def __neg__(self) -> "LieElement":
        return LieElement._raw(self.class_bound, {w: -q for w, q in self._c.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, q) -> "LieElement":
        q = as_fraction(q)
        if not q:
            return LieElement.zero(self.class_bound)
        return LieElement._raw(self.class_bound, {w: q * x for w, x in self._c.items()})

    def __mul__(self, q):
        if isinstance(q, LieElement):
            return NotImplemented
        return self.scale(q)

    __rmul__ = __mul__

    def bracket(self, other: "LieElement") -> "LieElement":
        return bracket(self, other)

    def weight_component(self, i: int) -> "LieElement":
        return weight_component(self, i)

    def truncate(self, class_bound: int) -> "LieElement":
        """Image under the tower projection to a smaller class bound."""
        if class_bound > self.class_bound:
            raise ValueError("can only project to a smaller class bound")
        return LieElement._raw(
            class_bound, {w: q for w, q in self._c.items() if len(w) <= class_bound}
        )

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.class_bound == other.class_bound and self._c == other._c

    def __hash__(self):
        return hash((self.class_bound, frozenset(self._c.items())))

    def format(self, names: Sequence[str] | None = None) -> str:
        """Readable text; parse_lie reads it back.  JSON keeps the Hall bracketing."""
        if not self._c:
            return "0"
        parts = []
        for w, q in self.items():
            sign, text = _display(_tree(w), names)
            q *= sign
            mag = abs(q)
            body = text if mag == 1 else f"{mag}·{text}"
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(("+ " if q > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self, names: Sequence[str] | None = None) -> dict[str, str]:
        return {format_tree(_tree(w), names): str(q) for w, q in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str], class_bound: int,
                  names: Sequence[str] | None = None) -> "LieElement":
        out = cls.zero(class_bound)
        for text, q in data.items():
            out = out + _word_element(text, class_bound, names, q)
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LieElement(n={self.class_bound}: {self.format()})"


def _word_element(text: str, class_bound: int, names, q) -> "LieElement":
    hw = parse_hall_word(text, names)
    return LieElement.basis_element(hw.word, class_bound).scale(as_fraction(q))


def _order(item):
    w = item[0]
    return (len(w), w)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """[a, b] in the Lyndon basis, dropping weights above the class bound."""
    a._check(b)
    n = a.class_bound
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for u, p in a._c.items():
        for v, q in b._c.items():
            if len(u) + len(v) > n:
                continue
            pq = p * q
            for w, c in _bracket_words(u, v):
                acc[w] += pq * c
    return LieElement._raw(n, {w: q for w, q in acc.items() if q})


def weight_component(a: LieElement, i: int) -> LieElement:
    if not 1 <= i <= a.class_bound:
        raise ValueError(f"weight {i} outside 1..{a.class_bound}")
    return LieElement._raw(a.class_bound, {w: q for w, q in a._c.items() if len(w) == i})


# ----------------------------------------------------------------------------
# Embedding in the free associative algebra

@lru_cache(maxsize=None)
def associative_expansion(word: tuple) -> dict:
    """Image of the bracketed Lyndon word under [a, b] -> ab - ba."""
    return _expand_tree(_tree(tuple(word)))


def _expand_tree(tree) -> dict:
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = _expand_tree(tree[0]), _expand_tree(tree[1])
    out: dict[tuple, int] = defaultdict(int)
    for u, p in left.items():
        for v, q in right.items():
            out[u + v] += p * q
            out[v + u] -= p * q
    return {w: c for w, c in out.items() if c}


def to_associative(a: LieElement) -> dict[tuple, Fraction]:
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for w, q in a._c.items():
        for word, c in associative_expansion(w).items():
            out[word] += q * c
    return {w: q for w, q in out.items() if q}


def _content(word: tuple) -> tuple:
    return tuple(sorted(word))


@lru_cache(maxsize=None)
def _lyndon_with_content(content: tuple) -> tuple:
    """Lyndon words that are rearrangements of the sorted letter tuple ``content``."""
    k = max(content) + 1
    return tuple(w for w in lyndon_words(k, len(content))
                 if len(w) == len(content) and _content(w) == content)


def from_associative(poly: Mapping[tuple, object], class_bound: int) -> LieElement:
    """Hall coordinates of an associative polynomial known to be a Lie element.

    Words longer than ``class_bound`` are ignored.  The coordinates come from
    solving, for each multidegree separately, a linear system against the
    associative expansions of the Hall words.  Raises
    :class:`NotALieElementError` when no solution exists (this includes any
    constant term).
    """
    by_content: dict[tuple, dict] = defaultdict(dict)
    for word, q in poly.items():
        q = as_fraction(q)
        if not q or len(word) > class_bound:
            continue
        if len(word) == 0:
            raise NotALieElementError("constant term in a Lie polynomial")
        by_content[_content(word)][tuple(word)] = q
    coeffs: dict[tuple, Fraction] = {}
    for content, part in sorted(by_content.items()):
        hall = _lyndon_with_content(content)
        rows = sorted(set(part).union(*(associative_expansion(w) for w in hall)))
        index = {w: i for i, w in enumerate(rows)}
        columns = []
        for w in hall:
            col = [0] * len(rows)
            for word, c in associative_expansion(w).items():
                col[index[word]] = c
            columns.append(col)
        rhs = [part.get(w, 0) for w in rows]
        if not columns:
            raise NotALieElementError(f"no Lie element has multidegree {content}")
        x = solve(RationalMatrix.from_columns(columns, len(rows)), rhs)
        if x is None:
            raise NotALieElementError(f"component with letters {content} is not a Lie polynomial")
        for w, q in zip(hall, x):
            if q:
                coeffs[w] = q
    return LieElement._raw(class_bound, coeffs)


# ----------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _LieParser:
    def __init__(self, text: str, class_bound: int, names):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = class_bound
        self.names = names
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, "end of input")

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ValueError(f"expected {want} at token {self.pos} in {self.text!r}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self) -> LieElement:
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input at token {self.pos} in {self.text!r}")
        return out

    def expr(self) -> LieElement:
        sign = 1
        if self.peek() in (("sym", "-"), ("sym", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek() in (("sym", "+"), ("sym", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def term(self) -> LieElement:
        coef = Fraction(1)
        if self.peek()[0] == "num":
            coef = Fraction(self.take()[1])
            if self.peek() in (("sym", "·"), ("sym", "*")):
                self.take()
            elif self.peek()[0] not in ("name",) and self.peek() != ("sym", "["):
                if coef == 0:
                    return LieElement.zero(self.n)
                raise ValueError(f"bare constant {coef} in a Lie expression {self.text!r}")
        return self.atom().scale(coef)

    def atom(self) -> LieElement:
        kind, value = self.peek()
        if kind == "name":
            self.take()
            return LieElement.generator(generator_index(value, self.names), self.n)
        if (kind, value) == ("sym", "["):
            self.take()
            left = self.expr()
            self.take("sym", ",")
            right = self.expr()
            self.take("sym", "]")
            return bracket(left, right)
        if (kind, value) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        raise ValueError(f"unexpected {value if kind is None else repr(value)} in {self.text!r}")


def parse_lie(text: str, class_bound: int, names: Sequence[str] | None = None) -> LieElement:
    """Parse e.g. ``"x1 + 1/2·[x1,x2]"``; brackets in any order are rewritten."""
    return _LieParser(text, class_bound, names).parse()


def _parse_tree(tokens, pos, names):
    kind, value = tokens[pos]
    if kind == "name":
        return generator_index(value, names), pos + 1
    if (kind, value) != ("sym", "["):
        raise ValueError(f"unexpected {value!r} in a Hall word")
    left, pos = _parse_tree(tokens, pos + 1, names)
    if tokens[pos] != ("sym", ","):
        raise ValueError("expected ',' in a Hall word")
    right, pos = _parse_tree(tokens, pos + 1, names)
    if tokens[pos] != ("sym", "]"):
        raise ValueError("expected ']' in a Hall word")
    return (left, right), pos + 1


def parse_hall_word(text: str, names: Sequence[str] | None = None) -> HallWord:
    """Parse a bracketed Hall word; the bracketing must be the standard one."""
    tokens = _tokenize(text)
    try:
        tree, pos = _parse_tree(tokens, 0, names)
    except IndexError:
        raise ValueError(f"truncated Hall word {text!r}") from None
    if pos != len(tokens):
        raise ValueError(f"trailing input in Hall word {text!r}")

    def leaves(t):
        return (t,) if isinstance(t, int) else leaves(t[0]) + leaves(t[1])

    word = leaves(tree)
    if not is_lyndon(word) or _tree(word) != tree:
        raise ValueError(f"{text!r} is not a standard-bracketed Lyndon word")
    return HallWord(len(word), word)
