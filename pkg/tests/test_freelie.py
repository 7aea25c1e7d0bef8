from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import commutator_expand, witt
from rathom.freelie import (
    HallWord,
    LieElement,
    NotALieElementError,
    bracket,
    from_associative,
    generator_index,
    hall_basis,
    is_lyndon,
    lyndon_words,
    parse_hall_word,
    parse_lie,
    standard_factorization,
    to_associative,
)

N = 4


def lie_elements(k=2, n=N):
    words = [w for ws in hall_basis(k, n) for w in ws]
    return st.dictionaries(
        st.sampled_from(words),
        st.fractions(min_value=-3, max_value=3, max_denominator=3),
        max_size=4,
    ).map(lambda d: LieElement(n, d))


@pytest.mark.parametrize("k", [2, 3])
def test_hall_dims_match_necklace_count(k):
    assert [len(ws) for ws in hall_basis(k, 6)] == [witt(k, i) for i in range(1, 7)]


def test_witt_values():
    assert [len(ws) for ws in hall_basis(2, 6)] == [2, 1, 2, 3, 6, 9]
    assert [len(ws) for ws in hall_basis(3, 6)] == [3, 3, 8, 18, 48, 116]


def test_lyndon_words_and_factorization():
    assert is_lyndon((0, 1)) and not is_lyndon((1, 0)) and not is_lyndon((0, 0))
    assert lyndon_words(2, 3) == [(0,), (0, 0, 1), (0, 1), (0, 1, 1), (1,)]
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert standard_factorization((0, 1, 1)) == ((0, 1), (1,))


def test_hall_word_rendering():
    assert HallWord.of((0, 0, 1)).format() == "[x1,[x1,x2]]"
    assert HallWord.of((0, 1, 1)).format(["a", "b"]) == "[[a,b],b]"
    with pytest.raises(ValueError):
        HallWord.of((1, 0))


def test_generator_names():
    assert generator_index("x3") == 2
    assert generator_index("y") == 1
    assert generator_index("b", ["a", "b"]) == 1
    with pytest.raises(ValueError):
        generator_index("q")


def test_hall_words_expand_like_commutators():
    # every basis element's associative image agrees with a direct expansion
    for ws in hall_basis(2, 5):
        for w in ws:
            got = {"".join("ab"[i] for i in u): c
                   for u, c in to_associative(LieElement.basis_element(w, 5)).items()}
            assert got == commutator_expand(w.tree)


def test_bracket_basic():
    x, y = LieElement.generator(0, 3), LieElement.generator(1, 3)
    assert bracket(x, y) == parse_lie("[x1,x2]", 3)
    assert bracket(y, x) == -bracket(x, y)
    assert bracket(x, x) == LieElement.zero(3)
    # [x2,[x1,x2]] is minus the Lyndon element [[x1,x2],x2]
    assert bracket(y, bracket(x, y)) == parse_lie("-[[x1,x2],x2]", 3)
    # weight beyond the class bound truncates
    assert bracket(bracket(x, y), bracket(x, y)) == LieElement.zero(3)
    assert bracket(x, bracket(x, bracket(x, y))) == LieElement.zero(3)


def test_parse_and_format_round_trip():
    e = parse_lie("x1 + 2*x2 - 1/3·[x2,[x1,x2]]", 3)
    assert parse_lie(e.format(), 3) == e
    assert LieElement.from_json(e.to_json(), 3) == e
    assert e.coefficient(HallWord.of((0, 1, 1))) == Fraction(1, 3)
    assert e.weights() == [1, 3] and e.lowest_weight() == 1


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_lie("x1 +", 3)
    with pytest.raises(ValueError):
        parse_lie("3", 3)
    with pytest.raises(ValueError):
        parse_hall_word("[x2,x1]")


def test_weight_component_range():
    e = parse_lie("x1 + [x1,x2]", 3)
    assert e.weight_component(2) == parse_lie("[x1,x2]", 3)
    with pytest.raises(ValueError):
        e.weight_component(4)


def test_non_lie_polynomial_rejected():
    with pytest.raises(NotALieElementError):
        from_associative({(0, 1): Fraction(1)}, 3)


@given(lie_elements(), lie_elements())
def test_antisymmetry(a, b):
    assert bracket(a, b) == -bracket(b, a)


@given(lie_elements(), lie_elements(), lie_elements())
def test_jacobi(a, b, c):
    total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    assert total == LieElement.zero(N)


@given(lie_elements(), lie_elements())
def test_associative_image_is_a_lie_morphism(a, b):
    lhs = to_associative(bracket(a, b))
    pa, pb = to_associative(a), to_associative(b)
    rhs = {}
    for u, p in pa.items():
        for v, q in pb.items():
            if len(u) + len(v) <= N:
                rhs[u + v] = rhs.get(u + v, 0) + p * q
                rhs[v + u] = rhs.get(v + u, 0) - p * q
    assert lhs == {w: c for w, c in rhs.items() if c}


@given(lie_elements())
def test_from_associative_inverts(a):
    assert from_associative(to_associative(a), N) == a


@given(lie_elements())
def test_text_round_trip(a):
    assert parse_lie(a.format(), N) == a
