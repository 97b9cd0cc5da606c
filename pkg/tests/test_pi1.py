import random

import pytest
from hypothesis import given, strategies as st

from flopkit.errors import DomainError, UnknownGeneratorError
from flopkit.pi1 import (
    FLOP,
    FLOP_INVERSE,
    FunctorExpr,
    GroupWord,
    TensorO,
    Twist,
    generators,
    length_to_N,
    monodromy,
    normal_form,
    presentation,
    words_equal,
)

NS = (1, 2, 4, 6, 10, 12)
ELL_FOR_N = {1: 1, 2: 2, 4: 3, 6: 4, 10: 5, 12: 6}


def words(N, max_len=12):
    letter = st.tuples(st.sampled_from(generators(N)), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda xs: GroupWord(tuple(xs)))


def test_relation_is_trivial_for_n4():
    assert str(normal_form(GroupWord.parse("c b0 b1 b2 b3 a"), 4)) == "trivial"


@pytest.mark.parametrize("N", NS)
def test_relation_is_trivial(N):
    p = presentation(N)
    assert normal_form(p.relation, N).letters == ()
    assert p.generators == generators(N)
    assert len(p.generators) == N + 2


def test_c_eliminated():
    w = normal_form(GroupWord.parse("c"), 2)
    assert str(w) == "a^-1 b1^-1 b0^-1"


def test_free_cancellation():
    assert str(normal_form(GroupWord.parse("a b0 b0^-1 a^-1 b1"), 2)) == "b1"


def test_parse_errors():
    for bad in ("d", "b", "b01", "a^2", "b-1"):
        with pytest.raises(UnknownGeneratorError):
            GroupWord.parse(bad)
    with pytest.raises(UnknownGeneratorError):
        normal_form(GroupWord.parse("b4"), 4)


def test_bad_N():
    with pytest.raises(DomainError):
        presentation(0)


def test_length_to_N():
    assert [length_to_N(ell) for ell in range(1, 7)] == list(NS)


@given(st.sampled_from(NS).flatmap(lambda N: st.tuples(st.just(N), words(N))))
def test_normal_form_idempotent(pair):
    N, w = pair
    nf = normal_form(w, N)
    assert normal_form(nf, N) == nf
    assert words_equal(w, nf, N)
    assert all(g != "c" for g, _ in nf.letters)


@given(st.sampled_from(NS).flatmap(lambda N: st.tuples(st.just(N), words(N), words(N), words(N))))
def test_inserting_the_relation_changes_nothing(data):
    N, u, v, w = data
    r = presentation(N).relation
    assert words_equal(u * v, u * r * v, N)
    assert words_equal(u * v, u * r.inverse() * v, N)
    assert words_equal(w * w.inverse(), GroupWord(), N)


@given(st.sampled_from(NS).flatmap(lambda N: st.tuples(st.just(N), words(N), words(N), words(N))))
def test_normal_form_is_a_congruence(data):
    N, u, v, w = data
    left = normal_form(u, N) * normal_form(v, N)
    assert words_equal(left, u * v, N)
    assert words_equal(w * u * v, w * normal_form(u * v, N), N)


@given(st.sampled_from(NS).flatmap(lambda N: st.tuples(st.just(N), words(N), words(N))))
def test_monodromy_respects_concatenation(data):
    N, u, v = data
    ell = ELL_FOR_N[N]
    assert monodromy(u * v, ell) == monodromy(u, ell) * monodromy(v, ell)
    assert monodromy(u.inverse(), ell) == monodromy(u, ell).inverse()


def test_monodromy_images():
    assert monodromy(GroupWord.parse("a"), 3) == FunctorExpr((TensorO(-1),))
    assert monodromy(GroupWord.parse("b2^-1"), 3) == FunctorExpr((Twist(2).inverse(),))
    assert monodromy(GroupWord.parse("c"), 3) == FunctorExpr((FLOP_INVERSE, TensorO(-1), FLOP))
    assert str(monodromy(GroupWord.parse("a a a^-1"), 3)) == "TensorO(-1)"
    assert str(monodromy(GroupWord(), 3)) == "Id"
    assert str(monodromy(GroupWord.parse("c a^-1"), 1)) == "FlopInverse o TensorO(-1) o Flop o TensorO(1)"


def test_monodromy_rejects_generators_outside_N():
    with pytest.raises(UnknownGeneratorError):
        monodromy(GroupWord.parse("b4"), 3)


def test_seeded_suite_is_reproducible():
    rng1, rng2 = random.Random(7), random.Random(7)
    gens = generators(10)
    draw = lambda r: [(r.choice(gens), r.choice((1, -1))) for _ in range(20)]
    assert draw(rng1) == draw(rng2)
