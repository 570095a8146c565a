from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crg.cyclotomic import cyclotomic_field
from crg.krammer import (
    Q,
    T,
    LaurentQT,
    build_krammer,
    check_braid_relations,
    cubic_specialization_check,
    sigma_inverse,
    specialize_matrix,
)
from crg.matrices import ExactMatrix

ONE = LaurentQT.constant(1)


def test_two_strands_is_the_scalar_tq2():
    model = build_krammer(2)
    assert model.dimension == 1
    assert model.pairs == ((1, 2),)
    assert model.sigma[0][0, 0] == T * Q * Q


def test_three_strand_columns_match_the_action():
    model = build_krammer(3)
    idx = {p: i for i, p in enumerate(model.pairs)}
    s1 = model.sigma[0]

    col = [s1[r, idx[(1, 2)]] for r in range(3)]
    assert col[idx[(1, 2)]] == T * Q * Q
    assert sum(1 for v in col if v) == 1

    col = [s1[r, idx[(1, 3)]] for r in range(3)]
    assert col[idx[(1, 2)]] == T * Q * (Q - 1)
    assert col[idx[(2, 3)]] == Q

    col = [s1[r, idx[(2, 3)]] for r in range(3)]
    assert col[idx[(1, 3)]] == ONE
    assert col[idx[(2, 3)]] == ONE - Q


def test_four_strand_nested_and_disjoint_cases():
    model = build_krammer(4)
    idx = {p: i for i, p in enumerate(model.pairs)}
    s2 = model.sigma[1]

    col = [s2[r, idx[(1, 4)]] for r in range(6)]
    assert col[idx[(1, 4)]] == ONE
    assert col[idx[(2, 3)]] == T * Q * (Q - 1) * (Q - 1)
    assert sum(1 for v in col if v) == 2

    s3 = model.sigma[2]
    col = [s3[r, idx[(1, 2)]] for r in range(6)]
    assert col[idx[(1, 2)]] == ONE
    assert sum(1 for v in col if v) == 1


def test_braid_relations_hold_exactly():
    for n in (2, 3, 4, 5):
        assert check_braid_relations(build_krammer(n))


def test_generators_are_invertible():
    for n in (3, 4):
        model = build_krammer(n)
        eye = ExactMatrix.identity(model.dimension, ONE)
        for k in range(1, n):
            inv = sigma_inverse(model, k)
            assert inv * model.sigma[k - 1] == eye
            assert model.sigma[k - 1] * inv == eye


def test_cubic_specialization_gives_order_three():
    for n in (3, 4, 5):
        assert cubic_specialization_check(build_krammer(n))


def test_unspecialized_generator_has_infinite_order():
    model = build_krammer(3)
    eye = ExactMatrix.identity(3, ONE)
    s1 = model.sigma[0]
    assert s1 * s1 * s1 != eye


def test_rejects_fewer_than_two_strands():
    with pytest.raises(ValueError):
        build_krammer(1)


def test_only_monomials_are_invertible():
    assert (Q * T).unit_inverse() * (Q * T) == ONE
    with pytest.raises(ValueError):
        (Q + T).unit_inverse()


@st.composite
def laurent_elements(draw):
    pairs = draw(
        st.lists(
            st.tuples(
                st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                st.integers(-9, 9),
            ),
            max_size=5,
        )
    )
    return LaurentQT(pairs)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_ring_axioms_on_random_triples(data):
    a = data.draw(laurent_elements())
    b = data.draw(laurent_elements())
    c = data.draw(laurent_elements())
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - b) + b == a
    assert a + 0 == a and a * 1 == a


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_specialization_is_a_ring_morphism(data):
    field = cyclotomic_field(3)
    qv = -field.zeta(1)
    tv = field.one()
    a = data.draw(laurent_elements())
    b = data.draw(laurent_elements())
    assert (a + b).specialize(qv, tv) == a.specialize(qv, tv) + b.specialize(qv, tv)
    assert (a * b).specialize(qv, tv) == a.specialize(qv, tv) * b.specialize(qv, tv)


def test_specialize_matrix_matches_entrywise():
    field = cyclotomic_field(3)
    qv = -field.zeta(1)
    tv = field.one()
    model = build_krammer(3)
    mat = specialize_matrix(model.sigma[0], qv, tv)
    assert mat[0, 0] == (T * Q * Q).specialize(qv, tv)
    assert mat[0, 0] == qv * qv


def test_laurent_arithmetic_basics():
    p = Q ** -2 * T + 3
    assert p.terms == {(-2, 1): Fraction(1), (0, 0): Fraction(3)}
    assert (Q - Q) == LaurentQT()
    assert not (Q - Q)
    assert Q ** 0 == ONE
    assert hash(Q * T) == hash(T * Q)
