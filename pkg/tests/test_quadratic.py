"""Class Gram matrices, determinant factorizations, closed forms."""

from fractions import Fraction

import pytest

from crg.groups import build_coxeter, build_series, class_stats
from crg.quadratic import (
    Discriminant,
    check_n_c,
    closed_form_check,
    conjecture_scan,
    discriminant,
    gram_matrix,
    kernel_at,
    leading_minor_signs,
)


def test_gram_matrix_small_cases():
    a2 = gram_matrix(build_coxeter("A", 2), 0)
    assert a2.a_matrix.to_lists() == [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
    i5 = gram_matrix(build_coxeter("I2", 5), 0)
    assert i5.a_matrix.to_lists() == [[1] * 5 for _ in range(5)]
    b2 = build_coxeter("B", 2)
    diag_class = next(
        c
        for c, members in enumerate(b2.classes)
        if all(
            b2.reflections[s].matrix[0, 1] == 0 for s in members
        )
    )
    assert gram_matrix(b2, diag_class).a_matrix.to_lists() == [[1, 2], [2, 1]]


def test_discriminant_examples():
    cases = [
        (build_series(3, 3, 3), 0, -1, ((9, 1), (0, 8))),
        (build_coxeter("H3"), 0, -1, ((13, 1), (1, 10), (-2, 4))),
        (build_coxeter("A", 4), 0, 1, ((7, 1), (2, 4), (-1, 5))),
        (build_coxeter("I2", 7), 0, -1, ((7, 1), (0, 6))),
    ]
    for g, c, sign, factors in cases:
        disc = discriminant(g, c)
        assert disc.sign == sign
        assert disc.factors == factors
        assert disc.remainder.degree == 0


def test_discriminant_poly_roundtrip():
    g = build_coxeter("B", 3)
    for c in range(len(g.classes)):
        disc = discriminant(g, c)
        members = g.classes[c]
        assert disc.poly().degree == len(members)


def test_n_c_dominates():
    for g in [
        build_coxeter("A", 4),
        build_coxeter("B", 3),
        build_coxeter("D", 4),
        build_series(3, 3, 3),
        build_coxeter("I2", 7),
        build_coxeter("H3"),
        build_coxeter("F4"),
    ]:
        for c in range(len(g.classes)):
            assert check_n_c(g, c)


def test_kernel_at_examples():
    i5 = build_coxeter("I2", 5)
    kernel = kernel_at(i5, 0, 0)
    assert len(kernel) == 4
    assert all(sum(v) == 0 for v in kernel)
    a2 = build_coxeter("A", 2)
    kernel = kernel_at(a2, 0, 3)
    assert kernel == [[Fraction(1), Fraction(1), Fraction(1)]]


def test_kernel_vectors_satisfy_eigen_equation():
    g = build_coxeter("B", 3)
    for c in range(len(g.classes)):
        n_c, _ = class_stats(g, c)
        form = gram_matrix(g, c)
        for v in kernel_at(g, c, n_c):
            image = form.a_matrix.apply(v)
            assert image == [n_c * x for x in v]


def test_form_is_negative_definite_past_the_top_root():
    for g in [
        build_coxeter("A", 3),
        build_coxeter("B", 3),
        build_series(3, 3, 3),
        build_series(6, 3, 2),
        build_coxeter("I2", 8),
        build_coxeter("H3"),
    ]:
        for c in range(len(g.classes)):
            n_c, _ = class_stats(g, c)
            signs = leading_minor_signs(g, c, n_c + 1)
            assert signs == [(-1) ** k for k in range(1, len(signs) + 1)]


def test_gram_invariant_under_conjugation():
    for g in [build_coxeter("B", 3), build_series(3, 3, 3)]:
        for members in g.classes:
            for y in range(g.size):
                for s in members:
                    for u in members:
                        if s != u:
                            assert (
                                g.alpha[g.conj_table[y][s]][g.conj_table[y][u]]
                                == g.alpha[s][u]
                            )


def test_closed_forms():
    for kind, rank in [
        ("A", 3),
        ("A", 4),
        ("B", 2),
        ("B", 3),
        ("B", 4),
        ("D", 4),
        ("D", 5),
        ("I2", 5),
        ("I2", 6),
        ("I2", 7),
        ("I2", 8),
    ]:
        report = closed_form_check(build_coxeter(kind, rank))
        assert report["ok"], report


def test_closed_form_rejects_uncovered_groups():
    with pytest.raises(ValueError, match="no closed determinant formula"):
        closed_form_check(build_coxeter("H3"))


def test_conjecture_scan_enumerates_and_matches():
    report = conjecture_scan(5, 4)
    assert {(case["e"], case["r"]) for case in report["cases"]} == {
        (3, 3),
        (3, 4),
        (5, 3),
        (5, 4),
    }
    assert report["all_match"]
