"""Closed forms versus the BFS oracle, plus the near-balanced case records."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from linewiener import (
    BalancedQuipu,
    CASES,
    ParameterError,
    Path,
    Spider,
    balanced_spider_case,
    build,
    d2_quipu,
    d2_spider,
    deficit_quotient,
    iterated_line_graph,
    path_deficit,
    r2_path,
    spider_case_arms,
    w_path,
    w_quipu,
    w_spider,
)

from oracles import naive_wiener


def oracle_w_and_d2(g):
    w = naive_wiener(g)
    w2 = naive_wiener(iterated_line_graph(g, 2))
    return w, w - w2


def test_path_closed_forms_against_oracle():
    for n in range(1, 41):
        assert w_path(n) == naive_wiener(build(Path(n)))
    for n in range(3, 41):
        g2 = iterated_line_graph(build(Path(n)), 2)
        w2 = naive_wiener(g2) if g2.vertex_count else 0
        assert r2_path(n) == Fraction(w2, w_path(n))
        assert path_deficit(n) == 1 - r2_path(n)


def test_path_frozen_values():
    assert w_path(22) == 1771
    assert r2_path(22) == Fraction(190, 253)
    assert path_deficit(22) == Fraction(126, 506)  # reduces to 63/253


def test_spider_closed_forms_against_oracle():
    for arms in itertools.product(range(1, 5), repeat=3):
        w, d2 = oracle_w_and_d2(build(Spider(*arms)))
        assert w_spider(*arms) == w, arms
        if min(arms) >= 2:
            assert d2_spider(*arms) == d2, arms


def test_spider_frozen_values():
    assert w_spider(7, 7, 7) == 1428
    assert d2_spider(7, 7, 7) == 357
    assert w_spider(3, 4, 5) == 304
    assert d2_spider(3, 4, 5) == 113
    assert w_spider(1, 1, 1) == 9  # the 4-star


def test_spider_formulas_are_symmetric():
    for perm in itertools.permutations((2, 5, 7)):
        assert w_spider(*perm) == w_spider(2, 5, 7)
        assert d2_spider(*perm) == d2_spider(2, 5, 7)


def test_quipu_closed_forms_against_oracle():
    # the d2 coefficients came from this exact comparison; a quartic fit
    # is overdetermined well before a = 12
    for a in range(2, 13):
        w, d2 = oracle_w_and_d2(build(BalancedQuipu(a)))
        assert w_quipu(a) == w
        assert d2_quipu(a) == d2


def test_quipu_frozen_values():
    assert w_quipu(2) == 68
    assert [d2_quipu(a) for a in range(2, 10)] == [
        22, 61, 139, 276, 496, 827, 1301, 1954,
    ]


def test_parameter_validation():
    for call in (
        lambda: w_path(0),
        lambda: r2_path(2),
        lambda: path_deficit(1),
        lambda: w_spider(0, 1, 1),
        lambda: d2_spider(1, 2, 2),
        lambda: w_quipu(1),
        lambda: d2_quipu(0),
        lambda: balanced_spider_case(1, "i"),
        lambda: balanced_spider_case(3, "iv"),
        lambda: spider_case_arms(3, "II"),
    ):
        with pytest.raises(ParameterError):
            call()


def test_case_arms_and_orders():
    assert spider_case_arms(4, "i") == (4, 4, 4)
    assert spider_case_arms(4, "ii") == (4, 4, 5)
    assert spider_case_arms(4, "iii") == (4, 5, 5)
    for a in range(2, 6):
        for case, n in zip(CASES, (3 * a + 1, 3 * a + 2, 3 * a + 3)):
            values = balanced_spider_case(a, case)
            assert values.n == n
            assert sum(spider_case_arms(a, case)) + 1 == n


def test_case_records_agree_with_generic_formulas():
    for a in range(2, 13):
        for case in CASES:
            arms = spider_case_arms(a, case)
            values = balanced_spider_case(a, case)
            assert values.w == w_spider(*arms)
            assert values.d2 == d2_spider(*arms)
            assert values.one_minus_r2_tree == Fraction(values.d2, values.w)
            assert values.one_minus_r2_path == path_deficit(values.n)


def test_balanced_case_frozen_record():
    values = balanced_spider_case(7, "i")
    assert (values.n, values.w, values.d2) == (22, 1428, 357)
    assert values.one_minus_r2_tree == Fraction(1, 4)
    assert values.one_minus_r2_path == Fraction(126, 506)
    assert values.beats_path


def test_beats_path_flips_at_seven():
    for case in CASES:
        assert not balanced_spider_case(6, case).beats_path
        assert balanced_spider_case(7, case).beats_path


def test_deficit_quotient_values():
    assert deficit_quotient(7, "i") == Fraction(253, 252)
    target = Fraction(15, 14)
    for case in CASES:
        assert deficit_quotient(2, case) < 1 < deficit_quotient(7, case)
        q100 = deficit_quotient(100, case)
        q1000 = deficit_quotient(1000, case)
        assert abs(q1000 - target) < Fraction(1, 100)
        assert abs(q1000 - target) < abs(q100 - target)
