from fractions import Fraction

import pytest

from descartes_lab.criteria.bounds import (
    L_value,
    compare_surds,
    diagnostics,
    eqE_holds,
    kappa_alt_form,
    kappa_value,
    q_bounds,
    q_value,
    trace_for,
)
from descartes_lab.utils.errors import RejectedInputError


def test_L_vanishes_on_the_sharp_cases():
    assert L_value(9, 3, 4) == 0
    assert L_value(10, 2, 4) == 0
    assert L_value(11, 2, 4) == 4
    assert L_value(5, 1, 3) == 3


def test_kappa_values():
    assert kappa_value(10, 1, 6) == 4
    assert kappa_value(11, 1, 7) == Fraction(27, 7)
    with pytest.raises(RejectedInputError):
        kappa_value(5, 2, 3)


def test_kappa_alternative_form_is_equivalent():
    for d in range(4, 41):
        for m in range(1, d - 1):
            for n in range(2, d - m + 1):
                q = d + 1 - m - n
                assert (kappa_value(d, m, q) >= 4) == (kappa_alt_form(d, m, n) <= 0), (d, m, n)


def test_q_at_zero():
    assert q_value(10, 0, -1).base == 4
    assert q_value(10, 0, 1).infinite
    qminus, qplus = q_bounds(10, 0)
    assert qminus.lo == qminus.hi == 4
    assert qplus is None


def test_q_values_decrease_up_to_half_degree():
    for d in range(4, 101):
        for k in range(1, d // 2):
            for sign in (-1, 1):
                assert compare_surds(q_value(d, k, sign), q_value(d, k + 1, sign)) > 0, (d, k, sign)


def test_q_enclosures_contain_both_endpoints_in_order():
    qminus, qplus = q_bounds(10, 4, Fraction(1, 10**9))

    assert qminus.contains(Fraction(1, 2))
    assert qplus.contains(2)


def test_positive_L_gives_a_sqrt_window():
    for d in range(3, 61):
        for m in range(1, d):
            for n in range(1, d - m + 1):
                if L_value(d, m, n) > 0:
                    assert eqE_holds(d, m, n), (d, m, n)


def test_squared_condition_decides_the_window():
    for d in range(4, 31):
        for m in range(2, d):
            for n in range(1, d - m + 1):
                assert diagnostics(d, m, n).squared_condition() == eqE_holds(d, m, n), (d, m, n)


def test_trace_reports_exact_values():
    trace = trace_for(9, 3, 4).to_dict()

    assert trace["L"] == "0/1"
    assert trace["kappa"] == "25/9"
    assert trace["eqE"] is False
