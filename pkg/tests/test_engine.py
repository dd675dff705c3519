from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_sum
from fibsums.engine import SumQuery, power_sum_closed_form, power_sum_value
from fibsums.errors import UsageError
from fibsums.shifted_sums import ClosedFormAtom, Tag, eval_closed_form, shifted_sum_closed_form


def test_first_powers_unit_spacing():
    cf = power_sum_closed_form(SumQuery("F", 1, 1))
    assert cf.atoms == (
        ClosedFormAtom(Tag.F_N1, 1, Q(1)),
        ClosedFormAtom(Tag.F_N, 1, Q(1)),
        ClosedFormAtom(Tag.CONST, None, Q(-1)),
    )


def test_cubes_odd_spacing_structure():
    expected = shifted_sum_closed_form("F", 9, False).scaled(Q(1, 5)) + shifted_sum_closed_form(
        "F", 3, True
    ).scaled(Q(-3, 5))
    assert power_sum_closed_form(SumQuery("F", 3, 3)) == expected


def test_cubes_even_spacing_dispatch_both_plain():
    cf = power_sum_closed_form(SumQuery("F", 2, 3))
    expected = shifted_sum_closed_form("F", 6, False).scaled(Q(1, 5)) + shifted_sum_closed_form(
        "F", 2, False
    ).scaled(Q(-3, 5))
    assert cf == expected
    for n in range(21):
        assert eval_closed_form(cf, n) == brute_sum("F", 2, 3, False, n)


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_parity_dispatch_odd(m):
    cf = power_sum_closed_form(SumQuery("F", m, 3))
    assert cf.moduli() == {3 * m, m}
    for a in cf.atoms:
        if a.tag in (Tag.F_N1, Tag.F_N):
            assert a.sigma == (1 if a.modulus == m else 0)


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_parity_dispatch_even(m):
    cf = power_sum_closed_form(SumQuery("F", m, 3))
    assert cf.moduli() == {3 * m, m}
    assert all(a.sigma == 0 for a in cf.atoms)


@pytest.mark.parametrize(
    "seq,m,j,alt,n,expected",
    [("F", 2, 3, False, 5, 176176), ("F", 1, 3, False, 1, 1), ("L", 1, 2, True, 0, 4), ("L", 2, 1, False, 3, 30)],
)
def test_value_examples(seq, m, j, alt, n, expected):
    assert power_sum_value(SumQuery(seq, m, j, alt, n)) == expected


def test_moduli_are_stride_multiples():
    for m in range(1, 5):
        for j in range(1, 9):
            cf = power_sum_closed_form(SumQuery("L", m, j, True))
            assert cf.moduli() <= {t * m for t in range(1, j + 1)}


def test_formula_value_consistency():
    for seq in "FL":
        for m in (1, 2, 5):
            for j in (1, 4, 7):
                for alt in (False, True):
                    q = SumQuery(seq, m, j, alt)
                    cf = power_sum_closed_form(q)
                    for n in range(0, 40, 3):
                        assert eval_closed_form(cf, n) == power_sum_value(q.at(n))


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from("FL"),
    st.sampled_from([1, 2, 7, 8]),
    st.sampled_from([1, 2, 7, 8]),
    st.booleans(),
    st.integers(1, 30),
)
def test_telescoping(seq, m, j, alt, n):
    from fibsums.kernel import fib, lucas

    x = (fib if seq == "F" else lucas)(m * n)
    step = power_sum_value(SumQuery(seq, m, j, alt, n)) - power_sum_value(SumQuery(seq, m, j, alt, n - 1))
    assert step == (-1) ** (n * alt) * x**j


def test_query_validation():
    with pytest.raises(UsageError):
        SumQuery("F", 0, 1)
    with pytest.raises(UsageError):
        SumQuery("F", 1, 0)
    with pytest.raises(UsageError):
        SumQuery("F", 1, 1, n=-1)
    with pytest.raises(UsageError):
        power_sum_value(SumQuery("F", 1, 1))
    with pytest.raises(ValueError):
        SumQuery("G", 1, 1)


def test_large_bound_matches_direct_sum():
    q = SumQuery("L", 3, 5, True, 400)
    assert power_sum_value(q) == brute_sum("L", 3, 5, True, 400)
