from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from sl2hilb.params import ParamsError, is_toric, make_params


def test_examples():
    P = make_params(1, 3, 2)
    assert (P.p, P.q, P.m, P.k, P.a, P.b, P.toric) == (1, 3, 2, 2, 1, 1, True)
    P = make_params(1, 2, 5)
    assert (P.k, P.a, P.b, P.toric) == (1, 5, 1, True)
    P = make_params(2, 5, 4)
    assert (P.k, P.a, P.b, P.toric) == (1, 4, 3, False)
    assert P.height == Fraction(2, 5)


def test_is_toric():
    assert is_toric(make_params(1, 3, 2))
    assert not is_toric(make_params(2, 5, 4))
    smooth = make_params(1, 1, 7)
    assert is_toric(smooth) and smooth.smooth and smooth.b == 0


@pytest.mark.parametrize(
    "args, fragment",
    [((2, 4, 3), "coprime"), ((3, 2, 1), "p = 3 > q = 2"), ((0, 1, 1), "positive"), ((1, 2, -1), "positive"),
     ((1.0, 2, 1), "integer")],
)
def test_rejections_name_the_constraint(args, fragment):
    with pytest.raises(ParamsError, match=fragment):
        make_params(*args)


def test_guards():
    with pytest.raises(ParamsError, match="smooth"):
        make_params(1, 1, 3).require_singular()
    with pytest.raises(ParamsError, match="non-toric"):
        make_params(2, 5, 4).require_toric()


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 60))
def test_invariant_relations(p, q, m):
    if gcd(p, q) != 1 or p >= q:
        return
    P = make_params(p, q, m)
    assert P.k * P.a == m and P.k * P.b == q - p
    assert gcd(P.a, P.b) == 1
    assert P.toric == (P.b == 1) == is_toric(P)
