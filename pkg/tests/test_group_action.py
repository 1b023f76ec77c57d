from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2hilb.grading import Polynomial, parse_polynomial
from sl2hilb.group_action import (
    GroupElement,
    act,
    b_stability,
    commutes_with_grading,
    identity,
    is_b_stable,
    lower_unipotent,
    predicted_translate_s,
    torus,
    translate_check,
    upper_unipotent,
)
from sl2hilb.ideals import ideal_generators
from sl2hilb.params import make_params

TORIC = [(1, 3, 2), (1, 2, 1), (1, 2, 3), (2, 3, 2)]
X = [Polynomial.variable(i) for i in range(5)]

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
nonzero = small.filter(bool)


@st.composite
def group_elements(draw):
    # products of generators of SL(2) over Q
    g = identity()
    for _ in range(draw(st.integers(0, 3))):
        kind = draw(st.sampled_from(["t", "u", "l"]))
        g = g * (torus(draw(nonzero)) if kind == "t" else
                 upper_unipotent(draw(small)) if kind == "u" else lower_unipotent(draw(small)))
    return g


exps = st.tuples(*[st.integers(0, 3)] * 5)
polys = st.lists(st.tuples(exps, st.integers(-4, 4)), max_size=4).map(Polynomial)


def test_determinant_checked():
    with pytest.raises(ValueError, match="determinant"):
        GroupElement(1, 1, 1, 1)


def test_act_examples(P132):
    f = parse_polynomial("X0^2*X1^3*X3 - 7*X2*X4")
    assert act(identity(), f) == f
    assert act(torus(2), X[1]) == 2 * X[1]
    moved = act(upper_unipotent(1), X[1] ** 3 * X[3])
    assert moved == (X[1] + X[2]) ** 3 * (X[3] + X[4])
    # modulo (X2, X4): drop every term that involves X2 or X4
    reduced = Polynomial([(m, c) for m, c in moved.items() if not (m[2] or m[4])])
    assert reduced == X[1] ** 3 * X[3]


@given(group_elements(), polys, polys)
def test_ring_homomorphism(g, f, h):
    assert act(g, f + h) == act(g, f) + act(g, h)
    assert act(g, f * h) == act(g, f) * act(g, h)


@given(group_elements(), group_elements(), polys)
def test_group_law(g, h, f):
    assert act(g, act(h, f)) == act(h * g, f)
    assert act(g.inverse(), act(g, f)) == f


@given(st.sampled_from(TORIC), group_elements(), polys)
def test_commutes_with_grading(triple, g, f):
    assert commutes_with_grading(make_params(*triple), g, f)


def test_hypersurface_is_invariant(P132):
    F = X[0] ** 2 - X[1] * X[4] + X[2] * X[3]
    for g in (upper_unipotent(3), lower_unipotent(Fraction(-1, 2)), torus(5)):
        assert act(g, F) == F


def test_translate_examples(P132):
    r = translate_check(P132, "I", 2)
    assert r.passed and r.s == Fraction(1, 4)
    r = translate_check(P132, "J", 2)
    assert r.passed and r.s == Fraction(1, 16)
    for v in ("I", "J"):
        assert translate_check(P132, v, 1).s == 1
    with pytest.raises(ValueError):
        translate_check(P132, "I", 0)


@given(st.sampled_from(TORIC), st.sampled_from(["I", "J"]), nonzero)
def test_translate_random(triple, variant, t):
    P = make_params(*triple)
    r = translate_check(P, variant, t)
    assert r.passed and r.s == predicted_translate_s(P, variant, t)


@pytest.mark.parametrize("triple", [(1, 3, 2), (1, 2, 3), (1, 2, 1), (2, 3, 2)])
def test_borel_stability(triple):
    P = make_params(*triple)
    assert is_b_stable(P, ideal_generators(P, "J", 0), 8)
    for v, s in [("I", 0), ("I", 1), ("J", 1), ("I", Fraction(3, 7)), ("J", Fraction(2, 3))]:
        assert not is_b_stable(P, ideal_generators(P, v, s), 8)


def test_borel_failure_reasons(P132):
    res = b_stability(P132, ideal_generators(P132, "I", 1), 8)
    # X3 -> X3 + z X4 leaves I_1, and the torus moves 1 - X0^2 X1^2
    assert ("unipotent", 1, 2) in res.failures
    assert any(kind == "torus" for kind, _, _ in res.failures)
    res = b_stability(P132, ideal_generators(P132, "J", 1), 8)
    assert not res.torus_homogeneous and not res.stable
