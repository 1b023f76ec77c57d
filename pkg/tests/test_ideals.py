from fractions import Fraction

import pytest

from sl2hilb import ideals
from sl2hilb import lambda_grading as lg
from sl2hilb.grading import Polynomial, Weight, mono, monomials_of_weight, parse_polynomial, render_monomial
from sl2hilb.ideals import (
    TILDE_VARIANTS,
    check_trace,
    custom_ideal,
    expand_trace,
    ideal_generators,
    in_ideal_truncated,
    is_ideal_homogeneous,
    lower_bound_certificate,
    normal_form,
    truncated_quotient_dim,
    verify_hilbert_window,
    verify_orbit_vanishing,
)
from sl2hilb.params import ParamsError, make_params

TORIC = [(1, 3, 2), (1, 2, 1), (1, 2, 3), (2, 3, 2)]


def gens(P, variant, s=0):
    return [str(g) for g in ideal_generators(P, variant, s).generators]


def test_generator_examples(P132):
    assert gens(P132, "I", 1) == ["X0^2 - X1*X4", "X2", "X3", "-X0^2*X1^2 + 1"]
    assert gens(P132, "J", 0) == ["X0^2", "X2", "X4", "-X1^3*X3"]
    with pytest.raises(ParamsError, match="non-toric"):
        ideal_generators(make_params(2, 5, 4), "J", 1)
    assert gens(make_params(2, 5, 4), "I", 0)[0] == "X0^3 - X1*X4"
    with pytest.raises(ValueError):
        ideal_generators(P132, "K")


def test_normal_form_examples(P132):
    nf = normal_form(P132, "I~1", mono(4, 2, 0, 0, 0))
    assert render_monomial(nf.result) == "X1*X4"
    assert check_trace(P132, nf)
    nf = normal_form(P132, "J~0", mono(2, 3, 0, 1, 0))
    assert nf.result is None and nf.trace[0].clause == "x0-multiple"
    for v in TILDE_VARIANTS:
        nf = normal_form(P132, v, mono(0, 0, 0, 0, 0))
        assert nf.result == mono(0, 0, 0, 0, 0) and not nf.trace
    with pytest.raises(ValueError):
        normal_form(P132, "I~1", mono(0, 0, 0, 1, 0))


def _r_window(P, variant, n, d, D):
    j = 4 if variant[0] == "I" else 3
    return monomials_of_weight(P, Weight(n, d), D, (0, 1, j))


@pytest.mark.parametrize("triple", TORIC)
@pytest.mark.parametrize("variant", TILDE_VARIANTS)
def test_traces_are_sound(triple, variant):
    P = make_params(*triple)
    for n in range(-4, 5):
        for d in range(P.m):
            for u in _r_window(P, variant, n, d, 10):
                nf = normal_form(P, variant, u)
                assert check_trace(P, nf), nf
                lhs, rhs = expand_trace(P, nf)
                assert lhs == rhs


@pytest.mark.parametrize("triple", TORIC)
def test_membership_certificate_above_c_min(triple):
    # f_lambda with c > c_min is an explicit combination of X0^(q-p) - X1 X4 and X0^(mp) X1^m
    P = make_params(*triple)
    for n in range(-4, 5):
        for d in range(P.m):
            for u in _r_window(P, "I~0", n, d, 12):
                nf = normal_form(P, "I~0", u)
                if nf.lam.c > nf.lam_min.c:
                    assert nf.result is None
                    total, diff = expand_trace(P, nf)
                    assert total == diff == Polynomial.monomial(u)


@pytest.mark.parametrize("triple", TORIC)
@pytest.mark.parametrize("variant", TILDE_VARIANTS)
def test_oracle_agrees_with_normal_form(triple, variant):
    P = make_params(*triple)
    ideal = ideal_generators(P, variant)
    for n in range(-4, 5):
        for d in range(P.m):
            win = truncated_quotient_dim(P, ideal, Weight(n, d), 12)
            assert win.dim == 1
            lam = lg.lambda_min(P, n, d, 4 if variant[0] == "I" else 3)
            f0 = lg.f_lambda(P, lam)
            r0 = win.reduce(Polynomial.monomial(f0))
            rw = win.reduce(Polynomial.monomial(win.witnesses[0]))
            assert r0 and rw and set(r0) == set(rw) and len(r0) == 1
            for u in _r_window(P, variant, n, d, 12):
                res = normal_form(P, variant, u).result
                if res is None:
                    continue
                assert res == f0
                # u and its normal form agree modulo the span, when the certificate fits under D
                if max(sum(u), sum(f0)) <= 12 and all(
                    st.cofactor.degree() + ideal.generators[st.generator].degree() <= 12
                    for st in normal_form(P, variant, u).trace
                ):
                    assert win.contains(Polynomial.monomial(u) - Polynomial.monomial(f0))


def test_truncated_quotient_examples(P132):
    win = truncated_quotient_dim(P132, ideal_generators(P132, "I~1"), Weight(0, 0), 8)
    assert win.dim == 1 and win.witnesses == (mono(0, 0, 0, 0, 0),)
    win = truncated_quotient_dim(P132, ideal_generators(P132, "J~0"), Weight(2, 0), 8)
    assert win.dim == 1 and [render_monomial(u) for u in win.witnesses] == ["X1*X3"]
    unit = custom_ideal([Polynomial.constant(1)])
    for n in range(-2, 3):
        assert truncated_quotient_dim(P132, unit, Weight(n, 1), 2).dim == 0
    with pytest.raises(ValueError, match="below the generator degree"):
        truncated_quotient_dim(P132, ideal_generators(P132, "J", 0), Weight(0, 0), 3)


@pytest.mark.parametrize("triple", [(1, 3, 2), (1, 2, 3)])
@pytest.mark.parametrize("variant,s", [("I", 1), ("I", 0), ("J", 0), ("J", 1)])
def test_oracle_monotone_in_D(triple, variant, s):
    # with the counted window fixed, more relations can only lower the bound
    P = make_params(*triple)
    ideal = ideal_generators(P, variant, s)
    core = ideal.max_degree()
    for n in range(-3, 4):
        for d in range(P.m):
            dims = [truncated_quotient_dim(P, ideal, Weight(n, d), D, core).dim for D in range(core, core + 7)]
            assert dims == sorted(dims, reverse=True)


@pytest.mark.parametrize("triple", TORIC)
def test_homogeneity(triple):
    P = make_params(*triple)
    for v, s in [("I", 0), ("I", Fraction(3, 7)), ("J", 1)] + [(t, 0) for t in TILDE_VARIANTS]:
        assert is_ideal_homogeneous(P, ideal_generators(P, v, s))


def test_in_ideal_truncated(P132):
    I1 = ideal_generators(P132, "I", 1)
    assert in_ideal_truncated(P132, I1, parse_polynomial("X0^4 - X1^2*X4^2"), 6)
    assert not in_ideal_truncated(P132, I1, parse_polynomial("X4"), 6)


def test_verify_examples():
    P = make_params(1, 3, 2)
    rep = verify_hilbert_window(P, "I", 1, (-4, 4), 12)
    assert rep.verdict == "verified" and len(rep.rows) == 18 and all(r.dim == 1 for r in rep.rows)
    assert all(r.certificate == "evaluation" for r in rep.rows)
    assert verify_hilbert_window(P, "J", 0, (-4, 4), 12).verified
    assert verify_hilbert_window(make_params(1, 2, 3), "I", 0, (-3, 3), 12).verified
    assert "window-relative" in rep.window_description()


def test_small_bound_is_inconclusive(P132):
    rep = verify_hilbert_window(P132, "I", 1, (-4, 4), 4)
    assert rep.verdict == "inconclusive"


def test_wrong_ideal_is_falsified(P132, monkeypatch):
    real = ideals.ideal_generators

    def too_big(params, variant, s=0):
        spec = real(params, variant, s)
        return ideals.IdealSpec(spec.variant, spec.s, spec.generators + (Polynomial.variable(1),))

    monkeypatch.setattr(ideals, "ideal_generators", too_big)
    assert verify_hilbert_window(P132, "I", 1, (-2, 2), 10).verdict == "FALSIFIED"


def test_parallel_report_identical(P132):
    a = verify_hilbert_window(P132, "J", 1, (-3, 3), 10, jobs=1)
    b = verify_hilbert_window(P132, "J", 1, (-3, 3), 10, jobs=2)
    assert a == b


@pytest.mark.parametrize("triple", TORIC)
def test_certificates(triple):
    P = make_params(*triple)
    for variant, s in [("I", 1), ("I", Fraction(3, 7)), ("J", 1), ("J", Fraction(-2, 5))]:
        ideal = ideal_generators(P, variant, s)
        cert = lower_bound_certificate(P, ideal, mono(0, 0, 0, 0, 0))
        assert cert.ok and cert.kind == "evaluation"
    # a monomial killed by J_s: X0^(q-p) evaluates to eps^(q-p) = 0
    J = ideal_generators(P, "J", 1)
    assert not lower_bound_certificate(P, J, mono(P.diff, 0, 0, 0, 0)).ok
    assert not lower_bound_certificate(P, ideal_generators(P, "I", 0), mono(0, 0, 1, 0, 0)).ok


@pytest.mark.parametrize("triple", TORIC + [(2, 5, 4)])
def test_orbit_vanishing(triple):
    P = make_params(*triple)
    assert verify_orbit_vanishing(P)
    bad = 2 - Polynomial.monomial(mono(P.m * P.p, P.m, 0, 0, 0))
    assert not verify_orbit_vanishing(P, [bad])
