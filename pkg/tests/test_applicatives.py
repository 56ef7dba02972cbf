import random

import pytest

from decotrav.applicatives import (
    Applicative,
    AppValue,
    CONST_ALL,
    CONST_ANY,
    CONST_ATOM_SET,
    CONST_INT_LIST,
    CONST_NAT,
    IDENTITY,
    LENGTH_HOM,
    MAYBE,
    NEGATE_HOM,
    NOTHING,
    PRESENT_CHECK,
    Some,
    app_ap,
    app_map,
    app_pure,
    apply_morphism,
    check_applicative_laws,
    check_morphism_laws,
    compose_applicatives,
    identity_morphism,
    lift_monoid_hom,
    pure_embedding,
)
from decotrav.monoids import MonoidHom, INT_LIST, NAT_ADD
from decotrav.sampling import gen_fn, gen_value

REGISTERED = (
    IDENTITY,
    CONST_NAT,
    CONST_ALL,
    CONST_ANY,
    CONST_INT_LIST,
    CONST_ATOM_SET,
    MAYBE,
    compose_applicatives(MAYBE, CONST_NAT),
    compose_applicatives(CONST_NAT, MAYBE),
    compose_applicatives(IDENTITY, MAYBE),
    compose_applicatives(MAYBE, MAYBE),
)

MORPHISMS = (
    identity_morphism(MAYBE),
    identity_morphism(CONST_NAT),
    pure_embedding(MAYBE),
    pure_embedding(CONST_ALL),
    PRESENT_CHECK,
    LENGTH_HOM,
    NEGATE_HOM,
)


@pytest.mark.parametrize("app", REGISTERED, ids=lambda a: a.tag)
def test_applicative_laws_hold_for_registered_instances(app):
    report = check_applicative_laws(app, gen_value, gen_fn, samples=1000, seed=11)
    assert report.passed, report.format_text()


@pytest.mark.parametrize("phi", MORPHISMS, ids=lambda p: p.name)
def test_morphism_laws_hold_for_registered_morphisms(phi):
    report = check_morphism_laws(phi, gen_value, gen_fn, samples=1000, seed=11)
    assert report.passed, report.format_text()


def test_pure_examples():
    assert app_pure(IDENTITY, 5) == AppValue("Identity", 5)
    assert app_pure(CONST_NAT, "anything") == AppValue("Const(nat-add)", 0)
    assert app_pure(CONST_ALL, "anything") == AppValue("Const(bool-all)", True)


def test_ap_examples():
    f = app_pure(IDENTITY, lambda x: x + 1)
    assert app_ap(IDENTITY, f, app_pure(IDENTITY, 4)).payload == 5
    lhs = AppValue(CONST_NAT.tag, 2)
    rhs = AppValue(CONST_NAT.tag, 3)
    assert app_ap(CONST_NAT, lhs, rhs).payload == 5


def test_ap_rejects_mismatched_tags():
    with pytest.raises(ValueError):
        app_ap(IDENTITY, app_pure(CONST_NAT, 0), app_pure(IDENTITY, 1))
    with pytest.raises(ValueError):
        apply_morphism(PRESENT_CHECK, app_pure(IDENTITY, 1))


def test_map_examples():
    bump = lambda x: x + 1
    assert app_map(IDENTITY, bump, app_pure(IDENTITY, 1)).payload == 2
    assert app_map(CONST_NAT, bump, AppValue(CONST_NAT.tag, 9)).payload == 9

    composed = compose_applicatives(MAYBE, MAYBE)
    v = AppValue(composed.tag, Some(Some(1)))
    once = app_map(composed, bump, v)
    nested = app_map(
        MAYBE, lambda inner: app_map(MAYBE, bump, AppValue(MAYBE.tag, inner)).payload,
        AppValue(MAYBE.tag, v.payload),
    )
    assert once.payload == nested.payload == Some(Some(2))


def test_maybe_absence_propagates():
    f = AppValue(MAYBE.tag, NOTHING)
    a = app_pure(MAYBE, 3)
    assert app_ap(MAYBE, f, a).payload is NOTHING
    assert app_ap(MAYBE, app_pure(MAYBE, lambda x: x), f).payload is NOTHING


def _agree_pointwise(left: Applicative, right: Applicative, samples=500, seed=12):
    """Instances whose payload representations coincide must agree on
    pure and ap over sampled payloads."""
    rng = random.Random(seed)
    for _ in range(samples):
        a = gen_value(rng)
        assert left.pure(a) == right.pure(a)
        fp = left.gen_payload(rng, gen_fn)
        ap_ = left.gen_payload(rng, gen_value)
        assert left.ap(fp, ap_) == right.ap(fp, ap_)


def test_identity_is_the_unit_of_composition():
    _agree_pointwise(compose_applicatives(IDENTITY, MAYBE), MAYBE)
    _agree_pointwise(compose_applicatives(MAYBE, IDENTITY), MAYBE)
    _agree_pointwise(compose_applicatives(IDENTITY, CONST_NAT), CONST_NAT)
    _agree_pointwise(compose_applicatives(CONST_NAT, IDENTITY), CONST_NAT)


def test_composing_constants_collapses_to_the_outer_constant():
    # The inner layer of a constant instance is phantom, so composing two
    # constants behaves as the outer one alone.
    _agree_pointwise(compose_applicatives(CONST_INT_LIST, CONST_NAT), CONST_INT_LIST)
    _agree_pointwise(compose_applicatives(CONST_NAT, CONST_ALL), CONST_NAT)


def test_composition_is_associative_on_payloads():
    left = compose_applicatives(compose_applicatives(MAYBE, CONST_NAT), MAYBE)
    right = compose_applicatives(MAYBE, compose_applicatives(CONST_NAT, MAYBE))
    rng = random.Random(13)
    for _ in range(500):
        a = gen_value(rng)
        assert left.pure(a) == right.pure(a)
        fp = left.gen_payload(rng, gen_fn)
        ap_ = left.gen_payload(rng, gen_value)
        assert left.ap(fp, ap_) == right.ap(fp, ap_)


def test_broken_ap_fails_the_identity_law_with_a_counterexample():
    keeps_function_side = Applicative(
        tag="Const(nat-add)",
        pure=CONST_NAT.pure,
        ap=lambda f, a: f,
        gen_payload=CONST_NAT.gen_payload,
    )
    report = check_applicative_laws(keeps_function_side, gen_value, gen_fn, samples=200, seed=3)
    result = report.result("identity")
    assert not result.passed
    assert result.counterexample is not None
    assert not report.result("interchange").passed


def test_morphism_examples():
    embedded = apply_morphism(pure_embedding(MAYBE), AppValue(IDENTITY.tag, 7))
    assert embedded == AppValue(MAYBE.tag, Some(7))

    two = apply_morphism(LENGTH_HOM, AppValue(CONST_INT_LIST.tag, (4, 9)))
    assert two == AppValue(CONST_NAT.tag, 2)

    same = apply_morphism(identity_morphism(MAYBE), AppValue(MAYBE.tag, Some(1)))
    assert same.payload == Some(1)

    assert apply_morphism(PRESENT_CHECK, AppValue(MAYBE.tag, Some(1))).payload is True
    assert apply_morphism(PRESENT_CHECK, AppValue(MAYBE.tag, NOTHING)).payload is False


def test_non_hom_map_fails_pure_preservation():
    off_by_one = lift_monoid_hom(
        MonoidHom(INT_LIST, NAT_ADD, lambda xs: len(xs) + 1, name="length+1")
    )
    report = check_morphism_laws(off_by_one, gen_value, gen_fn, samples=200, seed=3)
    result = report.result("pure-preservation")
    assert not result.passed
    assert result.counterexample is not None
