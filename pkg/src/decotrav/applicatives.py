"""A first-class universe of applicative functors and applicative morphisms.

Instances are defunctionalized so one generic recursion combinator can
serve every carrier: an instance is a record of (tag, pure, ap) working
on untyped payloads, and an effectful value is a (tag, payload) pair.
The registry is closed but extensible: the identity instance, a constant
instance over any monoid (turning traversal into folding), a failure
instance, and closure under composition.

Payload conventions:
  Identity      the element itself
  Const(M)      a carrier value of M; elements are phantom
  Maybe         ``Some(x)`` or the ``NOTHING`` singleton
  Compose(F,G)  an F payload whose elements are G payloads
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple

from .monoids import ATOM_SET, BOOL_ALL, BOOL_ANY, INT_LIST, NAT_ADD, Monoid, MonoidHom
from .report import LawReport, LawResult, check_equal


class AppValue(NamedTuple):
    """An effectful value: the tag of its instance plus an opaque payload."""

    tag: str
    payload: Any


PayloadGen = Callable[[random.Random, Callable[[random.Random], Any]], Any]


@dataclass(frozen=True)
class Applicative:
    """An applicative instance over untyped payloads.

    ``gen_payload(rng, gen_element)`` samples a payload whose elements
    are drawn from ``gen_element``; law suites use it to quantify over
    carrier values that ``pure`` alone cannot reach.
    """

    tag: str
    pure: Callable[[Any], Any]
    ap: Callable[[Any, Any], Any]
    gen_payload: PayloadGen
    eq: Callable[[Any, Any], bool] = lambda a, b: a == b


def app_pure(app: Applicative, a: Any) -> AppValue:
    return AppValue(app.tag, app.pure(a))


def _require_tag(app: Applicative, v: AppValue) -> None:
    if v.tag != app.tag:
        raise ValueError(f"expected a {app.tag} value, got a {v.tag} value")


def app_ap(app: Applicative, f: AppValue, a: AppValue) -> AppValue:
    _require_tag(app, f)
    _require_tag(app, a)
    return AppValue(app.tag, app.ap(f.payload, a.payload))


def app_map(app: Applicative, fn: Callable[[Any], Any], a: AppValue) -> AppValue:
    return app_ap(app, app_pure(app, fn), a)


IDENTITY = Applicative(
    tag="Identity",
    pure=lambda a: a,
    ap=lambda f, a: f(a),
    gen_payload=lambda rng, gen: gen(rng),
)


def identity_value(a: Any) -> AppValue:
    """Wrap a plain value as an effect-free Identity value."""
    return AppValue(IDENTITY.tag, a)


def const_applicative(m: Monoid) -> Applicative:
    """The constant instance over a monoid: pure is the unit, ap combines."""
    return Applicative(
        tag=f"Const({m.name})",
        pure=lambda _a: m.unit,
        ap=m.combine,
        gen_payload=lambda rng, _gen: m.gen(rng),
    )


@dataclass(frozen=True)
class Some:
    value: Any


class _Nothing:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOTHING"


NOTHING = _Nothing()


def _maybe_ap(f: Any, a: Any) -> Any:
    if isinstance(f, Some) and isinstance(a, Some):
        return Some(f.value(a.value))
    return NOTHING


MAYBE = Applicative(
    tag="Maybe",
    pure=Some,
    ap=_maybe_ap,
    gen_payload=lambda rng, gen: NOTHING if rng.random() < 0.25 else Some(gen(rng)),
)


def compose_applicatives(outer: Applicative, inner: Applicative) -> Applicative:
    """The composite instance with carrier outer(inner(-))."""

    def pure(a):
        return outer.pure(inner.pure(a))

    def ap(ff, aa):
        lifted = outer.ap(outer.pure(lambda gf: lambda ga: inner.ap(gf, ga)), ff)
        return outer.ap(lifted, aa)

    def gen_payload(rng, gen):
        return outer.gen_payload(rng, lambda r: inner.gen_payload(r, gen))

    return Applicative(
        tag=f"Compose({outer.tag},{inner.tag})",
        pure=pure,
        ap=ap,
        gen_payload=gen_payload,
    )


CONST_NAT = const_applicative(NAT_ADD)
CONST_ALL = const_applicative(BOOL_ALL)
CONST_ANY = const_applicative(BOOL_ANY)
CONST_ATOM_SET = const_applicative(ATOM_SET)
CONST_INT_LIST = const_applicative(INT_LIST)


@dataclass(frozen=True)
class ApplicativeMorphism:
    """A payload map commuting with pure and ap, natural in the element type."""

    source: Applicative
    target: Applicative
    transform: Callable[[Any], Any]
    name: str = "morphism"


def apply_morphism(phi: ApplicativeMorphism, v: AppValue) -> AppValue:
    _require_tag(phi.source, v)
    return AppValue(phi.target.tag, phi.transform(v.payload))


def identity_morphism(app: Applicative) -> ApplicativeMorphism:
    return ApplicativeMorphism(app, app, lambda p: p, name=f"id[{app.tag}]")


def pure_embedding(app: Applicative) -> ApplicativeMorphism:
    """The canonical morphism out of Identity: embed via pure."""
    return ApplicativeMorphism(IDENTITY, app, app.pure, name=f"embed[{app.tag}]")


def lift_monoid_hom(hom: MonoidHom) -> ApplicativeMorphism:
    """A monoid homomorphism, viewed as a map between constant instances."""
    return ApplicativeMorphism(
        const_applicative(hom.source),
        const_applicative(hom.target),
        hom.fn,
        name=f"const[{hom.name}]",
    )


PRESENT_CHECK = ApplicativeMorphism(
    MAYBE,
    CONST_ALL,
    lambda p: isinstance(p, Some),
    name="present-check",
)

LENGTH_HOM = lift_monoid_hom(MonoidHom(INT_LIST, NAT_ADD, len, name="length"))

NEGATE_HOM = lift_monoid_hom(
    MonoidHom(BOOL_ALL, BOOL_ANY, lambda b: not b, name="negate")
)


def check_applicative_laws(
    app: Applicative,
    gen_value: Callable[[random.Random], Any],
    gen_fn: Callable[[random.Random], Callable[[Any], Any]],
    *,
    samples: int = 400,
    seed: int = 0,
) -> LawReport:
    """Check the four applicative equations on sampled payloads.

    ``gen_value`` draws elements, ``gen_fn`` draws functions between
    elements; payloads at both element and function type come from the
    instance's own sampler.
    """
    results: list[LawResult] = []

    rng = random.Random(seed)

    def identity_sample(_i):
        v = app.gen_payload(rng, gen_value)
        lhs = app.ap(app.pure(lambda x: x), v)
        return f"value={v!r}", lhs, v

    results.append(check_equal("identity", samples, identity_sample, eq=app.eq))

    rng = random.Random(seed + 1)

    def homomorphism_sample(_i):
        f = gen_fn(rng)
        a = gen_value(rng)
        lhs = app.ap(app.pure(f), app.pure(a))
        rhs = app.pure(f(a))
        return f"f={f!r} a={a!r}", lhs, rhs

    results.append(check_equal("homomorphism", samples, homomorphism_sample, eq=app.eq))

    rng = random.Random(seed + 2)

    def composition_sample(_i):
        g = app.gen_payload(rng, gen_fn)
        f = app.gen_payload(rng, gen_fn)
        a = app.gen_payload(rng, gen_value)
        lhs = app.ap(g, app.ap(f, a))
        compose = app.pure(lambda gf: lambda ff: lambda x: gf(ff(x)))
        rhs = app.ap(app.ap(app.ap(compose, g), f), a)
        return f"g={g!r} f={f!r} a={a!r}", lhs, rhs

    results.append(check_equal("composition", samples, composition_sample, eq=app.eq))

    rng = random.Random(seed + 3)

    def interchange_sample(_i):
        u = app.gen_payload(rng, gen_fn)
        y = gen_value(rng)
        lhs = app.ap(u, app.pure(y))
        rhs = app.ap(app.pure(lambda h: h(y)), u)
        return f"u={u!r} y={y!r}", lhs, rhs

    results.append(check_equal("interchange", samples, interchange_sample, eq=app.eq))

    return LawReport(suite=f"applicative[{app.tag}]", results=tuple(results))


def check_morphism_laws(
    phi: ApplicativeMorphism,
    gen_value: Callable[[random.Random], Any],
    gen_fn: Callable[[random.Random], Callable[[Any], Any]],
    *,
    samples: int = 400,
    seed: int = 0,
) -> LawReport:
    """Check that a morphism commutes with pure and with ap."""
    src, tgt = phi.source, phi.target
    results: list[LawResult] = []

    rng = random.Random(seed)

    def pure_sample(_i):
        a = gen_value(rng)
        return f"a={a!r}", phi.transform(src.pure(a)), tgt.pure(a)

    results.append(check_equal("pure-preservation", samples, pure_sample, eq=tgt.eq))

    rng = random.Random(seed + 1)

    def ap_sample(_i):
        f = src.gen_payload(rng, gen_fn)
        a = src.gen_payload(rng, gen_value)
        lhs = phi.transform(src.ap(f, a))
        rhs = tgt.ap(phi.transform(f), phi.transform(a))
        return f"f={f!r} a={a!r}", lhs, rhs

    results.append(check_equal("application-preservation", samples, ap_sample, eq=tgt.eq))

    return LawReport(suite=f"morphism[{phi.name}]", results=tuple(results))
