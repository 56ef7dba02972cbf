"""The structured recursion interface for syntax with binding.

A ``Dtm`` packages a tree-forming type constructor T through two
operations: ``ret`` builds a one-leaf tree, and ``binddt`` maps every
leaf, together with the binding context accumulated on the path from the
root, to an effectful subtree, then flattens. Everything else a syntax
library needs (plain map, naive substitution, decoration, grafting,
effect sequencing) is derived from these two.

Effect order contract: ``binddt`` sequences applicative effects left to
right in constructor-argument order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from .applicatives import (
    AppValue,
    Applicative,
    IDENTITY,
    app_map,
    apply_morphism,
    identity_value,
)
from .monoids import Decorated, Monoid, ctx_prepend, env_extract, writer_ret
from .report import LawReport, LawResult, check_equal

BinddtFn = Callable[[Applicative, Callable[[Decorated], AppValue], Any], AppValue]


@dataclass(frozen=True)
class Dtm:
    """A tree type presented by ``ret`` and ``binddt`` over a context monoid."""

    ctx_monoid: Monoid
    ret: Callable[[Any], Any]
    binddt: BinddtFn
    term_eq: Callable[[Any, Any], bool] = lambda a, b: a == b


def _run_identity(v: AppValue) -> Any:
    if v.tag != IDENTITY.tag:
        raise ValueError(f"expected an Identity value, got {v.tag}")
    return v.payload


def derived_map(dtm: Dtm, f: Callable[[Any], Any], t: Any) -> Any:
    """Apply ``f`` to every leaf, preserving the tree shape."""
    return _run_identity(
        dtm.binddt(IDENTITY, lambda d: identity_value(dtm.ret(f(env_extract(d)))), t)
    )


def derived_bind(dtm: Dtm, f: Callable[[Any], Any], t: Any) -> Any:
    """Naive substitution: replace each leaf a by the subtree f(a)."""
    return _run_identity(
        dtm.binddt(IDENTITY, lambda d: identity_value(f(env_extract(d))), t)
    )


def derived_dec(dtm: Dtm, t: Any) -> Any:
    """Annotate each leaf with its binding context."""
    return _run_identity(dtm.binddt(IDENTITY, lambda d: identity_value(dtm.ret(d)), t))


def derived_join(dtm: Dtm, tt: Any) -> Any:
    """Graft a tree of trees into one tree."""
    return _run_identity(
        dtm.binddt(IDENTITY, lambda d: identity_value(env_extract(d)), tt)
    )


def derived_dist(dtm: Dtm, app: Applicative, t: Any) -> AppValue:
    """Sequence a tree of effectful leaves into one effectful tree."""
    return dtm.binddt(app, lambda d: app_map(app, dtm.ret, env_extract(d)), t)


def derived_traverse(
    dtm: Dtm, app: Applicative, f: Callable[[Any], AppValue], t: Any
) -> AppValue:
    """Run an effectful function over every leaf, collecting effects in order."""
    return dtm.binddt(app, lambda d: app_map(app, dtm.ret, f(env_extract(d))), t)


def derived_fmapd(dtm: Dtm, f: Callable[[Decorated], Any], t: Any) -> Any:
    """Context-aware map: each leaf becomes f(context, leaf)."""
    return _run_identity(dtm.binddt(IDENTITY, lambda d: identity_value(dtm.ret(f(d))), t))


def flat_dtm(ctx_monoid: Monoid) -> Dtm:
    """A minimal instance: a term is a flat tuple of leaves, no binders.

    All contexts are the monoid unit and grafting is concatenation.
    Useful as a second, non-lambda instance when checking that generic
    operations really are generic.
    """

    def binddt(app: Applicative, f: Callable[[Decorated], AppValue], t: Any) -> AppValue:
        out = app.pure(())
        for leaf in t:
            piece = f(Decorated(ctx_monoid.unit, leaf))
            if piece.tag != app.tag:
                raise ValueError(f"expected a {app.tag} value, got {piece.tag}")
            glue = app.ap(app.pure(lambda xs: lambda ys: xs + ys), out)
            out = app.ap(glue, piece.payload)
        return AppValue(app.tag, out)

    return Dtm(ctx_monoid=ctx_monoid, ret=lambda a: (a,), binddt=binddt)


def check_kleisli_dtm_laws(
    dtm: Dtm,
    gen_term: Callable[[random.Random], Any],
    registry: Any,
    *,
    samples: int = 500,
    seed: int = 0,
) -> LawReport:
    """Check the four equations a ``binddt`` presentation must satisfy.

    ``registry`` supplies the applicative instances, composition pairs,
    morphisms, and samplers of leaves and of context-aware functions
    (see ``sampling.Registry``).
    """
    m = dtm.ctx_monoid
    results: list[LawResult] = []

    rng = random.Random(seed)

    def identity_sample(_i):
        t = gen_term(rng)
        lhs = _run_identity(
            dtm.binddt(IDENTITY, lambda d: identity_value(dtm.ret(env_extract(d))), t)
        )
        return f"t={t!r}", lhs, t

    results.append(check_equal("binddt-identity", samples, identity_sample, eq=dtm.term_eq))

    rng = random.Random(seed + 1)
    apps = registry.applicatives

    def ret_sample(i):
        app = apps[i % len(apps)]
        f = registry.gen_ctx_fn(rng, app)
        a = registry.gen_leaf(rng)
        lhs = dtm.binddt(app, f, dtm.ret(a))
        rhs = f(writer_ret(a, m))
        return f"F={app.tag} f={f!r} a={a!r}", lhs, rhs

    results.append(check_equal("binddt-ret", samples, ret_sample))

    rng = random.Random(seed + 2)
    pairs = registry.compose_pairs

    def composition_sample(i):
        outer, inner, composed = pairs[i % len(pairs)]
        f = registry.gen_ctx_fn(rng, outer)
        g = registry.gen_ctx_fn(rng, inner)
        t = gen_term(rng)

        first = dtm.binddt(outer, f, t)
        lhs = outer.ap(
            outer.pure(lambda t1: dtm.binddt(inner, g, t1).payload), first.payload
        )

        def fused(d: Decorated) -> AppValue:
            shifted = ctx_prepend(g, d.ctx, m)
            fv = f(d)
            payload = outer.ap(
                outer.pure(lambda t1: dtm.binddt(inner, shifted, t1).payload),
                fv.payload,
            )
            return AppValue(composed.tag, payload)

        rhs = dtm.binddt(composed, fused, t).payload
        return f"F={outer.tag} G={inner.tag} f={f!r} g={g!r} t={t!r}", lhs, rhs

    results.append(check_equal("binddt-composition", samples, composition_sample))

    rng = random.Random(seed + 3)
    morphisms = registry.morphisms

    def naturality_sample(i):
        phi = morphisms[i % len(morphisms)]
        f = registry.gen_ctx_fn(rng, phi.source)
        t = gen_term(rng)
        lhs = apply_morphism(phi, dtm.binddt(phi.source, f, t))
        rhs = dtm.binddt(phi.target, lambda d: apply_morphism(phi, f(d)), t)
        return f"phi={phi.name} f={f!r} t={t!r}", lhs, rhs

    results.append(check_equal("binddt-naturality", samples, naturality_sample))

    return LawReport(suite="kleisli", results=tuple(results))
