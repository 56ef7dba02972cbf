"""The five-operation presentation and its equivalence with ``binddt``.

Here a tree type is presented by first-class ``map``, ``ret``, ``join``,
``dec`` (decorate each leaf with its context) and ``dist`` (sequence a
tree of effectful leaves). ``binddt`` is the composite

    map_F(join) . dist . map(f) . dec

and, conversely, each of the five operations is an instance of
``binddt``. ``check_roundtrip`` verifies that translating one
presentation into the other and back reproduces the original,
pointwise on sampled inputs.
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
    check_applicative_laws,
    check_morphism_laws,
)
from .dtm import (
    Dtm,
    derived_dec,
    derived_dist,
    derived_join,
    derived_map,
)
from .monoids import Decorated, Monoid, env_duplicate, env_extract, writer_join, writer_ret
from .report import LawReport, LawResult, check_equal


@dataclass(frozen=True)
class CategoricalDtm:
    """A tree type presented by map, ret, join, dec and dist."""

    ctx_monoid: Monoid
    map: Callable[[Callable[[Any], Any], Any], Any]
    ret: Callable[[Any], Any]
    join: Callable[[Any], Any]
    dec: Callable[[Any], Any]
    dist: Callable[[Applicative, Any], AppValue]
    term_eq: Callable[[Any, Any], bool] = lambda a, b: a == b


def binddt_from_categorical(
    cat: CategoricalDtm, app: Applicative, f: Callable[[Decorated], AppValue], t: Any
) -> AppValue:
    """Run the decorate, map, distribute, flatten pipeline in that order."""
    decorated = cat.dec(t)
    mapped = cat.map(f, decorated)
    sequenced = cat.dist(app, mapped)
    return app_map(app, cat.join, sequenced)


def dtm_from_categorical(cat: CategoricalDtm) -> Dtm:
    return Dtm(
        ctx_monoid=cat.ctx_monoid,
        ret=cat.ret,
        binddt=lambda app, f, t: binddt_from_categorical(cat, app, f, t),
        term_eq=cat.term_eq,
    )


def categorical_from_binddt(dtm: Dtm) -> CategoricalDtm:
    return CategoricalDtm(
        ctx_monoid=dtm.ctx_monoid,
        map=lambda f, t: derived_map(dtm, f, t),
        ret=dtm.ret,
        join=lambda tt: derived_join(dtm, tt),
        dec=lambda t: derived_dec(dtm, t),
        dist=lambda app, t: derived_dist(dtm, app, t),
        term_eq=dtm.term_eq,
    )


def _ctx_join(cat: CategoricalDtm, big: Any) -> Any:
    """Flatten T(W x T(W x A)) to T(W x A).

    Spelled as the composite: push the outer context across the inner
    tree (tensorial strength), collapse the nested contexts, then graft.
    """
    m = cat.ctx_monoid

    def push(d: Decorated) -> Any:
        strengthened = cat.map(lambda x: Decorated(d.ctx, x), d.payload)
        return cat.map(lambda dd: writer_join(dd, m), strengthened)

    return cat.join(cat.map(push, big))


def _leaf_table(rng: random.Random, registry: Any, build: Callable[[random.Random], Any]):
    """A deterministic, total leaf-indexed table of sampled values."""
    seed = rng.randrange(2**31)
    return registry.table_fn(seed, build)


def check_categorical_axioms(
    cat: CategoricalDtm,
    gen_term: Callable[[random.Random], Any],
    registry: Any,
    *,
    samples: int = 300,
    seed: int = 0,
) -> LawReport:
    """Check the full axiom suite of the five-operation presentation.

    Nineteen named properties: three for the monad structure, two for
    decoration as a coalgebra, two relating decoration to ret/join,
    three for distribution, two relating distribution to ret/join, one
    compatibility law between decoration and distribution, plus the four
    applicative equations and two morphism equations quantified over the
    registry.
    """
    m = cat.ctx_monoid
    eq = cat.term_eq
    results: list[LawResult] = []
    base_apps = registry.pair_components

    def subtree_builder(depth_rng: random.Random) -> Any:
        return gen_term(depth_rng)

    # monad structure
    rng = random.Random(seed)

    def monad_left_unit(_i):
        t = gen_term(rng)
        return f"t={t!r}", cat.join(cat.ret(t)), t

    results.append(check_equal("monad-left-unit", samples, monad_left_unit, eq=eq))

    rng = random.Random(seed + 1)

    def monad_right_unit(_i):
        t = gen_term(rng)
        return f"t={t!r}", cat.join(cat.map(cat.ret, t)), t

    results.append(check_equal("monad-right-unit", samples, monad_right_unit, eq=eq))

    rng = random.Random(seed + 2)

    def monad_assoc(_i):
        inner = _leaf_table(rng, registry, subtree_builder)
        middle = _leaf_table(rng, registry, subtree_builder)
        t = gen_term(rng)
        ttt = cat.map(lambda a: cat.map(inner, middle(a)), t)
        lhs = cat.join(cat.join(ttt))
        rhs = cat.join(cat.map(cat.join, ttt))
        return f"ttt from t={t!r}", lhs, rhs

    results.append(check_equal("monad-associativity", samples, monad_assoc, eq=eq))

    # decoration as a coalgebra
    rng = random.Random(seed + 3)

    def dec_extract(_i):
        t = gen_term(rng)
        return f"t={t!r}", cat.map(env_extract, cat.dec(t)), t

    results.append(check_equal("decoration-extract", samples, dec_extract, eq=eq))

    rng = random.Random(seed + 4)

    def dec_duplicate(_i):
        t = gen_term(rng)
        lhs = cat.dec(cat.dec(t))
        rhs = cat.map(env_duplicate, cat.dec(t))
        return f"t={t!r}", lhs, rhs

    results.append(check_equal("decoration-duplicate", samples, dec_duplicate, eq=eq))

    # decoration against ret and join
    rng = random.Random(seed + 5)

    def dec_ret(_i):
        a = registry.gen_leaf(rng)
        lhs = cat.dec(cat.ret(a))
        rhs = cat.ret(writer_ret(a, m))
        return f"a={a!r}", lhs, rhs

    results.append(check_equal("decoration-ret", samples, dec_ret, eq=eq))

    rng = random.Random(seed + 6)

    def dec_join(_i):
        table = _leaf_table(rng, registry, subtree_builder)
        t = gen_term(rng)
        tt = cat.map(table, t)
        lhs = cat.dec(cat.join(tt))
        rhs = _ctx_join(cat, cat.dec(cat.map(cat.dec, tt)))
        return f"tt from t={t!r}", lhs, rhs

    results.append(check_equal("decoration-join", samples, dec_join, eq=eq))

    # distribution
    rng = random.Random(seed + 7)

    def dist_identity(_i):
        t = gen_term(rng)
        wrapped = cat.map(lambda a: AppValue(IDENTITY.tag, a), t)
        lhs = cat.dist(IDENTITY, wrapped)
        return f"t={t!r}", (lhs.tag, lhs.payload), (IDENTITY.tag, t)

    results.append(check_equal("distribution-identity", samples, dist_identity))

    rng = random.Random(seed + 8)
    pairs = registry.compose_pairs

    def dist_composition(i):
        outer, inner, composed = pairs[i % len(pairs)]
        table = _leaf_table(
            rng, registry, lambda r: composed.gen_payload(r, registry.gen_leaf)
        )
        t = gen_term(rng)
        wrapped = cat.map(lambda a: AppValue(composed.tag, table(a)), t)
        lhs = cat.dist(composed, wrapped).payload

        as_outer = cat.map(lambda v: AppValue(outer.tag, v.payload), wrapped)
        stage_one = cat.dist(outer, as_outer)

        def finish(sub: Any) -> Any:
            rewrapped = cat.map(lambda p: AppValue(inner.tag, p), sub)
            return cat.dist(inner, rewrapped).payload

        rhs = outer.ap(outer.pure(finish), stage_one.payload)
        return f"F={outer.tag} G={inner.tag} t={t!r}", lhs, rhs

    results.append(check_equal("distribution-composition", samples, dist_composition))

    rng = random.Random(seed + 9)
    morphisms = registry.morphisms

    def dist_naturality(i):
        phi = morphisms[i % len(morphisms)]
        table = _leaf_table(
            rng, registry, lambda r: phi.source.gen_payload(r, registry.gen_leaf)
        )
        t = gen_term(rng)
        wrapped = cat.map(lambda a: AppValue(phi.source.tag, table(a)), t)
        lhs = apply_morphism(phi, cat.dist(phi.source, wrapped))
        rhs = cat.dist(phi.target, cat.map(lambda v: apply_morphism(phi, v), wrapped))
        return f"phi={phi.name} t={t!r}", lhs, rhs

    results.append(check_equal("distribution-naturality", samples, dist_naturality))

    # distribution against ret and join
    rng = random.Random(seed + 10)

    def dist_ret(i):
        app = base_apps[i % len(base_apps)]
        payload = app.gen_payload(rng, registry.gen_leaf)
        lhs = cat.dist(app, cat.ret(AppValue(app.tag, payload)))
        rhs = app_map(app, cat.ret, AppValue(app.tag, payload))
        return f"F={app.tag} v={payload!r}", lhs, rhs

    results.append(check_equal("distribution-ret", samples, dist_ret))

    rng = random.Random(seed + 11)

    def dist_join(i):
        app = base_apps[i % len(base_apps)]
        leaf_payloads = _leaf_table(
            rng, registry, lambda r: app.gen_payload(r, registry.gen_leaf)
        )
        subtree = _leaf_table(rng, registry, subtree_builder)
        t = gen_term(rng)
        ttf = cat.map(
            lambda a: cat.map(lambda b: AppValue(app.tag, leaf_payloads(b)), subtree(a)),
            t,
        )
        lhs = cat.dist(app, cat.join(ttf))
        staged = cat.map(lambda s: cat.dist(app, s), ttf)
        rhs = app_map(app, cat.join, cat.dist(app, staged))
        return f"F={app.tag} t={t!r}", lhs, rhs

    results.append(check_equal("distribution-join", samples, dist_join))

    # decoration against distribution
    rng = random.Random(seed + 12)

    def dec_dist(i):
        app = base_apps[i % len(base_apps)]
        table = _leaf_table(
            rng, registry, lambda r: app.gen_payload(r, registry.gen_leaf)
        )
        t = gen_term(rng)
        wrapped = cat.map(lambda a: AppValue(app.tag, table(a)), t)
        lhs = app_map(app, cat.dec, cat.dist(app, wrapped))

        def push_ctx(d: Decorated) -> AppValue:
            return app_map(app, lambda a: Decorated(d.ctx, a), d.payload)

        rhs = cat.dist(app, cat.map(push_ctx, cat.dec(wrapped)))
        return f"F={app.tag} t={t!r}", lhs, rhs

    results.append(check_equal("decoration-distribution", samples, dec_dist))

    # ambient applicative and morphism equations over the registry
    app_names = ("identity", "homomorphism", "composition", "interchange")
    per_app = [
        check_applicative_laws(
            app, registry.gen_value, registry.gen_fn, samples=samples, seed=seed + 13
        )
        for app in registry.applicatives
    ]
    for idx, law in enumerate(app_names):
        failed = next(
            (
                (rep.suite, rep.results[idx])
                for rep in per_app
                if not rep.results[idx].passed
            ),
            None,
        )
        total = sum(rep.results[idx].samples for rep in per_app)
        if failed is None:
            results.append(LawResult(f"applicative-{law}", True, total))
        else:
            results.append(
                LawResult(f"applicative-{law}", False, total, failed[1].counterexample)
            )

    morphism_names = ("pure-preservation", "application-preservation")
    per_phi = [
        check_morphism_laws(
            phi, registry.gen_value, registry.gen_fn, samples=samples, seed=seed + 14
        )
        for phi in registry.morphisms
    ]
    for idx, law in enumerate(morphism_names):
        failed = next(
            (rep.results[idx] for rep in per_phi if not rep.results[idx].passed), None
        )
        total = sum(rep.results[idx].samples for rep in per_phi)
        if failed is None:
            results.append(LawResult(f"morphism-{law}", True, total))
        else:
            results.append(LawResult(f"morphism-{law}", False, total, failed.counterexample))

    return LawReport(suite="categorical", results=tuple(results))


def check_roundtrip(
    dtm: Dtm,
    cat: CategoricalDtm,
    gen_term: Callable[[random.Random], Any],
    registry: Any,
    *,
    samples: int = 300,
    seed: int = 0,
) -> LawReport:
    """Translate each presentation into the other and compare pointwise.

    Direction one: deriving the five operations from ``dtm.binddt`` and
    recombining them must reproduce ``dtm.binddt``. Direction two:
    the composite pipeline built from ``cat`` must have derived
    operations equal to the ones ``cat`` started with.
    """
    results: list[LawResult] = []
    derived_cat = categorical_from_binddt(dtm)

    rng = random.Random(seed)
    apps = registry.applicatives

    def binddt_roundtrip(i):
        app = apps[i % len(apps)]
        f = registry.gen_ctx_fn(rng, app)
        t = gen_term(rng)
        lhs = binddt_from_categorical(derived_cat, app, f, t)
        rhs = dtm.binddt(app, f, t)
        return f"F={app.tag} f={f!r} t={t!r}", lhs, rhs

    results.append(check_equal("roundtrip-binddt", samples, binddt_roundtrip))

    recovered = categorical_from_binddt(dtm_from_categorical(cat))

    rng = random.Random(seed + 1)

    def map_roundtrip(_i):
        fn = registry.gen_leaf_fn(rng)
        t = gen_term(rng)
        return f"f={fn!r} t={t!r}", recovered.map(fn, t), cat.map(fn, t)

    results.append(check_equal("roundtrip-map", samples, map_roundtrip, eq=cat.term_eq))

    rng = random.Random(seed + 2)

    def dec_roundtrip(_i):
        t = gen_term(rng)
        return f"t={t!r}", recovered.dec(t), cat.dec(t)

    results.append(check_equal("roundtrip-decorate", samples, dec_roundtrip, eq=cat.term_eq))

    rng = random.Random(seed + 3)

    def join_roundtrip(_i):
        table = _leaf_table(rng, registry, gen_term)
        t = gen_term(rng)
        tt = cat.map(table, t)
        return f"tt from t={t!r}", recovered.join(tt), cat.join(tt)

    results.append(check_equal("roundtrip-join", samples, join_roundtrip, eq=cat.term_eq))

    rng = random.Random(seed + 4)
    base_apps = registry.pair_components

    def dist_roundtrip(i):
        app = base_apps[i % len(base_apps)]
        table = _leaf_table(
            rng, registry, lambda r: app.gen_payload(r, registry.gen_leaf)
        )
        t = gen_term(rng)
        wrapped = cat.map(lambda a: AppValue(app.tag, table(a)), t)
        lhs = recovered.dist(app, wrapped)
        rhs = cat.dist(app, wrapped)
        return f"F={app.tag} t={t!r}", lhs, rhs

    results.append(check_equal("roundtrip-distribute", samples, dist_roundtrip))

    return LawReport(suite="roundtrip", results=tuple(results))
