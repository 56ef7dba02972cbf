"""Samplers and the standard instance registry for the law suites.

The equations quantify over terms, leaves, applicative instances,
morphisms, and context-aware functions. Functions are sampled as
deterministic lazy tables: an entry is derived from a stable hash of the
table seed and the lookup key, so a sampled function is total, pure, and
reproducible regardless of evaluation order. Context sensitivity comes
from folding a small fingerprint of the context into the key.
"""
from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from typing import Any, Callable

from .applicatives import (
    AppValue,
    Applicative,
    ApplicativeMorphism,
    CONST_ALL,
    CONST_ATOM_SET,
    CONST_INT_LIST,
    CONST_NAT,
    IDENTITY,
    LENGTH_HOM,
    MAYBE,
    NEGATE_HOM,
    PRESENT_CHECK,
    compose_applicatives,
    identity_morphism,
    pure_embedding,
)
from .dtm import Dtm
from .lam import gen_leaf_rng, gen_term_rng


def gen_value(rng: random.Random) -> int:
    return rng.randrange(8)


class LabeledFn:
    """A function with a printable identity, for readable counterexamples."""

    def __init__(self, fn: Callable, label: str):
        self.fn = fn
        self.label = label

    def __call__(self, *args):
        return self.fn(*args)

    def __repr__(self) -> str:
        return self.label


_FN_POOL: tuple[LabeledFn, ...] = (
    LabeledFn(lambda x: (x + 1) % 8, "x+1 mod 8"),
    LabeledFn(lambda x: (3 * x) % 8, "3x mod 8"),
    LabeledFn(lambda x: 7 - x, "7-x"),
    LabeledFn(lambda x: 2, "const 2"),
    LabeledFn(lambda x: (x * x) % 8, "x^2 mod 8"),
)


def gen_fn(rng: random.Random) -> LabeledFn:
    return rng.choice(_FN_POOL)


def ctx_key(w: Any) -> Any:
    """A small, stable fingerprint of a context value.

    Coarse enough to keep sampled tables small, fine enough that a
    context-aware table reacts to depth, emptiness, and leading binder.
    """
    if isinstance(w, bool):
        return w
    if isinstance(w, int):
        return min(w, 3)
    if isinstance(w, tuple):
        return (min(len(w), 2), w[0] if w else None)
    if isinstance(w, frozenset):
        return min(len(w), 2)
    return repr(w)


def _stable_rng(table_seed: int, key: Any) -> random.Random:
    digest = zlib.crc32(repr(key).encode("utf-8"))
    return random.Random((table_seed << 32) ^ digest)


def table_fn(table_seed: int, build: Callable[[random.Random], Any], label: str = "table") -> LabeledFn:
    """A total deterministic function: each key's value is sampled from
    an rng derived from the table seed and the key."""

    def lookup(key: Any) -> Any:
        return build(_stable_rng(table_seed, key))

    return LabeledFn(lookup, f"{label}#{table_seed}")


@dataclass(frozen=True)
class Registry:
    """Everything a law suite quantifies over, bundled per instance."""

    applicatives: tuple[Applicative, ...]
    pair_components: tuple[Applicative, ...]
    compose_pairs: tuple[tuple[Applicative, Applicative, Applicative], ...]
    morphisms: tuple[ApplicativeMorphism, ...]
    gen_leaf: Callable[[random.Random], Any]
    gen_subterm: Callable[[random.Random], Any]
    ret: Callable[[Any], Any]
    gen_value: Callable[[random.Random], Any] = gen_value
    gen_fn: Callable[[random.Random], Callable] = gen_fn

    def table_fn(self, table_seed: int, build: Callable[[random.Random], Any]) -> LabeledFn:
        return table_fn(table_seed, build)

    def gen_leaf_fn(self, rng: random.Random) -> LabeledFn:
        """A random leaf-to-leaf function."""
        return table_fn(rng.randrange(2**31), self.gen_leaf, label="leaf-fn")

    def gen_ctx_fn(self, rng: random.Random, app: Applicative) -> LabeledFn:
        """A random context-aware function into ``app``.

        Four strategies: embed the occurrence back unchanged, a constant
        effect, a leaf-driven table, and a context-and-leaf-driven table.
        """
        strategy = rng.randrange(4)
        seed = rng.randrange(2**31)
        ret = self.ret
        if strategy == 0:
            return LabeledFn(
                lambda d: AppValue(app.tag, app.pure(ret(d.payload))),
                f"pure-ret->{app.tag}",
            )
        build = lambda r: app.gen_payload(r, self.gen_subterm)
        if strategy == 1:
            payload = build(random.Random(seed))
            return LabeledFn(
                lambda d: AppValue(app.tag, payload), f"const#{seed}->{app.tag}"
            )
        if strategy == 2:
            return LabeledFn(
                lambda d: AppValue(app.tag, build(_stable_rng(seed, d.payload))),
                f"leaf-table#{seed}->{app.tag}",
            )
        return LabeledFn(
            lambda d: AppValue(
                app.tag, build(_stable_rng(seed, (ctx_key(d.ctx), d.payload)))
            ),
            f"ctx-table#{seed}->{app.tag}",
        )


def standard_registry(
    dtm: Dtm,
    gen_leaf: Callable[[random.Random], Any],
    gen_subterm: Callable[[random.Random], Any],
) -> Registry:
    """The stock universe: identity, the constant instances over the
    registered monoids, the failure instance, composites of a bounded
    core, and the stock morphisms."""
    core = (IDENTITY, CONST_NAT, CONST_ALL, MAYBE)
    pairs = tuple(
        (outer, inner, compose_applicatives(outer, inner))
        for outer in core
        for inner in core
    )
    return Registry(
        applicatives=(IDENTITY, CONST_NAT, CONST_ALL, CONST_INT_LIST, CONST_ATOM_SET, MAYBE),
        pair_components=core,
        compose_pairs=pairs,
        morphisms=(
            identity_morphism(MAYBE),
            pure_embedding(MAYBE),
            PRESENT_CHECK,
            LENGTH_HOM,
            NEGATE_HOM,
        ),
        gen_leaf=gen_leaf,
        gen_subterm=gen_subterm,
        ret=dtm.ret,
    )


def ln_registry(dtm: Dtm, depth: int = 3) -> Registry:
    return standard_registry(
        dtm,
        gen_leaf=lambda rng: gen_leaf_rng(rng, "ln"),
        gen_subterm=lambda rng: gen_term_rng(rng, depth, "ln"),
    )


def named_registry(dtm: Dtm, depth: int = 3) -> Registry:
    return standard_registry(
        dtm,
        gen_leaf=lambda rng: gen_leaf_rng(rng, "named"),
        gen_subterm=lambda rng: gen_term_rng(rng, depth, "named"),
    )


def flat_registry(dtm: Dtm, width: int = 3) -> Registry:
    def gen_flat(rng: random.Random) -> tuple:
        return tuple(gen_leaf_rng(rng, "ln") for _ in range(rng.randrange(width) + 1))

    return standard_registry(
        dtm, gen_leaf=lambda rng: gen_leaf_rng(rng, "ln"), gen_subterm=gen_flat
    )


def gen_flat_term(rng: random.Random, width: int = 4) -> tuple:
    return tuple(gen_leaf_rng(rng, "ln") for _ in range(rng.randrange(width + 1)))
