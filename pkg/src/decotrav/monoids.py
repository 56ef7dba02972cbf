"""Binding-context monoids and context-decorated values.

The context of a leaf in a syntax tree is a value of some monoid W:
a list of binders for named syntax, a natural number (binder depth) for
locally nameless syntax, a boolean or a set of atoms for queries. This
module defines the monoid descriptors the rest of the library is
parameterized by, together with the two structures every context
carries: reading a context off a pair (extract/duplicate) and
accumulating contexts into a pair (unit/join).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple


@dataclass(frozen=True)
class Monoid:
    """A monoid: a named carrier with a unit and an associative combine.

    ``gen`` samples carrier values; law suites use it to quantify over
    the carrier. Equality of carrier values is structural (``==``);
    nothing in the library is approximate.
    """

    name: str
    unit: Any
    combine: Callable[[Any, Any], Any]
    gen: Callable[[random.Random], Any]


@dataclass(frozen=True)
class MonoidHom:
    """A map between monoid carriers preserving unit and combine."""

    source: Monoid
    target: Monoid
    fn: Callable[[Any], Any]
    name: str = "hom"


class Decorated(NamedTuple):
    """A value paired with the binding context it occurs in."""

    ctx: Any
    payload: Any


def env_extract(p: Decorated) -> Any:
    """Read the value out of a decorated pair, discarding the context."""
    return p.payload


def env_duplicate(p: Decorated) -> Decorated:
    """(w, a) becomes (w, (w, a)): the context is copied inward."""
    return Decorated(p.ctx, Decorated(p.ctx, p.payload))


def writer_ret(a: Any, m: Monoid) -> Decorated:
    """Pair a value with the empty context (the monoid unit)."""
    return Decorated(m.unit, a)


def writer_join(p: Decorated, m: Monoid) -> Decorated:
    """(w1, (w2, a)) becomes (w1 . w2, a): nested contexts accumulate."""
    inner = p.payload
    return Decorated(m.combine(p.ctx, inner.ctx), inner.payload)


def ctx_prepend(g: Callable[[Decorated], Any], w: Any, m: Monoid) -> Callable[[Decorated], Any]:
    """Build the function (w2, b) -> g(w . w2, b).

    This is how a recursive pass tells a context-aware function that it
    has moved under binders contributing ``w``.
    """

    def extended(d: Decorated) -> Any:
        return g(Decorated(m.combine(w, d.ctx), d.payload))

    return extended


def _gen_bool(rng: random.Random) -> bool:
    return rng.random() < 0.5


NAT_ADD = Monoid(
    name="nat-add",
    unit=0,
    combine=lambda a, b: a + b,
    gen=lambda rng: rng.randrange(5),
)

BOOL_ALL = Monoid(
    name="bool-all",
    unit=True,
    combine=lambda a, b: a and b,
    gen=_gen_bool,
)

BOOL_ANY = Monoid(
    name="bool-any",
    unit=False,
    combine=lambda a, b: a or b,
    gen=_gen_bool,
)

ATOM_SET = Monoid(
    name="atom-set",
    unit=frozenset(),
    combine=lambda a, b: a | b,
    gen=lambda rng: frozenset(rng.sample(("a", "b", "c", "d"), rng.randrange(3))),
)


def list_monoid(name: str, elem_gen: Callable[[random.Random], Any], max_len: int = 3) -> Monoid:
    """The free monoid over some element type; values are tuples."""
    return Monoid(
        name=name,
        unit=(),
        combine=lambda a, b: a + b,
        gen=lambda rng: tuple(elem_gen(rng) for _ in range(rng.randrange(max_len + 1))),
    )


INT_LIST = list_monoid("int-list", lambda rng: rng.randrange(4))

ATOM_LIST = list_monoid("atom-list", lambda rng: rng.choice(("a", "b", "c", "d")))


def registered_monoids() -> tuple[Monoid, ...]:
    return (NAT_ADD, BOOL_ALL, BOOL_ANY, ATOM_SET, INT_LIST, ATOM_LIST)
