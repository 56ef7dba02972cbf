"""Locally nameless operations, written once against any ``Dtm``.

Substitution and parallel substitution only need naive leaf replacement.
Opening needs the binder depth at each occurrence, so it is a
context-aware pass at the identity instance. Local closure and free
variables need to read the whole term as a container of occurrences, so
they are folds through constant instances. None of these inspect the
shape of the tree; any instance over locally nameless leaves gets them
for free.

``open_term`` inserts the replacement verbatim, without shifting its
indices; the standard usage opens with a locally closed replacement,
and that precondition is documented rather than enforced.
"""
from __future__ import annotations

import random
from typing import Any, Callable, Iterable, Mapping

from .applicatives import AppValue, CONST_ALL, CONST_ATOM_SET, IDENTITY, identity_value
from .dtm import Dtm, derived_bind, derived_traverse
from .lam import BoundVar, FreeVar, LnVar
from .monoids import Decorated
from .report import LawReport, LawResult, check_equal

SubstMap = Mapping[str, Any]


def subst_loc(dtm: Dtm, x: str, u: Any, v: LnVar) -> Any:
    """The effect of substitution on one occurrence: u at x, unchanged elsewhere."""
    return u if v == FreeVar(x) else dtm.ret(v)


def subst(dtm: Dtm, x: str, u: Any, t: Any) -> Any:
    """Replace every free occurrence of the atom x in t by u."""
    return derived_bind(dtm, lambda v: subst_loc(dtm, x, u, v), t)


def msubst(dtm: Dtm, sigma: SubstMap, t: Any) -> Any:
    """Replace all mapped atoms simultaneously, in one pass."""

    def at_leaf(v: LnVar) -> Any:
        if isinstance(v, FreeVar) and v.name in sigma:
            return sigma[v.name]
        return dtm.ret(v)

    return derived_bind(dtm, at_leaf, t)


def open_loc(dtm: Dtm, u: Any, d: Decorated) -> Any:
    """The effect of opening on one occurrence at its binder depth."""
    v = d.payload
    if isinstance(v, BoundVar) and v.index == d.ctx:
        return u
    return dtm.ret(v)


def open_term(dtm: Dtm, u: Any, t: Any) -> Any:
    """Replace indices pointing at the removed outermost binder by u."""
    out = dtm.binddt(IDENTITY, lambda d: identity_value(open_loc(dtm, u, d)), t)
    return out.payload


def lc_loc(d: Decorated) -> bool:
    """One occurrence is well scoped iff it is free or its index is under its depth."""
    v = d.payload
    if isinstance(v, BoundVar):
        return d.ctx > v.index
    return True


def lc(dtm: Dtm, t: Any) -> bool:
    """Local closure: every index points at an enclosing binder."""
    out = dtm.binddt(CONST_ALL, lambda d: AppValue(CONST_ALL.tag, lc_loc(d)), t)
    return out.payload


def fv(dtm: Dtm, t: Any) -> frozenset[str]:
    """The atoms occurring free in t."""

    def at_leaf(v: LnVar) -> AppValue:
        atoms = frozenset((v.name,)) if isinstance(v, FreeVar) else frozenset()
        return AppValue(CONST_ATOM_SET.tag, atoms)

    return derived_traverse(dtm, CONST_ATOM_SET, at_leaf, t).payload


def _atom_names() -> Iterable[str]:
    for c in "abcdefghijklmnopqrstuvwxyz":
        yield c
    i = 0
    while True:
        yield f"v{i}"
        i += 1


def fresh(avoid: Iterable[str]) -> str:
    """The first atom not in ``avoid``; deterministic in ``avoid``."""
    avoid = set(avoid)
    for name in _atom_names():
        if name not in avoid:
            return name
    raise AssertionError("unreachable")


def check_subst_lemmas(
    dtm: Dtm,
    gen_term: Callable[[random.Random], Any],
    *,
    gen_atom: Callable[[random.Random], str] | None = None,
    samples: int = 500,
    seed: int = 0,
) -> LawReport:
    """Substitution facts that hold for any lawful instance.

    Substituting into a lone variable yields the replacement; replacing
    an atom by itself changes nothing; two sequential substitutions fuse
    into one parallel substitution; substituting an atom that does not
    occur changes nothing.
    """
    if gen_atom is None:
        gen_atom = lambda rng: rng.choice(("a", "b", "c", "d"))
    eq = dtm.term_eq
    results: list[LawResult] = []

    rng = random.Random(seed)

    def into_variable(_i):
        x = gen_atom(rng)
        t = gen_term(rng)
        lhs = subst(dtm, x, t, dtm.ret(FreeVar(x)))
        return f"x={x!r} t={t!r}", lhs, t

    results.append(check_equal("subst-into-variable", samples, into_variable, eq=eq))

    rng = random.Random(seed + 1)

    def by_same_variable(_i):
        x = gen_atom(rng)
        t = gen_term(rng)
        lhs = subst(dtm, x, dtm.ret(FreeVar(x)), t)
        return f"x={x!r} t={t!r}", lhs, t

    results.append(check_equal("subst-same-variable", samples, by_same_variable, eq=eq))

    rng = random.Random(seed + 2)

    def composition(_i):
        x = gen_atom(rng)
        y = gen_atom(rng)
        while y == x:
            y = gen_atom(rng)
        t = gen_term(rng)
        u1 = gen_term(rng)
        u2 = gen_term(rng)
        lhs = subst(dtm, y, u2, subst(dtm, x, u1, t))
        rhs = msubst(dtm, {x: subst(dtm, y, u2, u1), y: u2}, t)
        return f"x={x!r} y={y!r} t={t!r} u1={u1!r} u2={u2!r}", lhs, rhs

    results.append(check_equal("subst-composition", samples, composition, eq=eq))

    rng = random.Random(seed + 3)

    def fresh_atom(_i):
        t = gen_term(rng)
        u = gen_term(rng)
        x = fresh(fv(dtm, t))
        lhs = subst(dtm, x, u, t)
        return f"x={x!r} t={t!r} u={u!r}", lhs, t

    results.append(check_equal("subst-fresh", samples, fresh_atom, eq=eq))

    return LawReport(suite="subst", results=tuple(results))
