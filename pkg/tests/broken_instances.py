"""Deliberately broken instances used by the negative law tests.

Each instance deviates from the lambda instances in exactly one way, so
each is expected to fail exactly one law. Two lawful look-alikes are
also provided: variations that look broken but satisfy every equation,
pinning down what the laws do and do not constrain.
"""
from __future__ import annotations

from decotrav.applicatives import AppValue
from decotrav.categorical import CategoricalDtm
from decotrav.dtm import Dtm
from decotrav.lam import (
    App,
    Lam,
    Var,
    ln_categorical,
    term_dist,
    term_join,
    term_map,
    term_ret,
)
from decotrav.monoids import ATOM_LIST, BOOL_ANY, Decorated, NAT_ADD


def _reassemble_app(app, left, right):
    glue = app.ap(app.pure(lambda a: lambda b: App(a, b)), left.payload)
    return AppValue(app.tag, app.ap(glue, right.payload))


def _reassemble_lam(app, binder, inner):
    return AppValue(app.tag, app.ap(app.pure(lambda tb: Lam(binder, tb)), inner.payload))


def wrong_side_named_dtm() -> Dtm:
    """Named instance whose binder clause extends the context on the
    wrong side: binders accumulate innermost first. Fails only the
    composition law (contexts assemble in the wrong order when two
    passes are fused into one)."""

    def binddt(app, f, t):
        match t:
            case Var(leaf):
                return f(Decorated((), leaf))
            case App(fn, arg):
                return _reassemble_app(app, binddt(app, f, fn), binddt(app, f, arg))
            case Lam(binder, body):
                def shifted(d, f=f, binder=binder):
                    return f(Decorated(d.ctx + (binder,), d.payload))

                return _reassemble_lam(app, binder, binddt(app, shifted, body))
        raise TypeError(f"not a term: {t!r}")

    return Dtm(ATOM_LIST, term_ret, binddt)


def unit_ignoring_flag_dtm() -> Dtm:
    """Binder-flag instance whose leaf clause reports "under a binder"
    unconditionally instead of starting from the unit. Fails only the
    ret law: the corrupting context is idempotent, so fused passes see
    the same corrupt flag as sequential ones."""

    def binddt(app, f, t):
        match t:
            case Var(leaf):
                return f(Decorated(True, leaf))
            case App(fn, arg):
                return _reassemble_app(app, binddt(app, f, fn), binddt(app, f, arg))
            case Lam(binder, body):
                def shifted(d, f=f):
                    return f(Decorated(True, d.payload))

                return _reassemble_lam(app, binder, binddt(app, shifted, body))
        raise TypeError(f"not a term: {t!r}")

    return Dtm(BOOL_ANY, term_ret, binddt)


def trivial_decoration_ln_dtm() -> Dtm:
    """Locally nameless instance whose binder clause never extends the
    context. Lawful: constant-unit decoration satisfies every equation.
    The laws pin down *a* context discipline, not the depth-counting one."""

    def binddt(app, f, t):
        match t:
            case Var(leaf):
                return f(Decorated(0, leaf))
            case App(fn, arg):
                return _reassemble_app(app, binddt(app, f, fn), binddt(app, f, arg))
            case Lam(binder, body):
                return _reassemble_lam(app, binder, binddt(app, f, body))
        raise TypeError(f"not a term: {t!r}")

    return Dtm(NAT_ADD, term_ret, binddt)


def overwrite_dec_categorical() -> CategoricalDtm:
    """Decoration that overwrites the accumulated context at each binder
    instead of extending it (the outer binders are dropped). Fails only
    the decoration-join law: contexts stop accumulating across grafts."""

    def dec(t, acc=0):
        match t:
            case Var(leaf):
                return Var(Decorated(acc, leaf))
            case App(fn, arg):
                return App(dec(fn, acc), dec(arg, acc))
            case Lam(binder, body):
                return Lam(binder, dec(body, 1))
        raise TypeError(f"not a term: {t!r}")

    base = ln_categorical()
    return CategoricalDtm(NAT_ADD, term_map, term_ret, term_join, dec, base.dist)


def _dup_first_argument(app, t, recurse):
    match t:
        case Var(v):
            return AppValue(app.tag, app.ap(app.pure(Var), v.payload))
        case App(fn, arg):
            left = recurse(app, fn)
            right = recurse(app, arg)
            chain = app.ap(app.pure(lambda a: lambda _dup: lambda b: App(a, b)), left.payload)
            chain = app.ap(chain, left.payload)
            return AppValue(app.tag, app.ap(chain, right.payload))
        case Lam(binder, body):
            return _reassemble_lam(app, binder, recurse(app, body))
    raise TypeError(f"not a term: {t!r}")


def dup_at_compose_categorical() -> CategoricalDtm:
    """Distribution that visits the first argument of an application
    twice, but only when the applicative is a composite. Fails only the
    distribution-composition law: the composite side performs the
    duplicated effects while the staged side does not."""

    def dist(app, t):
        if not app.tag.startswith("Compose("):
            return term_dist(app, t)
        return _dup_first_argument(app, t, dist)

    base = ln_categorical()
    return CategoricalDtm(NAT_ADD, term_map, term_ret, term_join, base.dec, dist)


def uniform_dup_categorical() -> CategoricalDtm:
    """Distribution that visits the first argument of an application
    twice at every applicative, discarding the duplicate's result.
    Lawful over this registry: both sides of every equation duplicate
    identically, so the deviation is invisible."""

    def dist(app, t):
        return _dup_first_argument(app, t, dist)

    base = ln_categorical()
    return CategoricalDtm(NAT_ADD, term_map, term_ret, term_join, base.dec, dist)
