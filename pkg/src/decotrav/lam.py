"""The lambda-calculus term type, its recursion instances, and text/JSON forms.

Terms are parameterized by the data in the leaves and the annotation on
binders. Two encodings are wired up:

  named             leaves and binders are atoms (strings); the binding
                    context is the list of binders in scope
  locally nameless  leaves are free atoms or bound indices, binders are
                    unannotated (None); the context is the binder depth

Alongside the generic instances, every operation is also implemented by
direct structural recursion (the ``term_*`` family); the test suites
compare the generic and direct forms pointwise.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterator

from .applicatives import AppValue, Applicative
from .categorical import CategoricalDtm
from .dtm import Dtm
from .monoids import ATOM_LIST, BOOL_ANY, Decorated, Monoid, NAT_ADD, ctx_prepend

ATOM_POOL = ("a", "b", "c", "d")


@dataclass(frozen=True)
class Var:
    leaf: Any


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Lam:
    binder: Any
    body: "Term"


Term = Var | App | Lam


@dataclass(frozen=True)
class FreeVar:
    name: str


@dataclass(frozen=True)
class BoundVar:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("bound-variable index must be non-negative")


LnVar = FreeVar | BoundVar


def term_ret(leaf: Any) -> Term:
    return Var(leaf)


def term_binddt(
    app: Applicative,
    f: Callable[[Decorated], AppValue],
    t: Term,
    *,
    monoid: Monoid,
    binder_ctx: Callable[[Any], Any],
) -> AppValue:
    """Structured recursion over a term.

    Each leaf, paired with the context accumulated from the binders
    above it, is mapped to an effectful subtree; subtrees are recombined
    under the applicative, effects sequenced left to right.
    """
    match t:
        case Var(leaf):
            out = f(Decorated(monoid.unit, leaf))
            if out.tag != app.tag:
                raise ValueError(f"expected a {app.tag} value, got {out.tag}")
            return out
        case App(fn, arg):
            left = term_binddt(app, f, fn, monoid=monoid, binder_ctx=binder_ctx)
            right = term_binddt(app, f, arg, monoid=monoid, binder_ctx=binder_ctx)
            glue = app.ap(app.pure(lambda t1: lambda t2: App(t1, t2)), left.payload)
            return AppValue(app.tag, app.ap(glue, right.payload))
        case Lam(binder, body):
            under = ctx_prepend(f, binder_ctx(binder), monoid)
            inner = term_binddt(app, under, body, monoid=monoid, binder_ctx=binder_ctx)
            rebuilt = app.ap(app.pure(lambda tb: Lam(binder, tb)), inner.payload)
            return AppValue(app.tag, rebuilt)
    raise TypeError(f"not a term: {t!r}")


# direct structural recursions, used as oracles against the generic forms


def term_map(f: Callable[[Any], Any], t: Term) -> Term:
    match t:
        case Var(leaf):
            return Var(f(leaf))
        case App(fn, arg):
            return App(term_map(f, fn), term_map(f, arg))
        case Lam(binder, body):
            return Lam(binder, term_map(f, body))
    raise TypeError(f"not a term: {t!r}")


def term_bind(f: Callable[[Any], Term], t: Term) -> Term:
    match t:
        case Var(leaf):
            return f(leaf)
        case App(fn, arg):
            return App(term_bind(f, fn), term_bind(f, arg))
        case Lam(binder, body):
            return Lam(binder, term_bind(f, body))
    raise TypeError(f"not a term: {t!r}")


def term_join(t: Term) -> Term:
    return term_bind(lambda sub: sub, t)


def term_dec(t: Term, *, monoid: Monoid, binder_ctx: Callable[[Any], Any]) -> Term:
    """Annotate each leaf with the contexts of the binders above it."""

    def go(t: Term, acc: Any) -> Term:
        match t:
            case Var(leaf):
                return Var(Decorated(acc, leaf))
            case App(fn, arg):
                return App(go(fn, acc), go(arg, acc))
            case Lam(binder, body):
                return Lam(binder, go(body, monoid.combine(acc, binder_ctx(binder))))
        raise TypeError(f"not a term: {t!r}")

    return go(t, monoid.unit)


def term_dist(app: Applicative, t: Term) -> AppValue:
    """Sequence a term whose leaves are effectful values."""
    match t:
        case Var(leaf):
            if not isinstance(leaf, AppValue) or leaf.tag != app.tag:
                raise ValueError(f"leaf is not a {app.tag} value: {leaf!r}")
            return AppValue(app.tag, app.ap(app.pure(Var), leaf.payload))
        case App(fn, arg):
            left = term_dist(app, fn)
            right = term_dist(app, arg)
            glue = app.ap(app.pure(lambda t1: lambda t2: App(t1, t2)), left.payload)
            return AppValue(app.tag, app.ap(glue, right.payload))
        case Lam(binder, body):
            inner = term_dist(app, body)
            return AppValue(app.tag, app.ap(app.pure(lambda tb: Lam(binder, tb)), inner.payload))
    raise TypeError(f"not a term: {t!r}")


def term_subst(x: str, u: Term, t: Term) -> Term:
    """Replace free occurrences of the atom x by u (locally nameless leaves)."""
    match t:
        case Var(leaf):
            return u if leaf == FreeVar(x) else t
        case App(fn, arg):
            return App(term_subst(x, u, fn), term_subst(x, u, arg))
        case Lam(binder, body):
            return Lam(binder, term_subst(x, u, body))
    raise TypeError(f"not a term: {t!r}")


def term_open(u: Term, t: Term, depth: int = 0) -> Term:
    """Replace indices bound to the removed outermost binder by u."""
    match t:
        case Var(leaf):
            return u if leaf == BoundVar(depth) else t
        case App(fn, arg):
            return App(term_open(u, fn, depth), term_open(u, arg, depth))
        case Lam(binder, body):
            return Lam(binder, term_open(u, body, depth + 1))
    raise TypeError(f"not a term: {t!r}")


def term_lc(t: Term, depth: int = 0) -> bool:
    """True when no index points past the binders enclosing it."""
    match t:
        case Var(BoundVar(index)):
            return depth > index
        case Var(_):
            return True
        case App(fn, arg):
            return term_lc(fn, depth) and term_lc(arg, depth)
        case Lam(_, body):
            return term_lc(body, depth + 1)
    raise TypeError(f"not a term: {t!r}")


# instances


def _ln_binder_ctx(_b: Any) -> int:
    return 1


def _named_binder_ctx(b: Any) -> tuple:
    return (b,)


def ln_dtm() -> Dtm:
    """Locally nameless terms; contexts count the binders in scope."""
    return Dtm(
        ctx_monoid=NAT_ADD,
        ret=term_ret,
        binddt=lambda app, f, t: term_binddt(
            app, f, t, monoid=NAT_ADD, binder_ctx=_ln_binder_ctx
        ),
    )


def named_dtm() -> Dtm:
    """Named terms; contexts list the binders in scope, outermost first."""
    return Dtm(
        ctx_monoid=ATOM_LIST,
        ret=term_ret,
        binddt=lambda app, f, t: term_binddt(
            app, f, t, monoid=ATOM_LIST, binder_ctx=_named_binder_ctx
        ),
    )


def ln_flag_dtm() -> Dtm:
    """Locally nameless terms; contexts only record whether any binder is in scope."""
    return Dtm(
        ctx_monoid=BOOL_ANY,
        ret=term_ret,
        binddt=lambda app, f, t: term_binddt(
            app, f, t, monoid=BOOL_ANY, binder_ctx=lambda _b: True
        ),
    )


def ln_categorical() -> CategoricalDtm:
    """The locally nameless instance built from the direct recursions."""
    return CategoricalDtm(
        ctx_monoid=NAT_ADD,
        map=term_map,
        ret=term_ret,
        join=term_join,
        dec=lambda t: term_dec(t, monoid=NAT_ADD, binder_ctx=_ln_binder_ctx),
        dist=term_dist,
    )


def named_categorical() -> CategoricalDtm:
    return CategoricalDtm(
        ctx_monoid=ATOM_LIST,
        map=term_map,
        ret=term_ret,
        join=term_join,
        dec=lambda t: term_dec(t, monoid=ATOM_LIST, binder_ctx=_named_binder_ctx),
        dist=term_dist,
    )


# text form
#
#   locally nameless:  term := atom+        atom := IDENT | '#' NAT
#                                                 | '(' term ')' | '\' '.' term
#   named:             atom := IDENT | '(' term ')' | '\' IDENT '.' term
#
# Application is left-associative and a lambda body extends as far right
# as possible. IDENT = [a-z][a-zA-Z0-9_]*, NAT = [0-9]+.


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...]):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[_Token]:
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in "()\\.":
            kinds = {"(": "lparen", ")": "rparen", "\\": "lambda", ".": "dot"}
            yield _Token(kinds[ch], ch, line, col)
            col += 1
            i += 1
            continue
        if ch == "#":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("bad index", line, col, ("digits after '#'",))
            yield _Token("index", text[i:j], line, col)
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield _Token("number", text[i:j], line, col)
            col += j - i
            i = j
            continue
        if ch.islower():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield _Token("ident", text[i:j], line, col)
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col, ())
    yield _Token("eof", "", line, col)


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in ("named", "ln"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.tokens = list(_tokenize(text))
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> None:
        tok = self.peek()
        what = "unexpected end of input" if tok.kind == "eof" else f"unexpected {tok.text!r}"
        raise ParseError(what, tok.line, tok.column, expected)

    def _starts_atom(self, tok: _Token) -> bool:
        if tok.kind in ("ident", "lparen", "lambda"):
            return True
        return tok.kind == "index" and self.mode == "ln"

    def parse(self) -> Term:
        t = self.application()
        if self.peek().kind != "eof":
            self.fail(("end of input",))
        return t

    def application(self) -> Term:
        t = self.atom()
        while self._starts_atom(self.peek()):
            t = App(t, self.atom())
        return t

    def atom(self) -> Term:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return Var(FreeVar(tok.text) if self.mode == "ln" else tok.text)
        if tok.kind == "index" and self.mode == "ln":
            self.advance()
            return Var(BoundVar(int(tok.text[1:])))
        if tok.kind == "lparen":
            self.advance()
            t = self.application()
            if self.peek().kind != "rparen":
                self.fail(("')'",))
            self.advance()
            return t
        if tok.kind == "lambda":
            self.advance()
            if self.mode == "named":
                name = self.peek()
                if name.kind != "ident":
                    self.fail(("binder name",))
                self.advance()
                binder = name.text
            else:
                binder = None
            if self.peek().kind != "dot":
                self.fail(("'.'",))
            self.advance()
            return Lam(binder, self.application())
        expected = ("identifier", "'('", "'\\'")
        if self.mode == "ln":
            expected = ("identifier", "'#'", "'('", "'\\'")
        self.fail(expected)
        raise AssertionError("unreachable")


def parse_term(text: str, mode: str = "ln") -> Term:
    return _Parser(text, mode).parse()


def print_term(t: Term, mode: str = "ln") -> str:
    """Canonical text; ``parse_term(print_term(t), mode) == t``."""

    def leaf_text(leaf: Any) -> str:
        if mode == "ln":
            match leaf:
                case FreeVar(name):
                    return name
                case BoundVar(index):
                    return f"#{index}"
            raise TypeError(f"not a locally nameless leaf: {leaf!r}")
        if not isinstance(leaf, str):
            raise TypeError(f"not a named leaf: {leaf!r}")
        return leaf

    def go(t: Term, rightmost: bool) -> str:
        match t:
            case Var(leaf):
                return leaf_text(leaf)
            case App(fn, arg):
                fn_text = go(fn, False)
                if isinstance(arg, App):
                    arg_text = f"({go(arg, True)})"
                else:
                    arg_text = go(arg, rightmost)
                return f"{fn_text} {arg_text}"
            case Lam(binder, body):
                head = "\\ . " if mode == "ln" else f"\\{binder}. "
                text = head + go(body, True)
                return text if rightmost else f"({text})"
        raise TypeError(f"not a term: {t!r}")

    return go(t, True)


# JSON form: {"var": v} | {"app": [t1, t2]} | {"lam": {"binder": b, "body": t}}
# with locally nameless leaves as {"fvar": name} | {"bvar": index}, named
# leaves as plain strings, and the unannotated binder as null.


def term_to_json(t: Term) -> dict:
    match t:
        case Var(FreeVar(name)):
            return {"var": {"fvar": name}}
        case Var(BoundVar(index)):
            return {"var": {"bvar": index}}
        case Var(leaf):
            return {"var": leaf}
        case App(fn, arg):
            return {"app": [term_to_json(fn), term_to_json(arg)]}
        case Lam(binder, body):
            return {"lam": {"binder": binder, "body": term_to_json(body)}}
    raise TypeError(f"not a term: {t!r}")


def term_from_json(obj: Any) -> Term:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"not a term object: {obj!r}")
    if "var" in obj:
        leaf = obj["var"]
        if isinstance(leaf, dict):
            if set(leaf) == {"fvar"}:
                return Var(FreeVar(leaf["fvar"]))
            if set(leaf) == {"bvar"}:
                return Var(BoundVar(leaf["bvar"]))
            raise ValueError(f"not a leaf object: {leaf!r}")
        return Var(leaf)
    if "app" in obj:
        fn, arg = obj["app"]
        return App(term_from_json(fn), term_from_json(arg))
    if "lam" in obj:
        return Lam(obj["lam"]["binder"], term_from_json(obj["lam"]["body"]))
    raise ValueError(f"not a term object: {obj!r}")


def term_to_json_text(t: Term) -> str:
    return json.dumps(term_to_json(t), separators=(",", ":"))


# random terms


def gen_term(seed: int, max_depth: int, mode: str = "ln") -> Term:
    """A deterministic pseudo-random term of depth at most ``max_depth``."""
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    return gen_term_rng(random.Random(seed), max_depth, mode)


def gen_term_rng(rng: random.Random, max_depth: int, mode: str = "ln") -> Term:
    if max_depth <= 1:
        return Var(gen_leaf_rng(rng, mode))
    roll = rng.random()
    if roll < 0.35:
        return Var(gen_leaf_rng(rng, mode))
    if roll < 0.72:
        return App(
            gen_term_rng(rng, max_depth - 1, mode),
            gen_term_rng(rng, max_depth - 1, mode),
        )
    binder = None if mode == "ln" else rng.choice(ATOM_POOL)
    return Lam(binder, gen_term_rng(rng, max_depth - 1, mode))


def gen_leaf_rng(rng: random.Random, mode: str = "ln") -> Any:
    if mode == "named":
        return rng.choice(ATOM_POOL)
    if rng.random() < 0.5:
        return FreeVar(rng.choice(ATOM_POOL))
    return BoundVar(rng.randrange(4))
