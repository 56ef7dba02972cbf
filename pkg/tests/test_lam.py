import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from decotrav.applicatives import AppValue, CONST_ALL, CONST_NAT, IDENTITY, identity_value
from decotrav.dtm import derived_bind, derived_dec
from decotrav.lam import (
    App,
    BoundVar,
    FreeVar,
    Lam,
    ParseError,
    Var,
    gen_term,
    gen_term_rng,
    ln_dtm,
    parse_term,
    print_term,
    term_bind,
    term_binddt,
    term_dec,
    term_ret,
    term_from_json,
    term_to_json,
    term_to_json_text,
)
from decotrav.monoids import ATOM_LIST, Decorated, NAT_ADD


def test_parse_ln_examples():
    assert parse_term("\\ . #0 #1") == Lam(None, App(Var(BoundVar(0)), Var(BoundVar(1))))
    assert parse_term("a") == Var(FreeVar("a"))
    assert parse_term("#3") == Var(BoundVar(3))
    assert parse_term("(a b) c") == App(App(Var(FreeVar("a")), Var(FreeVar("b"))), Var(FreeVar("c")))


def test_parse_named_examples():
    assert parse_term("\\x. \\y. y x", "named") == Lam(
        "x", Lam("y", App(Var("y"), Var("x")))
    )
    assert parse_term("x y z", "named") == App(App(Var("x"), Var("y")), Var("z"))


def test_application_is_left_associative():
    assert parse_term("a b c") == App(App(Var(FreeVar("a")), Var(FreeVar("b"))), Var(FreeVar("c")))


def test_lambda_body_extends_maximally_right():
    assert parse_term("\\ . #0 #0") == Lam(None, App(Var(BoundVar(0)), Var(BoundVar(0))))
    assert parse_term("a \\ . b c") == App(
        Var(FreeVar("a")), Lam(None, App(Var(FreeVar("b")), Var(FreeVar("c"))))
    )


def test_unbalanced_parens_report_position():
    with pytest.raises(ParseError) as err:
        parse_term("((")
    assert err.value.line == 1
    assert err.value.column == 3
    assert err.value.expected


def test_parse_error_cases():
    with pytest.raises(ParseError):
        parse_term("")
    with pytest.raises(ParseError):
        parse_term("a )")
    with pytest.raises(ParseError):
        parse_term("\\ #0", "ln")
    with pytest.raises(ParseError):
        parse_term("#0", "named")
    with pytest.raises(ParseError):
        parse_term("\\ . x", "named")
    with pytest.raises(ParseError):
        parse_term("0 1")
    with pytest.raises(ParseError):
        parse_term("#", "ln")
    with pytest.raises(ParseError):
        parse_term("A", "ln")


def test_printing_conventions():
    a, b, c = Var(FreeVar("a")), Var(FreeVar("b")), Var(FreeVar("c"))
    assert print_term(App(App(a, b), c)) == "a b c"
    assert print_term(App(a, App(b, c))) == "a (b c)"
    assert print_term(Lam(None, App(Var(BoundVar(0)), Var(BoundVar(0))))) == "\\ . #0 #0"
    assert print_term(App(Lam(None, a), b)) == "(\\ . a) b"
    assert print_term(App(a, Lam(None, b))) == "a \\ . b"
    assert print_term(App(App(a, Lam(None, b)), c)) == "a (\\ . b) c"
    assert print_term(Lam("x", App(Var("y"), Lam("y", Var("z")))), "named") == "\\x. y \\y. z"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**30), st.integers(1, 8), st.sampled_from(("ln", "named")))
def test_parse_inverts_print(seed, depth, mode):
    t = gen_term(seed, depth, mode)
    assert parse_term(print_term(t, mode), mode) == t


def ln_terms():
    leaves = st.one_of(
        st.sampled_from("abcd").map(FreeVar), st.integers(0, 3).map(BoundVar)
    )
    return st.recursive(
        leaves.map(Var),
        lambda sub: st.one_of(
            st.tuples(sub, sub).map(lambda p: App(*p)),
            sub.map(lambda b: Lam(None, b)),
        ),
        max_leaves=25,
    )


@settings(max_examples=200, deadline=None)
@given(ln_terms())
def test_json_round_trip(t):
    assert term_from_json(json.loads(term_to_json_text(t))) == t


def test_json_schema_is_exact():
    t = Lam(None, App(Var(BoundVar(0)), Var(FreeVar("a"))))
    assert term_to_json(t) == {
        "lam": {"binder": None, "body": {"app": [{"var": {"bvar": 0}}, {"var": {"fvar": "a"}}]}}
    }
    named = Lam("x", Var("x"))
    assert term_to_json(named) == {"lam": {"binder": "x", "body": {"var": "x"}}}
    assert term_from_json(term_to_json(named)) == named


def test_json_rejects_malformed_objects():
    with pytest.raises(ValueError):
        term_from_json({"var": {"fvar": "a", "bvar": 0}})
    with pytest.raises(ValueError):
        term_from_json({"app": [{"var": "x"}], "lam": {}})
    with pytest.raises(ValueError):
        term_from_json(["var", "x"])


def test_generator_is_deterministic():
    assert gen_term(42, 8) == gen_term(42, 8)
    assert gen_term(42, 8, "named") == gen_term(42, 8, "named")


def test_generator_depth_one_is_a_leaf():
    for seed in range(50):
        assert isinstance(gen_term(seed, 1), Var)


def test_generator_rejects_zero_depth():
    with pytest.raises(ValueError):
        gen_term(0, 0)


def count_constructors(t, counts):
    match t:
        case Var(_):
            counts["var"] += 1
        case App(fn, arg):
            counts["app"] += 1
            count_constructors(fn, counts)
            count_constructors(arg, counts)
        case Lam(_, body):
            counts["lam"] += 1
            count_constructors(body, counts)


@pytest.mark.parametrize("mode", ["ln", "named"])
def test_generator_covers_every_constructor(mode):
    counts = {"var": 0, "app": 0, "lam": 0}
    for seed in range(1000):
        count_constructors(gen_term(seed, 8, mode), counts)
    assert all(n >= 50 for n in counts.values()), counts


def test_ln_leaves_cover_both_kinds():
    rng = random.Random(0)
    leaves = {"free": 0, "bound": 0}
    for _ in range(1000):
        t = gen_term_rng(rng, 1)
        leaves["free" if isinstance(t.leaf, FreeVar) else "bound"] += 1
    assert leaves["free"] > 100 and leaves["bound"] > 100


def test_ret_is_the_leaf_constructor():
    assert term_ret(FreeVar("a")) == Var(FreeVar("a"))
    d = ln_dtm()
    assert derived_dec(d, term_ret(FreeVar("a"))) == Var(Decorated(0, FreeVar("a")))


def test_binddt_applies_f_at_the_unit_context():
    seen = []

    def f(d):
        seen.append(d)
        return identity_value(Var(d.payload))

    term_binddt(IDENTITY, f, Var(FreeVar("a")), monoid=NAT_ADD, binder_ctx=lambda _b: 1)
    assert seen == [Decorated(0, FreeVar("a"))]

    seen.clear()
    term_binddt(
        IDENTITY, f, Var("v"), monoid=ATOM_LIST, binder_ctx=lambda b: (b,)
    )
    assert seen == [Decorated((), "v")]


def test_binddt_identity_behavior():
    rng = random.Random(1)
    for _ in range(300):
        t = gen_term_rng(rng, 6)
        out = term_binddt(
            IDENTITY,
            lambda d: identity_value(Var(d.payload)),
            t,
            monoid=NAT_ADD,
            binder_ctx=lambda _b: 1,
        )
        assert out.payload == t


def test_binddt_counts_leaves_through_the_constant_instance():
    t = parse_term("\\ . #0 #1")
    out = term_binddt(
        CONST_NAT,
        lambda _d: AppValue(CONST_NAT.tag, 1),
        t,
        monoid=NAT_ADD,
        binder_ctx=lambda _b: 1,
    )
    assert out.payload == 2


def test_binddt_rejects_wrongly_tagged_results():
    with pytest.raises(ValueError):
        term_binddt(
            CONST_NAT,
            lambda _d: AppValue(CONST_ALL.tag, True),
            Var(FreeVar("a")),
            monoid=NAT_ADD,
            binder_ctx=lambda _b: 1,
        )


def test_decoration_vectors():
    ln = lambda t: term_dec(t, monoid=NAT_ADD, binder_ctx=lambda _b: 1)
    named = lambda t: term_dec(t, monoid=ATOM_LIST, binder_ctx=lambda b: (b,))

    t1 = parse_term("\\ . \\ . #0 #1")
    assert ln(t1) == Lam(
        None,
        Lam(None, App(Var(Decorated(2, BoundVar(0))), Var(Decorated(2, BoundVar(1))))),
    )

    t2 = parse_term("(\\ . #0) (\\ . \\ . #1)")
    assert ln(t2) == App(
        Lam(None, Var(Decorated(1, BoundVar(0)))),
        Lam(None, Lam(None, Var(Decorated(2, BoundVar(1))))),
    )

    t3 = parse_term("\\x. \\y. y x", "named")
    assert named(t3) == Lam(
        "x",
        Lam("y", App(Var(Decorated(("x", "y"), "y")), Var(Decorated(("x", "y"), "x")))),
    )

    t4 = parse_term("\\x. y \\y. z", "named")
    assert named(t4) == Lam(
        "x", App(Var(Decorated(("x",), "y")), Lam("y", Var(Decorated(("x", "y"), "z"))))
    )


def test_structural_recursions_match_derived_operations():
    d = ln_dtm()
    rng = random.Random(2)
    for _ in range(1000):
        t = gen_term_rng(rng, 6)
        u = gen_term_rng(rng, 3)
        f = lambda v: u if v == FreeVar("b") else Var(v)
        assert term_bind(f, t) == derived_bind(d, f, t)
        assert term_dec(t, monoid=NAT_ADD, binder_ctx=lambda _b: 1) == derived_dec(d, t)
