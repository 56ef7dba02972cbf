"""Generic first-order abstract syntax with variable binding.

The central abstraction is a tree type presented by ``ret`` (one-leaf
tree) and ``binddt`` (map each leaf, with the binding context above it,
to an effectful subtree, then flatten). A lambda-calculus instance, a
locally nameless operation toolkit, and executable suites for all the
governing laws are included. Every value is immutable and every
operation is pure.
"""

__version__ = "0.1.0"

from .applicatives import (
    AppValue,
    Applicative,
    ApplicativeMorphism,
    CONST_ALL,
    CONST_ANY,
    CONST_ATOM_SET,
    CONST_INT_LIST,
    CONST_NAT,
    IDENTITY,
    MAYBE,
    NOTHING,
    Some,
    app_ap,
    app_map,
    app_pure,
    apply_morphism,
    check_applicative_laws,
    check_morphism_laws,
    compose_applicatives,
    const_applicative,
    identity_morphism,
    lift_monoid_hom,
    pure_embedding,
)
from .categorical import (
    CategoricalDtm,
    binddt_from_categorical,
    categorical_from_binddt,
    check_categorical_axioms,
    check_roundtrip,
    dtm_from_categorical,
)
from .dtm import (
    Dtm,
    check_kleisli_dtm_laws,
    derived_bind,
    derived_dec,
    derived_dist,
    derived_fmapd,
    derived_join,
    derived_map,
    derived_traverse,
    flat_dtm,
)
from .lam import (
    App,
    BoundVar,
    FreeVar,
    Lam,
    LnVar,
    ParseError,
    Term,
    Var,
    gen_term,
    ln_categorical,
    ln_dtm,
    ln_flag_dtm,
    named_categorical,
    named_dtm,
    parse_term,
    print_term,
    term_binddt,
    term_from_json,
    term_ret,
    term_to_json,
)
from .ln import (
    check_subst_lemmas,
    fresh,
    fv,
    lc,
    lc_loc,
    msubst,
    open_loc,
    open_term,
    subst,
    subst_loc,
)
from .monoids import (
    ATOM_LIST,
    ATOM_SET,
    BOOL_ALL,
    BOOL_ANY,
    Decorated,
    INT_LIST,
    Monoid,
    MonoidHom,
    NAT_ADD,
    ctx_prepend,
    env_duplicate,
    env_extract,
    list_monoid,
    registered_monoids,
    writer_join,
    writer_ret,
)
from .report import Counterexample, LawReport, LawResult
