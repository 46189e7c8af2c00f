"""Exact involutive-basis and Groebner-basis computation over Q."""

from .buchberger import autoreduce, buchberger_reduced_gb, s_polynomial
from .cones import (
    BoundExceeded,
    complete_monomial_set,
    cone_member,
    is_locally_involutive,
    lcone_member,
)
from .division import (
    Separation,
    axiom_check,
    compute_separation,
    find_involutive_divisor_scan,
    involutive_divides,
)
from .engine import (
    CompletionStats,
    EngineConfig,
    Triple,
    TripleStore,
    criteria_check,
    extract_groebner,
    head_normal_form,
    head_reduce,
    involutive_basis_v1,
    involutive_basis_v2,
    select_from_queue,
)
from .hilbert import HilbertInput, hf_bruteforce, hf_eval, hp_eval
from .janet_tree import JanetTree
from .monomials import (
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_proper_divides,
)
from .normalform import (
    ReductionTrace,
    conv_normal_form,
    inv_normal_form,
    tail_normal_form,
)
from .ordering import DEGLEX, DEGREVLEX, LEX, Order, order_compare
from .polynomial import (
    Poly,
    make_poly,
    normalize_primitive,
    poly_mul_mono,
    poly_str,
    reduce_step,
)
from .problems import ParseError, gen_benchmark, parse_polynomial, parse_system

__version__ = "0.1.0"
