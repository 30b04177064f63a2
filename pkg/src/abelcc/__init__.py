"""Exact decision of the composition condition for trigonometric Abel equations."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AbelCCError,
    DegenerateInputError,
    DegreeLimitError,
    InputError,
    InternalInconsistency,
    NotPeriodicError,
    NotRealTypeError,
)
from .field import (  # noqa: E402
    Fails,
    FieldGenerator,
    Holds,
    LaurentField,
    NotPeriodic,
    TanField,
    classify,
    common_generator,
    decide_cc,
    decide_cc_abel,
    decompose_through,
)
from .laurent import INF, LaurentPoly, RatFunc  # noqa: E402
from .ode import AbelInstance, OdeReport, integrate_abel, poincare_report  # noqa: E402
from .poly import BiPoly, UniPoly, gcd_bi_in_w, gcd_uni, solve_linear  # noqa: E402
from .scalar import GaussRational, Rational  # noqa: E402
from .trig import (  # noqa: E402
    TrigPoly,
    antiderivative,
    compose_poly_trig,
    eval_trig,
    phi,
    phi_inv,
    psi,
    trig_add,
    trig_mul,
)

__all__ = [
    "__version__",
    "AbelCCError",
    "DegenerateInputError",
    "DegreeLimitError",
    "InputError",
    "InternalInconsistency",
    "NotPeriodicError",
    "NotRealTypeError",
    "Fails",
    "FieldGenerator",
    "Holds",
    "LaurentField",
    "NotPeriodic",
    "TanField",
    "classify",
    "common_generator",
    "decide_cc",
    "decide_cc_abel",
    "decompose_through",
    "INF",
    "LaurentPoly",
    "RatFunc",
    "AbelInstance",
    "OdeReport",
    "integrate_abel",
    "poincare_report",
    "BiPoly",
    "UniPoly",
    "gcd_bi_in_w",
    "gcd_uni",
    "solve_linear",
    "GaussRational",
    "Rational",
    "TrigPoly",
    "antiderivative",
    "compose_poly_trig",
    "eval_trig",
    "phi",
    "phi_inv",
    "psi",
    "trig_add",
    "trig_mul",
]
