"""Exact closed forms for sums of powers of equally spaced Fibonacci and Lucas numbers."""

from .engine import SumQuery, power_sum_closed_form, power_sum_value
from .errors import InconsistencyError, UsageError
from .expansions import (
    ExpansionTerm,
    Form,
    GirardWaringForm,
    Kind,
    PowerExpansion,
    Seq,
    canonicalize,
    evaluate_expansion,
    expand_power,
    girard_waring_power_form,
)
from .kernel import binomial, fib, fib_pair, lucas
from .oracle import OracleReport, check_grid, direct_power_sum, gf_coefficients
from .shifted_sums import (
    ClosedForm,
    ClosedFormAtom,
    Tag,
    constant_sum_closed_form,
    eval_closed_form,
    shifted_sum_closed_form,
)

__version__ = "0.1.0"
