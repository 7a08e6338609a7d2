"""Reductions and reduction numbers of monomial ideals in K[x, y]."""

from .closure import ClosureTrace, closure, closure_3gen, minimal_one_oracle, violations
from .equigen import (
    ExponentSet,
    bounds,
    from_ideal,
    k_fold,
    masiproves_formula,
    multiplicity,
    r_equigen,
    redone_characterize,
    somayeh_family,
    sumset,
    sunshine_classify,
    to_ideal,
)
from .monomial import (
    ExponentOverflow,
    IdealError,
    Monomial,
    MonomialIdeal,
    ParseError,
    bracket_power,
    contains,
    ideal_sum,
    intersection,
    minimalize,
    parse_ideal,
    power,
    product,
)
from .powers import (
    PowerProfile,
    limit_value,
    masoomeh_family,
    monotonicity_probe,
    power_profile,
    related_check,
)
from .reduction import (
    CapExceeded,
    FramedIdeal,
    NotInFrame,
    NuValue,
    ReductionReport,
    classify,
    equigenerated_part,
    minimal_monomial_reduction,
    nu,
    onion_ideal,
    reduction_number,
    strict_part,
    three_gen_reduction_number,
)
from .survey import (
    SurveyTable,
    m_table,
    n_table,
    ourlimits_check,
    r_set,
    specialnight_check,
    totient,
)

__version__ = "0.1.0"
