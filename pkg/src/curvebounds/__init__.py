"""Exact Castelnuovo-Halphen bounds for the genus and speciality of projective curves."""

from .castelnuovo import (
    HilbertFunction,
    acm_speciality,
    castelnuovo_bound,
    castelnuovo_hilbert,
    genus_from_hilbert,
)
from .ci import CIInvariants, CIType, ci_invariants, enumerate_ci_for_flag
from .errors import (
    CurveBoundsError,
    DivisibilityError,
    DomainError,
    IntegralityError,
    RegimeError,
)
from .halphen import (
    IntervalBound,
    g4_divisible,
    g4_interval,
    g4_penalty,
    gh_interval,
    halphen_bound,
    halphen_R,
    halphen_value,
)
from .numeric import (
    Branch,
    Decomposition,
    Rational,
    TUDecomposition,
    decompose,
    decompose_tu,
    format_rational,
    parse_rational,
)
from .regimes import (
    RegimeVerdict,
    ineq8_check,
    prop1_iii_regime,
    prop1_regime,
    prop2_regime,
    thmB_regime,
)
from .scan import ScanResult, ScanSpec, run_scan
from .sharp import Model, SharpnessResult, verify_sharp
from .speciality import (
    BoundReport,
    FlagCondition,
    hodge_bound,
    lemma1_genus_bound,
    lemma1_spec_bound,
    lemma2_bound,
    liaison_residual,
    prop1_bound_i,
    prop1_bound_ii,
    prop1_bound_iii,
    prop2_bound,
    prop2_equality_case,
    remark_iii_bound,
    remark_iv_compose,
    spec_from_genus,
    thmA_bound,
    thmB_bound,
    thmB_genus_threshold,
)

__version__ = "0.1.0"
