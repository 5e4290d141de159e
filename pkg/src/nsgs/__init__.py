"""Numerical sets and numerical semigroups through their Young diagrams."""

from nsgs.enumeration import (
    BoundMode,
    EnumBound,
    enumerate_numerical_sets,
    enumerate_pseudo_symmetric,
    enumerate_semigroups,
    enumerate_symmetric,
)
from nsgs.errors import (
    BoundExceeded,
    ExcludedCase,
    IndexOutOfRange,
    InvalidHighlight,
    MalformedInput,
    NotASemigroup,
    NotPseudoSymmetric,
    NotSymmetric,
    NSGSError,
    UnknownTheorem,
)
from nsgs.numset import (
    GapSet,
    NumericalSet,
    conductor,
    contains,
    format_set,
    frobenius,
    from_gaps,
    from_small_elements,
    gaps,
    genus,
    is_semigroup,
    minimal_generators,
    parse_set,
)
from nsgs.render import RenderFormat, RenderOptions, render
from nsgs.sums import SumKind, diagram_sum, predicted_gaps, self_sum_closure_counterexample, set_sum
from nsgs.symmetry import (
    Decomposition,
    RingLabel,
    classify_ring,
    decompose,
    decompose_pseudo_symmetric,
    decompose_symmetric,
    dual,
    dual_sum_is_semigroup,
    is_pseudo_symmetric,
    is_symmetric,
)
from nsgs.verify import THEOREMS, VerificationReport, verify_theorem
from nsgs.young import (
    HookGrid,
    YoungDiagram,
    column_hook_set,
    diagram_of,
    hook_grid,
    is_semigroup_via_hooks,
    numerical_set_of,
    transpose,
)

__version__ = "0.1.0"
