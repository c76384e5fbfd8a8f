"""nu+ of connected sums of L-space knots, and the bounds it gives.

Everything is computed from enumerating functions (semigroups) of the knots:

>>> from nuplus import torus_semigroup, nu_plus_sum
>>> nu_plus_sum(torus_semigroup(6, 7), torus_semigroup(4, 9))
4
"""
from .errors import ConventionError, InvalidKnotData, PreconditionError, TruncationError
from .nu_plus import (
    VSequence,
    min_index_for,
    nu_plus_sum,
    positive_part,
    surgery_d_invariants,
    v_sequence_single,
    v_sequence_sum,
)
from .obstructions import (
    ObstructionReport,
    check_genus_inequality,
    cobordism_genus_bound,
    concordance_bounds,
    gordian_bound,
    semicontinuity,
    subadditivity_check,
)
from .oracle import FilteredUComplex, build_tensor_complex, sublevel, v_at, v_sequence_oracle
from .parsing import KnotSpec, ParseError, parse_knot
from .semigroups import (
    AlexanderVector,
    EnumeratingFunction,
    counting,
    enumerate_value,
    from_alexander,
    from_generators,
    to_alexander,
    torus_semigroup,
    unknot,
    validate,
)
from .staircase import (
    MirrorStaircaseModel,
    StaircaseDescriptor,
    TowerChain,
    mirror_model,
    staircase_from_gamma,
    tower_chain,
)

__version__ = "0.1.0"
