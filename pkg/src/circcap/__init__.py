"""Independent sets in strong powers of circular graphs C_{k,n}."""

from .bounds import (
    BoundRow,
    alpha_square,
    capacity_lower,
    capacity_lower_str,
    halving_upper,
    ratio_transfer_check,
    table_for,
    theta_cycle,
    theta_power_upper,
)
from .codeio import appendix_code, parse_code, read_code, write_code
from .constructor import CyclicCodeSpec, cyclic_code, k_of, product_combine, sweep
from .errors import CodeFormatError, LetterRangeError, ParameterError, PreconditionError
from .extender import candidate_graph, extend, local_search, prune_conflicts
from .graph import DenseGraph, max_independent_set
from .pipeline import PipelineConfig, run_pipeline
from .torus import (
    INFINITY,
    Code,
    PowerParams,
    Word,
    are_adjacent,
    is_independent,
    min_distance,
    tor_dist,
    word_dist,
)
from .transform import RationalDivisor, round_to_cycle, scale_floor, translate

__version__ = "0.1.0"
