"""Row-insertion combinatorics, random diagram shapes, and bound checks.

The package has three layers. The combinatorial core (``rsk``, ``greene``,
``viennot``, ``partitions``) gives exact small-scale constructions with
exhaustive oracles. The sampling layer (``sampling``, ``metrics``) draws
diagram shapes from i.i.d. words or random permutations and evaluates exact
small-case laws. The bounds layer (``bounds``, ``harness``, ``cli``) checks
closed-form rates and windows against exact or Monte Carlo estimates with
deterministic seeding.
"""

from . import bounds, greene, harness, metrics, partitions, rsk, sampling, viennot
from .bounds import (
    BoundCheck,
    entropy_window,
    exact_excess,
    itw,
    itw_trivial_bound,
    mean_squared_bound,
    row_mean_bounds,
    row_mean_bounds_sharp,
    variance_bound,
)
from .greene import greene_invariant, lis
from .partitions import conjugate, dominates, prefix_sum, tail_sum, weakly_dominates
from .rsk import TableauPair, bump_stream, bump_streams, sh_rsk, standardize
from .sampling import (
    AliasSampler,
    exact_sw_distribution,
    exact_sw_expectation,
    make_rng,
    mod_density,
    modmult_expectation,
    sample_plancherel,
    sample_sw,
    sample_sw_shapes,
)
from .viennot import build_diagram, iterated_shape, render_text, skeleton_word

__version__ = "0.1.0"

__all__ = [
    "AliasSampler",
    "BoundCheck",
    "TableauPair",
    "build_diagram",
    "bump_stream",
    "bump_streams",
    "conjugate",
    "dominates",
    "entropy_window",
    "exact_excess",
    "exact_sw_distribution",
    "exact_sw_expectation",
    "greene_invariant",
    "itw",
    "itw_trivial_bound",
    "iterated_shape",
    "lis",
    "make_rng",
    "mean_squared_bound",
    "mod_density",
    "modmult_expectation",
    "prefix_sum",
    "render_text",
    "row_mean_bounds",
    "row_mean_bounds_sharp",
    "rsk",
    "sample_plancherel",
    "sample_sw",
    "sample_sw_shapes",
    "sh_rsk",
    "skeleton_word",
    "standardize",
    "tail_sum",
    "variance_bound",
    "weakly_dominates",
]
