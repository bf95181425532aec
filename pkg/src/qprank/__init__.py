"""Quantum and classical PageRank on directed complex networks."""

from .analysis import (
    AttackRun,
    EnsembleReport,
    IprSample,
    IprScaling,
    PowerLawFit,
    StabilityGrid,
    attack_experiment,
    classical_fidelity,
    coarse_alpha_grid,
    degeneracy_resolution,
    ensemble_run,
    importance_vector,
    ipr,
    ipr_scaling,
    kendall_coefficient,
    power_law_fit,
    qpr_distance,
    rank_list,
    stability_grid,
)
from .errors import ConvergenceError, ParameterError, ParseError
from .google import (
    GoogleMatrix,
    build_google,
    build_patched_connectivity,
    classical_pagerank,
    format_dense_matrix,
    google_from_graph,
)
from .graphs import (
    DirectedGraph,
    GeneratorSpec,
    degree_distribution,
    gen_erdos_renyi,
    gen_hierarchical_outerplanar,
    gen_hierarchical_ternary,
    gen_scale_free,
    generate,
    load_edge_list,
    load_pajek,
    remove_node,
    write_edge_list,
    write_pajek,
)
from .walk import DenseWalk, SzegedyWalk, WalkState, average_qpr

__version__ = "0.1.0"
