"""Decision heuristics for Wang tile sets and nearest-neighbor subshifts
over finitely generated groups."""

from .model import (
    Digraph,
    GraphFamily,
    Presentation,
    WangTile,
    WangTileSet,
    color_class,
    graphs_to_wang_functional,
    validate,
    wang_to_graphs,
)
from .cycles import abundance, decompose_cycle, enumerate_simple_cycles
from .feasible import (
    Feasible,
    Infeasible,
    LinearSystem,
    integer_scale,
    solve_nonneg_nontrivial,
)
from .star import StarFailure, StarWitness, build_free_ball, check_star, prune_star
from .conditions import (
    SSPSolution,
    SSSolution,
    check_equivalence,
    check_starstar,
    check_starstar_prime,
    ss_to_ssp,
    ssp_to_ss,
)
from .oracle import (
    ResourceLimit,
    TilingGrid,
    folner_audit,
    tile_free_ball,
    tile_rectangle,
    tile_torus,
)
from .counterexample import (
    build_counterexample,
    complete_to_hamiltonian,
    verify_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "Feasible",
    "GraphFamily",
    "Infeasible",
    "LinearSystem",
    "Presentation",
    "ResourceLimit",
    "SSPSolution",
    "SSSolution",
    "StarFailure",
    "StarWitness",
    "TilingGrid",
    "WangTile",
    "WangTileSet",
    "abundance",
    "build_counterexample",
    "build_free_ball",
    "check_equivalence",
    "check_star",
    "check_starstar",
    "check_starstar_prime",
    "color_class",
    "complete_to_hamiltonian",
    "decompose_cycle",
    "enumerate_simple_cycles",
    "folner_audit",
    "graphs_to_wang_functional",
    "integer_scale",
    "prune_star",
    "solve_nonneg_nontrivial",
    "ss_to_ssp",
    "ssp_to_ss",
    "tile_free_ball",
    "tile_rectangle",
    "tile_torus",
    "validate",
    "verify_counterexample",
    "wang_to_graphs",
]
