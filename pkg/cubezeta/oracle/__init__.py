"""Brute-force verifiers: the bipartite graph B_H, its Bass determinant and geodesic counts."""

from cubezeta.oracle.geodesics import (
    DFS_MAX_LENGTH,
    geodesic_counts,
    geodesic_counts_dfs,
    log_derivative_series,
    non_backtracking_operator,
    prime_cycle_counts,
)
from cubezeta.oracle.hypergraph import (
    BASS_DIRECT_MAX,
    BipartiteIncidence,
    bass_determinant,
    bass_zeta,
    build_bh,
    integer_charpoly,
)

__all__ = [
    "BASS_DIRECT_MAX",
    "BipartiteIncidence",
    "DFS_MAX_LENGTH",
    "bass_determinant",
    "bass_zeta",
    "build_bh",
    "geodesic_counts",
    "geodesic_counts_dfs",
    "integer_charpoly",
    "log_derivative_series",
    "non_backtracking_operator",
    "prime_cycle_counts",
]
