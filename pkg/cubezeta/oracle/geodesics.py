"""Closed geodesic counts of the skeleton hypergraphs.

A closed geodesic of hypergraph length m is a closed non-backtracking walk of
length 2m in B_H. N_m counts them with a starting hypervertex and an
orientation, which is what u d/du log zeta(u) = sum N_m u^m counts.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from cubezeta.algebra import IntPoly
from cubezeta.core.errors import DomainError, InvariantViolation, ResourceLimitError
from cubezeta.core.models import ResourceLimits
from cubezeta.lattice import LatticeSpec
from cubezeta.numtheory import divisors, mobius
from cubezeta.oracle.hypergraph import BipartiteIncidence, build_bh

logger = logging.getLogger(__name__)

# Explicit walk enumeration is exponential in m.
DFS_MAX_LENGTH = 6

Arc = Tuple[int, int]


def _arcs(bh: BipartiteIncidence) -> List[Arc]:
    """Directed edges of B_H in both directions; hyperedge nodes are offset by |V|."""
    nv = bh.num_vertices
    rows, cols = np.nonzero(bh.incidence)
    forward = [(int(v), nv + int(e)) for v, e in zip(rows, cols)]
    return forward + [(b, a) for a, b in forward]


def non_backtracking_operator(bh: BipartiteIncidence) -> Tuple[List[Arc], np.ndarray]:
    """Arcs of B_H and the 0/1 matrix T[(a->b), (b->c)] = 1 for c != a."""
    arcs = _arcs(bh)
    outgoing: Dict[int, List[int]] = {}
    for index, (a, _) in enumerate(arcs):
        outgoing.setdefault(a, []).append(index)
    matrix = np.zeros((len(arcs), len(arcs)), dtype=np.int64)
    for i, (a, b) in enumerate(arcs):
        for j in outgoing.get(b, []):
            if arcs[j][1] != a:
                matrix[i, j] = 1
    return arcs, matrix


def _power_dtype(matrix: np.ndarray, exponent: int) -> type:
    """int64 when no entry or trace of matrix^exponent can overflow, else Python ints."""
    if matrix.size == 0:
        return np.int64
    branching = max(int(matrix.sum(axis=1).max()), 1)
    if branching**exponent * matrix.shape[0] < 2**62:
        return np.int64
    return object


def geodesic_counts(
    spec: LatticeSpec, d: int, mmax: int, limits: Optional[ResourceLimits] = None
) -> List[int]:
    """N_1, ..., N_mmax with N_m = trace(T^(2m)) / 2.

    Arcs alternate between the two sides of B_H, so half of every trace
    comes from walks starting at a hypervertex.

    Raises:
        DomainError: If mmax < 1
        ResourceLimitError: If mmax exceeds max_geodesic_length or B_H is too large
    """
    limits = limits or ResourceLimits()
    if mmax < 1:
        raise DomainError(f"mmax must be positive, got {mmax}")
    if mmax > limits.max_geodesic_length:
        raise ResourceLimitError("geodesic length", mmax, limits.max_geodesic_length)
    bh = build_bh(spec, d, limits)
    _, matrix = non_backtracking_operator(bh)
    dtype = _power_dtype(matrix, 2 * mmax)
    step = matrix.astype(dtype)
    square = step @ step
    power = square
    counts: List[int] = []
    for m in range(1, mmax + 1):
        if m > 1:
            power = power @ square
        trace = int(np.trace(power))
        if trace % 2:
            raise InvariantViolation(f"Odd trace {trace} of T^{2 * m} on {spec} d={d}")
        counts.append(trace // 2)
    logger.debug(f"Geodesic counts {spec} d={d}: {counts}")
    return counts


def geodesic_counts_dfs(
    spec: LatticeSpec, d: int, mmax: int, limits: Optional[ResourceLimits] = None
) -> List[int]:
    """N_1, ..., N_mmax by enumerating closed non-backtracking walks from each hypervertex.

    Raises:
        ResourceLimitError: If mmax exceeds DFS_MAX_LENGTH
    """
    if mmax > DFS_MAX_LENGTH:
        raise ResourceLimitError("DFS geodesic length", mmax, DFS_MAX_LENGTH)
    bh = build_bh(spec, d, limits)
    nv = bh.num_vertices
    neighbours: Dict[int, List[int]] = {}
    for a, b in _arcs(bh):
        neighbours.setdefault(a, []).append(b)
    counts = [0] * mmax
    steps = 2 * mmax

    for start in range(nv):
        # (node, previous node, first step, length)
        stack = [(b, start, b, 1) for b in neighbours.get(start, [])]
        while stack:
            node, prev, first, length = stack.pop()
            if node == start and length % 2 == 0 and prev != first:
                counts[length // 2 - 1] += 1
            if length == steps:
                continue
            for nxt in neighbours.get(node, []):
                if nxt != prev:
                    stack.append((nxt, node, first, length + 1))
    return counts


def log_derivative_series(zinv: IntPoly, mmax: int) -> List[int]:
    """Coefficients N_1..N_mmax of u d/du log zeta(u) = -u zinv'(u) / zinv(u).

    Raises:
        DomainError: If zinv(0) != 1
    """
    if zinv.coefficient(0) != 1:
        raise DomainError(f"1/zeta must have constant term 1, got {zinv.coefficient(0)}")
    f = [zinv.coefficient(k) for k in range(mmax + 1)]
    # g = 1/zinv modulo u^(mmax+1)
    g = [1] + [0] * mmax
    for n in range(1, mmax + 1):
        g[n] = -sum(f[k] * g[n - k] for k in range(1, n + 1))
    return [-sum(k * f[k] * g[m - k] for k in range(1, m + 1)) for m in range(1, mmax + 1)]


def prime_cycle_counts(counts: Sequence[int]) -> List[int]:
    """Prime cycle counts pi_m = (1/m) sum_(k | m) mu(m/k) N_k from based counts N_1, N_2, ...

    Raises:
        InvariantViolation: If some pi_m is not an integer
    """
    primes: List[int] = []
    for m in range(1, len(counts) + 1):
        total = sum(mobius(m // k) * counts[k - 1] for k in divisors(m))
        if total % m:
            raise InvariantViolation(f"Prime cycle count of length {m} is {total}/{m}")
        primes.append(total // m)
    return primes
