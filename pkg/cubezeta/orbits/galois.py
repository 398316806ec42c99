"""The action of (Z/N'Z)^x on J_d1 x ... x J_dq and on characters of a torus.

A unit a acts on an index tuple by j_i -> a*j_i mod d_i folded back into
J_di; on a character k of Z_n1 x ... x Z_nq it acts by k_i -> a*k_i mod n_i.
Both actions factor through N' = lcm of the moduli, so only generators of
(Z/N'Z)^x are ever applied.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from cubezeta.core.errors import DomainError, InvariantViolation, ResourceLimitError
from cubezeta.core.models import OrbitReport, ResourceLimits
from cubezeta.numtheory import (
    fold_residue,
    j_set,
    lcm_all,
    phi_tilde,
    unit_group,
    unit_group_generators,
)

logger = logging.getLogger(__name__)

IndexTuple = Tuple[int, ...]
Orbit = Tuple[IndexTuple, ...]


@dataclass(frozen=True)
class DVec:
    """A vector (d_1, ..., d_q) of side lengths or divisors."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise DomainError("A divisor vector needs at least one entry")
        for d in entries:
            if not isinstance(d, (int, np.integer)) or isinstance(d, bool) or d < 1:
                raise DomainError(f"Divisor vector entries must be naturals >= 1, got {d!r}")
        object.__setattr__(self, "entries", tuple(int(d) for d in entries))

    @classmethod
    def of(cls, *entries: int) -> "DVec":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "DVec":
        """Parse ``"5,5"`` or ``"5 5"``."""
        try:
            values = tuple(int(t) for t in text.replace(",", " ").split())
        except ValueError as e:
            raise DomainError(f"Malformed divisor vector {text!r}") from e
        return cls(values)

    @property
    def q(self) -> int:
        return len(self.entries)

    @property
    def N(self) -> int:
        return prod(self.entries)

    @property
    def n_prime(self) -> int:
        """lcm(d_1, ..., d_q)."""
        return lcm_all(self.entries)

    @property
    def box_size(self) -> int:
        """|J_d1 x ... x J_dq| = prod phi_tilde(d_i)."""
        return prod(phi_tilde(d) for d in self.entries)

    def large_entries(self) -> Tuple[int, ...]:
        """Entries d_i >= 3; the others act trivially."""
        return tuple(d for d in self.entries if d >= 3)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.entries) + ")"


DVecLike = Union[DVec, Sequence[int]]


def as_dvec(value: DVecLike) -> DVec:
    return value if isinstance(value, DVec) else DVec(tuple(value))


@dataclass(frozen=True)
class GcdGraph:
    """Graph on the indices i with d_i >= 3, joined when gcd(d_i, d_j) >= 3.

    Vertices are 0-based positions into the divisor vector.
    """

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    components: Tuple[Tuple[int, ...], ...]

    @property
    def beta0(self) -> int:
        """Number of connected components."""
        return len(self.components)

    @property
    def reduced_betti(self) -> int:
        """Reduced 0th Betti number, zero for the empty graph."""
        return max(len(self.components) - 1, 0)


def gcd_graph(dvec: DVecLike) -> GcdGraph:
    """Build the gcd-graph with components found by union-find."""
    dvec = as_dvec(dvec)
    vertices = tuple(i for i, d in enumerate(dvec) if d >= 3)
    edges = tuple(
        (a, b)
        for x, a in enumerate(vertices)
        for b in vertices[x + 1 :]
        if gcd(dvec[a], dvec[b]) >= 3
    )

    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    groups: Dict[int, List[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    components = tuple(tuple(g) for g in sorted(groups.values()))
    return GcdGraph(vertices=vertices, edges=edges, components=components)


def _box_orbits(
    axes: Sequence[Sequence[int]],
    modulus: int,
    act: Callable[[int, int, int], int],
) -> List[Orbit]:
    """Orbits of the unit group of ``modulus`` on a product of finite axes.

    Args:
        axes: Sorted values per axis
        modulus: The group is (Z/modulus Z)^x
        act: act(axis, g, value) -> value

    Returns:
        Orbits as sorted tuples of value tuples, ordered by their least member
    """
    shape = tuple(len(values) for values in axes)
    size = prod(shape)
    position = [{v: i for i, v in enumerate(values)} for values in axes]

    permutations: List[List[int]] = []
    for g in unit_group_generators(modulus):
        per_axis = [
            np.array([position[i][act(i, g, v)] for v in values], dtype=np.intp)
            for i, values in enumerate(axes)
        ]
        grids = np.meshgrid(*per_axis, indexing="ij")
        permutations.append(np.ravel_multi_index(grids, shape).ravel().tolist())

    label = [-1] * size
    orbits: List[List[int]] = []
    # C-order flat indices increase with the lexicographic order of value tuples
    for start in range(size):
        if label[start] >= 0:
            continue
        orbit_id = len(orbits)
        label[start] = orbit_id
        members = [start]
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for perm in permutations:
                    y = perm[x]
                    if label[y] < 0:
                        label[y] = orbit_id
                        members.append(y)
                        nxt.append(y)
            frontier = nxt
        orbits.append(members)

    result: List[Orbit] = []
    for members in orbits:
        members.sort()
        coords = np.unravel_index(np.array(members, dtype=np.intp), shape) if shape else ()
        result.append(
            tuple(
                tuple(int(axes[i][coords[i][k]]) for i in range(len(axes)))
                for k in range(len(members))
            )
        )
    return result


@dataclass(frozen=True)
class OrbitDecomposition:
    """Partition of J_d1 x ... x J_dq into Galois orbits."""

    dvec: DVec
    orbits: Tuple[Orbit, ...]
    _lookup: Dict[IndexTuple, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self._lookup:
            for k, orbit in enumerate(self.orbits):
                for j in orbit:
                    self._lookup[j] = k

    @property
    def representatives(self) -> Tuple[IndexTuple, ...]:
        """Lexicographically least member of every orbit."""
        return tuple(orbit[0] for orbit in self.orbits)

    def __len__(self) -> int:
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def orbit_index(self, j: Iterable[int]) -> int:
        """Position of the orbit containing the index tuple j."""
        key = tuple(j)
        if key not in self._lookup:
            raise DomainError(f"{key} is not an element of the index box of {self.dvec}")
        return self._lookup[key]

    def orbit_of(self, j: Iterable[int]) -> Orbit:
        """The orbit containing the index tuple j."""
        return self.orbits[self.orbit_index(j)]

    def to_report(self) -> OrbitReport:
        return OrbitReport(
            dvec=list(self.dvec.entries),
            orbits=[[list(j) for j in orbit] for orbit in self.orbits],
            orb_formula=orb_count_formula(self.dvec),
            betti=gcd_graph(self.dvec).reduced_betti,
        )


def orbit_decompose(dvec: DVecLike, limits: Optional[ResourceLimits] = None) -> OrbitDecomposition:
    """Decompose J_d1 x ... x J_dq into orbits of (Z/N'Z)^x.

    Args:
        dvec: Divisor vector
        limits: Resource bounds; the index box may not exceed max_orbit_box

    Raises:
        ResourceLimitError: If the index box is too large
    """
    dvec = as_dvec(dvec)
    limits = limits or ResourceLimits()
    if dvec.box_size > limits.max_orbit_box:
        raise ResourceLimitError("orbit index box", dvec.box_size, limits.max_orbit_box)

    axes = [j_set(d).members for d in dvec]
    entries = dvec.entries

    def act(axis: int, g: int, j: int) -> int:
        return fold_residue(g * j, entries[axis])

    orbits = _box_orbits(axes, dvec.n_prime, act)
    logger.debug(f"{dvec}: {len(orbits)} orbit(s) on a box of size {dvec.box_size}")
    return OrbitDecomposition(dvec=dvec, orbits=tuple(orbits))


def orb_count_formula(dvec: DVecLike) -> int:
    """Closed-form orbit count prod phi~(d_i) / phi~(lcm) * 2^(reduced Betti number).

    Entries 1 and 2 are dropped first; with none left the count is 1.

    Raises:
        InvariantViolation: If the value is not a positive integer
    """
    large = as_dvec(dvec).large_entries()
    if not large:
        return 1
    value = Fraction(prod(phi_tilde(d) for d in large), phi_tilde(lcm_all(large)))
    value *= 2 ** gcd_graph(large).reduced_betti
    if value.denominator != 1 or value < 1:
        raise InvariantViolation(f"Orbit count formula gave {value} for {large}")
    return int(value)


@dataclass(frozen=True)
class SubgroupH:
    """Units of Z/N'Z congruent to +1 or -1 modulo every d_i."""

    dvec: DVec
    elements: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def sign_pattern(self, g: int) -> Tuple[int, ...]:
        """The signs eps_i with g = eps_i mod d_i."""
        return tuple(1 if g % d == 1 else -1 for d in self.dvec)


def subgroup_h(dvec: DVecLike) -> SubgroupH:
    """The stabilizer-type subgroup H of (Z/N'Z)^x.

    Raises:
        DomainError: If some d_i <= 2
        InvariantViolation: If |H| differs from 2^(number of gcd-graph components)
    """
    dvec = as_dvec(dvec)
    if any(d <= 2 for d in dvec):
        raise DomainError(f"subgroup_h needs every d_i >= 3, got {dvec}; strip 1s and 2s first")
    n_prime = dvec.n_prime
    elements = tuple(
        g
        for g in unit_group(n_prime).elements
        if all(g % d in (1, d - 1) for d in dvec)
    )
    expected = 2 ** gcd_graph(dvec).beta0
    if len(elements) != expected:
        raise InvariantViolation(f"|H| = {len(elements)} for {dvec}, expected {expected}")
    return SubgroupH(dvec=dvec, elements=elements)


def character_orbits(
    sides: Sequence[int], limits: Optional[ResourceLimits] = None
) -> List[Orbit]:
    """Galois orbits of characters k in Z_n1 x ... x Z_nq.

    The orbit of k collects all characters whose twisted operators are Galois
    conjugate, so a product over one orbit has rational-integer coefficients.

    Raises:
        ResourceLimitError: If there are more characters than max_orbit_box
    """
    limits = limits or ResourceLimits()
    size = prod(sides)
    if size > limits.max_orbit_box:
        raise ResourceLimitError("character set", size, limits.max_orbit_box)
    axes = [tuple(range(n)) for n in sides]

    def act(axis: int, g: int, k: int) -> int:
        return (g * k) % sides[axis]

    return _box_orbits(axes, lcm_all(sides), act)
