"""The periodic cubical lattice on the torus Z_n1 x ... x Z_nq and its characters.

A d-cube is a pair (sigma, v): sigma is a d-subset of the coordinate
directions {0, ..., q-1} (a simplex of the complete complex with d vertices)
and v a vertex of the torus. It spans [v_j, v_j + 1] along j in sigma and
sits at v_j elsewhere.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from cubezeta.algebra import CycElem, cyclotomic_ring
from cubezeta.core.errors import DomainError
from cubezeta.numtheory import lcm_all

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]
Cube = Tuple[Simplex, Tuple[int, ...]]


@lru_cache(maxsize=256)
def simplices(q: int, d: int) -> Tuple[Simplex, ...]:
    """d-subsets of {0, ..., q-1} in lexicographic order."""
    if d < 0 or d > q:
        return ()
    return tuple(combinations(range(q), d))


def boundary_sign(eta: Simplex, sigma: Simplex) -> int:
    """(-1)^position of the vertex of eta missing from sigma."""
    for position, vertex in enumerate(eta):
        if vertex not in sigma:
            return -1 if position % 2 else 1
    raise DomainError(f"{sigma} is not a facet of {eta}")


@dataclass(frozen=True)
class LatticeSpec:
    """Side lengths n = (n_1, ..., n_q) of a periodic cubical lattice."""

    sides: Tuple[int, ...]

    def __post_init__(self) -> None:
        sides = tuple(self.sides)
        if not sides:
            raise DomainError("A lattice needs at least one side")
        for n in sides:
            if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
                raise DomainError(f"Side lengths must be integers >= 2, got {n!r}")
        object.__setattr__(self, "sides", tuple(int(n) for n in sides))

    @classmethod
    def of(cls, *sides: int) -> "LatticeSpec":
        return cls(tuple(sides))

    @classmethod
    def parse(cls, text: str) -> "LatticeSpec":
        """Parse ``"3,4"`` or ``"3 4"``."""
        try:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        except ValueError as e:
            raise DomainError(f"Malformed side lengths {text!r}") from e

    @property
    def q(self) -> int:
        return len(self.sides)

    @property
    def volume(self) -> int:
        """|n| = n_1 * ... * n_q."""
        return prod(self.sides)

    @property
    def n_prime(self) -> int:
        """lcm of the side lengths, the conductor of all characters."""
        return lcm_all(self.sides)

    def vertices(self) -> List[Tuple[int, ...]]:
        """All torus vertices in lexicographic order."""
        return list(product(*(range(n) for n in self.sides)))

    def characters(self) -> Iterator["Character"]:
        """All characters k in lexicographic order."""
        for k in product(*(range(n) for n in self.sides)):
            yield Character(self.sides, k)

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.sides) + ")"


def cube_count(spec: LatticeSpec, d: int) -> int:
    """|Y_d| = C(q, d) * |n|.

    Raises:
        DomainError: If d is not in [0, q]
    """
    if d < 0 or d > spec.q:
        raise DomainError(f"Cube dimension must lie in [0, {spec.q}], got {d}")
    return comb(spec.q, d) * spec.volume


def cubes(spec: LatticeSpec, d: int) -> List[Cube]:
    """All d-cubes as (sigma, v), sigma-major and lexicographic."""
    cube_count(spec, d)
    vertices = spec.vertices()
    return [(sigma, v) for sigma in simplices(spec.q, d) for v in vertices]


def cube_faces(spec: LatticeSpec, cube: Cube) -> List[Cube]:
    """The 2d codimension-one faces of a d-cube.

    Along each direction j of sigma the face sits at v_j or at v_j + 1.
    """
    sigma, v = cube
    faces: List[Cube] = []
    for j in sigma:
        face = tuple(i for i in sigma if i != j)
        shifted = list(v)
        shifted[j] = (v[j] + 1) % spec.sides[j]
        faces.append((face, v))
        faces.append((face, tuple(shifted)))
    return faces


@dataclass(frozen=True)
class Character:
    """z = (z_1, ..., z_q) with z_j = exp(2*pi*i*k_j/n_j), stored as k."""

    sides: Tuple[int, ...]
    k: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.k) != len(self.sides):
            raise DomainError(f"Character {self.k} does not match sides {self.sides}")
        for kj, nj in zip(self.k, self.sides):
            if not 0 <= kj < nj:
                raise DomainError(f"Character component {kj} outside [0, {nj})")
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        object.__setattr__(self, "sides", tuple(int(x) for x in self.sides))

    @property
    def q(self) -> int:
        return len(self.k)

    def is_trivial(self) -> bool:
        return not any(self.k)

    def z(self) -> np.ndarray:
        """Complex components z_j."""
        return np.exp(2j * np.pi * np.array(self.k, dtype=float) / np.array(self.sides))

    def two_cos_sum(self) -> float:
        """sum_j (z_j + 1/z_j) = 2 sum_j cos(2*pi*k_j/n_j)."""
        return float(2.0 * np.sum(np.cos(2 * np.pi * np.array(self.k) / np.array(self.sides))))

    def w(self) -> np.ndarray:
        """w_j = 2 + z_j + 1/z_j."""
        return 2.0 + 2.0 * np.cos(2 * np.pi * np.array(self.k, dtype=float) / np.array(self.sides))

    def exact_z(self, modulus: int = 0) -> Tuple[List[CycElem], List[CycElem]]:
        """z_j and 1/z_j as elements of Z[zeta_M], M = lcm of the sides by default."""
        M = modulus or lcm_all(self.sides)
        ring = cyclotomic_ring(M)
        exps = [kj * (M // nj) for kj, nj in zip(self.k, self.sides)]
        return [ring.monomial(e) for e in exps], [ring.monomial(-e) for e in exps]
