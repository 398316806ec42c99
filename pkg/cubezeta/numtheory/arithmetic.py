"""Totients, the Moebius function, the index sets J_d and unit groups of Z/NZ.

Inputs in this package stay far below 10**7, so factorization is plain trial
division, cached per argument.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, List, Tuple

from cubezeta.core.errors import DomainError

logger = logging.getLogger(__name__)


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"{name} must be a natural number >= 1, got {n!r}")


@lru_cache(maxsize=None)
def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization as ((p, e), ...) with p increasing.

    Args:
        n: Natural number >= 1

    Returns:
        Tuple of (prime, exponent) pairs; empty for n = 1
    """
    _require_positive(n)
    factors: List[Tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return tuple(factors)


def euler_phi(n: int) -> int:
    """Number of residues in [1, n] coprime to n."""
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def phi_tilde(d: int) -> int:
    """Halved totient: phi(d)/2 for d >= 3 and 1 for d in {1, 2}."""
    _require_positive(d, "d")
    return 1 if d <= 2 else euler_phi(d) // 2


def mobius(d: int) -> int:
    """Moebius function."""
    factors = factorize(d)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=4096)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in increasing order."""
    result = [1]
    for p, e in factorize(n):
        result = [x * p**k for x in result for k in range(e + 1)]
    return tuple(sorted(result))


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of a collection of naturals (1 when empty)."""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def fold_residue(k: int, d: int) -> int:
    """Fold a unit residue modulo d into J_d.

    The class of k is identified with that of d - k; for d in {1, 2} every unit
    folds to the single element 1.
    """
    if d <= 2:
        return 1
    r = k % d
    return min(r, d - r)


@dataclass(frozen=True)
class JSet:
    """Representatives of (Z/dZ)^x modulo negation."""

    d: int
    members: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, j: object) -> bool:
        return j in self.members

    def index(self, j: int) -> int:
        """Position of j among the members."""
        return self.members.index(j)


@lru_cache(maxsize=4096)
def j_set(d: int) -> JSet:
    """The index set J_d = {j : 1 <= j < d/2, gcd(j, d) = 1}, with J_1 = J_2 = {1}."""
    _require_positive(d, "d")
    if d <= 2:
        return JSet(d=d, members=(1,))
    members = tuple(j for j in range(1, (d + 1) // 2) if 2 * j < d and gcd(j, d) == 1)
    return JSet(d=d, members=members)


@dataclass(frozen=True)
class UnitGroup:
    """The multiplicative group (Z/NZ)^x, residues taken in [1, N]."""

    modulus: int
    elements: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, int) and (g % self.modulus or self.modulus) in self.elements

    @property
    def generators(self) -> Tuple[int, ...]:
        """A generating set lifted through the Chinese remainder theorem."""
        return unit_group_generators(self.modulus)


@lru_cache(maxsize=1024)
def unit_group(N: int) -> UnitGroup:
    """All residues in [1, N] coprime to N."""
    _require_positive(N, "N")
    if N == 1:
        return UnitGroup(modulus=1, elements=(1,))
    return UnitGroup(modulus=N, elements=tuple(g for g in range(1, N + 1) if gcd(g, N) == 1))


@lru_cache(maxsize=1024)
def primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    order = p - 1
    prime_factors = [r for r, _ in factorize(order)]
    for g in range(2, p):
        if all(pow(g, order // r, p) != 1 for r in prime_factors):
            return g
    raise DomainError(f"{p} has no primitive root")


def _prime_power_generators(p: int, k: int) -> List[int]:
    """Generators of (Z/p^k Z)^x."""
    P = p**k
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [3]
        return [P - 1, 5]
    g = primitive_root(p)
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return [g % P]


@lru_cache(maxsize=4096)
def unit_group_generators(N: int) -> Tuple[int, ...]:
    """A generating set of (Z/NZ)^x.

    Each prime-power factor contributes generators of its own unit group,
    lifted to be congruent to 1 modulo the complementary factor.

    Args:
        N: Modulus >= 1

    Returns:
        Generators as residues in [1, N); empty when the group is trivial
    """
    _require_positive(N, "N")
    gens: List[int] = []
    for p, k in factorize(N):
        P = p**k
        rest = N // P
        for g in _prime_power_generators(p, k):
            # x = g mod P, x = 1 mod rest
            lift = g + P * (((1 - g) * pow(P, -1, rest)) % rest) if rest > 1 else g
            gens.append(lift % N)
    logger.debug(f"Unit group generators mod {N}: {gens}")
    return tuple(gens)


