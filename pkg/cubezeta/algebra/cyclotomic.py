"""Cyclotomic polynomials, the ring Z[zeta_N] and polynomials over it.

Elements of Z[zeta_N] are stored in the tensor product of the power bases of
the prime-power subfields, Z[zeta_N] = Z[zeta_P1] (x) ... (x) Z[zeta_Pr] with
P_i the prime powers exactly dividing N. Each factor Z[zeta_P] has the power
basis 1, zeta_P, ..., zeta_P^(phi(P)-1), so an element is a dense integer array
of shape (phi(P1), ..., phi(Pr)) and the whole basis has phi(N) members, as the
power basis modulo Phi_N does. The flat index 0 is the element 1, so an element
is a rational integer exactly when every other coordinate vanishes.

Multiplication by a basis element only permutes and negates coordinates along
each axis (the relation Phi_P(x) = sum_b x^(b*p^(k-1))), which keeps products
vectorized with numpy object arrays of Python integers.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from cubezeta.algebra.polynomial import IntPoly
from cubezeta.core.errors import DomainError, InvariantViolation, NotGaloisStableError
from cubezeta.numtheory import divisors, euler_phi, factorize, phi_tilde

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial Phi_d.

    Obtained from x^d - 1 by exact division by Phi_e for every proper divisor e.

    Args:
        d: Natural number >= 1

    Returns:
        Monic integer polynomial of degree phi(d)

    Raises:
        DomainError: If d < 1
    """
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"cyclotomic_poly needs d >= 1, got {d!r}")
    result = IntPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        result = result.exact_div(cyclotomic_poly(e))
    if result.degree != euler_phi(d):
        raise InvariantViolation(f"Phi_{d} has degree {result.degree}, expected {euler_phi(d)}")
    return result


@lru_cache(maxsize=None)
def psi_univariate(d: int) -> IntPoly:
    """The polynomial Psi_d, minimal polynomial of 2cos(2*pi/d) over Q.

    The palindromic polynomial Phi_d (Phi_d^2 for d <= 2) of degree 2m is
    written as z^m * (a_m + sum_k a_(m+k) (z^k + z^-k)), and z^k + z^-k is the
    monic Chebyshev-type polynomial T_k in x = z + 1/z.

    Args:
        d: Natural number >= 1

    Returns:
        Monic integer polynomial of degree phi_tilde(d)
    """
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"psi_univariate needs d >= 1, got {d!r}")
    target = cyclotomic_poly(d) if d >= 3 else cyclotomic_poly(d) ** 2
    m = phi_tilde(d)
    a = target.coeffs
    if a != a[::-1]:
        raise InvariantViolation(f"Phi_{d} is not palindromic")

    x = IntPoly.x()
    prev, cur = IntPoly([2]), x
    result = IntPoly([a[m]])
    for k in range(1, m + 1):
        result = result + cur * a[m + k]
        prev, cur = cur, x * cur - prev
    return result


class CyclotomicRing:
    """Z[zeta_N] in the tensor basis of its prime-power subfields."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 1:
            raise DomainError(f"Cyclotomic modulus must be >= 1, got {modulus!r}")
        self.modulus = modulus
        # (p, k, P, phi(P)) per prime power, p increasing
        self.factors: Tuple[Tuple[int, int, int, int], ...] = tuple(
            (p, k, p**k, (p - 1) * p ** (k - 1)) for p, k in factorize(modulus)
        )
        self.shape: Tuple[int, ...] = tuple(f[3] for f in self.factors)
        self.size = euler_phi(modulus)
        self._cofactor_inverse = tuple(
            pow(modulus // P, -1, P) if P > 1 else 0 for _, _, P, _ in self.factors
        )
        self._monomials: Dict[int, "CycElem"] = {}

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.modulus})"

    def zero_coords(self) -> np.ndarray:
        return np.zeros(self.size, dtype=object)

    def _shift_axis(self, arr: np.ndarray, axis: int, x: int) -> np.ndarray:
        """Multiply along one axis by zeta_P^x."""
        p, k, _, _ = self.factors[axis]
        pos_src, pos_dst, neg_src, neg_dst = _shift_plan(p, k, x)
        if pos_src is None:
            return arr
        src = np.moveaxis(arr, axis, -1)
        out = np.zeros_like(src)
        out[..., pos_dst] = src[..., pos_src]
        if len(neg_dst):
            out[..., neg_dst] -= src[..., neg_src]
        return np.moveaxis(out, -1, axis)

    def shift(self, coords: np.ndarray, exponents: Sequence[int]) -> np.ndarray:
        """Multiply by the basis element with per-axis exponents."""
        arr = coords.reshape(self.shape)
        for axis, x in enumerate(exponents):
            if x:
                arr = self._shift_axis(arr, axis, int(x))
        return arr.reshape(self.size)

    def axis_exponents(self, e: int) -> Tuple[int, ...]:
        """Per-axis exponents of zeta_N^e, i.e. zeta_N^e = prod zeta_P^(x_P)."""
        return tuple(
            (e * inv) % P for (_, _, P, _), inv in zip(self.factors, self._cofactor_inverse)
        )

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product of two coordinate vectors, looping over the sparser one."""
        if not self.factors:
            return a * b
        if np.count_nonzero(a) > np.count_nonzero(b):
            a, b = b, a
        out = self.zero_coords()
        for flat in np.flatnonzero(a):
            exponents = np.unravel_index(int(flat), self.shape)
            out = out + a[flat] * self.shift(b, exponents)
        return out

    def monomial(self, e: int) -> "CycElem":
        """The element zeta_N^e."""
        e %= self.modulus
        cached = self._monomials.get(e)
        if cached is None:
            coords = self.zero_coords()
            coords[0] = 1
            cached = CycElem(self, self.shift(coords, self.axis_exponents(e)))
            self._monomials[e] = cached
        return cached

    def from_int(self, c: int) -> "CycElem":
        coords = self.zero_coords()
        coords[0] = int(c)
        return CycElem(self, coords)

    def zero(self) -> "CycElem":
        return CycElem(self, self.zero_coords())

    def one(self) -> "CycElem":
        return self.from_int(1)

    def basis_values(self) -> np.ndarray:
        """Complex values of all basis elements under zeta_N = exp(2*pi*i/N)."""
        values = np.ones((), dtype=complex)
        for _, _, P, m in self.factors:
            axis = np.exp(2j * np.pi * np.arange(m) / P)
            values = np.multiply.outer(values, axis)
        return values.reshape(self.size)


@lru_cache(maxsize=None)
def _shift_plan(p: int, k: int, x: int) -> Tuple[Optional[np.ndarray], ...]:
    """Index maps for multiplication by zeta_P^x on the power basis of Z[zeta_P].

    Exponents t >= (p-1)s, with s = p^(k-1) and t = (p-1)s + r, reduce to
    -sum_{b < p-1} zeta^(b*s + r).
    """
    P = p**k
    x %= P
    if x == 0:
        return None, None, None, None
    s = p ** (k - 1)
    m = (p - 1) * s
    pos_src: List[int] = []
    pos_dst: List[int] = []
    neg_src: List[int] = []
    neg_dst: List[int] = []
    for a in range(m):
        t = (a + x) % P
        if t < m:
            pos_src.append(a)
            pos_dst.append(t)
        else:
            r = t - m
            for b in range(p - 1):
                neg_src.append(a)
                neg_dst.append(b * s + r)
    return tuple(np.array(v, dtype=np.intp) for v in (pos_src, pos_dst, neg_src, neg_dst))


@lru_cache(maxsize=256)
def cyclotomic_ring(N: int) -> CyclotomicRing:
    """Shared ring instance for modulus N."""
    ring = CyclotomicRing(N)
    logger.debug(f"Built Z[zeta_{N}] with axes {ring.shape}")
    return ring


class CycElem:
    """Immutable element of Z[zeta_N]."""

    __slots__ = ("ring", "coords", "_key")

    def __init__(self, ring: CyclotomicRing, coords: np.ndarray):
        self.ring = ring
        self.coords = coords
        self._key: Optional[Tuple[int, ...]] = None

    @property
    def modulus(self) -> int:
        return self.ring.modulus

    def key(self) -> Tuple[int, ...]:
        """Hashable coordinate tuple."""
        if self._key is None:
            self._key = tuple(int(c) for c in self.coords)
        return self._key

    def is_rational_integer(self) -> bool:
        return not np.any(self.coords[1:])

    def is_zero(self) -> bool:
        return not np.any(self.coords)

    def to_int(self) -> int:
        """The rational integer this element equals.

        Raises:
            NotGaloisStableError: If the element is not a rational integer
        """
        if not self.is_rational_integer():
            raise NotGaloisStableError(
                f"Element of Z[zeta_{self.modulus}] is not a rational integer"
            )
        return int(self.coords[0])

    def to_complex(self) -> complex:
        """Numerical value under zeta_N = exp(2*pi*i/N)."""
        return complex(np.dot(self.coords.astype(complex), self.ring.basis_values()))

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.coords))

    def _other(self, other: Any) -> Optional[np.ndarray]:
        if isinstance(other, CycElem):
            if other.ring.modulus != self.ring.modulus:
                raise DomainError(
                    f"Mixed moduli {self.ring.modulus} and {other.ring.modulus}"
                )
            return other.coords
        if isinstance(other, int):
            coords = self.ring.zero_coords()
            coords[0] = other
            return coords
        return None

    def __add__(self, other: Any) -> "CycElem":
        coords = self._other(other)
        if coords is None:
            return NotImplemented
        return CycElem(self.ring, self.coords + coords)

    __radd__ = __add__

    def __neg__(self) -> "CycElem":
        return CycElem(self.ring, -self.coords)

    def __sub__(self, other: Any) -> "CycElem":
        coords = self._other(other)
        if coords is None:
            return NotImplemented
        return CycElem(self.ring, self.coords - coords)

    def __rsub__(self, other: Any) -> "CycElem":
        coords = self._other(other)
        if coords is None:
            return NotImplemented
        return CycElem(self.ring, coords - self.coords)

    def __mul__(self, other: Any) -> "CycElem":
        if isinstance(other, int):
            return CycElem(self.ring, self.coords * other)
        if isinstance(other, CycElem):
            self._other(other)
            return CycElem(self.ring, self.ring.multiply(self.coords, other.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycElem":
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"Exponent must be a natural number, got {k!r}")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycElem):
            return self.ring.modulus == other.ring.modulus and self.key() == other.key()
        if isinstance(other, int):
            return self.is_rational_integer() and int(self.coords[0]) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.modulus, self.key()))

    def __repr__(self) -> str:
        return f"CycElem(N={self.modulus}, {list(self.key())})"


class CycPoly:
    """Polynomial with coefficients in Z[zeta_N], stored low-to-high."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CyclotomicRing, coeffs: Iterable[Any] = ()):
        self.ring = ring
        values: List[CycElem] = []
        for c in coeffs:
            if isinstance(c, int):
                c = ring.from_int(c)
            elif c.ring.modulus != ring.modulus:
                raise DomainError(f"Mixed moduli {ring.modulus} and {c.ring.modulus}")
            values.append(c)
        while values and values[-1].is_zero():
            values.pop()
        self.coeffs: Tuple[CycElem, ...] = tuple(values)

    @classmethod
    def from_intpoly(cls, ring: CyclotomicRing, p: IntPoly) -> "CycPoly":
        return cls(ring, p.coeffs)

    @property
    def modulus(self) -> int:
        return self.ring.modulus

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _coerce(self, other: Any) -> Optional["CycPoly"]:
        if isinstance(other, CycPoly):
            if other.ring.modulus != self.ring.modulus:
                raise DomainError(f"Mixed moduli {self.ring.modulus} and {other.ring.modulus}")
            return other
        if isinstance(other, (int, CycElem)):
            return CycPoly(self.ring, [other])
        if isinstance(other, IntPoly):
            return CycPoly.from_intpoly(self.ring, other)
        return None

    def __add__(self, other: Any) -> "CycPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "CycPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "CycPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "CycPoly":
        if isinstance(other, (int, CycElem)):
            return CycPoly(self.ring, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return CycPoly(self.ring)
        out = [self.ring.zero() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return CycPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycPoly":
        result = CycPoly(self.ring, [1])
        for _ in range(k):
            result = result * self
        return result

    def mul_linear(self, root: CycElem) -> "CycPoly":
        """Multiply by the monic linear factor (x - root)."""
        out: List[Any] = [self.ring.zero()] + list(self.coeffs)
        for i, c in enumerate(self.coeffs):
            out[i] = out[i] - root * c
        return CycPoly(self.ring, out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycPoly):
            return self.ring.modulus == other.ring.modulus and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.modulus, tuple(c.key() for c in self.coeffs)))

    def __repr__(self) -> str:
        return f"CycPoly(N={self.modulus}, degree={self.degree})"


def embed_two_cos(N: int, d: int, j: int) -> CycElem:
    """The element zeta_N^(jN/d) + zeta_N^(-jN/d), i.e. 2cos(2*pi*j/d), in Z[zeta_N].

    Raises:
        DomainError: If d does not divide N or j < 1
    """
    if d < 1 or N % d:
        raise DomainError(f"d={d} must divide N={N}")
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    ring = cyclotomic_ring(N)
    e = j * (N // d)
    return ring.monomial(e) + ring.monomial(-e)


def product_of_linear_factors(roots: Sequence[CycElem], modulus: int = 1) -> CycPoly:
    """The monic polynomial prod_i (x - roots[i]) over Z[zeta_N].

    Args:
        roots: Roots sharing one modulus
        modulus: Modulus used when ``roots`` is empty

    Raises:
        DomainError: If the roots live in different rings
    """
    if roots:
        moduli = {r.modulus for r in roots}
        if len(moduli) > 1:
            raise DomainError(f"Roots from mixed moduli {sorted(moduli)}")
        ring = roots[0].ring
    else:
        ring = cyclotomic_ring(modulus)
    result = CycPoly(ring, [1])
    for root in roots:
        result = result.mul_linear(root)
    return result


def descend_to_integers(p: CycPoly) -> IntPoly:
    """The IntPoly equal to p when every coefficient is a rational integer.

    Raises:
        NotGaloisStableError: If some coefficient lies outside Z
    """
    values = []
    for k, c in enumerate(p.coeffs):
        if not c.is_rational_integer():
            raise NotGaloisStableError(
                f"Coefficient of x^{k} is not a rational integer in Z[zeta_{p.modulus}]; "
                f"the root set is not Galois-stable"
            )
        values.append(int(c.coords[0]))
    return IntPoly(values)
