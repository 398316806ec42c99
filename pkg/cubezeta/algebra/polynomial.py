"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

import logging
from fractions import Fraction
from math import isqrt
from typing import Any, Iterable, List, Sequence, Tuple, Union

import orjson

from cubezeta.core.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

# Below this operand length schoolbook multiplication wins over packing.
KRONECKER_THRESHOLD = 48

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _strip(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _mul_kronecker(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Multiply by packing both operands into one big integer each.

    Every product coefficient is bounded by len * max|a| * max|b|, so a slot of
    ``numbytes`` bytes holds it after shifting by half the slot range.
    """
    bound = min(len(a), len(b)) * max(abs(x) for x in a) * max(abs(y) for y in b)
    numbytes = (bound.bit_length() + 2 + 7) // 8
    numbits = 8 * numbytes

    A = sum(x << (numbits * i) for i, x in enumerate(a))
    B = sum(y << (numbits * i) for i, y in enumerate(b))
    length = len(a) + len(b) - 1
    half = 1 << (numbits - 1)
    offset = sum(half << (numbits * i) for i in range(length))
    R = A * B + offset

    raw = R.to_bytes(numbytes * length, "little")
    return [
        int.from_bytes(raw[numbytes * i : numbytes * (i + 1)], "little") - half
        for i in range(length)
    ]


class IntPoly:
    """Immutable polynomial over the integers, coefficients stored low-to-high.

    The zero polynomial has no coefficients and degree -1. Arithmetic mixes
    freely with Python ints.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise InvariantViolation(f"Non-integral coefficient {c}")
                c = c.numerator
            values.append(int(c))
        object.__setattr__(self, "coeffs", _strip(values))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "IntPoly":
        """The indeterminate."""
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        """The polynomial c * x^k."""
        if k < 0:
            raise DomainError(f"Negative exponent {k}")
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, root: int) -> "IntPoly":
        """The monic polynomial x - root."""
        return cls([-root, 1])

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse the space-separated low-to-high format, e.g. ``"1 0 -2"``."""
        try:
            return cls(int(token) for token in text.split())
        except ValueError as e:
            raise DomainError(f"Malformed polynomial text {text!r}: {e}") from e

    @classmethod
    def from_json(cls, data: Union[str, bytes, Sequence[int]]) -> "IntPoly":
        """Parse a JSON array ``[c0, c1, ...]`` or an already decoded list."""
        values = orjson.loads(data) if isinstance(data, (str, bytes)) else data
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise DomainError(f"Expected a JSON array of integers, got {values!r}")
        return cls(values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, k: int) -> int:
        """Coefficient of x^k, zero beyond the degree."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    # Ring operations

    @staticmethod
    def _coerce(other: Any) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other: Any) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if min(len(a), len(b)) < KRONECKER_THRESHOLD:
            return IntPoly(_mul_schoolbook(a, b))
        return IntPoly(_mul_kronecker(a, b))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"IntPoly exponent must be a natural number, got {k!r}")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, divisor: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        """Long division over the integers.

        Every step must divide the running leading coefficient exactly, which
        always holds for monic divisors.

        Raises:
            DomainError: If the divisor is zero
            InvariantViolation: If a quotient coefficient is not an integer
        """
        if divisor.is_zero():
            raise DomainError("Polynomial division by zero")
        rem = list(self.coeffs)
        dv = divisor.coeffs
        lead = dv[-1]
        shift = len(rem) - len(dv)
        if shift < 0:
            return IntPoly(), self
        quot = [0] * (shift + 1)
        for k in range(shift, -1, -1):
            top = rem[k + len(dv) - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                raise InvariantViolation(
                    f"Leading coefficient {lead} does not divide {top} in integer division"
                )
            quot[k] = q
            for i, c in enumerate(dv):
                rem[k + i] -= q * c
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: Union["IntPoly", int]) -> "IntPoly":
        """Quotient of a division that must leave no remainder.

        Raises:
            InvariantViolation: If the remainder is nonzero
        """
        if isinstance(divisor, int):
            if divisor == 0:
                raise DomainError("Polynomial division by zero")
            out = []
            for c in self.coeffs:
                q, r = divmod(c, divisor)
                if r:
                    raise InvariantViolation(f"{divisor} does not divide coefficient {c}")
                out.append(q)
            return IntPoly(out)
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise InvariantViolation(
                f"Nonzero remainder of degree {rem.degree} dividing by degree {divisor.degree}"
            )
        return quot

    def __floordiv__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self.exact_div(other)

    # Evaluation and transforms

    def __call__(self, value: Any) -> Any:
        """Horner evaluation at any ring element that mixes with ints."""
        result: Any = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """The composite self(inner(x))."""
        result = IntPoly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def truncate(self, n: int) -> "IntPoly":
        """Drop all terms of degree >= n."""
        return IntPoly(self.coeffs[:n])

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def even_part_halved(self) -> "IntPoly":
        """For p(v) with vanishing odd coefficients, the polynomial q with q(v^2) = p(v).

        Raises:
            InvariantViolation: If some odd coefficient is nonzero
        """
        odd = [(i, c) for i, c in enumerate(self.coeffs) if i % 2 and c]
        if odd:
            i, c = odd[0]
            raise InvariantViolation(f"Odd coefficient {c} at degree {i} does not vanish")
        return IntPoly(self.coeffs[::2])

    def sqrt(self) -> "IntPoly":
        """Exact square root with positive leading coefficient.

        Coefficients are recovered from the top down, each fixed by the
        next-highest coefficient of the square; the result is verified.

        Raises:
            InvariantViolation: If the polynomial is not a perfect square
        """
        if self.is_zero():
            return IntPoly()
        n = self.degree
        if n % 2:
            raise InvariantViolation(f"Odd degree {n} polynomial is not a square")
        m = n // 2
        lead_sq = self.leading
        root_lead = _isqrt_exact(lead_sq)
        # r_{m-k}: coefficient of x^{m-k} in the root, from x^{n-k} of the square
        top: List[int] = [root_lead]
        for k in range(1, m + 1):
            cross = sum(top[i] * top[k - i] for i in range(1, k))
            num = self.coeffs[n - k] - cross
            q, r = divmod(num, 2 * root_lead)
            if r:
                raise InvariantViolation("Polynomial is not the square of an integer polynomial")
            top.append(q)
        root = IntPoly(reversed(top))
        if root * root != self:
            raise InvariantViolation("Polynomial is not a perfect square")
        return root

    # Formats

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def to_text(self) -> str:
        """Space-separated coefficients low-to-high; ``0`` for the zero polynomial."""
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_list())

    def pretty(self, var: str = "x") -> str:
        """Human-readable rendering, highest degree first, e.g. ``x³ - 3x + 1``."""
        if not self.coeffs:
            return "0"
        terms: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}{str(k).translate(_SUPERSCRIPTS)}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)


def _isqrt_exact(n: int) -> int:
    if n <= 0:
        raise InvariantViolation(f"Leading coefficient {n} is not a positive square")
    r = isqrt(n)
    if r * r != n:
        raise InvariantViolation(f"Leading coefficient {n} is not a perfect square")
    return r


def poly_compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """The composite p(q(x)) by Horner's rule over IntPoly."""
    return p.compose(q)


def poly_product(polys: Iterable[IntPoly]) -> IntPoly:
    """Product of many polynomials, balanced so large factors meet late."""
    items = list(polys)
    if not items:
        return IntPoly([1])
    while len(items) > 1:
        paired = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            paired.append(items[-1])
        items = paired
    return items[0]


def newton_interpolate(points: Sequence[int], values: Sequence[int]) -> IntPoly:
    """Interpolating polynomial through (points[i], values[i]).

    Divided differences are carried as Fractions; the result must have
    integer coefficients.

    Raises:
        DomainError: On repeated points or mismatched lengths
        InvariantViolation: If the interpolant is not integral
    """
    if len(points) != len(values):
        raise DomainError("points and values must have equal length")
    if len(set(points)) != len(points):
        raise DomainError("Interpolation points must be distinct")
    n = len(points)
    table = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (points[i] - points[i - level])

    # Horner over the Newton basis
    result: List[Fraction] = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + result
        for i in range(len(result)):
            shifted[i] -= points[k] * result[i]
        shifted[0] += table[k]
        result = shifted
    return IntPoly(result)
