"""
Exact arithmetic in the real quaternion division ring.

Components are `fractions.Fraction` values, so products, inverses and every
rank computed downstream are exact. Unit quaternions with rational
components are produced by the Cayley transform of rational pure
quaternions.
"""
import re
from fractions import Fraction
from typing import Callable, Iterable, Tuple, Union

import numpy as np

from ..config import Config
from ..utils.exceptions import ConfigurationError, NonPureQuaternionError, QuaternionDivisionError, QuaternionParseError

Rational = Fraction
Scalar = Union[int, Fraction]

_COMPONENT_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


class Quaternion:
    """Immutable quaternion x0 + x1*i + x2*j + x3*k with rational components."""

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0: Scalar = 0, x1: Scalar = 0, x2: Scalar = 0, x3: Scalar = 0):
        object.__setattr__(self, "x0", Fraction(x0))
        object.__setattr__(self, "x1", Fraction(x1))
        object.__setattr__(self, "x2", Fraction(x2))
        object.__setattr__(self, "x3", Fraction(x3))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __reduce__(self):
        return (Quaternion, self.components)

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x0, self.x1, self.x2, self.x3)

    # Ring operations

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            other = Quaternion(other)
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            other = Quaternion(other)
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other) -> "Quaternion":
        if not isinstance(other, Quaternion):
            s = Fraction(other)
            return Quaternion(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
        a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = other.x0, other.x1, other.x2, other.x3
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other) -> "Quaternion":
        # Only real scalars reach here; they commute with everything.
        return self.__mul__(other)

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            raise TypeError("Quaternion division is ambiguous; multiply by inverse() on the intended side")
        s = Fraction(other)
        if s == 0:
            raise QuaternionDivisionError()
        return Quaternion(self.x0 / s, self.x1 / s, self.x2 / s, self.x3 / s)

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, Quaternion):
            return self.components == other.components
        if isinstance(other, (int, Fraction)):
            return self.x0 == other and not (self.x1 or self.x2 or self.x3)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components)

    def __bool__(self) -> bool:
        return bool(self.x0 or self.x1 or self.x2 or self.x3)

    # Derived quantities

    def conj(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm_sq(self) -> Fraction:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n == 0:
            raise QuaternionDivisionError()
        return Quaternion(self.x0 / n, -self.x1 / n, -self.x2 / n, -self.x3 / n)

    def re(self) -> Fraction:
        return self.x0

    def im(self) -> "Quaternion":
        return Quaternion(0, self.x1, self.x2, self.x3)

    def is_unit(self) -> bool:
        return self.norm_sq() == 1

    def is_real(self) -> bool:
        return not (self.x1 or self.x2 or self.x3)

    def is_pure(self) -> bool:
        return self.x0 == 0

    def to_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.components], dtype=float)

    def __repr__(self) -> str:
        return f"Quaternion({format_token(self)})"

    def __str__(self) -> str:
        terms = []
        for coeff, unit in zip(self.components, ("", "i", "j", "k")):
            if coeff == 0:
                continue
            if unit and abs(coeff) == 1:
                body = unit
            else:
                body = f"{abs(coeff)}{unit}"
            sign = "-" if coeff < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)

# Closed under multiplication and conjugation.
LIPSCHITZ_UNITS: Tuple[Quaternion, ...] = (ONE, -ONE, I, -I, J, -J, K, -K)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm_sq(q: Quaternion) -> Fraction:
    return q.norm_sq()


def inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


def re(q: Quaternion) -> Fraction:
    return q.re()


def im(q: Quaternion) -> Quaternion:
    return q.im()


def product(factors: Iterable[Quaternion]) -> Quaternion:
    """Left-to-right ordered product; the empty product is 1."""
    result = ONE
    for factor in factors:
        result = result * factor
    return result


def cayley_unit(v: Quaternion) -> Quaternion:
    """
    Map a pure quaternion v to the unit quaternion (1 + v)(1 - v)^-1.

    The result is exactly unit and never equals -1. 1 - v cannot vanish
    because its real part is 1.
    """
    if not v.is_pure():
        raise NonPureQuaternionError(v, "cayley_unit")
    return (ONE + v) * (ONE - v).inverse()


# Token format: "a/b,c/d,e/f,g/h", denominators omitted when 1

def _format_component(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_token(q: Quaternion) -> str:
    return ",".join(_format_component(c) for c in q.components)


def parse_token(token: str) -> Quaternion:
    """
    Parse the four-component token format into an exact quaternion.

    Raises:
        QuaternionParseError: wrong arity, non-rational component or zero denominator
    """
    if not isinstance(token, str):
        raise QuaternionParseError(token, "Quaternion token must be a string")
    parts = [part.strip() for part in token.split(",")]
    if len(parts) != 4:
        raise QuaternionParseError(token, f"Expected 4 components, found {len(parts)}")
    values = []
    for part in parts:
        if not _COMPONENT_PATTERN.match(part):
            raise QuaternionParseError(token, f"Component {part!r} is not a rational")
        try:
            values.append(Fraction(part))
        except ZeroDivisionError:
            raise QuaternionParseError(token, f"Component {part!r} has a zero denominator")
    return Quaternion(*values)


def parse_float_token(token: str) -> np.ndarray:
    """Parse a token whose components may be decimal floats (float mode only)."""
    if not isinstance(token, str):
        raise QuaternionParseError(token, "Quaternion token must be a string")
    parts = [part.strip() for part in token.split(",")]
    if len(parts) != 4:
        raise QuaternionParseError(token, f"Expected 4 components, found {len(parts)}")
    values = []
    for part in parts:
        try:
            if "/" in part:
                values.append(float(Fraction(part)))
            else:
                values.append(float(part))
        except (ValueError, ZeroDivisionError):
            raise QuaternionParseError(token, f"Component {part!r} is not a number")
    return np.array(values, dtype=float)


# Random sampling

GainSampler = Callable[[], Quaternion]


def random_pure(rng: np.random.Generator, bound: int = None) -> Quaternion:
    """Random pure quaternion with numerators in [-bound, bound] and denominators in [1, bound]."""
    bound = bound or Config.CAYLEY_BOUND
    nums = rng.integers(-bound, bound + 1, size=3)
    dens = rng.integers(1, bound + 1, size=3)
    return Quaternion(0, *(Fraction(int(a), int(b)) for a, b in zip(nums, dens)))


def random_unit(rng: np.random.Generator, bound: int = None) -> Quaternion:
    return cayley_unit(random_pure(rng, bound))


def random_lipschitz(rng: np.random.Generator) -> Quaternion:
    return LIPSCHITZ_UNITS[int(rng.integers(len(LIPSCHITZ_UNITS)))]


def random_pure_unit(rng: np.random.Generator, bound: int = None) -> Quaternion:
    """Random unit quaternion with zero real part: u*i*conj(u) for a random unit u."""
    u = random_unit(rng, bound)
    return u * I * u.conj()


def make_gain_sampler(rng: np.random.Generator, mode: str = "cayley", bound: int = None) -> GainSampler:
    """
    Build a zero-argument callable that draws unit gains.

    Args:
        rng: numpy random generator owning the stream
        mode: "cayley" (dense exact units), "lipschitz" ({±1, ±i, ±j, ±k}) or "one"

    Returns:
        Callable returning a fresh unit quaternion per call
    """
    if mode == "cayley":
        return lambda: random_unit(rng, bound)
    if mode == "lipschitz":
        return lambda: random_lipschitz(rng)
    if mode == "one":
        return lambda: ONE
    raise ConfigurationError("gain_mode", f"Unknown gain mode: {mode}")
