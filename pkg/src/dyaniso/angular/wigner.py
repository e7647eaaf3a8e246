"""
Exact Wigner 3-j symbols and Clebsch-Gordan coefficients.

Angular momenta are carried internally as ``two_j`` integers so integer and
half-integer values are both exact. The Racah sum is evaluated with integer
factorials and ``Fraction`` arithmetic; every 3-j symbol is then of the form
sign * sqrt(q) with q rational, which is what :class:`ExactValue` stores.
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Tuple, Union

from cachetools import LRUCache, cached

from dyaniso.exceptions import DomainError

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]

# Enough for j up to ~30 (largest argument is j1 + j2 + j3 + 1)
_FACTORIALS: List[int] = [1]
_FACTORIAL_LOCK = threading.Lock()


def _extend_factorials(n: int) -> None:
    with _FACTORIAL_LOCK:
        for k in range(len(_FACTORIALS), n + 1):
            _FACTORIALS.append(_FACTORIALS[k - 1] * k)


_extend_factorials(100)


def _fact(n: int) -> int:
    if n >= len(_FACTORIALS):
        _extend_factorials(n)
    return _FACTORIALS[n]


@dataclass(frozen=True)
class AngularMomentum:
    """An angular momentum quantum number stored as twice its value."""

    two_j: int

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise DomainError(f"angular momentum must be non-negative, got {self.two_j}/2")

    @classmethod
    def of(cls, value: Number) -> "AngularMomentum":
        return cls(twice(value))

    @property
    def value(self) -> Fraction:
        return Fraction(self.two_j, 2)

    def projections(self) -> List[Fraction]:
        """Allowed m values, -j ... j."""
        return [Fraction(two_m, 2) for two_m in range(-self.two_j, self.two_j + 1, 2)]

    def allows(self, m: Number) -> bool:
        two_m = twice(m)
        return abs(two_m) <= self.two_j and (two_m - self.two_j) % 2 == 0


def twice(value: Number) -> int:
    """Returns 2*value as an int; raises DomainError unless value is a half-integer."""
    if isinstance(value, bool):
        raise DomainError("angular momentum cannot be a bool")
    if isinstance(value, int):
        return 2 * value
    if isinstance(value, Rational):
        doubled = 2 * Fraction(value)
        if doubled.denominator == 1:
            return int(doubled)
    else:
        doubled_float = 2.0 * float(value)
        if doubled_float.is_integer():
            return int(doubled_float)
    raise DomainError(f"{value!r} is not an integer or half-integer")


@dataclass(frozen=True)
class ExactValue:
    """The number sign * sqrt(square) with a rational square."""

    sign: int
    square: Fraction

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.sqrt(self.square)

    def __mul__(self, other: "ExactValue") -> "ExactValue":
        return ExactValue(self.sign * other.sign, self.square * other.square)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO = ExactValue(0, Fraction(0))


def _check_projection(two_j: int, two_m: int, name: str) -> None:
    if two_j < 0:
        raise DomainError(f"{name}: negative angular momentum")
    if abs(two_m) > two_j:
        raise DomainError(f"{name}: |m| = {abs(two_m)}/2 exceeds j = {two_j}/2")
    if (two_j - two_m) % 2 != 0:
        raise DomainError(f"{name}: j and m must both be integer or both half-integer")


def _triangle(two_a: int, two_b: int, two_c: int) -> bool:
    return (
        abs(two_a - two_b) <= two_c <= two_a + two_b
        and (two_a + two_b + two_c) % 2 == 0
    )


@cached(cache=LRUCache(maxsize=200_000), lock=threading.Lock())
def wigner3j_twice(
    two_j1: int, two_j2: int, two_j3: int, two_m1: int, two_m2: int, two_m3: int
) -> ExactValue:
    """
    Exact 3-j symbol with every argument given as twice its value.

    Returns ZERO when the projection sum or the triangle condition fails.

    Raises:
        DomainError: If some |m| > j or j and m differ in integrality.
    """
    _check_projection(two_j1, two_m1, "(j1, m1)")
    _check_projection(two_j2, two_m2, "(j2, m2)")
    _check_projection(two_j3, two_m3, "(j3, m3)")

    if two_m1 + two_m2 + two_m3 != 0 or not _triangle(two_j1, two_j2, two_j3):
        return ZERO

    # All of these are integers once the checks above pass
    a = (two_j1 + two_j2 - two_j3) // 2
    b = (two_j1 - two_j2 + two_j3) // 2
    c = (-two_j1 + two_j2 + two_j3) // 2
    total = (two_j1 + two_j2 + two_j3) // 2
    j1pm, j1mm = (two_j1 + two_m1) // 2, (two_j1 - two_m1) // 2
    j2pm, j2mm = (two_j2 + two_m2) // 2, (two_j2 - two_m2) // 2
    j3pm, j3mm = (two_j3 + two_m3) // 2, (two_j3 - two_m3) // 2

    prefactor = Fraction(
        _fact(a) * _fact(b) * _fact(c)
        * _fact(j1pm) * _fact(j1mm)
        * _fact(j2pm) * _fact(j2mm)
        * _fact(j3pm) * _fact(j3mm),
        _fact(total + 1),
    )

    # Racah sum: t runs where every factorial argument is non-negative
    k1 = (two_j3 - two_j2 + two_m1) // 2  # j3 - j2 + m1
    k2 = (two_j3 - two_j1 - two_m2) // 2  # j3 - j1 - m2
    t_min = max(0, -k1, -k2)
    t_max = min(a, j1mm, j2pm)
    racah = Fraction(0)
    for t in range(t_min, t_max + 1):
        denominator = (
            _fact(t) * _fact(k1 + t) * _fact(k2 + t)
            * _fact(a - t) * _fact(j1mm - t) * _fact(j2pm - t)
        )
        racah += Fraction(-1 if t % 2 else 1, denominator)

    if racah == 0:
        return ZERO

    # Phase (-1)^(j1 - j2 - m3)
    phase_exponent = (two_j1 - two_j2 - two_m3) // 2
    sign = (-1 if phase_exponent % 2 else 1) * (1 if racah > 0 else -1)
    return ExactValue(sign, racah * racah * prefactor)


def wigner3j(j1: Number, j2: Number, j3: Number, m1: Number, m2: Number, m3: Number) -> ExactValue:
    """
    Computes the Wigner 3-j symbol ( j1 j2 j3 ; m1 m2 m3 ) exactly.

    Args:
        j1, j2, j3: Angular momenta (integers or half-integers).
        m1, m2, m3: Their projections.

    Returns:
        An :class:`ExactValue`; ``float(result)`` gives the floating approximation.

    Raises:
        DomainError: For non-physical quantum numbers.
    """
    return wigner3j_twice(
        twice(j1), twice(j2), twice(j3), twice(m1), twice(m2), twice(m3)
    )


@cached(cache=LRUCache(maxsize=200_000), lock=threading.Lock())
def wigner3j_float(
    two_j1: int, two_j2: int, two_j3: int, two_m1: int, two_m2: int, two_m3: int
) -> float:
    """Float 3-j symbol from ``two_j`` arguments; zero outside the allowed ranges."""
    for two_j, two_m in ((two_j1, two_m1), (two_j2, two_m2), (two_j3, two_m3)):
        if abs(two_m) > two_j or (two_j - two_m) % 2:
            return 0.0
    return float(wigner3j_twice(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3))


def clebsch_gordan(j1: Number, m1: Number, j2: Number, m2: Number, J: Number, M: Number) -> ExactValue:
    """
    Computes <j1 m1; j2 m2 | J M> exactly.

    Uses <j1 m1; j2 m2|J M> = (-1)^(j1 - j2 + M) sqrt(2J + 1) (j1 j2 J; m1 m2 -M).
    """
    two_j1, two_m1 = twice(j1), twice(m1)
    two_j2, two_m2 = twice(j2), twice(m2)
    two_big_j, two_big_m = twice(J), twice(M)
    three_j = wigner3j_twice(two_j1, two_j2, two_big_j, two_m1, two_m2, -two_big_m)
    if three_j.is_zero:
        return ZERO
    phase_exponent = (two_j1 - two_j2 + two_big_m) // 2
    sign = three_j.sign * (-1 if phase_exponent % 2 else 1)
    return ExactValue(sign, three_j.square * (two_big_j + 1))


def clebsch_gordan_float(j1: Number, m1: Number, j2: Number, m2: Number, J: Number, M: Number) -> float:
    return float(clebsch_gordan(j1, m1, j2, m2, J, M))


def column_permutations(
    args: Tuple[Number, Number, Number, Number, Number, Number]
) -> List[Tuple[Tuple[Number, ...], int]]:
    """
    Lists the six column orderings of a 3-j symbol with the parity of each permutation.

    Returned as ((j1, j2, j3, m1, m2, m3), parity) with parity 0 for even and 1 for odd
    permutations.
    """
    j = args[:3]
    m = args[3:]
    orders = [
        ((0, 1, 2), 0),
        ((1, 2, 0), 0),
        ((2, 0, 1), 0),
        ((1, 0, 2), 1),
        ((0, 2, 1), 1),
        ((2, 1, 0), 1),
    ]
    return [
        (tuple(j[i] for i in order) + tuple(m[i] for i in order), parity)
        for order, parity in orders
    ]
