"""
Scalar fields for root coordinates.

The canonical representation only needs the bond weights c_st = 2cos(pi/m_st):

* rational: m in {2, 3, inf}, weights 0, 1, 2 (root coordinates stay integers)
* quadratic: m in {2, 3, 4, 5, 6, inf}, exact arithmetic in Q(sqrt2, sqrt3, sqrt5)
* float: anything else, with a zero tolerance and rounded dedup keys
"""

import logging
import math
from fractions import Fraction
from math import gcd
from typing import Optional, Union

import sympy

from config.settings import ScalarMode, settings
from models.errors import ScalarModeError

logger = logging.getLogger(__name__)

INF = math.inf

_PRIMES = (5, 3, 2)


class QuadraticNumber:
    """
    Element of Q(sqrt2, sqrt3, sqrt5) stored as {squarefree radicand: rational}.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, (int, Fraction)):
            terms = {1: terms}
        self.terms: dict[int, Fraction] = {
            r: Fraction(c) for r, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def sqrt(cls, radicand: int) -> "QuadraticNumber":
        return cls({radicand: Fraction(1)})

    @staticmethod
    def _coerce(other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for r, c in other.terms.items():
            terms[r] = terms.get(r, 0) + c
        return QuadraticNumber(terms)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[int, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                g = gcd(a, b)
                r = (a // g) * (b // g)
                terms[r] = terms.get(r, 0) + x * y * g
        return QuadraticNumber(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        if set(self.terms) <= {1}:
            return hash(self.terms.get(1, Fraction(0)))
        return hash(frozenset(self.terms.items()))

    def __float__(self):
        return float(sum(float(c) * math.sqrt(r) for r, c in self.terms.items()))

    def __repr__(self):
        return f"QuadraticNumber({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for r in sorted(self.terms):
            c = self.terms[r]
            if r == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"sqrt{r}")
            else:
                parts.append(f"{c}*sqrt{r}")
        return "+".join(parts).replace("+-", "-")

    def sign(self) -> int:
        """Exact sign, eliminating one prime from the radicands at a time."""
        terms = self.terms
        if not terms:
            return 0
        values = [float(c) * math.sqrt(r) for r, c in terms.items()]
        total = sum(values)
        if abs(total) > 1e-9 * sum(abs(v) for v in values):
            return 1 if total > 0 else -1
        prime = next((p for p in _PRIMES if any(r % p == 0 for r in terms)), None)
        if prime is None:
            c = terms.get(1, Fraction(0))
            return (c > 0) - (c < 0)
        a = QuadraticNumber({r: c for r, c in terms.items() if r % prime})
        b = QuadraticNumber({r // prime: c for r, c in terms.items() if r % prime == 0})
        sa, sb = a.sign(), b.sign()
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        if sb == 0:
            return sa
        # a + b sqrt(p) with sign(a) != sign(b)
        return sa * (a * a - b * b * prime).sign()

    def to_sympy(self):
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * sympy.sqrt(r) for r, c in self.terms.items()),
            sympy.Integer(0),
        )


Scalar = Union[int, Fraction, float, QuadraticNumber]


class ScalarField:
    """Arithmetic context for one scalar mode."""

    mode: ScalarMode
    exact = True

    def zero(self) -> Scalar:
        return 0

    def one(self) -> Scalar:
        return 1

    def from_int(self, value: int) -> Scalar:
        return value

    def weight(self, m) -> Scalar:
        """2cos(pi/m), with m = 1 giving 2 (the diagonal) and m = inf giving 2."""
        raise NotImplementedError

    def sign(self, x: Scalar) -> int:
        return (x > 0) - (x < 0)

    def key(self, x: Scalar):
        return x

    def to_sympy(self, x: Scalar):
        return sympy.nsimplify(x) if isinstance(x, float) else sympy.sympify(x)

    def format(self, x: Scalar) -> str:
        return str(x)


class RationalField(ScalarField):
    mode = ScalarMode.RATIONAL
    _weights = {1: 2, 2: 0, 3: 1, INF: 2}

    def weight(self, m):
        if m not in self._weights:
            raise ScalarModeError(f"Bond label {m} is not representable in rational mode")
        return self._weights[m]

    def to_sympy(self, x):
        return sympy.Integer(x) if isinstance(x, int) else sympy.Rational(x.numerator, x.denominator)


class QuadraticField(ScalarField):
    mode = ScalarMode.QUADRATIC

    def _table(self):
        golden = QuadraticNumber({1: Fraction(1, 2), 5: Fraction(1, 2)})
        return {
            1: QuadraticNumber(2),
            2: QuadraticNumber(0),
            3: QuadraticNumber(1),
            4: QuadraticNumber.sqrt(2),
            5: golden,
            6: QuadraticNumber.sqrt(3),
            INF: QuadraticNumber(2),
        }

    def zero(self):
        return QuadraticNumber(0)

    def one(self):
        return QuadraticNumber(1)

    def from_int(self, value):
        return QuadraticNumber(value)

    def weight(self, m):
        table = self._table()
        if m not in table:
            raise ScalarModeError(f"Bond label {m} is not representable in quadratic mode")
        return table[m]

    def sign(self, x):
        return x.sign() if isinstance(x, QuadraticNumber) else super().sign(x)

    def to_sympy(self, x):
        return x.to_sympy() if isinstance(x, QuadraticNumber) else sympy.sympify(x)


class FloatField(ScalarField):
    mode = ScalarMode.FLOAT
    exact = False

    def __init__(self, tolerance: Optional[float] = None):
        self.tolerance = settings.float_tolerance if tolerance is None else tolerance

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def from_int(self, value):
        return float(value)

    def weight(self, m):
        if m == INF:
            return 2.0
        return 2.0 * math.cos(math.pi / m)

    def sign(self, x):
        if abs(x) <= self.tolerance:
            return 0
        return 1 if x > 0 else -1

    def key(self, x):
        # coarser than the float tolerance, so drifted copies share one key
        return round(x, 6) + 0.0

    def format(self, x):
        return f"{x:.9g}"


_RATIONAL_LABELS = {2, 3, INF}
_QUADRATIC_LABELS = {2, 3, 4, 5, 6, INF}


def field_for(labels, mode: Optional[ScalarMode] = None) -> ScalarField:
    """
    Choose the scalar field for a set of bond labels.

    Raises:
        ScalarModeError: the requested mode cannot represent the labels
    """
    mode = ScalarMode(settings.scalar_mode if mode is None else mode)
    labels = set(labels)
    if mode == ScalarMode.AUTO:
        if labels <= _RATIONAL_LABELS:
            mode = ScalarMode.RATIONAL
        elif labels <= _QUADRATIC_LABELS:
            mode = ScalarMode.QUADRATIC
        else:
            mode = ScalarMode.FLOAT
    elif mode == ScalarMode.RATIONAL and not labels <= _RATIONAL_LABELS:
        raise ScalarModeError(f"Rational mode cannot represent bond labels {sorted(labels)}")
    elif mode == ScalarMode.QUADRATIC and not labels <= _QUADRATIC_LABELS:
        raise ScalarModeError(f"Quadratic mode cannot represent bond labels {sorted(labels)}")
    logger.debug(f"Scalar mode {mode.value} for bond labels {sorted(labels)}")
    if mode == ScalarMode.RATIONAL:
        return RationalField()
    if mode == ScalarMode.QUADRATIC:
        return QuadraticField()
    return FloatField()
