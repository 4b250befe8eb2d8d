"""Exact polynomials over the rationals, Sturm sequences and certified root comparison."""
import math

import numpy as np

from dataclasses import dataclass
from fractions import Fraction

from spexlab.base import ROOT_TOL
from spexlab.spectral.exceptions import NoRootError


class Polynomial(object):
    """A polynomial with rational coefficients, stored in ascending order of degree."""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients):
        coefficients = [Fraction(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_descending(cls, coefficients):
        return cls(list(reversed(list(coefficients))))

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self):
        return len(self.coefficients) == 0

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def evaluate_float(self, x):
        result = 0.0
        for c in reversed(self.coefficients):
            result = result * x + float(c)
        return result

    def sign_at(self, x):
        value = self(Fraction(x))
        return (value > 0) - (value < 0)

    def __neg__(self):
        return Polynomial([-c for c in self.coefficients])

    def __add__(self, other):
        other = _as_polynomial(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_polynomial(other)
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - len(other.coefficients) + 1, 0)
        while len(remainder) >= len(other.coefficients) and any(remainder):
            shift = len(remainder) - len(other.coefficients)
            factor = remainder[-1] / other.leading
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return Polynomial(quotient), Polynomial(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def monic(self):
        if self.is_zero():
            return self
        return Polynomial([c / self.leading for c in self.coefficients])

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, _as_polynomial(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree(self):
        """The product of the distinct irreducible factors (monic), i.e. p / gcd(p, p')."""
        if self.degree < 1:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def cauchy_bound(self):
        """All real roots lie in ``[-bound, bound]``."""
        if self.degree < 1:
            return Fraction(1)
        return 1 + max(abs(c / self.leading) for c in self.coefficients[:-1])

    def __repr__(self):
        return f'Polynomial({[str(c) for c in self.coefficients]})'

    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = 'x' if i == 1 else f'x^{i}'
                body = power if magnitude == 1 else f'{magnitude}*{power}'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        return text + ''.join(f' {sign} {body}' for sign, body in terms[1:])


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def char_poly(q):
    """Exact characteristic polynomial det(xI - B) by the Faddeev-LeVerrier recursion.

    Parameters
    ----------
    q : QuotientMatrix or sequence of sequences
        The matrix B with rational (or integer) entries.

    Returns
    -------
    polynomial : Polynomial
    """
    matrix = q.matrix if hasattr(q, 'matrix') else q
    n = len(matrix)
    a = np.array([[Fraction(entry) for entry in row] for row in matrix], dtype=object)
    a = a.reshape((n, n))
    identity = np.eye(n, dtype=int).astype(object)

    coefficients = [Fraction(0)] * (n + 1)
    coefficients[n] = Fraction(1)
    m = np.zeros((n, n), dtype=int).astype(object)
    for k in range(1, n + 1):
        m = a.dot(m) + identity * coefficients[n - k + 1]
        coefficients[n - k] = -Fraction(np.trace(a.dot(m))) / k
    return Polynomial(coefficients)


def sturm_sequence(p):
    sequence = [p, p.derivative()]
    while not sequence[-1].is_zero():
        sequence.append(-(sequence[-2] % sequence[-1]))
    return sequence[:-1]


def _sign_changes(values):
    signs = [value > 0 for value in values if value != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(sequence, x):
    return _sign_changes([p(x) for p in sequence])


def _variations_at_infinity(sequence):
    return _sign_changes([p.leading for p in sequence])


def count_roots_above(sequence, x):
    """Number of distinct real roots in (x, infinity), given a Sturm sequence."""
    return _variations_at(sequence, Fraction(x)) - _variations_at_infinity(sequence)


def count_roots_between(sequence, a, b):
    """Number of distinct real roots in (a, b], given a Sturm sequence."""
    return _variations_at(sequence, Fraction(a)) - _variations_at(sequence, Fraction(b))


class _IsolatedRoot(object):
    """The largest real root of a squarefree polynomial, isolated in the interval (a, b]."""

    def __init__(self, p, lower=None):
        self.polynomial = p
        self.squarefree = p.squarefree()
        if self.squarefree.degree < 1:
            raise NoRootError(f'{p} has no real roots')
        self.sequence = sturm_sequence(self.squarefree)

        bound = self.squarefree.cauchy_bound()
        a = Fraction(lower) if lower is not None else -bound
        if count_roots_above(self.sequence, a) == 0:
            if self.squarefree(a) == 0:
                self.a, self.b = a - 1, a
            else:
                raise NoRootError(f'{p} has no real root above {lower}')
        else:
            self.a, self.b = a, bound
        while count_roots_between(self.sequence, self.a, self.b) > 1:
            self.bisect()

    @property
    def width(self):
        return self.b - self.a

    def bisect(self):
        mid = (self.a + self.b) / 2
        if count_roots_between(self.sequence, mid, self.b) >= 1:
            self.a = mid
        else:
            self.b = mid

    def tighten(self, estimate, relative=Fraction(1, 2 ** 30)):
        """Replaces the interval by a narrow one around a floating point estimate, if valid."""
        center = Fraction(estimate)
        delta = relative * max(1, abs(center))
        a, b = center - delta, center + delta
        if a < self.a or b > self.b:
            return
        if count_roots_above(self.sequence, b) == 0 \
                and count_roots_between(self.sequence, a, b) == 1:
            self.a, self.b = a, b


def max_real_root(p, lower=None, tol=ROOT_TOL):
    """Largest real root of `p` which is at least `lower`.

    The root is isolated with a Sturm sequence, narrowed by bisection with exact sign evaluations
    at dyadic points and polished by Newton steps that stay inside the certified bracket.

    Raises
    ------
    NoRootError
        If `p` has no real root at or above `lower`.
    """
    isolated = _IsolatedRoot(p, lower=lower)
    sq = isolated.squarefree
    a, b = isolated.a, isolated.b
    if sq(b) == 0:
        return float(b)

    sign_b = sq.sign_at(b)
    while b - a > tol / 4:
        mid = Fraction(float((a + b) / 2))
        if not a < mid < b:
            break
        sign = sq.sign_at(mid)
        if sign == 0:
            return float(mid)
        if sign == sign_b:
            b = mid
        else:
            a = mid

    root = float((a + b) / 2)
    derivative = sq.derivative()
    for _ in range(3):
        slope = derivative.evaluate_float(root)
        if slope == 0:
            break
        polished = root - sq.evaluate_float(root) / slope
        if not float(a) <= polished <= float(b):
            break
        root = polished
    return root


@dataclass
class RootComparison:
    """Result of comparing the largest real roots of p and q.

    `sign` is +1 if the largest root of p is larger, -1 if it is smaller and 0 if both are equal.
    For a nonzero sign, `separator` is a rational x lying strictly between both roots, and
    `p_sign`, `q_sign` are the exact signs of p(x) and q(x).
    """
    sign: int
    p_root: float
    q_root: float
    separator: Fraction = None
    p_sign: int = None
    q_sign: int = None


def compare_max_roots(p, q, lower=None, max_steps=400):
    """Compares the largest real roots of `p` and `q` using exact arithmetic only.

    Both roots are isolated in rational intervals, which are bisected until they are disjoint.
    Equal roots are detected through a common factor of the squarefree parts.

    Raises
    ------
    NoRootError
        If either polynomial has no real root at or above `lower`.
    RuntimeError
        If the roots cannot be separated within `max_steps` bisections.
    """
    p_root = max_real_root(p, lower=lower)
    q_root = max_real_root(q, lower=lower)
    left = _IsolatedRoot(p, lower=lower)
    right = _IsolatedRoot(q, lower=lower)
    left.tighten(p_root)
    right.tighten(q_root)

    common = left.squarefree.gcd(right.squarefree)
    common_sequence = sturm_sequence(common) if common.degree >= 1 else None

    for _ in range(max_steps):
        if left.b < right.a or right.b < left.a:
            sign = 1 if left.a > right.b else -1
            low, high = (right.b, left.a) if sign == 1 else (left.b, right.a)
            x = (low + high) / 2
            return RootComparison(sign, p_root, q_root, separator=x,
                                  p_sign=p.sign_at(x), q_sign=q.sign_at(x))
        if common_sequence is not None:
            a, b = max(left.a, right.a), min(left.b, right.b)
            if a < b and count_roots_between(common_sequence, a, b) >= 1:
                return RootComparison(0, p_root, q_root)
        if left.width >= right.width:
            left.bisect()
        else:
            right.bisect()
    raise RuntimeError('Could not separate the largest roots')


def _sqrt_brackets(square, bits):
    """Rationals a <= sqrt(square) <= b with b - a <= 2^-bits (a == b if the root is
    rational)."""
    square = Fraction(square)
    scale = 2 ** bits
    numerator = square.numerator * square.denominator * scale * scale
    root = math.isqrt(numerator)
    denominator = square.denominator * scale
    a = Fraction(root, denominator)
    if root * root == numerator:
        return a, a
    return a, Fraction(root + 1, denominator)


def check_second_root_below(p, square, max_bits=64):
    """Returns True iff exactly one root of `p` lies at or above sqrt(`square`) and that root is
    simple, i.e. the second largest root is below sqrt(`square`) while the largest is not."""
    sq = p.squarefree()
    if sq.degree < 1:
        return False
    sequence = sturm_sequence(sq)
    repeated = p.gcd(p.derivative())
    repeated_sequence = sturm_sequence(repeated) if repeated.degree >= 1 else None

    square = Fraction(square)
    for bits in range(8, max_bits + 1, 8):
        a, b = _sqrt_brackets(square, bits)
        if a == b:
            if count_roots_above(sequence, a) + (1 if sq(a) == 0 else 0) != 1:
                return False
            break
        above_low = count_roots_above(sequence, a)
        above_high = count_roots_above(sequence, b)
        if above_high >= 2 or above_low == 0:
            return False
        if above_low == 1 and above_high == 1:
            break
    else:
        if above_low != 1:
            return False
        # the single root in (a, b] must be sqrt(square) itself
        on_bound = sq.gcd(Polynomial([-square, 0, 1]))
        if on_bound.degree < 1 or count_roots_between(sturm_sequence(on_bound), a, b) == 0:
            return False

    if repeated_sequence is None:
        return True
    return count_roots_above(repeated_sequence, a) + (1 if repeated(a) == 0 else 0) == 0
