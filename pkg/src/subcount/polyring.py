"""Exact dense polynomials in one variable over the integers.

Coefficients are arbitrary-precision ints stored in ascending order of
exponent, with no trailing zeros, so equal polynomials always compare equal.
"""


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class NonExactDivision(ArithmeticError):
    """Raised when polynomial division leaves a remainder.

    The offending remainder (and the partial quotient) ride along so callers
    can report exactly what failed to divide.
    """

    def __init__(self, quotient, remainder):
        super().__init__("division is not exact; remainder %s" % (remainder,))
        self.quotient = quotient
        self.remainder = remainder


class IntPoly:
    """Immutable integer polynomial."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cleaned = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError("coefficients must be ints, got %r" % (c,))
            cleaned.append(c)
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        self._coeffs = tuple(cleaned)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def term(cls, coeff, exponent):
        """The monomial coeff * p**exponent."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative, got %d" % exponent)
        if coeff == 0:
            return cls()
        return cls((0,) * exponent + (coeff,))

    @property
    def coeffs(self):
        """Ascending coefficient tuple, no trailing zeros."""
        return self._coeffs

    @property
    def is_zero(self):
        return not self._coeffs

    def degree(self):
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self._coeffs) - 1

    def leading_coeff(self):
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by p**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs:
            return self
        return IntPoly((0,) * k + self._coeffs)

    def divmod(self, other):
        """Long division; returns (quotient, remainder)."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by %r" % (other,))
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self._coeffs)
        div = other._coeffs
        dn = len(div)
        lead = div[-1]
        if len(rem) < dn:
            return IntPoly(), self
        quo = [0] * (len(rem) - dn + 1)
        for i in range(len(rem) - dn, -1, -1):
            top = rem[i + dn - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r != 0:
                # leading term does not divide; stop with what is left
                break
            quo[i] = q
            for j, c in enumerate(div):
                rem[i + j] -= q * c
        return IntPoly(quo), IntPoly(rem)

    def exact_div(self, other):
        """Divide exactly, raising NonExactDivision if a remainder is left."""
        quo, rem = self.divmod(other)
        if not rem.is_zero:
            raise NonExactDivision(quo, rem)
        return quo

    def eval_at(self, x):
        """Evaluate at an integer point by Horner's rule."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def text(self):
        """Human-readable form like 'p^3 + 2*p^2 + p + 1'."""
        if not self._coeffs:
            return "0"
        pieces = []
        for e in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "p" if e == 1 else "p^%d" % e
                body = power if mag == 1 else "%d*%s" % (mag, power)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json(self):
        """Ascending coefficient list; the zero polynomial is []."""
        return list(self._coeffs)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    @staticmethod
    def _coerce(value):
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return IntPoly((value,))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == IntPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return "IntPoly(%r)" % (self._coeffs,)

    def __str__(self):
        return self.text()


ZERO = IntPoly.zero()
ONE = IntPoly.one()
P = IntPoly((0, 1))


def geometric(k):
    """1 + p + ... + p**(k-1), the zero polynomial when k <= 0."""
    if k <= 0:
        return ZERO
    return IntPoly((1,) * k)
