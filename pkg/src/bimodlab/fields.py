"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every computation in the package runs over one of these fields; there is
no floating point anywhere.  Rational values are kept reduced with a
positive denominator (the backing types guarantee this).
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    _mpq = None


class FieldError(ValueError):
    """Malformed scalar input or mixing of distinct fields."""


class FpElement:
    """An element of the prime field F_p, normalized to 0 <= v < p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError("mixing elements of F_%d and F_%d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3,317,044,064,679,887,385,961,981
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A field of exact scalars.  Subclasses fix the element type."""

    characteristic = 0

    def of(self, numerator, denominator=1):
        raise NotImplementedError

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def parse(self, text):
        """Parse 'p' or 'p/q' into a field element."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                return self.of(int(num), int(den))
            except ValueError:
                raise FieldError("bad scalar %r" % text)
        try:
            return self.of(int(text))
        except ValueError:
            raise FieldError("bad scalar %r" % text)

    def format(self, x):
        raise NotImplementedError


class RationalField(Field):
    """The rationals, backed by gmpy2.mpq when available."""

    characteristic = 0

    def __init__(self):
        self._make = _mpq if _mpq is not None else Fraction

    def of(self, numerator, denominator=1):
        if denominator == 0:
            raise FieldError("zero denominator")
        return self._make(numerator, denominator)

    def format(self, x):
        n, d = x.numerator, x.denominator
        return "%d" % n if d == 1 else "%d/%d" % (n, d)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """F_p for a prime p < 2**31."""

    def __init__(self, p):
        if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
            raise FieldError("prime field modulus must be a prime below 2**31, got %r" % (p,))
        self.p = p
        self.characteristic = p

    def of(self, numerator, denominator=1):
        x = FpElement(numerator, self.p)
        if denominator != 1:
            x = x / denominator
        return x

    def format(self, x):
        return "%d" % x.v

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def parse_field(text):
    """Parse a field spec: 'Q' or 'Fp:<p>' (also accepts 'Fp <p>' split upstream)."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError:
            raise FieldError("bad field spec %r" % text)
    raise FieldError("bad field spec %r (expected Q or Fp:<prime>)" % text)
