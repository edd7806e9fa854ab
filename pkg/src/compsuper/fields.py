"""Exact scalar arithmetic over Q, GF(p) and GF(p^2) for small p.

Finite field elements are plain ints (codes 0..q-1), rationals are
`fractions.Fraction`; a Field object interprets the raw values.  All
operations are pure and exact, so exhaustive axiom checks over q <= 9
are cheap table lookups.
"""

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class MixedFields(FieldError):
    pass


class InfiniteField(FieldError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Base class; subclasses operate on raw element values."""

    name = "?"
    char = 0
    order = None  # None means infinite

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError

    def fmt(self, a):
        raise NotImplementedError

    def parse_elt(self, s):
        raise NotImplementedError

    def primitive_cube_root_raw(self):
        """Raw value of a primitive cube root of 1, or None."""
        if self.order is None:
            return None
        for a in self.elements():
            if a != self.one and self.mul(self.mul(a, a), a) == self.one:
                return a
        return None

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    name = "Q"
    char = 0
    order = None

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def from_int(self, n):
        return Fraction(n)

    def elements(self):
        raise InfiniteField("Q is not enumerable")

    def fmt(self, a):
        return str(Fraction(a))

    def parse_elt(self, s):
        return Fraction(s)


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in {self.name}")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.p)

    def fmt(self, a):
        return str(a)

    def parse_elt(self, s):
        return int(s) % self.p


class QuadraticField(Field):
    """GF(p^2) as GF(p)[x]/(x^2 + c1*x + c0); element a+bx coded as a + b*p."""

    def __init__(self, p, modulus):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        c0, c1 = modulus
        c0 %= p
        c1 %= p
        for t in range(p):  # irreducibility by trial roots
            if (t * t + c1 * t + c0) % p == 0:
                raise FieldError(f"x^2+{c1}x+{c0} is reducible over GF({p})")
        self.p = p
        self.modulus = (c0, c1)
        self.char = p
        self.order = p * p
        self.name = f"GF({p * p})"
        self.zero = 0
        self.one = 1
        q = self.order
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._neg_raw(a) for a in range(q)]
        inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    def _split(self, a):
        return a % self.p, a // self.p

    def _join(self, a0, a1):
        return (a0 % self.p) + (a1 % self.p) * self.p

    def _add_raw(self, a, b):
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        return self._join(a0 + b0, a1 + b1)

    def _neg_raw(self, a):
        a0, a1 = self._split(a)
        return self._join(-a0, -a1)

    def _mul_raw(self, a, b):
        # (a0+a1 x)(b0+b1 x) with x^2 = -c1 x - c0
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        c0, c1 = self.modulus
        hi = a1 * b1
        return self._join(a0 * b0 - hi * c0, a0 * b1 + a1 * b0 - hi * c1)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self.name}")
        return self._inv[a]

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.order)

    def fmt(self, a):
        a0, a1 = self._split(a)
        if a1 == 0:
            return str(a0)
        xs = "x" if a1 == 1 else f"{a1}x"
        return xs if a0 == 0 else f"{xs}+{a0}"

    def parse_elt(self, s):
        s = s.replace(" ", "")
        if "x" not in s:
            return int(s) % self.p
        xs, _, rest = s.partition("x")
        a1 = 1 if xs == "" else int(xs)
        a0 = int(rest.lstrip("+")) if rest else 0
        return self._join(a0, a1)


QQ = RationalField()
_CACHE = {}


def GF(q):
    """GF(q) for q prime, or the fixed models GF(4)=GF(2)[x]/(x^2+x+1),
    GF(9)=GF(3)[x]/(x^2+1)."""
    if q in _CACHE:
        return _CACHE[q]
    if q == 4:
        f = QuadraticField(2, (1, 1))
    elif q == 9:
        f = QuadraticField(3, (1, 0))
    else:
        f = PrimeField(q)
    _CACHE[q] = f
    return f


def field_from_string(s):
    """Parse a field name: "Q", "GF(2)", "GF(3)", "GF(4)", "GF(9)"."""
    s = s.strip()
    if s == "Q":
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        return GF(int(s[3:-1]))
    raise FieldError(f"unknown field {s!r}")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; arithmetic checks the tag."""

    field: Field
    value: object

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        return self.field.from_int(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._coerce(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return self.value == self.field.from_int(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.fmt(self.value)


def field_arith(a, b, op):
    """Binary/unary field operation on Scalars: add | mul | inv | neg."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise FieldError(f"unknown op {op!r}")


def enumerate_elements(field):
    """All elements of a finite field as Scalars, each exactly once."""
    return [Scalar(field, v) for v in field.elements()]


def primitive_cube_root(field):
    """Scalar w != 1 with w^3 = 1, or None if the field has none."""
    raw = field.primitive_cube_root_raw()
    return None if raw is None else Scalar(field, raw)
