"""Exact scalar arithmetic in F and its quadratic extension E = F[i].

F is either a prime field F_p with p = 3 (mod 4), so that -1 is a
non-square, or the rationals.  Elements are plain Python numbers:
canonical residues in [0, p) in the prime case, ints or reduced
Fractions with positive denominator in the rational case.  A field
object owns reduction, inversion and square testing; geometry code does
raw +, -, * on representatives and reduces once per output, which keeps
the exact predicates cheap enough for the censuses.

Elements of E are pairs (re, im) of F-elements with i^2 = -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Tuple, Union

from .errors import DivisionByZero, InvalidField, UnsupportedForRationals

Element = Union[int, Fraction]
ExtElement = Tuple[Element, Element]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


class PrimeField:
    """F_p with p an odd prime, p = 3 (mod 4)."""

    __slots__ = ("p", "_inv2")

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidField(f"{p!r} is not a prime")
        if p % 4 != 3:
            raise InvalidField(
                f"p = {p}: need p = 3 (mod 4) so that -1 is a non-square"
            )
        self.p = p
        self._inv2 = pow(2, p - 2, p)

    @property
    def char(self) -> int:
        return self.p

    def spec(self) -> str:
        return f"p:{self.p}"

    def reduce(self, x) -> int:
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return x % self.p

    def add(self, a, b) -> int:
        return (a + b) % self.p

    def sub(self, a, b) -> int:
        return (a - b) % self.p

    def mul(self, a, b) -> int:
        return a * b % self.p

    def neg(self, a) -> int:
        return -a % self.p

    def inv(self, a) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b) -> int:
        return a * self.inv(b) % self.p

    def half(self, a) -> int:
        return a * self._inv2 % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def is_square(self, a) -> bool:
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a) -> int:
        """Square root of a square; p = 3 (mod 4) gives a^((p+1)/4)."""
        a %= self.p
        r = pow(a, (self.p + 1) // 4, self.p)
        if r * r % self.p != a:
            raise ValueError(f"{a} is not a square mod {self.p}")
        return r

    def random(self, rng) -> int:
        return rng.randrange(self.p)

    def elements(self) -> Iterable[int]:
        return range(self.p)

    def parse(self, token: str) -> int:
        token = token.strip()
        if "/" in token:
            num, den = token.split("/", 1)
            return self.div(int(num), int(den))
        return int(token) % self.p

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """The rationals; canonical form is int, or reduced Fraction."""

    __slots__ = ()

    char = 0
    # uniform range used by random(); census generators pass their own bounds
    RANDOM_BOUND = 1000

    def spec(self) -> str:
        return "rational"

    def reduce(self, x) -> Element:
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def add(self, a, b) -> Element:
        return self.reduce(a + b)

    def sub(self, a, b) -> Element:
        return self.reduce(a - b)

    def mul(self, a, b) -> Element:
        return self.reduce(a * b)

    def neg(self, a) -> Element:
        return -a

    def inv(self, a) -> Element:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self.reduce(1 / Fraction(a))

    def div(self, a, b) -> Element:
        if b == 0:
            raise DivisionByZero("division by 0")
        return self.reduce(Fraction(a) / Fraction(b))

    def half(self, a) -> Element:
        return self.reduce(Fraction(a) / 2)

    def is_zero(self, x) -> bool:
        return x == 0

    def is_square(self, a) -> bool:
        # numerator/denominator perfect-square test on the reduced fraction
        a = Fraction(a)
        if a < 0:
            return False
        n, d = a.numerator, a.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def sqrt(self, a) -> Element:
        a = Fraction(a)
        if not self.is_square(a):
            raise ValueError(f"{a} is not a rational square")
        return self.reduce(Fraction(isqrt(a.numerator), isqrt(a.denominator)))

    def random(self, rng) -> int:
        return rng.randrange(self.RANDOM_BOUND)

    def elements(self):
        raise UnsupportedForRationals("cannot enumerate the rationals")

    def parse(self, token: str) -> Element:
        token = token.strip()
        if "/" in token:
            return self.reduce(Fraction(token))
        return int(token)

    def format(self, a) -> str:
        if isinstance(a, Fraction):
            return f"{a.numerator}/{a.denominator}"
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"


Field = Union[PrimeField, RationalField]


def parse_field(spec: str) -> Field:
    """Parse the CLI field syntax: ``p:<prime>`` or ``rational``."""
    spec = spec.strip()
    if spec == "rational":
        return RationalField()
    if spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError as exc:
            raise InvalidField(f"bad field spec {spec!r}") from exc
        return PrimeField(p)
    raise InvalidField(f"bad field spec {spec!r} (expected 'p:<prime>' or 'rational')")


# ---------------------------------------------------------------------------
# E = F[i] arithmetic on (re, im) pairs.

def ext(field: Field, re, im=0) -> ExtElement:
    return (field.reduce(re), field.reduce(im))


def ext_add(field: Field, w: ExtElement, t: ExtElement) -> ExtElement:
    return (field.reduce(w[0] + t[0]), field.reduce(w[1] + t[1]))


def ext_sub(field: Field, w: ExtElement, t: ExtElement) -> ExtElement:
    return (field.reduce(w[0] - t[0]), field.reduce(w[1] - t[1]))


def ext_neg(field: Field, w: ExtElement) -> ExtElement:
    return (field.neg(w[0]), field.neg(w[1]))


def ext_mul(field: Field, w: ExtElement, t: ExtElement) -> ExtElement:
    a, b = w
    c, d = t
    return (field.reduce(a * c - b * d), field.reduce(a * d + b * c))


def ext_conj(field: Field, w: ExtElement) -> ExtElement:
    return (w[0], field.neg(w[1]))


def ext_re(field: Field, w: ExtElement) -> ExtElement:
    """(w + conj(w)) / 2, the purely real part as an element of E."""
    return (w[0], field.reduce(0))


def ext_im(field: Field, w: ExtElement) -> ExtElement:
    """(w - conj(w)) / 2, the purely imaginary part as an element of E."""
    return (field.reduce(0), w[1])


def ext_is_zero(field: Field, w: ExtElement) -> bool:
    return field.is_zero(w[0]) and field.is_zero(w[1])


def ext_div(field: Field, w: ExtElement, t: ExtElement) -> ExtElement:
    # |t|^2 = t0^2 + t1^2 vanishes only at t = 0 since -1 is a non-square
    nrm = t[0] * t[0] + t[1] * t[1]
    if field.is_zero(nrm):
        raise DivisionByZero("division by zero in E")
    inv = field.inv(field.reduce(nrm))
    return (
        field.reduce((w[0] * t[0] + w[1] * t[1]) * inv),
        field.reduce((w[1] * t[0] - w[0] * t[1]) * inv),
    )
