"""Exact coefficient rings: the rationals, prime fields and Z/n.

Values are plain Python numbers (``Fraction`` for Q, ``int`` in ``range(n)``
otherwise); the ring object is the tag and carries all arithmetic.
"""
from fractions import Fraction
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class CoeffRing:
    kind = "abstract"
    is_field = False
    characteristic = 0

    zero = 0
    one = 1

    def __call__(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def mul(self, a, b):
        return self(a * b)

    def neg(self, a):
        return self(-a)

    def is_zero(self, a) -> bool:
        return a == 0

    def pow(self, a, e: int):
        return self(a ** e) if e >= 0 else self.pow(self.inv(a), -e)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pth_root(self, a):
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Rationals(CoeffRing):
    kind = "Q"
    name = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

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
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def pow(self, a, e):
        return a ** e

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class IntegerMod(CoeffRing):
    """Z/n for a positive modulus n (arithmetic reduced mod n)."""

    kind = "Zn"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        self.modulus = n
        self.characteristic = n
        self.name = f"Z{n}"

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                return self.div(self(value.numerator), self(value.denominator))
            value = value.numerator
        return int(value) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.modulus)
        return pow(a, e, self.modulus)

    def inv(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise ZeroDivisionError(f"{a} is not a unit in {self.name}") from None

    def elements(self):
        return range(self.modulus)

    def __eq__(self, other):
        return isinstance(other, IntegerMod) and other.kind == self.kind and other.modulus == self.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))


class PrimeField(IntegerMod):
    kind = "Fp"
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)
        self.name = f"F{p}"

    def pth_root(self, a):
        # Frobenius is the identity on F_p.
        return a


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def Zmod(n: int) -> IntegerMod:
    return IntegerMod(n)


def coeff_ring_from_name(name: str) -> CoeffRing:
    """``Q``, ``F<p>`` or ``Z<n>``, as written in the DSL."""
    if name == "Q":
        return QQ
    if name[:1] == "F" and name[1:].isdigit():
        return GF(int(name[1:]))
    if name[:1] == "Z" and name[1:].isdigit():
        return Zmod(int(name[1:]))
    raise ValueError(f"unknown coefficient ring {name!r}")


def format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)
