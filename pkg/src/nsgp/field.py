"""Exact coefficient fields: the rationals and prime fields GF(p)."""
from __future__ import annotations

import os
from fractions import Fraction


class RationalField:
    name = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, num, den=1):
        return Fraction(num, den)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return 1 / x

    def to_pair(self, x):
        x = Fraction(x)
        return x.numerator, x.denominator

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """Integers modulo a prime ``p``; elements are plain ints in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, p: int = 2_147_483_647):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"prime:{p}"

    def __call__(self, num, den=1):
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * den
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
        return (num * pow(den, -1, self.p)) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        return pow(x, -1, self.p)

    def to_pair(self, x):
        # symmetric representative so that -1 prints as -1
        x %= self.p
        return (x - self.p if x > self.p // 2 else x), 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def parse_field(spec: str | None):
    """Parse ``rational`` or ``prime:<p>`` (the NSGP_FIELD syntax)."""
    if spec is None or spec in ("", "rational", "QQ"):
        return QQ
    if spec.startswith("prime"):
        _, _, p = spec.partition(":")
        return PrimeField(int(p)) if p else PrimeField()
    raise ValueError(f"unknown field spec {spec!r}")


def field_from_env():
    return parse_field(os.environ.get("NSGP_FIELD"))
