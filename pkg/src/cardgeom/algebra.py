"""Vectors over F_p and exact rationals.

Cards everywhere in the package are plain integers: the base-p digits of
the code, most significant first, are the vector coordinates.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZero, InvalidCode, MixedSpaces

Rational = Fraction


@dataclass(frozen=True)
class FpVector:
    coords: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if self.p < 2:
            raise InvalidCode(f"modulus {self.p} is not a prime")
        for x in self.coords:
            if not 0 <= x < self.p:
                raise InvalidCode(f"coordinate {x} outside [0, {self.p})")

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def space(self) -> tuple[int, int]:
        return (self.p, self.n)

    def encode(self) -> int:
        return encode(self.coords, self.p)

    @classmethod
    def decode(cls, code: int, p: int, n: int) -> "FpVector":
        return cls(decode(code, p, n), p)

    @classmethod
    def zero(cls, p: int, n: int) -> "FpVector":
        return cls((0,) * n, p)

    def __add__(self, other: "FpVector") -> "FpVector":
        return group_sum([self, other])

    def __neg__(self) -> "FpVector":
        return negate(self)

    def __str__(self) -> str:
        return "".join(str(x) for x in self.coords)


def encode(coords: Sequence[int], p: int) -> int:
    code = 0
    for x in coords:
        code = code * p + x
    return code


def decode(code: int, p: int, n: int) -> tuple[int, ...]:
    if not 0 <= code < p**n:
        raise InvalidCode(f"code {code} outside [0, {p}^{n})")
    digits = []
    for _ in range(n):
        code, r = divmod(code, p)
        digits.append(r)
    return tuple(reversed(digits))


def group_sum(vs: Iterable[FpVector], p: int | None = None, n: int | None = None) -> FpVector:
    """Coordinatewise sum mod p.

    An empty input needs ``p`` and ``n`` to know which zero vector to return.
    """
    vs = list(vs)
    if not vs:
        if p is None or n is None:
            raise MixedSpaces("empty sum needs an explicit space (p, n)")
        return FpVector.zero(p, n)
    space = vs[0].space
    if any(v.space != space for v in vs) or (p, n) not in ((None, None), space):
        raise MixedSpaces("vectors live in different spaces")
    p = space[0]
    return FpVector(tuple(sum(col) % p for col in zip(*(v.coords for v in vs))), p)


def negate(v: FpVector) -> FpVector:
    return FpVector(tuple((-x) % v.p for x in v.coords), v.p)


def xor_all(codes: Iterable[int]) -> int:
    """Group sum in Z_2^n on integer codes."""
    acc = 0
    for c in codes:
        acc ^= c
    return acc


class TernaryTables:
    """Addition and negation lookup tables for Z_3^n on integer codes."""

    def __init__(self, n: int):
        self.n = n
        self.size = 3**n
        self.digits = [decode(c, 3, n) for c in range(self.size)]
        self.add = [
            [encode([(x + y) % 3 for x, y in zip(a, b)], 3) for b in self.digits]
            for a in self.digits
        ]
        self.neg = [encode([(-x) % 3 for x in a], 3) for a in self.digits]

    def third(self, a: int, b: int) -> int:
        """The unique c with a + b + c = 0."""
        return self.neg[self.add[a][b]]


_TERNARY: dict[int, TernaryTables] = {}


def ternary(n: int) -> TernaryTables:
    if n not in _TERNARY:
        _TERNARY[n] = TernaryTables(n)
    return _TERNARY[n]


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_ops(a: Rational, b: Rational, op: str) -> Rational:
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "div" and b == 0:
        raise DivisionByZero(f"{a} / 0")
    return Fraction(_OPS[op](Fraction(a), Fraction(b)))
