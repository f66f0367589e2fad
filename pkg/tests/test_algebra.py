import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cardgeom.algebra import FpVector, decode, encode, group_sum, negate, rational_ops, ternary
from cardgeom.errors import DivisionByZero, InvalidCode, MixedSpaces


def vec(s, p):
    return FpVector(tuple(int(ch) for ch in s), p)


def test_empty_sum_is_zero():
    assert group_sum([], p=3, n=4) == FpVector.zero(3, 4)
    with pytest.raises(MixedSpaces):
        group_sum([])


def test_sum_examples():
    assert group_sum([vec("1111", 3), vec("2222", 3)]) == vec("0000", 3)
    assert group_sum([vec("100000", 2), vec("010000", 2), vec("110000", 2)]) == vec("000000", 2)


def test_mixed_spaces_rejected():
    with pytest.raises(MixedSpaces):
        group_sum([vec("1111", 3), vec("111111", 2)])
    with pytest.raises(MixedSpaces):
        group_sum([vec("111", 3), vec("1111", 3)])


@pytest.mark.parametrize(
    "v, p, expected",
    [("1201", 3, "2102"), ("011010", 2, "011010"), ("0000", 3, "0000")],
)
def test_negate(v, p, expected):
    assert negate(vec(v, p)) == vec(expected, p)


def test_coordinates_validated():
    with pytest.raises(InvalidCode):
        FpVector((0, 3), 3)
    with pytest.raises(InvalidCode):
        decode(81, 3, 4)


@pytest.mark.parametrize("p, n", [(2, 6), (3, 4)])
def test_group_laws_exhaustive_pairs(p, n):
    vs = [FpVector.decode(c, p, n) for c in range(p**n)]
    zero = FpVector.zero(p, n)
    for a, b in itertools.product(vs, repeat=2):
        assert a + b == b + a
    for a in vs:
        assert a + negate(a) == zero


@given(st.lists(st.integers(0, 80), min_size=3, max_size=3))
def test_sum_associative_ternary(codes):
    a, b, c = (FpVector.decode(x, 3, 4) for x in codes)
    assert (a + b) + c == a + (b + c) == group_sum([a, b, c])


@pytest.mark.parametrize("p, n", [(2, 6), (3, 4), (5, 3), (7, 3)])
def test_encoding_round_trips(p, n):
    for code in range(p**n):
        assert encode(decode(code, p, n), p) == code


def test_encoding_is_big_endian():
    assert FpVector.decode(1, 3, 4).coords == (0, 0, 0, 1)
    assert vec("1000", 3).encode() == 27
    assert vec("100000", 2).encode() == 32


def test_xor_is_binary_addition():
    for a, b in itertools.product(range(64), repeat=2):
        assert (FpVector.decode(a, 2, 6) + FpVector.decode(b, 2, 6)).encode() == a ^ b


def test_ternary_tables_agree_with_vectors():
    t = ternary(4)
    for a, b in itertools.product(range(81), repeat=2):
        assert t.add[a][b] == (FpVector.decode(a, 3, 4) + FpVector.decode(b, 3, 4)).encode()


def test_rational_examples():
    assert rational_ops(Fraction(1, 61), Fraction(0), "add") == Fraction(1, 61)
    step = rational_ops(Fraction(1), Fraction(1, 61), "sub")
    assert rational_ops(step, Fraction(60), "div") == Fraction(1, 61)
    assert rational_ops(Fraction(56, 3599), Fraction(3599, 56), "mul") == 1
    with pytest.raises(DivisionByZero):
        rational_ops(Fraction(1), Fraction(0), "div")
    with pytest.raises(ZeroDivisionError):
        rational_ops(Fraction(1), Fraction(0), "div")


def test_rationals_against_cross_multiplication():
    rng = random.Random(11)
    for _ in range(1000):
        a, b = rng.randint(-10**15, 10**15), rng.randint(1, 10**15)
        c, d = rng.randint(-10**15, 10**15), rng.randint(1, 10**15)
        x, y = Fraction(a, b), Fraction(c, d)
        for op, (num, den) in {
            "add": (a * d + c * b, b * d),
            "sub": (a * d - c * b, b * d),
            "mul": (a * c, b * d),
        }.items():
            r = rational_ops(x, y, op)
            assert r.numerator * den == num * r.denominator
        if c:
            r = rational_ops(x, y, "div")
            assert r.numerator * (b * c) == (a * d) * r.denominator
            assert r.denominator > 0
