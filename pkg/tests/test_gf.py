import itertools

import numpy as np
import pytest

from mrcweights.gf import (
    GF,
    ElementOutOfRange,
    FieldError,
    FieldSpec,
    InverseOfZero,
    enumerate_elements,
    field_arith,
    is_irreducible,
)

SMALL_FIELDS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_gf16_mul_reduces_modulo_x4_x_1():
    F = FieldSpec(2, 4, (1, 1, 0, 0, 1))
    assert F.mul(2, 8) == 3
    assert field_arith(F, "mul", 2, 8) == 3


def test_gf16_default_modulus():
    assert GF(16).modulus == (1, 1, 0, 0, 1)
    assert GF(8).modulus == (1, 1, 0, 1)


def test_gf5_add():
    assert field_arith(GF(5), "add", 3, 4) == 2


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_inverse(q):
    F = GF(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert field_arith(F, "inv", a) == F.inv(a)


def test_inverse_of_zero():
    with pytest.raises(InverseOfZero):
        GF(8).inv(0)
    with pytest.raises(ZeroDivisionError):
        field_arith(GF(5), "inv", 0)


def test_element_out_of_range():
    with pytest.raises(ElementOutOfRange):
        field_arith(GF(4), "add", 4, 1)
    with pytest.raises(ElementOutOfRange):
        field_arith(GF(4), "mul", 1, -1)


def test_unknown_op():
    with pytest.raises(ValueError):
        field_arith(GF(4), "xor", 1, 2)


def test_enumerate_elements():
    assert enumerate_elements(GF(2)) == (0, 1)
    assert len(enumerate_elements(GF(4))) == 4
    els = enumerate_elements(GF(16))
    assert els[0] == 0 and els[-1] == 15


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_field_axioms_exhaustive(q):
    F = GF(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_mul_is_repeated_add_in_prime_fields(p):
    F = GF(p)
    for a in range(p):
        acc = 0
        for b in range(p):
            assert F.mul(a, b) == acc
            acc = F.add(acc, a)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_pow_matches_repeated_mul(q):
    F = GF(q)
    for a in range(q):
        acc = 1
        for e in range(q + 1):
            assert F.pow(a, e) == acc
            assert field_arith(F, "pow", a, e) == acc
            acc = F.mul(acc, a)


def test_negative_power():
    F = GF(7)
    assert F.pow(3, -1) == F.inv(3)


@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_vectorised_ops_match_scalar(q):
    F = GF(q)
    a, b = np.meshgrid(np.arange(q), np.arange(q))
    va, vm = F.vadd(a, b), F.vmul(a, b)
    for x, y in itertools.product(range(q), repeat=2):
        assert va[y, x] == F.add(x, y)
        assert vm[y, x] == F.mul(x, y)
    table = F.multiples([1, 2, 3 % q])
    assert table.shape == (q, 3)
    assert all(table[c, 1] == F.mul(c, 2) for c in range(q))


def test_alternative_modulus():
    F = FieldSpec(2, 4, (1, 0, 0, 1, 1))  # x^4 + x^3 + 1
    assert F.mul(2, 8) == 9  # x^4 = x^3 + 1


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldSpec(2, 4, (1, 0, 1, 0, 1))  # (x^2 + x + 1)^2
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 1, 1), 2)


@pytest.mark.parametrize("q", [1, 6, 12, 100, 1 << 17])
def test_invalid_field_sizes(q):
    with pytest.raises(FieldError):
        GF(q)


def test_modulus_degree_mismatch():
    with pytest.raises(FieldError):
        FieldSpec(2, 3, (1, 1, 0, 0, 1))


@pytest.mark.parametrize("q", [2, 5, 8, 9, 16, 256])
def test_serialisation_round_trip(q):
    F = GF(q)
    assert FieldSpec.parse(str(F)) == F


def test_serialised_form():
    assert str(GF(16)) == "q=16 poly=1,1,0,0,1"
    assert str(GF(5)) == "q=5 poly=0,1"
