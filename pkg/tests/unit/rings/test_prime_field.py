import pytest

from sparsekron.errors import NotPrime, RingTooSmall
from sparsekron.rings import (Integers, PrimeField, find_element_of_order_geq,
                              mk_prime_field)

from .base_test_ring import BaseTestRing


class TestPrimeField(BaseTestRing):

    @staticmethod
    @pytest.fixture(scope="class")
    def ring():
        return PrimeField(17)

    @staticmethod
    def test_residues_are_canonical(ring):
        assert ring.normalize(-1) == 16
        assert ring.normalize(35) == 1
        assert ring.size == 17
        assert ring.is_field
        assert str(ring) == "fq:17"

    @staticmethod
    def test_division(ring):
        assert ring.mul(ring.div(3, 5), 5) == 3
        assert ring.mul(ring.inv(7), 7) == 1

    @staticmethod
    def test_division_by_zero(ring):
        with pytest.raises(ZeroDivisionError):
            ring.div(1, 17)

    @staticmethod
    def test_multiplicative_order(ring):
        assert ring.multiplicative_order(1) == 1
        assert ring.multiplicative_order(16) == 2
        assert ring.multiplicative_order(2) == 8
        assert ring.multiplicative_order(3) == 16


def test_rejects_composite_modulus():
    with pytest.raises(NotPrime):
        mk_prime_field(4)
    with pytest.raises(NotPrime):
        PrimeField(91)


def test_rejects_modulus_below_two():
    with pytest.raises(ValueError):
        mk_prime_field(1)


def test_find_element_of_order_geq():
    f7 = PrimeField(7)
    # 2 has order 3 mod 7, 3 is a primitive root
    assert f7.find_element_of_order_geq(3) == 2
    assert f7.find_element_of_order_geq(4) == 3
    assert find_element_of_order_geq(f7, 6) == 3


def test_find_element_of_order_geq_too_small():
    with pytest.raises(RingTooSmall):
        PrimeField(7).find_element_of_order_geq(7)


def test_find_element_of_order_geq_needs_prime_field():
    with pytest.raises(TypeError):
        find_element_of_order_geq(Integers(), 3)


def test_f2_uses_one():
    assert PrimeField(2).find_element_of_order_geq(1) == 1
