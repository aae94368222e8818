import pytest
from hypothesis import given
from hypothesis import strategies as st

from smallwitt.gf import SUPPORTED_PRIMES, FieldElement, ff_inv


@pytest.mark.parametrize("p, x, expected", [(3, 1, 1), (3, 2, 2), (7, 3, 5)])
def test_ff_inv_examples(p, x, expected):
    assert ff_inv(FieldElement(x, p)) == FieldElement(expected, p)


@pytest.mark.parametrize("p", SUPPORTED_PRIMES)
def test_every_nonzero_element_has_inverse(p):
    for x in range(1, p):
        assert (FieldElement(x, p) * ff_inv(FieldElement(x, p))).value == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError, match="no inverse of zero"):
        ff_inv(FieldElement(0, 3))


def test_unsupported_modulus():
    with pytest.raises(ValueError):
        FieldElement(1, 4)


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        FieldElement(1, 3) + FieldElement(1, 5)


@given(st.sampled_from(SUPPORTED_PRIMES), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_field_axioms(p, a, b, c):
    x, y, z = FieldElement(a, p), FieldElement(b, p), FieldElement(c, p)
    assert 0 <= x.value < p
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x
    assert -x + x == FieldElement(0, p)
    if y:
        assert (x / y) * y == x
