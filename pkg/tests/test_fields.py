import random

import pytest

from daolab.errors import FieldError
from daolab.fields import GF, QQ, field_from_name, is_prime


def test_prime_validation():
    with pytest.raises(FieldError):
        GF(4)
    with pytest.raises(FieldError):
        GF(2)  # modulus must be odd
    with pytest.raises(FieldError):
        GF(32004)
    assert GF(3).p == 3
    assert GF(32003).p == 32003


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 32003, 101}
    for n in range(2, 120):
        assert is_prime(n) == all(n % d for d in range(2, n)), n
    assert is_prime(32003)


def test_inverses_by_random_sampling():
    rng = random.Random(1)
    F = GF(32003)
    for _ in range(200):
        a = F.random_nonzero(rng)
        assert F.mul(a, F.inv(a)) == F.one
    for _ in range(50):
        a = QQ.random_nonzero(rng)
        assert QQ.mul(a, QQ.inv(a)) == QQ.one


def test_field_names_roundtrip():
    assert field_from_name("Q") == QQ
    assert field_from_name("F32003") == GF(32003)
    with pytest.raises(FieldError):
        field_from_name("F15")
    with pytest.raises(FieldError):
        field_from_name("GF7")


def test_arithmetic_mod_p():
    F = GF(5)
    assert F.add(3, 3) == 1
    assert F.sub(1, 3) == 3
    assert F.neg(2) == 3
    assert F.div(1, 2) == 3  # 2 * 3 = 6 = 1
