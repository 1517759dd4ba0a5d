import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_primes():
    from fermat_zeros.arith import odd_primes_up_to

    return odd_primes_up_to(2000)
