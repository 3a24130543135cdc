from nodalsextic.kernels import (
    QUADRATIC_PAIRS,
    kappa_kernel_check,
    kappa_matrix,
    kappa_prime_matrix,
    stacked_kappa_prime_rank,
    stacked_kappa_rank,
)
from nodalsextic.poly import scalar_rank


def test_quadratic_pairs():
    assert len(QUADRATIC_PAIRS) == 6
    assert all(a <= b for a, b in QUADRATIC_PAIRS)


def test_single_kappa_rank():
    for j in range(3):
        assert scalar_rank([list(r) for r in kappa_matrix(j)]) == 3


def test_stacked_ranks():
    assert stacked_kappa_rank() == 6
    assert stacked_kappa_prime_rank() == 3


def test_kernel_check():
    assert kappa_kernel_check()


def test_kappa_prime_shape():
    for j in range(3):
        m = kappa_prime_matrix(j)
        assert len(m) == 1 and len(m[0]) == 3
