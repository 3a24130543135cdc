from nodalsextic import (
    EXPECTED_SCALAR,
    ONE,
    SQRT5,
    TAU,
    ZERO,
    QSqrt5,
    rank_partition,
    verify_determinant,
)
from nodalsextic.detrep import proportionality_scalar


def test_expected_scalar_is_minus_four_ninths_taubar_cubed():
    taubar = (1 - SQRT5) / 2
    assert EXPECTED_SCALAR == -QSqrt5(4, 0) / 9 * taubar**3
    assert taubar**3 == 2 - SQRT5


def test_matrix_shape(matrix_a):
    assert matrix_a.shape == (6, 6)
    assert matrix_a.is_symmetric()
    assert matrix_a.is_linear()
    # Zero diagonal except the (1,1) slot.
    for i in range(1, 6):
        assert matrix_a[i, i].is_zero()
    assert not matrix_a[0, 0].is_zero()


def test_determinant_identity(matrix_a, sextic):
    rep = verify_determinant(matrix_a, sextic)
    assert rep.scalar == EXPECTED_SCALAR
    assert rep.symmetric and rep.linear


def test_proportionality_scalar(sextic):
    assert proportionality_scalar(sextic.scale(TAU), sextic) == TAU


def test_rank_partition(matrix_a, nodes):
    parts = rank_partition(matrix_a, nodes)
    assert {r: len(s) for r, s in parts.items()} == {4: 35, 5: 30}
    covered = set().union(*parts.values())
    assert covered == set(range(1, 66))


def test_rank_at_smooth_point(matrix_a):
    assert matrix_a.rank_at((ZERO, ONE, TAU, ZERO)) == 5
