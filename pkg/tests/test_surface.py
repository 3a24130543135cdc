import pytest

from nodalsextic import (
    ONE,
    SQRT5,
    TAU,
    ZERO,
    CertificationError,
    QSqrt5,
    certify_exact,
    nodes_from_json,
    nodes_to_json,
    parse_poly,
)
from nodalsextic.surface import (
    gradient,
    hessian,
    infinity_nodes,
    normalize_exact,
)


def test_sextic_shape(sextic):
    assert sextic.degree() == 6
    assert sextic.is_homogeneous()
    assert len(sextic.terms) == 17
    # x0^6 coefficient is -(2*tau+1)/4 = -(2+sqrt5)/4.
    assert sextic.coefficient((6, 0, 0, 0)) == -(2 + SQRT5) / 4


def test_sextic_vanishes_on_known_node(sextic):
    # (0, 1, tau, tau^2) lies on two of the six lines at infinity.
    pt = (ZERO, ONE, TAU, TAU * TAU)
    assert sextic.eval(pt) == ZERO
    assert all(g.eval(pt) == ZERO for g in gradient(sextic))


def test_normalize_exact():
    pt = normalize_exact((ZERO, TAU, ONE, SQRT5))
    assert pt[1] == ONE


def test_certify_rejects_smooth_point(sextic):
    with pytest.raises(CertificationError):
        certify_exact(sextic, (ZERO, ONE, TAU, ZERO))


def test_infinity_nodes(sextic):
    pts = infinity_nodes(sextic)
    assert len(pts) == 15
    assert all(n.coords[0] == ZERO for n in pts)
    assert all(n.hessian_rank == 3 for n in pts)


def test_node_census(nodes):
    assert len(nodes) == 65
    assert [n.id for n in nodes] == list(range(1, 66))
    assert all(n.is_exact() for n in nodes)
    assert all(n.hessian_rank == 3 for n in nodes)
    assert sum(1 for n in nodes if n.coords[0] == ZERO) == 15


def test_nodes_projectively_distinct(nodes):
    seen = {tuple(normalize_exact(n.coords)) for n in nodes}
    assert len(seen) == 65


def test_json_roundtrip(nodes):
    back = nodes_from_json(nodes_to_json(nodes))
    assert len(back) == len(nodes)
    for a, b in zip(nodes, back):
        assert a.id == b.id and a.status == b.status and a.coords == b.coords


def test_hessian_rank_exact(sextic, nodes):
    h = hessian(sextic)
    # Spot-check a handful of nodes; the full sweep is covered by the census.
    for n in nodes[::13]:
        assert h.rank_at(n.coords) == 3
