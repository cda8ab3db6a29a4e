"""The slab-walking reference construction and its guard rails."""

from fractions import Fraction

import pytest

from reebforge.errors import InputError
from reebforge.fields import ScalarField
from reebforge.gallery import subdivided_sphere
from reebforge.oracle import oracle_reeb, oracle_size_limit
from reebforge.simplicial import build_complex

TETRA = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_tetra_frozen():
    g = oracle_reeb(build_complex(TETRA), ScalarField([Fraction(i) for i in range(4)]))
    assert g.stats() == {"nodes": 2, "arcs": 1, "b1": 0, "loops": 0, "components": 1}
    assert [(n.height, n.kind) for n in g.nodes] == [(0, "extremum"), (3, "extremum")]
    assert g.arcs[0].interior_vertices == (1, 2)
    assert g.vertex_map == (("node", 0), ("arc", 0), ("arc", 0), ("node", 1))


def test_flat_equator_single_node():
    # double cone over a square whose equator is one flat cluster
    c = build_complex(
        [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4), (0, 1, 5), (1, 2, 5), (2, 3, 5), (3, 0, 5)]
    )
    f = ScalarField([0, 0, 0, 0, -1, 1])
    g = oracle_reeb(c, f)
    assert g.stats() == {"nodes": 3, "arcs": 2, "b1": 0, "loops": 0, "components": 1}
    mid = g.nodes[1]
    assert mid.kind == "flat-cluster"
    assert mid.vertices == (0, 1, 2, 3)


def test_size_limit_enforced(monkeypatch):
    c = subdivided_sphere(2)  # 66 vertices
    f = ScalarField([float(v) for v in range(c.vertex_count)])
    with pytest.raises(InputError):
        oracle_reeb(c, f, limit=10)
    monkeypatch.setenv("REEBFORGE_ORACLE_MAX", "10")
    assert oracle_size_limit() == 10
    with pytest.raises(InputError):
        oracle_reeb(c, f)
    monkeypatch.setenv("REEBFORGE_ORACLE_MAX", "banana")
    with pytest.raises(InputError):
        oracle_size_limit()


def test_empty_and_degenerate_fields():
    c = build_complex([], vertex_count=0)
    assert oracle_reeb(c, ScalarField([])).stats()["nodes"] == 0
    one = build_complex([], vertex_count=1)
    g = oracle_reeb(one, ScalarField([Fraction(5)]))
    assert g.stats() == {"nodes": 1, "arcs": 0, "b1": 0, "loops": 0, "components": 1}
    assert g.nodes[0].kind == "extremum"


def test_oracle_is_independent_of_the_sweep():
    # the reference path must not delegate to the implementation under test
    import inspect

    import reebforge.oracle as oracle_module

    src = inspect.getsource(oracle_module)
    assert "compute_reeb" not in src
    assert "LevelSlicer" not in src
