"""Acceptance suite: one test per shipped guarantee, time bounds included.

Guarantees c01..c11 each get a single test so `pytest -v` reports one
pass/fail line per guarantee. Random instances use fixed seeds and are
cached at module scope; the first test that needs them pays the
construction cost inside its own time budget.
"""

import json
import random
import subprocess
import sys
import textwrap
import time
from fractions import Fraction

from helpers import (
    distinct_random_field,
    graph_cut_counts,
    random_closed_surface,
    spec_to_graph,
    with_swapped_endpoint,
    without_node,
)
from reebforge.certify import certify_arc_cylindrical, certify_arc_embedding, certify_graph, certify_node_starlike
from reebforge.fields import ScalarField, classify_vertices
from reebforge.gallery import (
    gen_example1,
    gen_example2,
    gen_example3,
    gen_example4,
    gen_surface_zoo,
    random_spec,
    realize,
)
from reebforge.oracle import oracle_reeb
from reebforge.reeb import compute_reeb, graphs_isomorphic, minimal_structure

SEED = 20240817

_CACHE = {}


def random100():
    """100 random closed surfaces (V <= 500) with distinct fields, plus graphs."""
    if "random" not in _CACHE:
        rng = random.Random(SEED)
        out = []
        for _ in range(100):
            c = random_closed_surface(rng, max_vertices=500)
            f = ScalarField(distinct_random_field(rng, c.vertex_count))
            out.append((c, f, compute_reeb(c, f)))
        _CACHE["random"] = out
    return _CACHE["random"]


def gallery():
    """Every canonical instance: the four example families plus the zoo."""
    if "gallery" not in _CACHE:
        items = [
            ("example1", *gen_example1(3)),
            ("example2", *gen_example2(4)),
            ("example3", *gen_example3(4)),
            ("example4", *gen_example4(1)),
        ]
        items.extend(gen_surface_zoo())
        _CACHE["gallery"] = [(nm, c, f, compute_reeb(c, f)) for nm, c, f in items]
    return _CACHE["gallery"]


def test_c01_sweep_matches_oracle_on_random_surfaces():
    start = time.perf_counter()
    for c, f, g in random100():
        ref = oracle_reeb(c, f)
        assert graphs_isomorphic(g, ref)
        assert sorted(g.node_heights()) == sorted(ref.node_heights())
    assert time.perf_counter() - start < 60.0


def test_c02_every_arc_embeds():
    start = time.perf_counter()
    for label, c, f, g in gallery():
        for a in g.arcs:
            cert = certify_arc_embedding(g, f, a.id)
            assert cert.monotone and cert.injective, (label, a.id)
    for c, f, g in random100():
        for a in g.arcs:
            assert certify_arc_embedding(g, f, a.id).ok
    assert time.perf_counter() - start < 30.0


def test_c03_neighborhood_certificates_and_mutations():
    start = time.perf_counter()
    for label, c, f, g in gallery():
        for n in g.nodes:
            st = certify_node_starlike(g, c, f, n.id)
            assert st.ok, (label, n.id, st)
        for a in g.arcs:
            cyl = certify_arc_cylindrical(g, c, f, a.id)
            assert cyl.ok, (label, a.id, cyl)
    by_name = {nm: (c, f, g) for nm, c, f, g in gallery()}
    for nm in ("example1", "tent-torus"):
        c, f, g = by_name[nm]
        assert not certify_graph(with_swapped_endpoint(g), c, f).ok, nm
        assert not certify_graph(without_node(g), c, f).ok, nm
    assert time.perf_counter() - start < 60.0


def test_c04_ring_stack_family():
    flat_counts = []
    for n in (0, 3, 20):
        c, f = gen_example1(n)
        g = compute_reeb(c, f)
        assert g.stats() == {
            "nodes": n + 2, "arcs": n + 1, "b1": 0, "loops": 0, "components": 1,
        }
        assert all(node.degree <= 2 for node in g.nodes)
        flat_counts.append(classify_vertices(c, f).flat_count)
    assert flat_counts[0] < flat_counts[1] < flat_counts[2]


def test_c05_multi_cluster_contour_family():
    for k in (1, 4, 16):
        c, f = gen_example2(k)
        g = compute_reeb(c, f)
        assert g.stats()["nodes"] == 3 and g.stats()["arcs"] == 2
        assert [n.height for n in g.nodes] == [Fraction(-1), Fraction(0), Fraction(1)]
        assert len(classify_vertices(c, f).flat_clusters) == k


def test_c06_nested_circle_family():
    prev = None
    for n in range(1, 11):
        c, f = gen_example3(n)
        g = compute_reeb(c, f)
        s = g.stats()
        assert s["nodes"] == 2 * n + 3
        assert s["b1"] == 0 and s["components"] == 1
        if prev is not None:
            assert s["nodes"] - prev == 2
        prev = s["nodes"]
        expect = {Fraction(0)}
        for k in range(1, n + 2):
            expect.add(Fraction(1, 2 ** (k - 1)))
            expect.add(Fraction(-1, 2 ** (k - 1)))
        assert set(g.node_heights()) == expect
        assert max(count for _, count in graph_cut_counts(g)) == 2


def test_c07_fold_family_injectivity_witness():
    c, f = gen_example4(1)
    g = compute_reeb(c, f)
    assert all(certify_arc_embedding(g, f, a.id).ok for a in g.arcs)
    m = minimal_structure(g)
    certs = [certify_arc_embedding(m, f, a.id) for a in m.arcs]
    failing = [e for e in certs if not e.ok]
    assert len(failing) == 1
    height, i, j = failing[0].witness
    assert i < j
    assert Fraction(3, 8) < height < Fraction(1, 2)


def test_c08_torus_loops():
    zoo = {nm: (c, f) for nm, c, f in gen_surface_zoo()}
    c, f = zoo["cycle-spec"]
    g = compute_reeb(c, f)
    assert g.b1 == 1
    assert g.degree_histogram() == {2: 2}
    c, f = zoo["tent-torus"]
    g = compute_reeb(c, f)
    assert g.b1 == 1
    assert g.degree_histogram() == {1: 2, 3: 2}


def test_c09_realization_round_trip():
    start = time.perf_counter()
    rng = random.Random(SEED)
    for _ in range(200):
        spec = random_spec(rng, max_nodes=30)
        c, f = realize(spec)
        g = compute_reeb(c, f)
        ref = spec_to_graph(spec)
        assert graphs_isomorphic(g, ref)
        assert sorted(g.node_heights()) == sorted(ref.node_heights())
    assert time.perf_counter() - start < 120.0


def test_c10_large_sphere_time_and_memory():
    script = textwrap.dedent(
        """
        import json, resource, time
        from random import Random
        from reebforge.fields import ScalarField
        from reebforge.gallery import subdivided_sphere
        from reebforge.reeb import compute_reeb

        c = subdivided_sphere(7)
        rng = Random(20240817)
        f = ScalarField([rng.random() for _ in range(c.vertex_count)])
        t0 = time.perf_counter()
        g = compute_reeb(c, f)
        dt = time.perf_counter() - t0
        rss_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
        print(json.dumps({
            "triangles": len(c.triangles),
            "seconds": dt,
            "maxrss_mb": rss_mb,
            "nodes": g.stats()["nodes"],
            "b1": g.b1,
        }))
        """
    )
    proc = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["triangles"] >= 100_000
    assert report["b1"] == 0 and report["nodes"] >= 2
    assert report["seconds"] <= 5.0, report
    assert report["maxrss_mb"] <= 1024, report


def test_c11_byte_identical_reruns(tmp_path):
    dirs = (tmp_path / "a", tmp_path / "b")
    for d in dirs:
        proc = subprocess.run(
            [
                sys.executable, "-m", "reebforge.cli",
                "gen", "example3", "--n", "3", "--format", "json,dot",
                "--out", str(d),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
    for name in ("reeb.json", "reeb.dot"):
        assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()
