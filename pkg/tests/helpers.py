"""Shared builders for the tests: random surfaces, reference graphs, mutations."""

import dataclasses

from reebforge.gallery import grid_torus, subdivided_sphere
from reebforge.reeb import ReebGraph, _build_graph
from reebforge.simplicial import build_complex


def split_random_triangles(c, rng, count):
    """Apply `count` random 1-to-3 triangle splits; keeps the surface closed."""
    tris = list(c.triangles)
    nv = c.vertex_count
    for _ in range(count):
        i = rng.randrange(len(tris))
        a, b, d = tris[i]
        tris[i] = (a, b, nv)
        tris.append((b, d, nv))
        tris.append((a, d, nv))
        nv += 1
    return build_complex(tris, vertex_count=nv)


def random_closed_surface(rng, max_vertices=500):
    """Random sphere or torus under the vertex cap, sizes skewed small."""
    target = int(16 * (max_vertices / 16) ** (rng.random() ** 2))
    if rng.random() < 0.5:
        base = subdivided_sphere(rng.randrange(0, 3))
    else:
        base = grid_torus(rng.randrange(3, 7), rng.randrange(3, 7))
    extra = max(0, min(target, max_vertices) - base.vertex_count)
    return split_random_triangles(base, rng, extra)


def distinct_random_field(rng, n):
    while True:
        vals = [rng.random() for _ in range(n)]
        if len(set(vals)) == n:
            return vals


def spec_to_graph(spec):
    """Reference ReebGraph carrying the spec's nodes and arcs verbatim."""
    heights = spec.validate()
    degrees = spec.degrees()
    node_rec = [
        {
            "height": h,
            "kind": "extremum" if degrees[i] == 1 else "flat-cluster",
            "witness": i,
            "vertices": (i,),
        }
        for i, h in enumerate(heights)
    ]
    arc_rec = []
    for k, (a, b) in enumerate(spec.arcs):
        lo, hi = (a, b) if heights[a] < heights[b] else (b, a)
        arc_rec.append(
            {"lower": lo, "upper": hi, "birth": k, "death": k, "interior": ()}
        )
    return _build_graph(node_rec, arc_rec, [])


def with_swapped_endpoint(g):
    """Reattach one arc's upper end to a different node above the arc's lower.

    Node degree fields go stale on purpose; the mutated graph must be the
    kind of wrong answer the certificates are expected to reject.
    """
    for a in g.arcs:
        lo_h = g.nodes[a.lower].height
        for n in g.nodes:
            if n.id not in (a.lower, a.upper) and n.height > lo_h:
                arcs = list(g.arcs)
                arcs[a.id] = dataclasses.replace(a, upper=n.id)
                return ReebGraph(g.nodes, arcs, g.vertex_map)
    raise AssertionError("graph has no swappable arc")


def without_node(g):
    """Delete one connected node and its incident arcs, renumbering the rest."""
    victim = next(n.id for n in g.nodes if n.degree >= 1)
    nper = {}
    nodes = []
    for n in g.nodes:
        if n.id == victim:
            continue
        nper[n.id] = len(nodes)
        nodes.append(dataclasses.replace(n, id=len(nodes)))
    aper = {}
    arcs = []
    for a in g.arcs:
        if victim in (a.lower, a.upper):
            continue
        aper[a.id] = len(arcs)
        arcs.append(
            dataclasses.replace(
                a, id=len(arcs), lower=nper[a.lower], upper=nper[a.upper]
            )
        )
    fallback = ("arc", 0) if arcs else ("node", 0)
    vmap = []
    for kind, idx in g.vertex_map:
        if kind == "node" and idx in nper:
            vmap.append(("node", nper[idx]))
        elif kind == "arc" and idx in aper:
            vmap.append(("arc", aper[idx]))
        else:
            vmap.append(fallback)
    return ReebGraph(nodes, arcs, vmap)


def is_orientable(c):
    """Test for a global triangle orientation with opposite shared-edge travel."""
    sign = {}
    for start in range(len(c.triangles)):
        if start in sign:
            continue
        sign[start] = 0
        stack = [start]
        while stack:
            ti = stack.pop()
            a, b, d = c.triangles[ti]
            for u, w in ((a, b), (b, d), (d, a)):
                e = c.edge_id(u, w)
                for tj in c.edge_triangles(e):
                    if tj == ti:
                        continue
                    x, y, z = c.triangles[tj]
                    same_dir = (u, w) in ((x, y), (y, z), (z, x))
                    want = sign[ti] ^ (1 if same_dir else 0)
                    if tj not in sign:
                        sign[tj] = want
                        stack.append(tj)
                    elif sign[tj] != want:
                        return False
    return True


def graph_cut_counts(g):
    """(value, point count) per cut: nodes at the value plus spanning arcs."""
    heights = sorted({n.height for n in g.nodes})
    cuts = []
    for i, h in enumerate(heights):
        cuts.append(h)
        if i + 1 < len(heights):
            cuts.append((h + heights[i + 1]) / 2)
    out = []
    for val in cuts:
        at = sum(1 for n in g.nodes if n.height == val)
        spanning = sum(
            1
            for a in g.arcs
            if g.nodes[a.lower].height < val < g.nodes[a.upper].height
        )
        out.append((val, at + spanning))
    return out
