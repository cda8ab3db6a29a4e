"""Reference Reeb graph construction by exhaustive level slicing.

This module intentionally avoids the incremental sweep in reeb.py. It
materializes every level set (one per distinct value plus one per gap),
computes components per level with a fresh union-find, glues components of
adjacent levels, and contracts regular chains into arcs. Quadratic-ish and
memory-hungry by design: its job is to be obviously correct so the fast
path can be tested against it. A size guard keeps it off large inputs;
override with the REEBFORGE_ORACLE_MAX environment variable.
"""

from __future__ import annotations

import os

from .errors import CountMismatch, InputError
from .reeb import ReebGraph, _build_graph

__all__ = ["oracle_reeb", "oracle_size_limit"]


def oracle_size_limit():
    raw = os.environ.get("REEBFORGE_ORACLE_MAX", "2000")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"REEBFORGE_ORACLE_MAX must be an integer, got {raw!r}")


def _link_pairs(c, v):
    return [tuple(p for p in c.triangles[ti] if p != v) for ti in c.vertex_triangles(v)]


def _side_components(c, field, v, lower):
    kv = field.key(v)
    members = {w for w in c.neighbors(v) if (field.key(w) < kv) == lower}
    pairs = [p for p in _link_pairs(c, v) if p[0] in members and p[1] in members]
    adj = {w: set() for w in members}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    count = 0
    seen = set()
    for w in members:
        if w in seen:
            continue
        count += 1
        stack = [w]
        seen.add(w)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def _vertex_class(c, field, v):
    """Independent per-vertex classification: kind tag used for node labels."""
    if any(field.values[w] == field.values[v] for w in c.neighbors(v)):
        return "flat"
    low = _side_components(c, field, v, True)
    upz = _side_components(c, field, v, False)
    if low == 0 or upz == 0:
        return "extremum"
    if low == 1 and upz == 1:
        return "regular"
    # distinguish boundary-interior criticality by link path ends
    deg = {}
    for a, b in _link_pairs(c, v):
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    ends = [w for w in c.neighbors(v) if deg.get(w, 0) < 2]
    if len(ends) == 2:
        kv = field.key(v)
        if (field.key(ends[0]) < kv) == (field.key(ends[1]) < kv):
            return "boundary"
    return "saddle"


def oracle_reeb(c, field, limit=None):
    """Build the Reeb graph by slicing every level; small inputs only."""
    if len(field) != c.vertex_count:
        raise CountMismatch(
            f"field has {len(field)} values for {c.vertex_count} vertices"
        )
    cap = oracle_size_limit() if limit is None else limit
    if c.vertex_count > cap:
        raise InputError(
            f"oracle limited to {cap} vertices, got {c.vertex_count}"
        )

    nv = c.vertex_count
    if nv == 0:
        return ReebGraph((), (), ())

    vals = field.values
    values = sorted(set(vals))
    vidx = {x: k for k, x in enumerate(values)}
    ncuts = 2 * len(values) - 1

    edges = c.edges
    span = []
    for a, b in edges:
        ka, kb = vidx[vals[a]], vidx[vals[b]]
        span.append((2 * ka, 2 * kb) if ka <= kb else (2 * kb, 2 * ka))

    at_verts = [[] for _ in values]
    for v in range(nv):
        at_verts[vidx[vals[v]]].append(v)
    flat_edges = [[] for _ in values]
    for e, (a, b) in enumerate(edges):
        if vals[a] == vals[b]:
            flat_edges[vidx[vals[a]]].append((a, b))

    tri_edges = c.triangle_edges()

    # slice every cut: components of its items under triangle adjacency
    level_comps = []
    level_index = []
    for t in range(ncuts):
        items = []
        if t % 2 == 0:
            items.extend(("v", u) for u in at_verts[t // 2])
        items.extend(
            ("e", e) for e in range(len(edges)) if span[e][0] < t < span[e][1]
        )
        pidx = {it: i for i, it in enumerate(items)}
        parent = list(range(len(items)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx

        touched = set()
        for it in items:
            if it[0] == "v":
                touched.update(c.vertex_triangles(it[1]))
            else:
                touched.update(c.edge_triangles(it[1]))
        for ti in touched:
            present = []
            if t % 2 == 0:
                target = values[t // 2]
                present.extend(
                    pidx[("v", p)] for p in c.triangles[ti] if vals[p] == target
                )
            present.extend(
                pidx[("e", e)] for e in tri_edges[ti] if ("e", e) in pidx
            )
            for x in present[1:]:
                join(present[0], x)
        if t % 2 == 0:
            for a, b in flat_edges[t // 2]:
                join(pidx[("v", a)], pidx[("v", b)])

        comp_of = {}
        comps = []
        roots = {}
        for i, it in enumerate(items):
            r = find(i)
            if r not in roots:
                roots[r] = len(comps)
                comps.append([])
            comp_of[it] = roots[r]
            comps[roots[r]].append(it)
        level_comps.append(comps)
        level_index.append(comp_of)

    # glue adjacent cuts: each instance knows its neighbours one cut down
    down_links = []
    for t in range(ncuts):
        links = [set() for _ in level_comps[t]]
        if t > 0:
            below = level_index[t - 1]
            for ci, comp in enumerate(level_comps[t]):
                for it in comp:
                    if it[0] == "e":
                        e = it[1]
                        if span[e][0] < t - 1:
                            links[ci].add(below[it])
                        else:
                            a, b = edges[e]
                            lowv = a if field.key(a) < field.key(b) else b
                            links[ci].add(below[("v", lowv)])
                    else:
                        u = it[1]
                        for ei in c.vertex_edges(u):
                            if span[ei][0] < t - 1 < span[ei][1]:
                                links[ci].add(below[("e", ei)])
        down_links.append(links)
    up_links = [[set() for _ in level_comps[t]] for t in range(ncuts)]
    for t in range(1, ncuts):
        for ci, ls in enumerate(down_links[t]):
            for cj in ls:
                up_links[t - 1][cj].add(ci)

    # mark node instances and classify their member vertices
    classes = {}
    is_node = []
    for t in range(ncuts):
        flags = []
        for comp in level_comps[t]:
            flag = False
            if t % 2 == 0:
                for it in comp:
                    if it[0] == "v":
                        u = it[1]
                        if u not in classes:
                            classes[u] = _vertex_class(c, field, u)
                        if classes[u] != "regular":
                            flag = True
            flags.append(flag)
        is_node.append(flags)

    node_rec = []
    node_id = {}
    vmap = [None] * nv
    for t in range(0, ncuts, 2):
        for ci, comp in enumerate(level_comps[t]):
            if not is_node[t][ci]:
                continue
            verts = sorted(it[1] for it in comp if it[0] == "v")
            tags = {classes[u] for u in verts}
            for kind_tag, kind in (
                ("flat", "flat-cluster"),
                ("saddle", "saddle-like"),
                ("extremum", "extremum"),
                ("boundary", "boundary"),
            ):
                if kind_tag in tags:
                    break
            node_id[(t, ci)] = len(node_rec)
            node_rec.append(
                {
                    "height": values[t // 2],
                    "kind": kind,
                    "witness": verts[0],
                    "vertices": tuple(verts),
                }
            )
            for u in verts:
                vmap[u] = ("node", len(node_rec) - 1)

    # contract maximal regular chains into arcs
    arc_rec = []
    visited = set()
    for t in range(ncuts):
        for ci in range(len(level_comps[t])):
            if is_node[t][ci] or (t, ci) in visited:
                continue
            chain = [(t, ci)]
            visited.add((t, ci))
            while True:
                cur = chain[0]
                ls = down_links[cur[0]][cur[1]]
                if len(ls) != 1:
                    raise RuntimeError("internal: regular instance fan-out below")
                nxt = (cur[0] - 1, next(iter(ls)))
                if is_node[nxt[0]][nxt[1]]:
                    bottom = nxt
                    break
                chain.insert(0, nxt)
                visited.add(nxt)
            while True:
                cur = chain[-1]
                ls = up_links[cur[0]][cur[1]]
                if len(ls) != 1:
                    raise RuntimeError("internal: regular instance fan-out above")
                nxt = (cur[0] + 1, next(iter(ls)))
                if is_node[nxt[0]][nxt[1]]:
                    top = nxt
                    break
                chain.append(nxt)
                visited.add(nxt)
            first = level_comps[chain[0][0]][chain[0][1]]
            last = level_comps[chain[-1][0]][chain[-1][1]]
            interior = []
            for tt, ii in chain:
                if tt % 2 == 0:
                    interior.extend(
                        sorted(it[1] for it in level_comps[tt][ii] if it[0] == "v")
                    )
            aid = len(arc_rec)
            arc_rec.append(
                {
                    "lower": node_id[bottom],
                    "upper": node_id[top],
                    "birth": min(it[1] for it in first if it[0] == "e"),
                    "death": min(it[1] for it in last if it[0] == "e"),
                    "interior": interior,
                }
            )
            for u in interior:
                vmap[u] = ("arc", aid)

    return _build_graph(node_rec, arc_rec, vmap)
