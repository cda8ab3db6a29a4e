"""Reeb graph extraction for vertex fields on simplicial complexes.

compute_reeb performs a single ascending sweep over the vertices in the
tie-broken total order. Level-set components (contours) are tracked as a
union-find structure over the edges currently crossing the sweep line.
A contour becomes a graph node exactly when it contains a vertex that is
link-critical or has an equal-value neighbour; every maximal family of
regular contours in between becomes an arc.

The companion operations answer queries about the quotient structure:
quotient_point maps a barycentric point of the domain to its image,
minimal_structure suppresses degree-2 nodes where that keeps the graph a
multigraph, and graphs_isomorphic compares two results up to relabeling.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .errors import CountMismatch, InvalidBarycentric
from .fields import _link_side_components
from .levels import AT, ContourRef, LevelSlicer

__all__ = [
    "ReebNode",
    "ReebArc",
    "ReebGraph",
    "compute_reeb",
    "quotient_point",
    "minimal_structure",
    "graphs_isomorphic",
]

NODE_KINDS = ("extremum", "saddle-like", "boundary", "flat-cluster")


@dataclass(frozen=True)
class ReebNode:
    """A critical contour: one vertex of the quotient graph.

    vertices lists the mesh vertices lying on the contour (all at the node
    height); the full contour, including crossing edges, is recoverable via
    level_components at that height. witness_vertex is the smallest one.
    """

    id: int
    height: object
    degree: int
    kind: str
    witness_vertex: int
    vertices: tuple[int, ...]
    contour: ContourRef


@dataclass(frozen=True)
class ReebArc:
    """A maximal family of regular contours between two nodes.

    birth_edge and death_edge are mesh edges witnessing the first and last
    contour of the family. interior_vertices are the regular mesh vertices
    swept by the family, in ascending order. chain_heights is empty for
    computed graphs; after degree-2 suppression it records the heights of
    the absorbed nodes, ordered from the lower endpoint to the upper.
    """

    id: int
    lower: int
    upper: int
    birth_edge: int
    death_edge: int
    interior_vertices: tuple[int, ...] = ()
    chain_heights: tuple = ()


class ReebGraph:
    """Immutable multigraph of nodes and arcs plus the vertex quotient map.

    vertex_map[v] is ("node", id) or ("arc", id) for every mesh vertex.
    b1 is the first Betti number arcs - nodes + components.
    """

    __slots__ = ("nodes", "arcs", "vertex_map", "components", "b1", "_incident")

    def __init__(self, nodes, arcs, vertex_map):
        self.nodes = tuple(nodes)
        self.arcs = tuple(arcs)
        self.vertex_map = tuple(vertex_map)
        incident = [[] for _ in self.nodes]
        for a in self.arcs:
            incident[a.lower].append(a.id)
            if a.upper != a.lower:
                incident[a.upper].append(a.id)
        self._incident = tuple(tuple(x) for x in incident)
        self.components = self._component_count()
        self.b1 = len(self.arcs) - len(self.nodes) + self.components

    def _component_count(self):
        n = len(self.nodes)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arcs:
            ra, rb = find(a.lower), find(a.upper)
            if ra != rb:
                parent[ra] = rb
        return len({find(i) for i in range(n)})

    def node_arcs(self, node_id):
        """Arc ids incident to the node; loop arcs appear once."""
        return self._incident[node_id]

    def arc_interval(self, arc_id):
        a = self.arcs[arc_id]
        return (self.nodes[a.lower].height, self.nodes[a.upper].height)

    def loop_count(self):
        return sum(1 for a in self.arcs if a.lower == a.upper)

    def degree_histogram(self):
        hist = Counter(n.degree for n in self.nodes)
        return dict(sorted(hist.items()))

    def node_heights(self):
        return tuple(n.height for n in self.nodes)

    def stats(self):
        return {
            "nodes": len(self.nodes),
            "arcs": len(self.arcs),
            "b1": self.b1,
            "loops": self.loop_count(),
            "components": self.components,
        }

    def __repr__(self):
        return (
            f"ReebGraph(nodes={len(self.nodes)}, arcs={len(self.arcs)}, "
            f"b1={self.b1}, components={self.components})"
        )


def _build_graph(node_rec, arc_rec, vmap):
    """Renumber raw sweep records deterministically and freeze the graph.

    Nodes are ordered by (height, witness vertex), arcs by (lower, upper,
    birth edge). vmap entries hold provisional ids and are remapped.
    """
    n_order = sorted(
        range(len(node_rec)),
        key=lambda i: (node_rec[i]["height"], node_rec[i]["witness"]),
    )
    nperm = {old: new for new, old in enumerate(n_order)}

    a_order = sorted(
        range(len(arc_rec)),
        key=lambda i: (
            nperm[arc_rec[i]["lower"]],
            nperm[arc_rec[i]["upper"]],
            arc_rec[i]["birth"],
        ),
    )
    aperm = {old: new for new, old in enumerate(a_order)}

    degree = [0] * len(node_rec)
    for r in arc_rec:
        degree[nperm[r["lower"]]] += 1
        degree[nperm[r["upper"]]] += 1

    nodes = []
    for new, old in enumerate(n_order):
        r = node_rec[old]
        verts = tuple(r["vertices"])
        nodes.append(
            ReebNode(
                id=new,
                height=r["height"],
                degree=degree[new],
                kind=r["kind"],
                witness_vertex=r["witness"],
                vertices=verts,
                contour=ContourRef(
                    value=r["height"],
                    side=AT,
                    representative=r["witness"],
                    vertices=verts,
                    edges=(),
                ),
            )
        )

    arcs = []
    for new, old in enumerate(a_order):
        r = arc_rec[old]
        arcs.append(
            ReebArc(
                id=new,
                lower=nperm[r["lower"]],
                upper=nperm[r["upper"]],
                birth_edge=r["birth"],
                death_edge=r["death"],
                interior_vertices=tuple(r["interior"]),
                chain_heights=tuple(r.get("chain", ())),
            )
        )

    final_map = []
    for entry in vmap:
        if entry is None:
            raise RuntimeError("internal: unmapped vertex after sweep")
        kind, tmp = entry
        final_map.append((kind, nperm[tmp] if kind == "node" else aperm[tmp]))
    return ReebGraph(nodes, arcs, final_map)


def compute_reeb(c, field):
    """Sweep the field in ascending tie-broken order and build the graph.

    Works on any finite complex of dimension <= 2 plus tetrahedra-free
    inputs; certification (not extraction) is what demands a manifold.
    Output is deterministic for fixed input.
    """
    if len(field) != c.vertex_count:
        raise CountMismatch(
            f"field has {len(field)} values for {c.vertex_count} vertices"
        )
    nverts = c.vertex_count
    if nverts == 0:
        return ReebGraph((), (), ())

    vals = field.values
    edges = c.edges
    tris = c.triangles
    ne = len(edges)
    surface = c.is_surface

    boundary_vertex = bytearray(nverts)
    for e in c.boundary_edge_ids:
        a, b = edges[e]
        boundary_vertex[a] = 1
        boundary_vertex[b] = 1

    order = sorted(range(nverts), key=field.key)
    pos = [0] * nverts
    for i, v in enumerate(order):
        pos[v] = i

    elo = [0] * ne
    ehi = [0] * ne
    down = [[] for _ in range(nverts)]
    up = [[] for _ in range(nverts)]
    for e in range(ne):
        a, b = edges[e]
        pa, pb = pos[a], pos[b]
        if pa > pb:
            a, b, pa, pb = b, a, pb, pa
        elo[e] = pa
        ehi[e] = pb
        if vals[a] != vals[b]:
            up[a].append(e)
            down[b].append(e)

    vtris = c._vertex_triangles
    etris = c._edge_triangles
    tri_edges = c.triangle_edges()

    # contour tracking: union-find over crossing edge ids plus synthetic
    # labels minted when a walked-out piece must leave its old class
    parent = list(range(ne))
    usize = [1] * ne
    override = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return rx
        if usize[rx] < usize[ry]:
            rx, ry = ry, rx
        parent[ry] = rx
        usize[rx] += usize[ry]
        return rx

    def lab(e):
        return override.get(e, e)

    def label(e):
        return find(override.get(e, e))

    node_rec = []
    arc_rec = []
    vmap = [None] * nverts
    arc_of = {}

    def open_arc(lower, birth):
        arc_rec.append(
            {
                "lower": lower,
                "upper": None,
                "birth": birth,
                "death": None,
                "interior": [],
            }
        )
        return len(arc_rec) - 1

    def relink_regular(u):
        # regular vertex: splice its spokes into the one contour passing by
        pu = pos[u]
        aid = arc_of.pop(label(down[u][0]))
        for ti in vtris[u]:
            a, b, t2 = tris[ti]
            e_ab, e_at, e_bt = tri_edges[ti]
            if u == a:
                o1, o2, s1, s2, flk = b, t2, e_ab, e_at, e_bt
            elif u == b:
                o1, o2, s1, s2, flk = a, t2, e_ab, e_bt, e_at
            else:
                o1, o2, s1, s2, flk = a, b, e_at, e_bt, e_ab
            lo1 = pos[o1] < pu
            lo2 = pos[o2] < pu
            if lo1 and lo2:
                continue
            if lo1:
                union(s2, lab(flk))
            elif lo2:
                union(s1, lab(flk))
            else:
                union(s1, s2)
        arc_of[label(up[u][0])] = aid
        arc_rec[aid]["interior"].append(u)
        vmap[u] = ("arc", aid)

    def emit_node(w, verts, kind, roots, strands, deaths, cutpos):
        nid = len(node_rec)
        node_rec.append(
            {
                "height": w,
                "kind": kind,
                "witness": verts[0],
                "vertices": tuple(verts),
            }
        )
        for u in verts:
            vmap[u] = ("node", nid)
        for r in sorted(roots):
            aid = arc_of.pop(r)
            arc_rec[aid]["upper"] = nid
            arc_rec[aid]["death"] = deaths[r]

        if not strands:
            return

        pool = sorted(roots)
        ov = override.get
        for items in strands:
            pool.extend(ov(e, e) for e in items)
        rstar = pool[0]
        for x in pool[1:]:
            rstar = union(rstar, x)

        if len(strands) == 1:
            arc_of[find(rstar)] = open_arc(nid, strands[0][0])
            return

        if len(strands) == 2:
            # common case: two strands, walk both frontiers in lockstep
            # until they either meet (one contour) or one walks out
            ca, cb = strands
            qa, qb = deque(ca), deque(cb)
            la, lb = list(ca), list(cb)
            sa, sb = ca[0], cb[0]
            claimed = {}
            for e in ca:
                claimed[e] = 0
            for e in cb:
                claimed[e] = 1
            elo_l, ehi_l, et_l, te_l = elo, ehi, etris, tri_edges
            cg = claimed.get
            merged = False
            while not merged:
                if not qa:
                    fresh = len(parent)
                    parent.append(fresh)
                    usize.append(1)
                    for e2 in la:
                        override[e2] = fresh
                    arc_of[fresh] = open_arc(nid, sa)
                    arc_of[find(rstar)] = open_arc(nid, sb)
                    return
                if not qb:
                    fresh = len(parent)
                    parent.append(fresh)
                    usize.append(1)
                    for e2 in lb:
                        override[e2] = fresh
                    arc_of[fresh] = open_arc(nid, sb)
                    arc_of[find(rstar)] = open_arc(nid, sa)
                    return
                e = qa.popleft()
                for ti in et_l[e]:
                    for e2 in te_l[ti]:
                        if e2 == e or not elo_l[e2] <= cutpos < ehi_l[e2]:
                            continue
                        o = cg(e2)
                        if o is None:
                            claimed[e2] = 0
                            qa.append(e2)
                            la.append(e2)
                        elif o == 1:
                            merged = True
                            break
                    if merged:
                        break
                if merged:
                    break
                e = qb.popleft()
                for ti in et_l[e]:
                    for e2 in te_l[ti]:
                        if e2 == e or not elo_l[e2] <= cutpos < ehi_l[e2]:
                            continue
                        o = cg(e2)
                        if o is None:
                            claimed[e2] = 1
                            qb.append(e2)
                            lb.append(e2)
                        elif o == 0:
                            merged = True
                            break
                    if merged:
                        break
            arc_of[find(rstar)] = open_arc(nid, sa if sa < sb else sb)
            return

        # several local strands: discover which outgoing contours they
        # join by claiming crossing edges breadth-first, fairly
        nf = len(strands)
        fpar = list(range(nf))

        def ffind(x):
            while fpar[x] != x:
                fpar[x] = fpar[fpar[x]]
                x = fpar[x]
            return x

        queues = [deque(items) for items in strands]
        claims = [list(items) for items in strands]
        min_seed = [items[0] for items in strands]
        dead = [False] * nf
        claimed = {}
        for fi, items in enumerate(strands):
            for e in items:
                claimed[e] = fi
        live = nf

        while live > 1:
            for fr in range(nf):
                if live <= 1:
                    break
                if dead[fr] or ffind(fr) != fr:
                    continue
                q = queues[fr]
                if not q:
                    # walked out: this strand's contour detaches into
                    # its own arc under a fresh synthetic label
                    fresh = len(parent)
                    parent.append(fresh)
                    usize.append(1)
                    for e2 in claims[fr]:
                        override[e2] = fresh
                    arc_of[fresh] = open_arc(nid, min_seed[fr])
                    dead[fr] = True
                    live -= 1
                    continue
                e = q.popleft()
                cur = fr
                for ti in etris[e]:
                    for e2 in tri_edges[ti]:
                        if e2 == e or not elo[e2] <= cutpos < ehi[e2]:
                            continue
                        other = claimed.get(e2)
                        if other is None:
                            claimed[e2] = cur
                            queues[cur].append(e2)
                            claims[cur].append(e2)
                            continue
                        orr = ffind(other)
                        if orr == cur:
                            continue
                        keep, lose = (orr, cur) if orr < cur else (cur, orr)
                        fpar[lose] = keep
                        queues[keep].extend(queues[lose])
                        queues[lose].clear()
                        claims[keep].extend(claims[lose])
                        claims[lose] = []
                        if min_seed[lose] < min_seed[keep]:
                            min_seed[keep] = min_seed[lose]
                        live -= 1
                        cur = keep
                        if live <= 1:
                            break
                    if live <= 1:
                        break

        rest = next(fr for fr in range(nf) if not dead[fr] and ffind(fr) == fr)
        arc_of[find(rstar)] = open_arc(nid, min_seed[rest])

    def singleton_event(u, cutpos, w, mixed):
        # interior surface vertex alone at its level: its link is one cycle,
        # so the transition count fixes the class with no link search. The
        # local item bookkeeping mirrors process_event exactly.
        roots = set()
        deaths = {}
        for e in down[u]:
            r = label(e)
            roots.add(r)
            if r not in deaths or e < deaths[r]:
                deaths[r] = e

        if mixed == 0:
            ups = up[u]
            strands = [sorted(ups)] if ups else []
            emit_node(w, (u,), "extremum", roots, strands, deaths, cutpos)
            return

        pu = pos[u]
        luf = {}

        def lfind(x):
            while luf[x] != x:
                luf[x] = luf[luf[x]]
                x = luf[x]
            return x

        for ti in vtris[u]:
            a, b, t2 = tris[ti]
            e_ab, e_at, e_bt = tri_edges[ti]
            if u == a:
                o1, o2, s1, s2, flk = b, t2, e_ab, e_at, e_bt
            elif u == b:
                o1, o2, s1, s2, flk = a, t2, e_ab, e_bt, e_at
            else:
                o1, o2, s1, s2, flk = a, b, e_at, e_bt, e_ab
            lo1 = pos[o1] < pu
            lo2 = pos[o2] < pu
            if lo1 and lo2:
                continue
            if lo1 or lo2:
                spoke = s2 if lo1 else s1
                r = label(flk)
                roots.add(r)
                if r not in deaths or flk < deaths[r]:
                    deaths[r] = flk
                luf.setdefault(spoke, spoke)
                luf.setdefault(flk, flk)
                rx, ry = lfind(spoke), lfind(flk)
                if rx != ry:
                    luf[ry] = rx
            else:
                luf.setdefault(s1, s1)
                luf.setdefault(s2, s2)
                rx, ry = lfind(s1), lfind(s2)
                if rx != ry:
                    luf[ry] = rx

        comp_items = {}
        for e in luf:
            comp_items.setdefault(lfind(e), []).append(e)
        strands = [sorted(items) for items in comp_items.values()]
        strands.sort(key=lambda items: items[0])
        emit_node(w, (u,), "saddle-like", roots, strands, deaths, cutpos)

    def process_event(batch, cutpos, w):
        # group the batch by at-level connectivity, then emit one node or
        # one regular splice per group
        guf = {}

        def gfind(x):
            while guf[x] != x:
                guf[x] = guf[guf[x]]
                x = guf[x]
            return x

        def gmerge(x, y):
            rx, ry = gfind(x), gfind(y)
            if rx != ry:
                guf[ry] = rx

        for u in batch:
            guf.setdefault(("v", u), ("v", u))

        deaths = {}
        flat_here = {u: False for u in batch}
        for u in batch:
            ku = ("v", u)
            for e in down[u]:
                r = label(e)
                kr = ("c", r)
                guf.setdefault(kr, kr)
                gmerge(ku, kr)
                if r not in deaths or e < deaths[r]:
                    deaths[r] = e
            for x in c._neighbors[u]:
                if vals[x] == w:
                    flat_here[u] = True
                    gmerge(ku, ("v", x))

        seen_t = set()
        batch_tris = []
        for u in batch:
            for ti in vtris[u]:
                if ti not in seen_t:
                    seen_t.add(ti)
                    batch_tris.append(ti)
        batch_tris.sort()

        # one triangle pass: flank edges glue groups to incoming contours
        # and the upper-link items are collected with local adjacency
        luf = {}
        owner = {}

        def lfind(x):
            while luf[x] != x:
                luf[x] = luf[luf[x]]
                x = luf[x]
            return x

        def lmerge(x, y):
            rx, ry = lfind(x), lfind(y)
            if rx != ry:
                luf[ry] = rx

        for ti in batch_tris:
            a, b, t2 = tris[ti]
            e_ab, e_at, e_bt = tri_edges[ti]
            sa = 0 if vals[a] == w else (-1 if vals[a] < w else 1)
            sb = 0 if vals[b] == w else (-1 if vals[b] < w else 1)
            st = 0 if vals[t2] == w else (-1 if vals[t2] < w else 1)
            zeros = (sa == 0) + (sb == 0) + (st == 0)
            if zeros == 3:
                continue
            if zeros == 2:
                if sa != 0:
                    o, s, sp1, sp2, u1, u2 = a, sa, e_ab, e_at, b, t2
                elif sb != 0:
                    o, s, sp1, sp2, u1, u2 = b, sb, e_ab, e_bt, a, t2
                else:
                    o, s, sp1, sp2, u1, u2 = t2, st, e_at, e_bt, a, b
                if s > 0:
                    luf.setdefault(sp1, sp1)
                    luf.setdefault(sp2, sp2)
                    owner.setdefault(sp1, u1)
                    owner.setdefault(sp2, u2)
                    lmerge(sp1, sp2)
                continue
            if sa == 0:
                u, o1, o2, s1, s2, flk = a, b, t2, e_ab, e_at, e_bt
                so1, so2 = sb, st
            elif sb == 0:
                u, o1, o2, s1, s2, flk = b, a, t2, e_ab, e_bt, e_at
                so1, so2 = sa, st
            else:
                u, o1, o2, s1, s2, flk = t2, a, b, e_at, e_bt, e_ab
                so1, so2 = sa, sb
            if so1 < 0 and so2 < 0:
                continue
            if so1 > 0 and so2 > 0:
                luf.setdefault(s1, s1)
                luf.setdefault(s2, s2)
                owner.setdefault(s1, u)
                owner.setdefault(s2, u)
                lmerge(s1, s2)
            else:
                # one below, one above: the opposite edge crosses the level
                spoke = s1 if so1 > 0 else s2
                r = label(flk)
                kr = ("c", r)
                guf.setdefault(kr, kr)
                gmerge(("v", u), kr)
                if r not in deaths or flk < deaths[r]:
                    deaths[r] = flk
                luf.setdefault(spoke, spoke)
                luf.setdefault(flk, flk)
                owner.setdefault(spoke, u)
                lmerge(spoke, flk)

        groups = {}
        for key in guf:
            g = groups.setdefault(gfind(key), {"verts": [], "roots": set()})
            if key[0] == "v":
                g["verts"].append(key[1])
            else:
                g["roots"].add(key[1])

        strands_of = {}
        comp_items = {}
        for e in luf:
            comp_items.setdefault(lfind(e), []).append(e)
        for items in comp_items.values():
            items.sort()
            anchor = next(owner[e] for e in items if e in owner)
            strands_of.setdefault(gfind(("v", anchor)), []).append(items)
        for lst in strands_of.values():
            lst.sort(key=lambda items: items[0])

        for gkey in sorted(groups, key=lambda k: min(groups[k]["verts"])):
            g = groups[gkey]
            verts = sorted(g["verts"])
            roots = g["roots"]
            strands = strands_of.get(gkey, [])

            classes = []
            critical = False
            for u in verts:
                if flat_here[u]:
                    classes.append("flat")
                    critical = True
                    continue
                low = _link_side_components(c, field, u, True)
                upz = _link_side_components(c, field, u, False)
                if low == 0 or upz == 0:
                    classes.append("extremum")
                    critical = True
                elif low == 1 and upz == 1:
                    classes.append("regular")
                else:
                    cls = "saddle"
                    if boundary_vertex[u] and c.link_kind(u) == "path":
                        b0, b1 = c.boundary_link_ends(u)
                        if (pos[b0] < pos[u]) == (pos[b1] < pos[u]):
                            cls = "boundary"
                    classes.append(cls)
                    critical = True

            if not critical:
                if len(roots) != 1:
                    raise RuntimeError(
                        "internal: regular group with contour merge"
                    )
                for u in sorted(verts, key=pos.__getitem__):
                    relink_regular(u)
                continue

            if "flat" in classes:
                kind = "flat-cluster"
            elif "saddle" in classes:
                kind = "saddle-like"
            elif "extremum" in classes:
                kind = "extremum"
            else:
                kind = "boundary"
            emit_node(w, verts, kind, roots, strands, deaths, cutpos)

    i = 0
    while i < nverts:
        u = order[i]
        w = vals[u]
        j = i + 1
        while j < nverts and vals[order[j]] == w:
            j += 1
        if j == i + 1 and surface and not boundary_vertex[u]:
            # interior link is a single cycle: exactly two side changes
            # around it is equivalent to one lower and one upper component
            pu = i
            mixed = 0
            for ti in vtris[u]:
                a, b, t2 = tris[ti]
                if u == a:
                    o1, o2 = b, t2
                elif u == b:
                    o1, o2 = a, t2
                else:
                    o1, o2 = a, b
                if (pos[o1] < pu) != (pos[o2] < pu):
                    mixed += 1
            if mixed == 2:
                relink_regular(u)
            else:
                singleton_event(u, j - 1, w, mixed)
            i = j
            continue
        process_event(order[i:j], j - 1, w)
        i = j

    if arc_of:
        raise RuntimeError("internal: open arcs after sweep")
    return _build_graph(node_rec, arc_rec, vmap)


# -- quotient map ----------------------------------------------------------


def _validate_point(c, field, simplex, weights):
    simplex = tuple(simplex)
    weights = tuple(weights)
    if not 1 <= len(simplex) <= 3 or len(set(simplex)) != len(simplex):
        raise InvalidBarycentric("simplex must list 1-3 distinct vertices")
    if len(weights) != len(simplex):
        raise InvalidBarycentric("one weight per simplex vertex required")
    for v in simplex:
        if not 0 <= v < c.vertex_count:
            raise InvalidBarycentric(f"vertex {v} out of range")
    if len(simplex) == 2 and not c.has_edge(*simplex):
        raise InvalidBarycentric(f"no edge {simplex}")
    if len(simplex) == 3 and not c.has_triangle(*simplex):
        raise InvalidBarycentric(f"no triangle {simplex}")
    exact = all(not isinstance(t, float) for t in weights)
    total = sum(weights)
    if any(t < 0 for t in weights):
        raise InvalidBarycentric("weights must be non-negative")
    if exact:
        if total != 1:
            raise InvalidBarycentric("weights must sum to 1")
    elif abs(total - 1) > 1e-9:
        raise InvalidBarycentric("weights must sum to 1")
    support = [v for v, t in zip(simplex, weights) if t > 0]
    if not support:
        raise InvalidBarycentric("at least one positive weight required")
    value = sum(t * field.values[v] for v, t in zip(simplex, weights))
    return support, value


def quotient_point(g, c, field, simplex, weights):
    """Image of a barycentric point under the quotient map.

    Returns ("node", node_id) on critical contours and
    ("arc", arc_id, height) on regular ones.
    """
    support, value = _validate_point(c, field, simplex, weights)

    def vertex_image(u):
        kind, idx = g.vertex_map[u]
        return (kind, idx) if kind == "node" else ("arc", idx, field.values[u])

    if all(field.values[v] == field.values[support[0]] for v in support):
        return vertex_image(support[0])

    slicer = LevelSlicer(c, field)
    t = slicer.cut_of(value, AT)
    if len(support) == 2:
        seed = ("e", c.edge_id(*support))
    else:
        tri = tuple(sorted(support))
        ti = next(
            x for x in c.vertex_triangles(tri[0]) if c.triangles[x] == tri
        )
        seed = min(slicer._triangle_items(ti, t))
    comp = slicer.component(t, seed)
    cur_t = t
    while True:
        at_verts = sorted(v for k, v in comp if k == "v")
        if at_verts:
            kind, idx = g.vertex_map[at_verts[0]]
            if kind == "arc":
                return ("arc", idx, value)
            if cur_t == t:
                # the point's own contour is critical
                return ("node", idx)
            for a in g.arcs:
                if a.lower == idx and ("e", a.birth_edge) in prev:
                    return ("arc", a.id, value)
            raise RuntimeError("internal: no arc above node on walk")
        prev = comp
        seeds = slicer.advance(comp, cur_t, -1)
        cur_t -= 1
        comp = slicer.component(cur_t, seeds[0])


# -- degree-2 suppression ---------------------------------------------------


def minimal_structure(g):
    """Suppress degree-2 nodes while the result stays a loopless multigraph.

    A degree-2 node whose two arcs share their other endpoint is kept:
    removing it would need a self-loop. Suppressed node heights are
    recorded on the merged arc in order, so monotonicity of the merged
    height chain remains checkable.
    """
    nodes = {n.id: n for n in g.nodes}
    recs = {}
    incident = {nid: [] for nid in nodes}
    for a in g.arcs:
        # w0/w1: witness edges for the e0 and e1 ends of the record
        recs[a.id] = {
            "e0": a.lower,
            "e1": a.upper,
            "chain": list(a.chain_heights),
            "w0": a.birth_edge,
            "w1": a.death_edge,
            "interior": list(a.interior_vertices),
        }
        incident[a.lower].append(a.id)
        incident[a.upper].append(a.id)

    def oriented(rec, start):
        # chain, interior, and end witnesses read from the given endpoint
        if rec["e0"] == start:
            return rec["chain"], rec["interior"], rec["w0"], rec["w1"]
        return rec["chain"][::-1], rec["interior"][::-1], rec["w1"], rec["w0"]

    changed = True
    while changed:
        changed = False
        for nid in sorted(incident, key=lambda i: (nodes[i].height, i)):
            inc = incident[nid]
            if len(inc) != 2 or inc[0] == inc[1]:
                continue
            ra, rb = recs[inc[0]], recs[inc[1]]
            oa = ra["e1"] if ra["e0"] == nid else ra["e0"]
            ob = rb["e1"] if rb["e0"] == nid else rb["e0"]
            if oa == ob or oa == nid or ob == nid:
                continue
            ca, ia, wa, _ = oriented(ra, oa)
            cb, ib, _, wb = oriented(rb, nid)
            keep, drop = inc[0], inc[1]
            recs[keep] = {
                "e0": oa,
                "e1": ob,
                "chain": ca + [nodes[nid].height] + cb,
                "w0": wa,
                "w1": wb,
                "interior": ia + list(nodes[nid].vertices) + ib,
            }
            del recs[drop]
            del incident[nid]
            del nodes[nid]
            incident[ob] = [keep if x == drop else x for x in incident[ob]]
            changed = True
            break

    kept = sorted(nodes)
    tmp_of = {nid: k for k, nid in enumerate(kept)}
    node_rec = [
        {
            "height": nodes[nid].height,
            "kind": nodes[nid].kind,
            "witness": nodes[nid].witness_vertex,
            "vertices": nodes[nid].vertices,
        }
        for nid in kept
    ]
    arc_rec = []
    arc_tmp = {}
    for aid in sorted(recs):
        r = recs[aid]
        e0, e1 = r["e0"], r["e1"]
        chain, interior = r["chain"], r["interior"]
        w0, w1 = r["w0"], r["w1"]
        k0 = (nodes[e0].height, nodes[e0].witness_vertex)
        k1 = (nodes[e1].height, nodes[e1].witness_vertex)
        if k1 < k0:
            e0, e1 = e1, e0
            chain = chain[::-1]
            interior = interior[::-1]
            w0, w1 = w1, w0
        arc_tmp[aid] = len(arc_rec)
        arc_rec.append(
            {
                "lower": tmp_of[e0],
                "upper": tmp_of[e1],
                "birth": w0,
                "death": w1,
                "interior": interior,
                "chain": chain,
            }
        )

    vmap = [None] * len(g.vertex_map)
    for nid in kept:
        for u in nodes[nid].vertices:
            vmap[u] = ("node", tmp_of[nid])
    for aid, rec_idx in arc_tmp.items():
        for u in arc_rec[rec_idx]["interior"]:
            vmap[u] = ("arc", rec_idx)
    return _build_graph(node_rec, arc_rec, vmap)


# -- isomorphism -------------------------------------------------------------


def graphs_isomorphic(g1, g2):
    """Height- and degree-preserving multigraph isomorphism test."""
    if len(g1.nodes) != len(g2.nodes) or len(g1.arcs) != len(g2.arcs):
        return False

    def sig(n):
        return (n.height, n.degree)

    if sorted(map(sig, g1.nodes)) != sorted(map(sig, g2.nodes)):
        return False

    buckets = {}
    for n in g2.nodes:
        buckets.setdefault(sig(n), []).append(n.id)
    cand = [buckets[sig(n)] for n in g1.nodes]

    adj1 = [Counter() for _ in g1.nodes]
    for a in g1.arcs:
        adj1[a.lower][a.upper] += 1
        adj1[a.upper][a.lower] += 1
    adj2 = [Counter() for _ in g2.nodes]
    for a in g2.arcs:
        adj2[a.lower][a.upper] += 1
        adj2[a.upper][a.lower] += 1

    n = len(g1.nodes)
    order = sorted(range(n), key=lambda i: (len(cand[i]), i))
    mapping = [-1] * n
    used = set()

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in cand[i]:
            if j in used:
                continue
            ok = True
            for h, mult in adj1[i].items():
                if mapping[h] >= 0 and adj2[j][mapping[h]] != mult:
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = j
            used.add(j)
            if extend(k + 1):
                return True
            mapping[i] = -1
            used.discard(j)
        return False

    return extend(0)
