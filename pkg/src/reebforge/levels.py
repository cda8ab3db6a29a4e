"""Combinatorial level sets of a vertex field.

A cut is a level position (value, side). Component structure of level sets
only changes at vertex values, so the distinct values induce a finite cut
sequence: the "at" cut of each value interleaved with one "mid" cut per gap.
Items of a cut are vertices sitting exactly at the value (at cuts only) and
edges whose endpoint values strictly straddle it; two items are adjacent
when a triangle contains both, or when an edge joins two equal-value
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

__all__ = ["ContourRef", "LevelSlicer", "level_components"]

BELOW, AT, ABOVE = "below", "at", "above"


@dataclass(frozen=True)
class ContourRef:
    """One connected component of a level set.

    value, side locate the cut. representative is the minimum vertex id on
    the contour, or None for contours that cross edges only. vertices and
    edges list the items (edges as sorted endpoint pairs).
    """

    value: object
    side: str
    representative: object
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def sort_key(self):
        vkey = self.vertices[0] if self.vertices else None
        return (0, vkey, ()) if self.vertices else (1, -1, self.edges[0])


class LevelSlicer:
    """Indexed cuts of (complex, field) with component and walking queries.

    Internally cut t is an integer: even t = 2k is the at cut of the k-th
    distinct value, odd t = 2k + 1 is the mid cut between values k and k+1.
    """

    def __init__(self, c, field):
        self.c = c
        self.field = field
        vals = field.values
        distinct = sorted(set(vals))
        self.values = distinct
        self.value_index = {x: k for k, x in enumerate(distinct)}
        self.at_vertices = [[] for _ in distinct]
        for v in range(c.vertex_count):
            self.at_vertices[self.value_index[vals[v]]].append(v)
        self.edge_level = []
        for a, b in c.edges:
            ka = self.value_index[vals[a]]
            kb = self.value_index[vals[b]]
            self.edge_level.append((ka, kb) if ka <= kb else (kb, ka))
        self.tri_edges = c.triangle_edges()
        self.cut_count = max(0, 2 * len(distinct) - 1)

    # -- cut arithmetic --------------------------------------------------

    def cut_of(self, value, side=AT):
        """Map a (value, side) query to a cut index; None when empty.

        Values between vertex levels resolve to the gap's mid cut whatever
        the side; at a vertex value the side picks the at cut or the
        adjacent mid cut.
        """
        if side not in (BELOW, AT, ABOVE):
            raise InputError(f"unknown cut side {side!r}")
        m = len(self.values)
        if m == 0:
            return None
        k = self.value_index.get(value)
        if k is not None:
            t = 2 * k + {BELOW: -1, AT: 0, ABOVE: 1}[side]
            return t if 0 <= t < self.cut_count else None
        lo, hi = 0, m
        while lo < hi:
            mid = (lo + hi) // 2
            if self.values[mid] < value:
                lo = mid + 1
            else:
                hi = mid
        # value sits in the gap below distinct[lo]
        t = 2 * lo - 1
        return t if 0 <= t < self.cut_count else None

    def cut_position(self, t):
        """(value, side) description of cut t; mid cuts report the gap midpoint."""
        k, odd = divmod(t, 2)
        if not odd:
            return (self.values[k], AT)
        return ((self.values[k] + self.values[k + 1]) / 2, "mid")

    def edge_active(self, e, t):
        klo, khi = self.edge_level[e]
        k, odd = divmod(t, 2)
        if odd:
            return klo <= k < khi
        return klo < k < khi

    # -- items and adjacency ----------------------------------------------

    def items_at(self, t):
        k, odd = divmod(t, 2)
        items = []
        if not odd:
            items.extend(("v", u) for u in self.at_vertices[k])
        for e in range(len(self.c.edges)):
            if self.edge_active(e, t):
                items.append(("e", e))
        return items

    def _triangle_items(self, ti, t):
        k, odd = divmod(t, 2)
        items = []
        tri = self.c.triangles[ti]
        if not odd:
            vals = self.field.values
            target = self.values[k]
            items.extend(("v", p) for p in tri if vals[p] == target)
        for e in self.tri_edges[ti]:
            if self.edge_active(e, t):
                items.append(("e", e))
        return items

    def neighbors(self, item, t):
        c = self.c
        out = []
        if item[0] == "e":
            for ti in c.edge_triangles(item[1]):
                out.extend(x for x in self._triangle_items(ti, t) if x != item)
        else:
            u = item[1]
            val = self.field.values[u]
            for ei in c.vertex_edges(u):
                a, b = c.edges[ei]
                w = b if a == u else a
                if self.field.values[w] == val:
                    out.append(("v", w))
            for ti in c.vertex_triangles(u):
                out.extend(x for x in self._triangle_items(ti, t) if x != item)
        return out

    def component(self, t, seed):
        """Connected level-set component of the seed item at cut t."""
        seen = {seed}
        stack = [seed]
        while stack:
            it = stack.pop()
            for nb in self.neighbors(it, t):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return frozenset(seen)

    def components_from(self, t, seeds):
        """Deduplicated components of several seed items at one cut."""
        comps = []
        claimed = set()
        for s in seeds:
            if s in claimed:
                continue
            comp = self.component(t, s)
            claimed |= comp
            comps.append(comp)
        return comps

    def advance(self, items, t, direction):
        """Seed items at cut t + direction reached from items at cut t."""
        t2 = t + direction
        if not 0 <= t2 < self.cut_count:
            return []
        vals = self.field.values
        seeds = []
        seen = set()

        def put(it):
            if it not in seen:
                seen.add(it)
                seeds.append(it)

        for it in items:
            if it[0] == "e":
                e = it[1]
                if self.edge_active(e, t2):
                    put(it)
                else:
                    a, b = self.c.edges[e]
                    # the edge ends on the vertex sitting at the next at cut
                    k2 = t2 // 2
                    for p in (a, b):
                        if self.value_index[vals[p]] == k2:
                            put(("v", p))
            else:
                u = it[1]
                for ei in self.c.vertex_edges(u):
                    if self.edge_active(ei, t2):
                        put(("e", ei))
        return seeds


def level_components(c, field, value, side=AT):
    """All contours of the level set at (value, side), deterministically ordered.

    Returns a tuple of ContourRef. Below the global minimum or above the
    global maximum the tuple is empty.
    """
    if len(field) != c.vertex_count:
        raise InputError("field length does not match complex")
    slicer = LevelSlicer(c, field)
    if slicer.cut_count == 0:
        return ()
    t = slicer.cut_of(value, side)
    if t is None:
        return ()
    items = slicer.items_at(t)
    comps = slicer.components_from(t, items)
    refs = []
    for comp in comps:
        verts = tuple(sorted(i[1] for i in comp if i[0] == "v"))
        edges = tuple(sorted(c.edges[i[1]] for i in comp if i[0] == "e"))
        refs.append(
            ContourRef(
                value=value,
                side=side,
                representative=verts[0] if verts else None,
                vertices=verts,
                edges=edges,
            )
        )
    refs.sort(key=ContourRef.sort_key)
    return tuple(refs)
