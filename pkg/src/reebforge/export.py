"""Serialization of Reeb graphs to JSON and DOT with stable output bytes.

Heights are written exactly: rationals as "p/q" (or a bare integer), floats
via repr so they round-trip. Output ordering follows the graph's canonical
node/arc order, so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import dataclasses
import json
import os
import tempfile
from fractions import Fraction

from .fields import format_value

__all__ = [
    "graph_to_json_dict",
    "graph_to_json_bytes",
    "graph_to_dot",
    "certificates_to_json_bytes",
    "write_text_atomic",
    "write_json",
    "write_dot",
]


def graph_to_json_dict(g):
    nodes = [
        {
            "id": n.id,
            "height": format_value(n.height),
            "degree": n.degree,
            "kind": n.kind,
            "witness_vertex": n.witness_vertex,
        }
        for n in g.nodes
    ]
    arcs = [{"id": a.id, "lower": a.lower, "upper": a.upper} for a in g.arcs]
    return {
        "nodes": nodes,
        "arcs": arcs,
        "b1": g.b1,
        "components": g.components,
    }


def graph_to_json_bytes(g):
    text = json.dumps(graph_to_json_dict(g), indent=2, sort_keys=True)
    return (text + "\n").encode("ascii")


def graph_to_dot(g):
    """Undirected DOT rendering; node labels are "id@height"."""
    lines = ["graph reeb {"]
    for n in g.nodes:
        lines.append('  n%d [label="%d@%s"];' % (n.id, n.id, format_value(n.height)))
    for a in g.arcs:
        lines.append("  n%d -- n%d;" % (a.lower, a.upper))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_value(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def certificates_to_json_bytes(cert):
    """Serialize a GraphCertificate (nested dataclasses) deterministically."""
    payload = dataclasses.asdict(cert)
    text = json.dumps(payload, indent=2, sort_keys=True, default=_jsonable)
    return (text + "\n").encode("ascii")


def write_text_atomic(path, data):
    """Write via a sibling temp file plus rename so readers never see partial files."""
    if isinstance(data, str):
        data = data.encode("ascii")
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".reebforge-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_json(path, g):
    write_text_atomic(path, graph_to_json_bytes(g))


def write_dot(path, g):
    write_text_atomic(path, graph_to_dot(g))
