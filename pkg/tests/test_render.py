import re

import pytest

from corehook.core_poset import CoreParams, gap_poset
from corehook.render import edge_dot, hasse_dot, young_ascii

_ID = r'"[^"]*"'
_ATTR = rf'\w+\s*=\s*(?:{_ID}|\w+)'
_ATTRS = rf'\[\s*{_ATTR}(?:\s*,\s*{_ATTR})*\s*\]'
_STATEMENT = re.compile(
    rf'^(?:(?P<edge>{_ID}\s*->\s*{_ID})|(?P<node>{_ID})(?:\s*{_ATTRS})?|\w+\s*=\s*\w+)\s*;$'
)


def parse_dot(text):
    """Minimal checker for the DOT subset we emit; returns (nodes, edges)."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    assert re.fullmatch(rf'digraph\s+{_ID}\s*\{{', lines[0]), lines[0]
    assert lines[-1] == "}"
    nodes, edges = {}, []
    for line in lines[1:-1]:
        m = _STATEMENT.match(line)
        assert m, f"not a DOT statement: {line!r}"
        if m["node"]:
            nodes[m["node"].strip('"')] = line
        elif m["edge"]:
            a, b = (x.strip().strip('"') for x in m["edge"].split("->"))
            edges.append((a, b))
    for a, b in edges:
        assert a in nodes and b in nodes
    return nodes, edges


def test_dot_checker_rejects_garbage():
    with pytest.raises(AssertionError):
        parse_dot('digraph "x" {\n  "a" -> ;\n}')
    with pytest.raises(AssertionError):
        parse_dot('graph "x" {\n}')


def test_young_ascii_single_cell():
    assert young_ascii((1,)) == "+-+\n|1|\n+-+"
    assert young_ascii(()) == ""


def test_young_ascii_figure_partition():
    rows = [ln for ln in young_ascii((8, 6, 3, 1)).splitlines() if ln.startswith("|")]
    cells = [[int(c) for c in ln.strip("|").split("|")] for ln in rows]
    assert cells == [[11, 9, 8, 6, 5, 4, 2, 1], [8, 6, 5, 3, 2, 1], [4, 2, 1], [1]]


def test_hasse_dot_structure():
    params = CoreParams(7, 3)
    nodes, edges = parse_dot(hasse_dot(params, {19, 12, 9, 5, 2}))
    assert len(nodes) == len(gap_poset(params)) == 27
    assert "53" in nodes
    assert sum("style=filled" in line for line in nodes.values()) == 5
    assert ("53", "46") in edges and ("53", "43") in edges
    for a, b in edges:
        assert int(a) - int(b) in (7, 10)


@pytest.mark.parametrize("s, k", [(2, 1), (3, 2), (7, 3), (8, 5), (5, 12)])
def test_edge_dot_is_a_path(s, k):
    params = CoreParams(s, k)
    nodes, edges = parse_dot(edge_dot(params))
    assert len(edges) == len(nodes) - 1
    assert [a for a, _ in edges] == list(nodes)[:-1]
    assert list(nodes)[-1] == str(k)
