"""The two-row directed graph whose nodes, edges and triangles index the
free modules of the resolution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import AlreadyAugmented, FewerThanThreeGenerators, NoSecondEdge
from .generators import GeneratorRecord, Kind

TOP = "top"
BOTTOM = "bottom"


@dataclass(frozen=True)
class Node:
    index: int
    row: str
    # "upper", "lower", or "auxiliary" for g0
    kind: str


@dataclass(frozen=True)
class ReesGraph:
    nodes: tuple[Node, ...]
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, int, int], ...]
    augmented: bool = False
    name: str = "Graph"

    @property
    def r(self) -> int:
        """Number of minimal generators (g0 excluded)."""
        return len(self.nodes) - (1 if self.augmented else 0)

    def in_edges(self, k: int) -> list[tuple[int, int]]:
        return [e for e in self.edges if e[1] == k]

    def node(self, index: int) -> Node:
        for n in self.nodes:
            if n.index == index:
                return n
        raise KeyError(index)

    def row(self, row: str) -> list[int]:
        return [n.index for n in self.nodes if n.row == row]

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n.index, "row": n.row, "kind": n.kind} for n in self.nodes],
            "edges": [list(e) for e in self.edges],
            "triangles": [list(t) for t in self.triangles],
            "augmented": self.augmented,
        }


def _close_triangles(nodes, edges) -> tuple[tuple[int, int, int], ...]:
    # each sink has exactly two in-edges; they close a triangle iff the
    # two sources are joined (necessarily from the smaller index)
    edge_set = set(edges)
    sources: dict[int, list[int]] = {}
    for j, k in edges:
        sources.setdefault(k, []).append(j)
    triangles = []
    for n in sorted(nodes, key=lambda n: n.index):
        srcs = sorted(sources.get(n.index, ()))
        if len(srcs) == 2 and (srcs[0], srcs[1]) in edge_set:
            triangles.append((srcs[0], srcs[1], n.index))
    return tuple(triangles)


def build_graph(gens: list[GeneratorRecord], name: Optional[str] = None) -> ReesGraph:
    if len(gens) < 3:
        raise FewerThanThreeGenerators(f"got {len(gens)} generators")
    nodes = [Node(1, TOP, gens[0].kind.value), Node(2, BOTTOM, gens[1].kind.value)]
    rightmost = {TOP: 1, BOTTOM: 2}
    edges = []
    for g in gens[2:]:
        i = g.index
        edges.append((rightmost[TOP], i))
        edges.append((rightmost[BOTTOM], i))
        row = TOP if g.kind is Kind.UPPER else BOTTOM
        nodes.append(Node(i, row, g.kind.value))
        rightmost[row] = i
    edges.sort()
    return ReesGraph(
        nodes=tuple(nodes),
        edges=tuple(edges),
        triangles=_close_triangles(nodes, edges),
        augmented=False,
        name=name or "Graph",
    )


def augment(g: ReesGraph) -> ReesGraph:
    """Add g0 as leftmost bottom node with edges 0->2 and 1->2."""
    if g.augmented:
        raise AlreadyAugmented("graph is already augmented")
    nodes = (Node(0, BOTTOM, "auxiliary"),) + g.nodes
    edges = tuple(sorted(g.edges + ((0, 2), (1, 2))))
    return ReesGraph(
        nodes=nodes,
        edges=edges,
        triangles=_close_triangles(nodes, edges),
        augmented=True,
        name=g.name,
    )


def second_targeting_node(g: ReesGraph, edge: tuple[int, int]) -> int:
    j, k = edge
    if edge not in g.edges:
        raise KeyError(f"{edge} is not an edge")
    others = [h for h, kk in g.edges if kk == k and h != j]
    if not others:
        raise NoSecondEdge(f"node {k} has in-degree 1")
    (h,) = others
    return h


def export_dot(g: ReesGraph) -> str:
    """Graphviz source: top row ranked above bottom row, lower nodes bold."""
    out = [f'digraph "{g.name}" {{']
    out.append("  newrank=true;")
    out.append("  node [shape=circle];")
    for n in g.nodes:
        attrs = [f'label="g{n.index}"']
        if n.kind == "auxiliary":
            attrs.append("shape=box")
        if n.row == BOTTOM:
            attrs.append("penwidth=2")
        out.append(f"  g{n.index} [{', '.join(attrs)}];")
    for row, rank in ((TOP, "min"), (BOTTOM, "max")):
        members = " ".join(f"g{i};" for i in g.row(row))
        out.append(f"  {{ rank={rank}; {members} }}")
    for j, k in g.edges:
        out.append(f"  g{j} -> g{k};")
    out.append("}")
    return "\n".join(out) + "\n"
