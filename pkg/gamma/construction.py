"""
The graphs Γ(n,a) on Z_n x Z_3.

(i,j) ~ (ai±1, j-1) and (i,j) ~ (bi±b, j+1), with b = a^2 mod n. The two rule
families are inverse to each other (b(ai±1) ∓ b = i), so the edge set is
symmetric. Vertices are stored by linear index i + n*j.
"""
import json
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import NamedTuple

import networkx as nx
from django.core.exceptions import ValidationError
from django.template.loader import render_to_string

from .exceptions import ConstructionError
from .modular import validate_pair
from .permutations import Permutation

logger = logging.getLogger('gamma')

EXPORT_FORMATS = ('graph6', 'dot', 'json')


class Vertex(NamedTuple):
    i: int
    j: int

    def index(self, n):
        return self.i + n * self.j

    @classmethod
    def from_index(cls, idx, n):
        return cls(idx % n, idx // n)

    @property
    def label(self):
        return f'{self.i},{self.j}'


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on 0..order-1 with sorted neighbour tuples"""
    adjacency: tuple

    @property
    def order(self):
        return len(self.adjacency)

    @cached_property
    def adjacency_sets(self):
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_edge(self, u, v):
        return v in self.adjacency_sets[u]

    def edges(self):
        """Each edge once, as a sorted pair"""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def arcs(self):
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs]

    def degree_sequence(self):
        return sorted(len(nbrs) for nbrs in self.adjacency)

    def vertex_label(self, idx):
        return str(idx)

    def relabeled(self, images):
        """Copy of the graph with vertex v renamed images[v]"""
        adjacency = [None] * self.order
        for v, nbrs in enumerate(self.adjacency):
            adjacency[images[v]] = tuple(sorted(images[w] for w in nbrs))
        return SimpleGraph(adjacency=tuple(adjacency))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_edges(cls, order, edges):
        neighbours = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise ConstructionError(f'self-loop at vertex {u}')
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbours))

    @classmethod
    def from_networkx(cls, graph):
        graph = nx.convert_node_labels_to_integers(graph, ordering='sorted')
        return cls.from_edges(graph.number_of_nodes(), graph.edges())


@dataclass(frozen=True)
class GammaGraph(SimpleGraph):
    n: int = field(kw_only=True)
    a: int = field(kw_only=True)
    b: int = field(kw_only=True)

    def vertex(self, idx):
        return Vertex.from_index(idx, self.n)

    def index(self, i, j):
        return (i % self.n) + self.n * (j % 3)

    def vertex_label(self, idx):
        return self.vertex(idx).label

    @property
    def name(self):
        return f'Γ({self.n},{self.a})'


def _rule_images(n, a, b, i, j):
    """The four neighbours of (i, j) given by the edge rules"""
    down, up = (j - 1) % 3, (j + 1) % 3
    return (
        ((a * i + 1) % n, down),
        ((a * i - 1) % n, down),
        ((b * i + b) % n, up),
        ((b * i - b) % n, up),
    )


def build(n, a):
    """Construct Γ(n,a) and check it is a simple 4-regular graph with 6n edges"""
    pair = validate_pair(n, a)
    n, a, b = pair.n, pair.a, pair.b
    adjacency = []
    for idx in range(3 * n):
        i, j = idx % n, idx // n
        neighbours = {ii + n * jj for ii, jj in _rule_images(n, a, b, i, j)}
        if idx in neighbours:
            raise ConstructionError(f'self-loop at ({i},{j}) in Γ({n},{a})')
        if len(neighbours) != 4:
            raise ConstructionError(f'({i},{j}) has degree {len(neighbours)} in Γ({n},{a})')
        adjacency.append(tuple(sorted(neighbours)))

    # (j-1)-rules and (j+1)-rules must produce the same symmetric edge set
    for u, nbrs in enumerate(adjacency):
        for v in nbrs:
            if u not in adjacency[v]:
                raise ConstructionError(f'asymmetric edge {u}-{v} in Γ({n},{a})')

    graph = GammaGraph(adjacency=tuple(adjacency), n=n, a=a, b=b)
    if graph.edge_count != 6 * n:
        raise ConstructionError(f'Γ({n},{a}) has {graph.edge_count} edges, expected {6 * n}')
    logger.debug(f'Built {graph.name}: {graph.order} vertices, {graph.edge_count} edges')
    return graph


def neighbors(g, v):
    """The four neighbours of a vertex, sorted by linear index"""
    i, j = v
    if not (0 <= i < g.n and 0 <= j < 3):
        raise ValidationError(f'({i},{j}) is not a vertex of {g.name}', code='invalid_vertex')
    return [g.vertex(w) for w in g.adjacency[Vertex(i, j).index(g.n)]]


def tau_map(g):
    """(i,j) -> (ai, -j), an isomorphism Γ(n,a) -> Γ(n,a^2)"""
    n, a = g.n, g.a
    return Permutation(tuple(
        (a * (idx % n)) % n + n * ((-(idx // n)) % 3) for idx in range(g.order)
    ))


def with_extra_edge(g, u, v):
    """Copy of g with one more edge; bypasses the construction checks"""
    adjacency = list(g.adjacency)
    adjacency[u] = tuple(sorted(set(adjacency[u]) | {v}))
    adjacency[v] = tuple(sorted(set(adjacency[v]) | {u}))
    return replace(g, adjacency=tuple(adjacency))


def export(g, fmt):
    """Serialize the graph as graph6, DOT or JSON bytes"""
    if fmt not in EXPORT_FORMATS:
        raise ValidationError(f'Unknown export format "{fmt}"', code='invalid_format')
    if g.edge_count != 6 * g.n:
        raise ConstructionError(f'{g.name} has {g.edge_count} edges, expected {6 * g.n}')

    if fmt == 'graph6':
        return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b'\n')

    vertices = [g.vertex(idx) for idx in range(g.order)]
    edges = [(g.vertex(u), g.vertex(v)) for u, v in g.edges()]
    if fmt == 'dot':
        return render_to_string('gamma/graph.dot', {
            'name': f'Gamma_{g.n}_{g.a}',
            'vertices': vertices,
            'edges': edges,
        }).encode('utf-8')

    document = {
        'n': g.n,
        'a': g.a,
        'b': g.b,
        'vertices': [list(v) for v in vertices],
        'edges': [[list(u), list(v)] for u, v in edges],
    }
    return json.dumps(document, indent=2).encode('utf-8')
