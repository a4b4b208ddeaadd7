"""
Automorphisms of Γ(n,a).

The named automorphisms α: (i,j) -> (i + a^-j, j), β: (i,j) -> (i, j+1) and
γ: (i,j) -> (-i, j), the regular subgroup H = <α, β>, the full automorphism
group by individualization-refinement, the transitivity classification and
the arc-stabilizer probe.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .construction import build
from .exceptions import ConstructionError
from .modular import validate_pair
from .permutations import Permutation
from .refinement import (
    SearchCounter,
    canonical_labeling,
    certificate_bytes,
    find_pinned_mapping,
    search_group,
)

logger = logging.getLogger('gamma')

ARC_TRANSITIVE = 'arc-transitive'
HALF_TRANSITIVE = 'half-transitive'
VERTEX_ONLY = 'vertex-only'
EDGE_ONLY = 'edge-only'
OTHER = 'other'


class NamedAutomorphisms(NamedTuple):
    alpha: Permutation
    beta: Permutation
    gamma: Permutation


class RelationsCheck(NamedTuple):
    holds: bool
    failed: str = None


class CayleyCheck(NamedTuple):
    regular: bool
    order: int


@dataclass(frozen=True)
class TransitivityReport:
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int

    @property
    def classification(self):
        if self.arc_orbits == 1:
            return ARC_TRANSITIVE
        if self.vertex_orbits == 1 and self.edge_orbits == 1:
            return HALF_TRANSITIVE
        if self.vertex_orbits == 1:
            return VERTEX_ONLY
        if self.edge_orbits == 1:
            return EDGE_ONLY
        return OTHER

    def as_dict(self):
        return {
            'vertex_orbits': self.vertex_orbits,
            'edge_orbits': self.edge_orbits,
            'arc_orbits': self.arc_orbits,
            'classification': self.classification,
        }


def _vertex_map(n, func):
    """Permutation of linear indices from a map on (i, j)"""
    images = []
    for idx in range(3 * n):
        i, j = func(idx % n, idx // n)
        images.append(i % n + n * (j % 3))
    return Permutation(tuple(images))


def named_automorphisms(n, a, graph=None):
    """α, β, γ as vertex permutations, checked to be automorphisms of orders n, 3, 2"""
    pair = validate_pair(n, a)
    b = pair.b
    # a^-j = b^j
    alpha = _vertex_map(n, lambda i, j: (i + pow(b, j, n), j))
    beta = _vertex_map(n, lambda i, j: (i, j + 1))
    gamma = _vertex_map(n, lambda i, j: (-i, j))
    graph = graph or build(n, pair.a)

    named = NamedAutomorphisms(alpha, beta, gamma)
    for name, perm, order in zip(named._fields, named, (n, 3, 2)):
        if not perm.preserves(graph):
            raise ConstructionError(f'{name} is not an automorphism of Γ({n},{a})')
        if perm.order() != order:
            raise ConstructionError(f'{name} has order {perm.order()}, expected {order}')
    return named


def verify_relations(alpha, beta, gamma, n, a):
    """αβ = βα^(a²), αγ = γα^-1 and βγ = γβ as permutation identities"""
    b = a * a % n
    if alpha * beta != beta * alpha ** b:
        return RelationsCheck(False, 'alpha*beta = beta*alpha^(a^2)')
    if alpha * gamma != gamma * alpha ** -1:
        return RelationsCheck(False, 'alpha*gamma = gamma*alpha^-1')
    if beta * gamma != gamma * beta:
        return RelationsCheck(False, 'beta*gamma = gamma*beta')
    return RelationsCheck(True)


def regular_subgroup(n, a):
    """H = {α^i β^j}"""
    named = named_automorphisms(n, a)
    beta_powers = [Permutation.identity(3 * n), named.beta, named.beta * named.beta]
    elements = []
    alpha_power = Permutation.identity(3 * n)
    for _ in range(n):
        elements.extend(alpha_power * bp for bp in beta_powers)
        alpha_power = named.alpha * alpha_power
    return named, elements


def cayley_regular_check(n, a):
    """Check that H has 3n elements and is sharply transitive on the vertices"""
    named, elements = regular_subgroup(n, a)
    size = 3 * n
    members = {h.images for h in elements}
    regular = len(members) == size
    # closed under the generators, so H really is a group
    for h in elements:
        if (named.alpha * h).images not in members or (named.beta * h).images not in members:
            regular = False
            break
    if regular:
        for v in range(size):
            if len({h(v) for h in elements}) != size:
                regular = False
                break
    return CayleyCheck(regular, len(members))


def cayley_connection_set(n, a):
    """
    S = {β²α, β²α⁻¹, βα^b, βα^-b}; Γ(n,a) = Cay(H, S) exactly when S is closed
    under inverses and the images of (0,0) under S are its neighbours.
    """
    graph = build(n, a)
    alpha, beta, _ = named_automorphisms(n, a, graph)
    b = graph.b
    connection = [
        beta ** 2 * alpha,
        beta ** 2 * alpha ** -1,
        beta * alpha ** b,
        beta * alpha ** -b,
    ]
    closed = all(s.inverse() in connection for s in connection)
    images = sorted(s(0) for s in connection)
    return connection, closed and images == list(graph.adjacency[0])


def edge_transitivity_witnesses(n, a):
    """
    Check γ(e1) = e2, αβγ(e1) = reverse(e3) and γαβγ(e1) = reverse(e4) for the
    arcs e1: (0,0)->(1,2), e2: (0,0)->(-1,2), e3: (0,0)->(b,1), e4: (0,0)->(-b,1).
    """
    graph = build(n, a)
    alpha, beta, gamma = named_automorphisms(n, a, graph)
    origin = graph.index(0, 0)
    e1 = (origin, graph.index(1, 2))
    e2 = (origin, graph.index(-1, 2))
    e3 = (origin, graph.index(graph.b, 1))
    e4 = (origin, graph.index(-graph.b, 1))

    def image(perm, arc):
        return perm(arc[0]), perm(arc[1])

    return {
        'gamma(e1)=e2': image(gamma, e1) == e2,
        'alpha*beta*gamma(e1)=reverse(e3)': image(alpha * beta * gamma, e1) == e3[::-1],
        'gamma*alpha*beta*gamma(e1)=reverse(e4)': image(gamma * alpha * beta * gamma, e1) == e4[::-1],
    }


def automorphism_group(g, budget=None):
    group = search_group(g, budget)
    logger.info(f'{getattr(g, "name", "graph")}: |Aut| = {group.order}')
    return group


def transitivity(g, group):
    return TransitivityReport(
        vertex_orbits=len(group.vertex_orbits()),
        edge_orbits=len(group.edge_orbits(g)),
        arc_orbits=len(group.arc_orbits(g)),
    )


def find_automorphism(g, pins, budget=None):
    return find_pinned_mapping(g, pins, SearchCounter('probe', budget))


def arc_stabilizer_witness(g, budget=None):
    """An automorphism fixing (0,0) and mapping (b,1) to (1,2), or None"""
    origin = g.index(0, 0)
    pins = [(origin, origin), (g.index(g.b, 1), g.index(1, 2))]
    return find_automorphism(g, pins, budget)


def arc_stabilizer_probe(g, budget=None):
    return arc_stabilizer_witness(g, budget) is not None


def probe_cases(g, budget=None):
    """
    For each possible image of (1,2) under an automorphism fixing (0,0) and
    sending (b,1) to (1,2), whether such an automorphism exists.
    """
    origin = g.index(0, 0)
    base_pins = [(origin, origin), (g.index(g.b, 1), g.index(1, 2))]
    cases = {}
    for label, (i, j) in (('(b,1)', (g.b, 1)), ('(-b,1)', (-g.b, 1)), ('(-1,2)', (-1, 2))):
        pins = base_pins + [(g.index(1, 2), g.index(i, j))]
        cases[label] = find_automorphism(g, pins, budget)
    return cases


def canonical_form(g, budget=None, group=None):
    """Certificate bytes; equal for two graphs exactly when they are isomorphic"""
    group = group or automorphism_group(g, budget)
    label = canonical_labeling(g, group, budget)
    return certificate_bytes(g, label)


def are_isomorphic(g1, g2, budget=None):
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1, budget) == canonical_form(g2, budget)


def enumerate_automorphisms(g):
    """
    Every automorphism, by naive backtracking in BFS order from vertex 0. Each
    vertex after the first is mapped among the neighbours of its parent's
    image; only small graphs are practical.
    """
    size = g.order
    adjacency, sets = g.adjacency, g.adjacency_sets
    order, parent = [], {}
    for root in range(size):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adjacency[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)

    position = {v: k for k, v in enumerate(order)}
    earlier_neighbours = [
        [w for w in adjacency[v] if position[w] < position[v]] for v in order
    ]
    images = [None] * size
    used = [False] * size

    def extend(k):
        if k == size:
            yield Permutation(tuple(images))
            return
        v = order[k]
        p = parent[v]
        candidates = range(size) if p is None else adjacency[images[p]]
        for w in candidates:
            if used[w] or len(adjacency[w]) != len(adjacency[v]):
                continue
            if all(w in sets[images[u]] for u in earlier_neighbours[k]):
                images[v] = w
                used[w] = True
                yield from extend(k + 1)
                used[w] = False
        images[v] = None

    yield from extend(0)
