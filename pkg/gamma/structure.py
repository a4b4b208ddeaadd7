"""
Structural invariants: bipartition, chromatic number, girth, odd girth,
short-cycle census and a Hamiltonian cycle search.

Everything here works on vertex indices and only needs `adjacency`; the
chromatic number and the explicit cycles additionally use (n, a, b).
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from django.core.exceptions import ValidationError

from .exceptions import ColoringError, ConstructionError

logger = logging.getLogger('gamma')

CYCLE_LENGTHS = (3, 4, 5, 6)
DEFAULT_HAMILTONIAN_BUDGET = 10 ** 8

FOUND = 'found'
BUDGET_EXCEEDED = 'budget_exceeded'
EXHAUSTED = 'exhausted'
SKIPPED = 'skipped'


class Coloring(NamedTuple):
    number: int
    classes: tuple


class HamiltonianResult(NamedTuple):
    status: str
    cycle: tuple = None
    expansions: int = 0

    @property
    def found(self):
        return self.status == FOUND


@dataclass(frozen=True)
class StructureReport:
    bipartite: bool
    bipartition: tuple
    chromatic: int
    coloring: tuple
    girth: int
    odd_girth: int
    triangle_free: bool
    has_4cycle: bool
    has_6cycle: bool
    hamiltonian: HamiltonianResult

    def as_dict(self, label=str):
        cycle = self.hamiltonian.cycle
        return {
            'bipartite': self.bipartite,
            'bipartition_sizes': [len(c) for c in self.bipartition] if self.bipartition else None,
            'chromatic': self.chromatic,
            'coloring_sizes': [len(c) for c in self.coloring],
            'girth': self.girth,
            'odd_girth': self.odd_girth,
            'triangle_free': self.triangle_free,
            'has_4cycle': self.has_4cycle,
            'has_6cycle': self.has_6cycle,
            'hamiltonian': {
                'status': self.hamiltonian.status,
                'expansions': self.hamiltonian.expansions,
                'cycle': [label(v) for v in cycle] if cycle else None,
            },
        }


def is_cycle(g, sequence):
    """True iff sequence is a simple cycle of g (closing edge implied)"""
    if len(sequence) < 3 or len(set(sequence)) != len(sequence):
        return False
    return all(
        g.has_edge(sequence[k], sequence[(k + 1) % len(sequence)]) for k in range(len(sequence))
    )


def bipartition(g):
    """BFS 2-colouring; (class of vertex 0, other class) or None"""
    side = [None] * g.order
    for root in range(g.order):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] is None:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        tuple(v for v in range(g.order) if side[v] == 0),
        tuple(v for v in range(g.order) if side[v] == 1),
    )


def chromatic_number(g):
    """2 with the bipartition when bipartite, else 3 with the layers A_j = {(i, j)}"""
    classes = bipartition(g)
    if classes is not None:
        number = 2
    else:
        number = 3
        classes = tuple(tuple(range(j * g.n, (j + 1) * g.n)) for j in range(3))

    colour = [None] * g.order
    for c, members in enumerate(classes):
        for v in members:
            colour[v] = c
    for u, v in g.edges():
        if colour[u] == colour[v]:
            raise ColoringError(f'{g.vertex_label(u)} and {g.vertex_label(v)} share colour {colour[u]}')
    return Coloring(number, classes)


def girth(g):
    """Shortest cycle length, by BFS from every root, cut off at the best found so far"""
    adjacency = g.adjacency
    best = None
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _tree_path(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def odd_cycle(g):
    """A shortest odd cycle as a vertex sequence, or None for bipartite graphs"""
    if bipartition(g) is not None:
        return None
    adjacency = g.adjacency
    best = None
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u] and (best is None or 2 * dist[u] + 1 < len(best)):
                    cycle = _tree_path(parent, u)[::-1] + _tree_path(parent, w)[:-1]
                    # the two tree paths may meet before the root
                    if len(set(cycle)) == len(cycle):
                        best = cycle
    if best is None or not is_cycle(g, best):
        raise ConstructionError('odd cycle reconstruction failed')
    return best


def odd_girth(g):
    cycle = odd_cycle(g)
    return len(cycle) if cycle is not None else None


def find_cycle(g, k):
    """A k-cycle whose smallest vertex comes first, by bounded DFS, or None"""
    if k not in CYCLE_LENGTHS:
        raise ValidationError(f'cycle length must be one of {CYCLE_LENGTHS}', code='invalid_length')
    adjacency, sets = g.adjacency, g.adjacency_sets

    def extend(path, on_path):
        last = path[-1]
        if len(path) == k:
            return path[0] in sets[last]
        for w in adjacency[last]:
            if w > path[0] and w not in on_path:
                path.append(w)
                on_path.add(w)
                if extend(path, on_path):
                    return True
                path.pop()
                on_path.discard(w)
        return False

    for start in range(g.order):
        path = [start]
        if extend(path, {start}):
            return path
    return None


def cycle_census(g, k):
    return find_cycle(g, k) is not None


def triangle_witness(g):
    """(0,0) ~ (1,2) ~ (a+1,1), a triangle when n divides a^2 + a + 1"""
    return [g.index(0, 0), g.index(1, 2), g.index(g.a + 1, 1)]


def six_cycle_witness(g):
    a, b = g.a, g.b
    return [
        g.index(0, 0),
        g.index(1, 2),
        g.index(a - 1, 1),
        g.index(a * a - a + 1, 0),
        g.index(-a * a + a, 2),
        g.index(b, 1),
    ]


def holt_five_cycle(g):
    """The 5-cycle of Γ(9,4)"""
    return [g.index(0, 0), g.index(1, 2), g.index(5, 1), g.index(6, 2), g.index(7, 1)]


def hamiltonian_cycle(g, budget=None):
    """
    Backtracking from vertex 0, trying first the neighbours with the fewest
    unvisited neighbours. A branch is cut when some unvisited vertex next to the
    path end has fewer than two usable neighbours, when (0,0) can no longer be
    closed, or when the unvisited vertices are not connected to the path end.
    """
    budget = budget or DEFAULT_HAMILTONIAN_BUDGET
    size = g.order
    adjacency, sets = g.adjacency, g.adjacency_sets
    start = 0
    on_path = [False] * size
    # neighbours not yet on the path
    free = [len(nbrs) for nbrs in adjacency]
    path = []

    def advance(v):
        on_path[v] = True
        path.append(v)
        for w in adjacency[v]:
            free[w] -= 1

    def retreat():
        v = path.pop()
        on_path[v] = False
        for w in adjacency[v]:
            free[w] += 1

    def options(v):
        candidates = [w for w in adjacency[v] if not on_path[w]]
        candidates.sort(key=lambda w: (free[w], w), reverse=True)
        return candidates

    def viable(prev, v):
        if free[start] == 0:
            return False
        for w in set(adjacency[prev]) | set(adjacency[v]):
            if on_path[w]:
                continue
            usable = free[w] + (w in sets[v]) + (w in sets[start])
            if usable < 2:
                return False
        remaining = size - len(path)
        seen = set()
        queue = deque(w for w in adjacency[v] if not on_path[w])
        seen.update(queue)
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if not on_path[w] and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == remaining

    advance(start)
    frames = [options(start)]
    expansions = 0
    while frames:
        candidates = frames[-1]
        if not candidates:
            frames.pop()
            if frames:
                retreat()
            continue
        v = candidates.pop()
        expansions += 1
        if expansions > budget:
            logger.warning(f'Hamiltonian search stopped after {budget} expansions')
            return HamiltonianResult(BUDGET_EXCEEDED, None, expansions)
        prev = path[-1]
        advance(v)
        if len(path) == size:
            if start in sets[v]:
                cycle = tuple(path)
                if not is_cycle(g, cycle):
                    raise ConstructionError('Hamiltonian witness failed validation')
                logger.info(f'Hamiltonian cycle found after {expansions} expansions')
                return HamiltonianResult(FOUND, cycle, expansions)
            retreat()
            continue
        if not viable(prev, v):
            retreat()
            continue
        frames.append(options(v))
    return HamiltonianResult(EXHAUSTED, None, expansions)


def analyze_structure(g, hamiltonian_budget=None, skip_hamiltonian=False):
    classes = bipartition(g)
    coloring = chromatic_number(g)
    if skip_hamiltonian:
        hamiltonian = HamiltonianResult(SKIPPED)
    else:
        hamiltonian = hamiltonian_cycle(g, hamiltonian_budget)
    return StructureReport(
        bipartite=classes is not None,
        bipartition=classes,
        chromatic=coloring.number,
        coloring=coloring.classes,
        girth=girth(g),
        odd_girth=odd_girth(g),
        triangle_free=not cycle_census(g, 3),
        has_4cycle=cycle_census(g, 4),
        has_6cycle=cycle_census(g, 6),
        hamiltonian=hamiltonian,
    )
