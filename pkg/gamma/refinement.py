"""
Individualization-refinement search over ordered partitions.

A partition is a tuple of cells, each a sorted tuple of vertices. Refinement
splits cells by the multiset of neighbour cells (1-dimensional
Weisfeiler-Leman) until the partition is equitable; sub-cells are ordered by
that signature, so the result commutes with graph isomorphisms. The target
cell is the first smallest non-singleton cell, and branches are tried in
ascending vertex order.
"""
import logging
from collections import defaultdict

import networkx as nx

from .exceptions import SearchBudgetExceeded
from .permutations import Permutation, PermGroup, find_orbits, orbit_with_transversal

logger = logging.getLogger('gamma')

DEFAULT_SEARCH_BUDGET = 2_000_000


class SearchCounter:
    def __init__(self, stage, budget=None):
        self.stage = stage
        self.budget = budget or DEFAULT_SEARCH_BUDGET
        self.expanded = 0

    def tick(self):
        self.expanded += 1
        if self.expanded > self.budget:
            raise SearchBudgetExceeded(self.stage, self.budget, self.expanded)


def refine(graph, cells):
    """Refine cells to the coarsest equitable partition finer than them"""
    adjacency = graph.adjacency
    cells = [tuple(cell) for cell in cells]
    cell_of = [0] * graph.order
    while True:
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = defaultdict(list)
            for v in cell:
                groups[tuple(sorted(cell_of[w] for w in adjacency[v]))].append(v)
            if len(groups) > 1:
                split = True
            refined.extend(tuple(groups[key]) for key in sorted(groups))
        cells = refined
        if not split:
            return tuple(cells)


def unit_partition(graph):
    return refine(graph, [tuple(range(graph.order))])


def is_discrete(cells):
    return all(len(cell) == 1 for cell in cells)


def shape(cells):
    return tuple(len(cell) for cell in cells)


def target_cell(cells):
    """Index of the first smallest non-singleton cell"""
    best = None
    for idx, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = idx
    return best


def cell_position(cells, v):
    for idx, cell in enumerate(cells):
        if v in cell:
            return idx
    raise ValueError(f'vertex {v} is not in the partition')


def individualize(cells, v):
    """Split v off its cell, placing the singleton first"""
    idx = cell_position(cells, v)
    rest = tuple(x for x in cells[idx] if x != v)
    return cells[:idx] + ((v,),) + ((rest,) if rest else ()) + cells[idx + 1:]


def _leaf_map(source, target):
    images = [0] * len(source)
    for s, t in zip(source, target):
        images[s[0]] = t[0]
    return Permutation(tuple(images))


def extend_mapping(graph, source, target, counter):
    """
    Search for an automorphism mapping the source partition onto the target
    one, cell by cell. The source side always follows its first branch.
    """
    counter.tick()
    if shape(source) != shape(target):
        return None
    if is_discrete(source):
        perm = _leaf_map(source, target)
        return perm if perm.preserves(graph) else None
    c = target_cell(source)
    next_source = refine(graph, individualize(source, source[c][0]))
    for w in target[c]:
        found = extend_mapping(graph, next_source, refine(graph, individualize(target, w)), counter)
        if found is not None:
            return found
    return None


def find_pinned_mapping(graph, pins, counter):
    """Automorphism sending each pinned source vertex to its target, or None"""
    source = target = unit_partition(graph)
    for s, t in pins:
        if cell_position(source, s) != cell_position(target, t):
            return None
        source = refine(graph, individualize(source, s))
        target = refine(graph, individualize(target, t))
    return extend_mapping(graph, source, target, counter)


def search_group(graph, budget=None):
    """
    Full automorphism group as a stabilizer chain along the first path of the
    search tree. Levels are processed deepest first, so generators found
    lower down prune the candidate images higher up.
    """
    counter = SearchCounter('automorphism', budget)
    size = graph.order
    partitions = [unit_partition(graph)]
    base, targets = [], []
    while not is_discrete(partitions[-1]):
        cells = partitions[-1]
        c = target_cell(cells)
        base.append(cells[c][0])
        targets.append(c)
        partitions.append(refine(graph, individualize(cells, cells[c][0])))

    generators = []
    for level in reversed(range(len(base))):
        cells = partitions[level]
        fixed = base[:level]
        level_generators = [g for g in generators if all(g(x) == x for x in fixed)]
        orbit = orbit_with_transversal(base[level], level_generators, size)
        for w in cells[targets[level]]:
            if w in orbit:
                continue
            perm = extend_mapping(
                graph, partitions[level + 1], refine(graph, individualize(cells, w)), counter
            )
            if perm is not None:
                generators.append(perm)
                level_generators.append(perm)
                orbit = orbit_with_transversal(base[level], level_generators, size)

    group = PermGroup.from_chain(size, base, generators)
    logger.debug(
        f'Automorphism search: base {base}, basic orbits {group.basic_orbit_sizes}, '
        f'{counter.expanded} nodes'
    )
    return group


def canonical_labeling(graph, group, budget=None):
    """
    Labeling from the leaf with the lexicographically smallest relabeled edge
    list. Children in the same orbit of the known generators fixing the
    current prefix are skipped.
    """
    counter = SearchCounter('canonical labeling', budget)
    edges = graph.edges()
    generators = group.generators
    best = [None, None]

    def visit(cells, prefix):
        counter.tick()
        if is_discrete(cells):
            label = [0] * graph.order
            for position, cell in enumerate(cells):
                label[cell[0]] = position
            certificate = tuple(sorted(
                (min(label[u], label[v]), max(label[u], label[v])) for u, v in edges
            ))
            if best[0] is None or certificate < best[0]:
                best[0], best[1] = certificate, label
            return
        cell = cells[target_cell(cells)]
        stabilizer = [g for g in generators if all(g(x) == x for x in prefix)]
        representatives = sorted(
            min(orbit) for orbit in find_orbits(stabilizer, cell, lambda g, x: g(x))
        )
        for w in representatives:
            visit(refine(graph, individualize(cells, w)), prefix + (w,))

    visit(unit_partition(graph), ())
    logger.debug(f'Canonical labeling: {counter.expanded} nodes')
    return best[1]


def certificate_bytes(graph, label):
    """graph6 encoding of the graph relabeled by label"""
    relabeled = graph.relabeled(label)
    return nx.to_graph6_bytes(relabeled.to_networkx(), header=False).rstrip(b'\n')
