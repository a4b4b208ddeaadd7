"""
Permutations of vertex indices and the groups they generate.

Products compose right to left: (p * q)(x) = p(q(x)).
"""
from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import lcm


@dataclass(frozen=True)
class Permutation:
    images: tuple

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(size)))

    @classmethod
    def from_mapping(cls, size, mapping):
        images = list(range(size))
        for x, y in mapping.items():
            images[x] = y
        perm = cls(tuple(images))
        perm.check()
        return perm

    @property
    def size(self):
        return len(self.images)

    def check(self):
        """Raise ValueError if the images are not a bijection"""
        if sorted(self.images) != list(range(self.size)):
            raise ValueError('not a permutation')

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        images = self.images
        return Permutation(tuple(images[y] for y in other.images))

    def inverse(self):
        inverse = [0] * self.size
        for x, y in enumerate(self.images):
            inverse[y] = x
        return Permutation(tuple(inverse))

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.size)
        for _ in range(abs(k)):
            result = base * result
        return result

    @property
    def is_identity(self):
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point"""
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                seen.add(x)
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def order(self):
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def cycle_notation(self, label=str):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(label(x) for x in c) + ')' for c in cycles)

    def preserves(self, graph):
        """True iff the permutation maps every edge of graph onto an edge"""
        images = self.images
        sets = graph.adjacency_sets
        return all(images[v] in sets[images[u]] for u, v in graph.edges())


class UnionFind:
    def __init__(self, points):
        self.parent = {x: x for x in points}
        self.rank = {x: 0 for x in points}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def find_orbits(generators, points, action):
    """Orbits of a group action, by union-find closure under the generators"""
    uf = UnionFind(points)
    for g in generators:
        for x in points:
            uf.union(x, action(g, x))
    return uf.classes()


def orbit_with_transversal(point, generators, size):
    """Orbit of point, with for each orbit element w a product mapping point to w"""
    transversal = {point: Permutation.identity(size)}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = s(x)
            if y not in transversal:
                transversal[y] = s * transversal[x]
                queue.append(y)
    return transversal


@dataclass(frozen=True)
class ChainLevel:
    """One level of a stabilizer chain: base point, strong generators, transversal"""
    base_point: int
    generators: tuple
    transversal: dict

    @property
    def orbit_size(self):
        return len(self.transversal)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by a stabilizer chain"""
    degree: int
    levels: tuple

    @property
    def base(self):
        return [level.base_point for level in self.levels]

    @property
    def generators(self):
        seen = []
        for level in self.levels:
            for g in level.generators:
                if g not in seen:
                    seen.append(g)
        return seen

    @property
    def order(self):
        result = 1
        for level in self.levels:
            result *= level.orbit_size
        return result

    @property
    def basic_orbit_sizes(self):
        return [level.orbit_size for level in self.levels]

    def contains(self, perm):
        """Membership by sifting through the chain"""
        if perm.size != self.degree:
            return False
        h = perm
        for level in self.levels:
            w = h(level.base_point)
            u = level.transversal.get(w)
            if u is None:
                return False
            h = u.inverse() * h
        return h.is_identity

    def vertex_orbits(self):
        return find_orbits(self.generators, range(self.degree), lambda g, x: g(x))

    def edge_orbits(self, graph):
        return find_orbits(
            self.generators, graph.edges(), lambda g, e: tuple(sorted((g(e[0]), g(e[1]))))
        )

    def arc_orbits(self, graph):
        return find_orbits(self.generators, graph.arcs(), lambda g, e: (g(e[0]), g(e[1])))

    @classmethod
    def from_chain(cls, degree, base, strong_generators):
        """
        Build the chain from a base and generators where strong_generators[i]
        are the found generators fixing base[:i] pointwise.
        """
        levels = []
        for i, point in enumerate(base):
            gens = tuple(g for g in strong_generators if all(g(b) == b for b in base[:i]))
            levels.append(ChainLevel(point, gens, orbit_with_transversal(point, gens, degree)))
        return cls(degree=degree, levels=tuple(levels))
