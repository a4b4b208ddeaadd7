import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import isprime

from gamma.construction import build, with_extra_edge
from gamma.exceptions import ColoringError
from gamma.modular import pairs_up_to
from gamma.structure import (
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    SKIPPED,
    analyze_structure,
    bipartition,
    chromatic_number,
    cycle_census,
    find_cycle,
    girth,
    hamiltonian_cycle,
    holt_five_cycle,
    is_cycle,
    odd_cycle,
    odd_girth,
    six_cycle_witness,
    triangle_witness,
)


class BipartitionTests(SimpleTestCase):

    def test_even_n_splits_by_parity_of_i(self):
        g = build(14, 9)
        x, y = bipartition(g)
        self.assertEqual(set(x), {v for v in range(g.order) if g.vertex(v).i % 2 == 0})
        self.assertEqual(set(y), {v for v in range(g.order) if g.vertex(v).i % 2 == 1})

    def test_odd_n_is_not_bipartite(self):
        self.assertIsNone(bipartition(build(9, 4)))
        self.assertIsNone(bipartition(build(63, 4)))

    def test_bipartite_iff_even(self):
        for pair in pairs_up_to(200):
            g = build(pair.n, pair.a)
            with self.subTest(pair=str(pair)):
                self.assertEqual(bipartition(g) is not None, pair.n % 2 == 0)
                self.assertEqual(bipartition(g) is not None, nx.is_bipartite(g.to_networkx()))


class ChromaticTests(SimpleTestCase):

    def test_values(self):
        self.assertEqual(chromatic_number(build(14, 9)).number, 2)
        self.assertEqual(chromatic_number(build(13, 3)).number, 3)

    def test_layers_for_odd_n(self):
        g = build(9, 4)
        coloring = chromatic_number(g)
        self.assertEqual(coloring.number, 3)
        for j, members in enumerate(coloring.classes):
            self.assertEqual({g.vertex(v).j for v in members}, {j})

    def test_improper_witness_raises(self):
        g = build(9, 4)
        broken = with_extra_edge(g, g.index(1, 2), g.index(-1, 2))
        with self.assertRaises(ColoringError):
            chromatic_number(broken)


class GirthTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(girth(build(7, 2)), 3)
        self.assertEqual(girth(build(9, 4)), 5)
        self.assertEqual(girth(build(14, 9)), 6)
        self.assertEqual(girth(build(18, 7)), 6)

    def test_agrees_with_networkx(self):
        for n, a in ((7, 2), (9, 4), (13, 3), (21, 4), (26, 3), (27, 10)):
            g = build(n, a)
            with self.subTest(n=n, a=a):
                self.assertEqual(girth(g), nx.girth(g.to_networkx()))

    def test_girth_table(self):
        for pair in pairs_up_to(200):
            n = pair.n
            g = build(n, pair.a)
            value = girth(g)
            with self.subTest(pair=str(pair)):
                self.assertLessEqual(value, 6)
                if isprime(n):
                    self.assertEqual(value, 3)
                    self.assertTrue(is_cycle(g, triangle_witness(g)))
                if n % 2 == 0:
                    self.assertEqual(value, 6)
                if n % 9 == 0:
                    self.assertFalse(cycle_census(g, 3))
                    self.assertEqual(value, 5 if n == 9 else 6)


class OddGirthTests(SimpleTestCase):

    def test_n63(self):
        self.assertEqual(odd_girth(build(63, 4)), 9)
        self.assertEqual(odd_girth(build(63, 22)), 21)

    def test_bipartite_has_none(self):
        self.assertIsNone(odd_girth(build(14, 9)))
        self.assertIsNone(odd_cycle(build(14, 9)))

    def test_cycle_is_simple_and_odd(self):
        for n, a in ((7, 2), (9, 4), (21, 4), (63, 4)):
            g = build(n, a)
            cycle = odd_cycle(g)
            with self.subTest(n=n, a=a):
                self.assertTrue(is_cycle(g, cycle))
                self.assertEqual(len(cycle) % 2, 1)
                self.assertLessEqual(girth(g), len(cycle))


class CycleCensusTests(SimpleTestCase):

    def test_holt_graph(self):
        g = build(9, 4)
        self.assertFalse(cycle_census(g, 3))
        self.assertFalse(cycle_census(g, 4))
        self.assertTrue(cycle_census(g, 5))
        self.assertTrue(cycle_census(g, 6))
        self.assertTrue(is_cycle(g, holt_five_cycle(g)))

    def test_triangle_free_for_multiples_of_nine(self):
        self.assertFalse(cycle_census(build(18, 7), 3))

    def test_no_4cycle_and_a_6cycle_everywhere(self):
        for pair in pairs_up_to(200):
            g = build(pair.n, pair.a)
            with self.subTest(pair=str(pair)):
                self.assertFalse(cycle_census(g, 4))
                self.assertTrue(cycle_census(g, 6))
                self.assertTrue(is_cycle(g, six_cycle_witness(g)))

    def test_found_cycle_is_valid(self):
        g = build(13, 3)
        cycle = find_cycle(g, 6)
        self.assertEqual(len(cycle), 6)
        self.assertTrue(is_cycle(g, cycle))
        self.assertEqual(cycle[0], min(cycle))

    def test_rejects_unsupported_length(self):
        with self.assertRaises(ValidationError):
            cycle_census(build(7, 2), 7)


class HamiltonianTests(SimpleTestCase):

    def test_found_for_small_odd_n(self):
        for n, a in ((7, 2), (9, 4)):
            g = build(n, a)
            result = hamiltonian_cycle(g)
            with self.subTest(n=n):
                self.assertEqual(result.status, FOUND)
                self.assertEqual(len(result.cycle), 3 * n)
                self.assertTrue(is_cycle(g, result.cycle))

    def test_odd_witnesses_validate(self):
        for pair in pairs_up_to(45):
            if pair.n % 2 == 0:
                continue
            g = build(pair.n, pair.a)
            result = hamiltonian_cycle(g, budget=10 ** 6)
            with self.subTest(pair=str(pair)):
                self.assertNotEqual(result.status, EXHAUSTED)
                if result.found:
                    self.assertEqual(len(result.cycle), g.order)
                    self.assertTrue(is_cycle(g, result.cycle))

    def test_tiny_budget_is_reported(self):
        result = hamiltonian_cycle(build(9, 4), budget=5)
        self.assertEqual(result.status, BUDGET_EXCEEDED)
        self.assertIsNone(result.cycle)


class StructureReportTests(SimpleTestCase):

    def test_holt_report(self):
        g = build(9, 4)
        report = analyze_structure(g)
        self.assertFalse(report.bipartite)
        self.assertEqual(report.chromatic, 3)
        self.assertEqual(report.girth, 5)
        self.assertEqual(report.odd_girth, 5)
        self.assertTrue(report.triangle_free)
        self.assertFalse(report.has_4cycle)
        self.assertTrue(report.has_6cycle)
        self.assertEqual(report.hamiltonian.status, FOUND)

    def test_consistency_invariants(self):
        for n, a in ((7, 2), (14, 9), (18, 7), (21, 4)):
            report = analyze_structure(build(n, a), skip_hamiltonian=True)
            with self.subTest(n=n):
                self.assertEqual(report.bipartite, report.odd_girth is None)
                self.assertEqual(report.bipartite, report.chromatic == 2)
                if report.odd_girth is not None:
                    self.assertLessEqual(report.girth, report.odd_girth)
                self.assertEqual(report.hamiltonian.status, SKIPPED)

    def test_as_dict_uses_vertex_labels(self):
        g = build(7, 2)
        data = analyze_structure(g).as_dict(g.vertex_label)
        self.assertEqual(data['hamiltonian']['status'], FOUND)
        self.assertEqual(data['hamiltonian']['cycle'][0], '0,0')
        self.assertEqual(data['bipartition_sizes'], None)
