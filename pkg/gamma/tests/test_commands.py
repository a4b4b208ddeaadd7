import json
import shutil
import tempfile
from io import StringIO
from pathlib import Path

import networkx as nx
import pandas as pd
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from gamma.reports import parse_report


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue()


class EnumerateCommandTests(SimpleTestCase):

    def test_max_n_9(self):
        table = pd.read_csv(StringIO(run('enumerate', max_n=9)))
        self.assertEqual(table.values.tolist(), [[7, 2, 4], [9, 4, 7]])

    def test_below_seven_is_empty(self):
        self.assertEqual(run('enumerate', max_n=6).strip(), 'n,a,b')
        self.assertEqual(json.loads(run('enumerate', max_n=6, json=True)), [])

    def test_n63_rows(self):
        rows = json.loads(run('enumerate', max_n=63, format='json'))
        self.assertIn({'n': 63, 'a': 4, 'b': 16}, rows)
        self.assertIn({'n': 63, 'a': 22, 'b': 43}, rows)

    def test_range_violation(self):
        for max_n in (0, 10001):
            with self.subTest(max_n=max_n), self.assertRaises(CommandError) as cm:
                run('enumerate', max_n=max_n)
            self.assertEqual(cm.exception.returncode, 1)


class AnalyzeCommandTests(SimpleTestCase):

    def test_holt_json(self):
        report = parse_report(run('analyze', n=9, a=4, json=True))
        self.assertEqual(report.aut_order, 54)
        self.assertEqual(report.structure['girth'], 5)
        self.assertEqual(report.transitivity['classification'], 'half-transitive')

    def test_summary(self):
        out = run('analyze', n=7, a=2, skip_hamiltonian=True)
        self.assertIn('Γ(7,2): 21 vertices, 42 edges', out)
        self.assertIn('arc-transitive', out)
        self.assertIn('claims hold', out)

    def test_writes_report_file(self):
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        path = Path(directory) / 'report.json'
        run('analyze', n=14, a=9, skip_hamiltonian=True, out=str(path))
        report = parse_report(path.read_text(encoding='utf-8'))
        self.assertTrue(report.structure['bipartite'])
        self.assertEqual(report.transitivity['classification'], 'arc-transitive')

    def test_inadmissible_pair(self):
        with self.assertRaises(CommandError) as cm:
            run('analyze', n=9, a=2)
        self.assertEqual(cm.exception.returncode, 1)

    def test_budget_exhaustion_exit_code(self):
        with self.assertRaises(CommandError) as cm:
            run('analyze', n=9, a=4, skip_hamiltonian=True, budget=1)
        self.assertEqual(cm.exception.returncode, 3)

    def test_inverse_orientation_passes(self):
        for n, a in ((7, 4), (9, 7)):
            with self.subTest(n=n, a=a):
                out = run('analyze', n=n, a=a, skip_hamiltonian=True)
                self.assertIn('claims hold', out)

    def test_hamiltonian_budget_warning(self):
        out = StringIO()
        with self.assertRaises(CommandError):
            call_command('analyze', n=9, a=4, budget=1, stdout=out, stderr=StringIO())
        self.assertIn('hamiltonian=budget_exceeded', out.getvalue())
        self.assertIn('Hamiltonian search stopped after', out.getvalue())

    def test_oracle_flag(self):
        report = parse_report(run('analyze', n=7, a=2, skip_hamiltonian=True, oracle=True, json=True))
        self.assertEqual(report.oracle['order'], report.aut_order)


class AuditCommandTests(SimpleTestCase):

    def test_all_pass_up_to_20(self):
        table = pd.read_csv(StringIO(run('audit', max_n=20)))
        self.assertTrue((table['status'] == 'PASS').all())
        classes = dict(zip(table['n'], table['classification']))
        self.assertEqual(classes[7], 'arc-transitive')
        self.assertEqual(classes[14], 'arc-transitive')
        for n in (9, 13, 18, 19):
            self.assertEqual(classes[n], 'half-transitive')

    def test_injected_fault(self):
        with self.assertRaises(CommandError) as cm:
            run('audit', max_n=9, inject_fault=True)
        self.assertEqual(cm.exception.returncode, 2)

    def test_structural_only_to_63(self):
        rows = json.loads(run('audit', max_n=63, skip_aut=True, json=True))
        odd_girth = {(r['n'], r['a']): r['odd_girth'] for r in rows}
        self.assertEqual(odd_girth[(63, 4)], 9)
        self.assertEqual(odd_girth[(63, 22)], 21)
        self.assertTrue(all(r['status'] == 'PASS' for r in rows))

    def test_rejects_large_range(self):
        with self.assertRaises(CommandError) as cm:
            run('audit', max_n=201)
        self.assertEqual(cm.exception.returncode, 1)

    @override_settings(HALFTRANS_AUDIT_AUT_MAX_N=9)
    def test_aut_stage_capped_by_settings(self):
        rows = json.loads(run('audit', max_n=14, json=True))
        classes = {r['n']: r['classification'] for r in rows}
        self.assertEqual(classes[9], 'half-transitive')
        self.assertEqual(classes[13], 'skipped')

    def test_worker_pool_preserves_order(self):
        serial = run('audit', max_n=21, skip_aut=True)
        pooled = run('audit', max_n=21, skip_aut=True, threads=2)
        self.assertEqual(serial, pooled)


class ProbeCommandTests(SimpleTestCase):

    def test_exceptional_pair_has_witness(self):
        lines = run('probe', n=7, a=2).splitlines()
        self.assertEqual(lines[0], 'true')
        self.assertTrue(lines[1].startswith('('))

    def test_half_transitive_pairs(self):
        self.assertEqual(run('probe', n=9, a=4).strip(), 'false')
        self.assertEqual(run('probe', n=13, a=3).strip(), 'false')

    def test_cases(self):
        out = run('probe', n=9, a=4, cases=True)
        self.assertIn('(1,2) -> (-1,2): none', out)


class ExportCommandTests(SimpleTestCase):

    def setUp(self):
        self.directory = Path(tempfile.mkdtemp())
        self.addCleanup(shutil.rmtree, self.directory)

    def test_graph6_file(self):
        path = self.directory / 'holt.g6'
        out = run('export', n=9, a=4, format='graph6', out=str(path))
        self.assertIn('27 vertices, 54 edges', out)
        graph = nx.read_graph6(str(path))
        self.assertEqual(graph.number_of_nodes(), 27)

    def test_dot_to_stdout(self):
        out = run('export', n=7, a=2, format='dot')
        self.assertEqual(sum(1 for line in out.splitlines() if ' -- ' in line), 42)

    def test_json_document(self):
        document = json.loads(run('export', n=14, a=9, format='json'))
        self.assertEqual((document['n'], document['a'], document['b']), (14, 9, 11))

    def test_unknown_format(self):
        with self.assertRaises(CommandError) as cm:
            run('export', n=7, a=2, format='gml')
        self.assertEqual(cm.exception.returncode, 1)

    def test_unwritable_path(self):
        with self.assertRaises(CommandError) as cm:
            run('export', n=7, a=2, out=str(self.directory / 'missing' / 'g.g6'))
        self.assertEqual(cm.exception.returncode, 1)


class RelationsCommandTests(SimpleTestCase):

    def test_single_pair(self):
        table = pd.read_csv(StringIO(run('relations', n=18, a=7)))
        self.assertEqual(len(table), 13)
        self.assertEqual(table[table['holds']]['relation_id'].tolist(), [4])

    def test_range_lists_only_exceptions(self):
        rows = json.loads(run('relations', max_n=200, json=True))
        found = sorted({(r['relation_id'], r['n']) for r in rows})
        self.assertEqual(found, [(2, 9), (3, 7), (3, 14), (4, 18)])
        self.assertTrue(all(r['exceptional'] for r in rows))

    def test_inverse_orientation_uses_canonical_rows(self):
        table = pd.read_csv(StringIO(run('relations', n=7, a=4)))
        self.assertEqual(set(table['a']), {2})
        self.assertEqual(table[table['holds']]['relation_id'].tolist(), [3])
        rows = json.loads(run('relations', n=9, a=7, json=True))
        self.assertEqual([r['relation_id'] for r in rows if r['holds']], [2])

    def test_needs_pair_or_range(self):
        with self.assertRaises(CommandError) as cm:
            run('relations')
        self.assertEqual(cm.exception.returncode, 1)
