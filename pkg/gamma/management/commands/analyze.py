"""
Full analysis of one Γ(n,a): structure, algebra, automorphism group,
transitivity, relations audit and the published claims.

Usage: python manage.py analyze --n 9 --a 4 [--json] [--out report.json]
Exit codes: 0 all claims hold, 2 a claim failed, 3 the automorphism search ran
out of budget.
"""
from pathlib import Path

from django.core.management.base import CommandError

from gamma.forms import PairForm
from gamma.management.base import EXIT_BUDGET, EXIT_CLAIM_FAILED, EXIT_USAGE, GammaCommand
from gamma.reports import BUDGET_EXCEEDED, render_json, run_analysis


class Command(GammaCommand):
    help = 'Analyze Γ(n,a) and check it against the published claims'

    def add_arguments(self, parser):
        self.add_pair_arguments(parser)
        parser.add_argument('--skip-aut', action='store_true', help='Skip the automorphism stage')
        parser.add_argument(
            '--skip-hamiltonian', action='store_true', help='Skip the Hamiltonian cycle search'
        )
        self.add_budget_argument(parser)
        parser.add_argument('--json', action='store_true', help='Print the JSON report')
        parser.add_argument('--out', type=str, default=None, help='Also write the JSON report here')
        parser.add_argument(
            '--oracle',
            action='store_true',
            help='Cross-check |Aut| by naive enumeration (graphs with at most 30 vertices)',
        )

    def handle(self, *args, **options):
        pair = self.validated(PairForm({'n': options['n'], 'a': options['a']}))['pair']
        report = run_analysis(
            pair.n, pair.a,
            skip_aut=options['skip_aut'],
            skip_hamiltonian=options['skip_hamiltonian'],
            search_budget=self.search_budget(options),
            hamiltonian_budget=self.hamiltonian_budget(options),
            oracle=options['oracle'],
        )
        document = render_json(report)

        if options['out']:
            try:
                Path(options['out']).write_text(document + '\n', encoding='utf-8')
            except OSError as e:
                raise CommandError(f'Cannot write "{options["out"]}": {e}', returncode=EXIT_USAGE)

        if options['json']:
            self.stdout.write(document)
        else:
            self.write_summary(report)

        if report.failed_claims:
            raise CommandError(
                f'Claim check failed: {", ".join(report.failed_claims)}', returncode=EXIT_CLAIM_FAILED
            )
        if report.budget_exceeded:
            raise CommandError('Automorphism search exceeded its budget', returncode=EXIT_BUDGET)

    def write_summary(self, report):
        graph, structure, trans = report.graph, report.structure, report.transitivity
        self.stdout.write(f'{graph["name"]}: {graph["vertices"]} vertices, {graph["edges"]} edges')
        self.stdout.write(
            f'bipartite={structure["bipartite"]} chromatic={structure["chromatic"]} '
            f'girth={structure["girth"]} odd_girth={structure["odd_girth"]}'
        )
        self.stdout.write(
            f'4-cycle={structure["has_4cycle"]} 6-cycle={structure["has_6cycle"]} '
            f'hamiltonian={structure["hamiltonian"]["status"]}'
        )
        if structure['hamiltonian']['status'] == BUDGET_EXCEEDED:
            self.stdout.write(self.style.WARNING(
                f'Hamiltonian search stopped after {structure["hamiltonian"]["expansions"]} expansions '
                'without a cycle; raise --budget to retry'
            ))
        if trans['status'] == 'computed':
            self.stdout.write(
                f'|Aut| = {report.aut_order}; orbits: {trans["vertex_orbits"]} vertex, '
                f'{trans["edge_orbits"]} edge, {trans["arc_orbits"]} arc; {trans["classification"]}'
            )
        else:
            self.stdout.write(self.style.WARNING(f'automorphism stage: {trans["status"]}'))
        if report.oracle and report.oracle['status'] == 'computed':
            self.stdout.write(f'oracle |Aut| = {report.oracle["order"]}')

        if report.failed_claims:
            self.stdout.write(self.style.ERROR(f'FAILED: {", ".join(report.failed_claims)}'))
        else:
            self.stdout.write(self.style.SUCCESS(f'All {len(report.claims)} claims hold'))
