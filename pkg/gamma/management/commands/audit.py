"""
Batch audit of every admissible pair up to --max-n: PASS/FAIL per pair.

The automorphism stage only runs for n <= --aut-max-n (HALFTRANS_AUDIT_AUT_MAX_N);
the Hamiltonian search never runs here. Exit code 0 iff there are no FAIL rows;
2 when a claim failed, 3 when the only failures are exhausted search budgets.
"""
import logging

from django.conf import settings
from django.core.management.base import CommandError

from gamma.forms import AUDIT_MAX_N, RangeForm
from gamma.management.base import EXIT_BUDGET, EXIT_CLAIM_FAILED, GammaCommand
from gamma.modular import pairs_up_to
from gamma.reports import BUDGET_EXCEEDED, FAIL, AuditTask, audit_pair

logger = logging.getLogger('gamma')

COLUMNS = [
    'n', 'a', 'b', 'bipartite', 'chromatic', 'girth', 'odd_girth', 'no_4cycle',
    'has_6cycle', 'classification', 'aut_order', 'status', 'failed',
]


class Command(GammaCommand):
    help = 'Audit the published claims over all admissible pairs up to max_n'

    def add_arguments(self, parser):
        parser.add_argument('--max-n', type=int, default=60, help='Largest modulus (at most 200)')
        parser.add_argument('--skip-aut', action='store_true', help='Structural checks only')
        parser.add_argument(
            '--aut-max-n',
            type=int,
            default=None,
            help='Largest n for the automorphism stage (default: HALFTRANS_AUDIT_AUT_MAX_N)',
        )
        self.add_budget_argument(parser)
        self.add_threads_argument(parser)
        parser.add_argument(
            '--inject-fault',
            action='store_true',
            help='Test mode: add a chord between two neighbours of (0,0) before checking',
        )
        self.add_table_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(RangeForm({'max_n': options['max_n']}, limit=AUDIT_MAX_N))
        aut_max_n = options['aut_max_n'] or settings.HALFTRANS_AUDIT_AUT_MAX_N
        budget = self.search_budget(options)

        tasks = [
            AuditTask(
                n=pair.n,
                a=pair.a,
                skip_aut=options['skip_aut'] or pair.n > aut_max_n,
                search_budget=budget,
                inject_fault=options['inject_fault'],
            )
            for pair in pairs_up_to(data['max_n'])
        ]
        logger.info(f'Auditing {len(tasks)} pairs with n <= {data["max_n"]}')
        rows = self.run_batch(audit_pair, tasks, options)
        self.write_table(rows, COLUMNS, self.table_format(options))

        failures = [row for row in rows if row['status'] == FAIL]
        if not failures:
            self.stderr.write(self.style.SUCCESS(f'All {len(rows)} pairs PASS'))
            return

        self.stderr.write(self.style.ERROR(f'{len(failures)} of {len(rows)} pairs FAIL'))
        if all(row['failed'] == BUDGET_EXCEEDED for row in failures):
            raise CommandError('Automorphism search exceeded its budget', returncode=EXIT_BUDGET)
        raise CommandError(
            'Claim check failed for ' + ', '.join(f'Γ({r["n"]},{r["a"]})' for r in failures),
            returncode=EXIT_CLAIM_FAILED,
        )
