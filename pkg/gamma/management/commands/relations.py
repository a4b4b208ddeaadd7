"""
Audit the thirteen relations in a and b that must not vanish modulo n.

With --n/--a prints all thirteen rows for that pair; with --max-n audits every
canonical pair up to max_n and prints only the vanishing rows. A vanishing
relation outside the documented exceptions exits with code 2.
"""
import logging

from django.core.management.base import CommandError

from gamma.forms import PairForm, RangeForm
from gamma.management.base import EXIT_CLAIM_FAILED, EXIT_USAGE, GammaCommand
from gamma.modular import pairs_up_to
from gamma.reports import relation_rows

logger = logging.getLogger('gamma')

COLUMNS = ['n', 'a', 'relation_id', 'expression', 'lhs_value', 'holds', 'exceptional']


class Command(GammaCommand):
    help = 'Evaluate the thirteen forbidden relations for one pair or a range of moduli'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, default=None, help='Modulus of a single pair')
        parser.add_argument('--a', type=int, default=None, help='Order-3 unit of a single pair')
        parser.add_argument('--max-n', type=int, default=None, help='Audit every pair up to this n')
        self.add_threads_argument(parser)
        self.add_table_arguments(parser)

    def handle(self, *args, **options):
        single = options['n'] is not None or options['a'] is not None
        if single == (options['max_n'] is not None):
            raise CommandError('Give either --n and --a, or --max-n', returncode=EXIT_USAGE)

        if single:
            pair = self.validated(PairForm({'n': options['n'], 'a': options['a']}))['pair']
            rows = relation_rows((pair.n, pair.a))
        else:
            data = self.validated(RangeForm({'max_n': options['max_n']}))
            pairs = [(p.n, p.a) for p in pairs_up_to(data['max_n'])]
            batches = self.run_batch(relation_rows, pairs, options)
            rows = [row for batch in batches for row in batch if row['holds']]
            logger.info(f'{len(pairs)} pairs audited, {len(rows)} vanishing relations')

        self.write_table(rows, COLUMNS, self.table_format(options))

        unexpected = [row for row in rows if row['holds'] and not row['exceptional']]
        if unexpected:
            raise CommandError(
                'Unexpected vanishing relations: '
                + ', '.join(f'{r["relation_id"]} at Γ({r["n"]},{r["a"]})' for r in unexpected),
                returncode=EXIT_CLAIM_FAILED,
            )
        self.stderr.write(self.style.SUCCESS('Only documented exceptions vanish'))
