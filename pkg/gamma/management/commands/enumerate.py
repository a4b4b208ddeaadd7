"""
List the canonical admissible pairs (n, a, b) with a < b for 7 <= n <= max_n.
Usage: python manage.py enumerate --max-n 63 [--format json]
"""
import logging

from gamma.forms import RangeForm
from gamma.management.base import GammaCommand
from gamma.modular import pairs_up_to

logger = logging.getLogger('gamma')

COLUMNS = ['n', 'a', 'b']


class Command(GammaCommand):
    help = 'Enumerate the admissible pairs (n, a) with a of order 3 modulo n'

    def add_arguments(self, parser):
        parser.add_argument('--max-n', type=int, required=True, help='Largest modulus to list')
        self.add_table_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(RangeForm({'max_n': options['max_n']}))
        pairs = pairs_up_to(data['max_n'])
        logger.info(f'{len(pairs)} admissible pairs with n <= {data["max_n"]}')
        self.write_table([p.as_dict() for p in pairs], COLUMNS, self.table_format(options))
