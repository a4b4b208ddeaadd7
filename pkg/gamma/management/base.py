"""
Shared plumbing for the gamma management commands: form validation with the
documented exit codes, and pandas table output.
"""
from concurrent.futures import ProcessPoolExecutor

import pandas as pd
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from gamma.forms import error_message

EXIT_USAGE = 1
EXIT_CLAIM_FAILED = 2
EXIT_BUDGET = 3

TABLE_FORMATS = ('csv', 'json')


class GammaCommand(BaseCommand):

    def add_pair_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Modulus n (at least 7)')
        parser.add_argument('--a', type=int, required=True, help='Unit a of order 3 modulo n')

    def add_budget_argument(self, parser):
        parser.add_argument(
            '--budget',
            type=int,
            default=None,
            help='Node budget for the searches (default: HALFTRANS_SEARCH_BUDGET)',
        )

    def search_budget(self, options):
        return options.get('budget') or settings.HALFTRANS_SEARCH_BUDGET

    def hamiltonian_budget(self, options):
        return options.get('budget') or settings.HALFTRANS_HAMILTONIAN_BUDGET

    def validated(self, form):
        """cleaned_data of a bound form, or CommandError with exit code 1"""
        if not form.is_valid():
            raise CommandError(error_message(form), returncode=EXIT_USAGE)
        return form.cleaned_data

    def add_table_arguments(self, parser):
        parser.add_argument('--format', choices=TABLE_FORMATS, default='csv', help='Table format')
        parser.add_argument('--json', action='store_true', help='Shorthand for --format json')

    def add_threads_argument(self, parser):
        parser.add_argument(
            '--threads',
            type=int,
            default=None,
            help='Worker processes (default: HALFTRANS_THREADS)',
        )

    def table_format(self, options):
        return 'json' if options.get('json') else options.get('format', 'csv')

    def run_batch(self, func, tasks, options):
        """Order-preserving map over tasks, in a process pool when more than one worker is asked for"""
        threads = options.get('threads') or settings.HALFTRANS_THREADS
        if threads < 1:
            raise CommandError(f'threads must be at least 1 (got {threads})', returncode=EXIT_USAGE)
        if threads == 1 or len(tasks) < 2:
            return [func(task) for task in tasks]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(func, tasks))

    def write_table(self, rows, columns, fmt='csv'):
        table = pd.DataFrame(rows, columns=columns, dtype=object)
        if fmt == 'json':
            self.stdout.write(table.to_json(orient='records', indent=2))
        else:
            self.stdout.write(table.to_csv(index=False), ending='')
        return table
