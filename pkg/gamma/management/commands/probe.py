"""
Arc-stabilizer probe: is there an automorphism fixing (0,0) and mapping (b,1)
to (1,2)? Prints true with one witness in cycle notation, or false.
Usage: python manage.py probe --n 7 --a 2 [--cases]
"""
from django.core.management.base import CommandError

from gamma.automorphism import arc_stabilizer_witness, probe_cases
from gamma.construction import build
from gamma.exceptions import SearchBudgetExceeded
from gamma.forms import PairForm
from gamma.management.base import EXIT_BUDGET, GammaCommand


class Command(GammaCommand):
    help = 'Search for an automorphism fixing (0,0) and mapping (b,1) to (1,2)'

    def add_arguments(self, parser):
        self.add_pair_arguments(parser)
        self.add_budget_argument(parser)
        parser.add_argument(
            '--cases',
            action='store_true',
            help='Also decide each candidate image (b,1), (-b,1), (-1,2) of (1,2)',
        )

    def handle(self, *args, **options):
        pair = self.validated(PairForm({'n': options['n'], 'a': options['a']}))['pair']
        graph = build(pair.n, pair.a)
        budget = self.search_budget(options)
        try:
            witness = arc_stabilizer_witness(graph, budget)
            cases = probe_cases(graph, budget) if options['cases'] else None
        except SearchBudgetExceeded as e:
            raise CommandError(str(e), returncode=EXIT_BUDGET)

        if witness is None:
            self.stdout.write('false')
        else:
            self.stdout.write('true')
            self.stdout.write(witness.cycle_notation(graph.vertex_label))

        if cases is not None:
            for image, found in cases.items():
                self.stdout.write(f'(1,2) -> {image}: {"exists" if found is not None else "none"}')
