"""
Export Γ(n,a) as graph6, DOT or JSON.
Usage: python manage.py export --n 9 --a 4 --format graph6 --out holt.g6
"""
from pathlib import Path

from django.core.management.base import CommandError

from gamma.construction import build, export
from gamma.forms import ExportForm
from gamma.management.base import EXIT_USAGE, GammaCommand


class Command(GammaCommand):
    help = 'Write Γ(n,a) in graph6, DOT or JSON format'

    def add_arguments(self, parser):
        self.add_pair_arguments(parser)
        parser.add_argument('--format', type=str, default='graph6', help='graph6, dot or json')
        parser.add_argument('--out', type=str, default=None, help='Output path (default: stdout)')

    def handle(self, *args, **options):
        data = self.validated(ExportForm({
            'n': options['n'], 'a': options['a'], 'format': options['format'],
        }))
        pair = data['pair']
        graph = build(pair.n, pair.a)
        payload = export(graph, data['format'])

        if options['out'] is None:
            self.stdout.write(payload.decode('utf-8'))
            return

        try:
            Path(options['out']).write_bytes(payload + b'\n')
        except OSError as e:
            raise CommandError(f'Cannot write "{options["out"]}": {e}', returncode=EXIT_USAGE)
        self.stdout.write(self.style.SUCCESS(
            f'Wrote {graph.name} ({graph.order} vertices, {graph.edge_count} edges) to {options["out"]}'
        ))
