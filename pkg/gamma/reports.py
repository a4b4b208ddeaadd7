"""
Analysis reports and audit rows.

run_analysis() runs the whole pipeline for one pair and returns an
AnalysisReport that serializes to a versioned JSON document. audit_pair() is
the lighter per-pair pipeline behind the audit command; it is a module-level
function so it can be shipped to worker processes.
"""
import json
import logging
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, fields
from typing import NamedTuple

from django.core.exceptions import ValidationError

from . import claims as claim_checks
from .automorphism import (
    arc_stabilizer_witness,
    automorphism_group,
    cayley_connection_set,
    cayley_regular_check,
    edge_transitivity_witnesses,
    enumerate_automorphisms,
    named_automorphisms,
    transitivity,
    verify_relations,
)
from .construction import build, with_extra_edge
from .exceptions import GammaError, SearchBudgetExceeded
from .modular import canonical_relations, relation_is_exceptional, validate_pair
from .permutations import find_orbits
from .structure import analyze_structure

logger = logging.getLogger('gamma')

SCHEMA_VERSION = 1
ORACLE_MAX_VERTICES = 30

COMPUTED = 'computed'
SKIPPED = 'skipped'
BUDGET_EXCEEDED = 'budget_exceeded'

PASS = 'PASS'
FAIL = 'FAIL'


@dataclass(frozen=True)
class AnalysisReport:
    schema_version: int
    pair: dict
    graph: dict
    structure: dict
    transitivity: dict
    aut_order: int
    algebra: dict
    relations_audit: list
    claims: list
    oracle: dict
    timings: dict

    @property
    def failed_claims(self):
        return [c['name'] for c in self.claims if not c['passed']]

    @property
    def budget_exceeded(self):
        return self.transitivity['status'] == BUDGET_EXCEEDED

    def as_dict(self):
        return asdict(self)


REPORT_FIELDS = frozenset(f.name for f in fields(AnalysisReport))


@contextmanager
def stage(timings, name):
    started = time.perf_counter()
    try:
        yield
    finally:
        timings[name] = round((time.perf_counter() - started) * 1000, 3)


def algebra_summary(n, a, graph):
    named = named_automorphisms(n, a, graph)
    relations = verify_relations(*named, n, a)
    cayley = cayley_regular_check(n, a)
    _, connection_ok = cayley_connection_set(n, a)
    orders = [p.order() for p in named]
    return {
        'named_orders': orders,
        'named_orders_ok': orders == [n, 3, 2],
        'relations_hold': relations.holds,
        'failed_relation': relations.failed,
        'cayley_regular': cayley.regular,
        'h_order': cayley.order,
        'cayley_connection_set': connection_ok,
        'edge_transitivity': edge_transitivity_witnesses(n, a),
    }, named


def transitivity_summary(graph, named, budget):
    """Group, orbit counts and the arc-stabilizer probe; budget exhaustion is a status, not an error"""
    try:
        group = automorphism_group(graph, budget)
        report = transitivity(graph, group)
        witness = arc_stabilizer_witness(graph, budget)
    except SearchBudgetExceeded as exc:
        logger.warning(f'{graph.name}: {exc}')
        return {'status': BUDGET_EXCEEDED, 'stage': exc.stage, 'expanded': exc.expanded}, None, None
    summary = {
        'status': COMPUTED,
        **report.as_dict(),
        'named_in_aut': all(group.contains(p) for p in named),
        'arc_stabilizer_probe': witness is not None,
        'probe_witness': witness.cycle_notation(graph.vertex_label) if witness is not None else None,
    }
    return summary, group, report


def oracle_summary(graph):
    if graph.order > ORACLE_MAX_VERTICES:
        return {'status': SKIPPED}
    elements = list(enumerate_automorphisms(graph))
    arc_orbits = find_orbits(elements, graph.arcs(), lambda g, e: (g(e[0]), g(e[1])))
    return {'status': COMPUTED, 'order': len(elements), 'arc_orbits': len(arc_orbits)}


def run_analysis(n, a, skip_aut=False, skip_hamiltonian=False, search_budget=None,
                 hamiltonian_budget=None, oracle=False):
    pair = validate_pair(n, a)
    timings = {}
    with stage(timings, 'construction'):
        graph = build(pair.n, pair.a)
    with stage(timings, 'structure'):
        structure = analyze_structure(graph, hamiltonian_budget, skip_hamiltonian)
    with stage(timings, 'algebra'):
        algebra, named = algebra_summary(pair.n, pair.a, graph)
    with stage(timings, 'relations'):
        _, entries = canonical_relations(pair.n, pair.a)

    claims = claim_checks.structure_claims(graph, structure)
    claims += claim_checks.algebra_claims(algebra)
    claims += claim_checks.relation_claims(pair.n, entries)

    aut_order = None
    if skip_aut:
        trans = {'status': SKIPPED}
    else:
        with stage(timings, 'automorphism'):
            trans, group, report = transitivity_summary(graph, named, search_budget)
        if group is not None:
            aut_order = group.order
            claims += claim_checks.transitivity_claims(
                pair.n, report.classification, aut_order,
                trans['named_in_aut'], trans['arc_stabilizer_probe'],
            )

    oracle_result = None
    if oracle:
        with stage(timings, 'oracle'):
            oracle_result = oracle_summary(graph)
        if oracle_result['status'] == COMPUTED and aut_order is not None:
            claims.append(claim_checks.ClaimResult(
                'oracle_agrees',
                oracle_result['order'] == aut_order and oracle_result['arc_orbits'] == trans['arc_orbits'],
                f'oracle |Aut| = {oracle_result["order"]}',
            ))

    claim_checks.failed(claims)
    return AnalysisReport(
        schema_version=SCHEMA_VERSION,
        pair=pair.as_dict(),
        graph={'name': graph.name, 'vertices': graph.order, 'edges': graph.edge_count},
        structure=structure.as_dict(graph.vertex_label),
        transitivity=trans,
        aut_order=aut_order,
        algebra=algebra,
        relations_audit=[e.as_dict() for e in entries],
        claims=[c.as_dict() for c in claims],
        oracle=oracle_result,
        timings=timings,
    )


def render_json(report):
    return json.dumps(report.as_dict(), sort_keys=True, indent=2, ensure_ascii=False)


def parse_report(text):
    """Read a report back; unknown or missing fields and other schema versions are rejected"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f'Report is not valid JSON: {exc}', code='invalid_json')
    if not isinstance(data, dict):
        raise ValidationError('Report must be a JSON object', code='invalid_report')
    unknown = sorted(set(data) - REPORT_FIELDS)
    if unknown:
        raise ValidationError(f'Unknown report fields: {", ".join(unknown)}', code='unknown_fields')
    missing = sorted(REPORT_FIELDS - set(data))
    if missing:
        raise ValidationError(f'Missing report fields: {", ".join(missing)}', code='missing_fields')
    if data['schema_version'] != SCHEMA_VERSION:
        raise ValidationError(
            f'Unsupported schema version {data["schema_version"]}', code='schema_version'
        )
    return AnalysisReport(**data)


class AuditTask(NamedTuple):
    n: int
    a: int
    skip_aut: bool = False
    search_budget: int = None
    inject_fault: bool = False


def inject_fault(graph):
    """Add a chord between (1,2) and (-1,2), two neighbours of (0,0)"""
    return with_extra_edge(graph, graph.index(1, 2), graph.index(-1, 2))


def audit_pair(task):
    """One audit row: structural, relation and (optionally) transitivity claims for one pair"""
    row = {
        'n': task.n, 'a': task.a, 'b': task.a * task.a % task.n,
        'bipartite': None, 'chromatic': None, 'girth': None, 'odd_girth': None,
        'no_4cycle': None, 'has_6cycle': None,
        'classification': SKIPPED, 'aut_order': None,
    }
    failures = []
    try:
        graph = build(task.n, task.a)
        if task.inject_fault:
            graph = inject_fault(graph)
        # checked up front so a broken graph is reported even if the colouring raises
        degree_claim = claim_checks.tetravalent_claim(graph)
        if not degree_claim.passed:
            failures += [c.name for c in claim_checks.failed([degree_claim])]
        structure = analyze_structure(graph, skip_hamiltonian=True)
        row.update(
            bipartite=structure.bipartite, chromatic=structure.chromatic,
            girth=structure.girth, odd_girth=structure.odd_girth,
            no_4cycle=not structure.has_4cycle, has_6cycle=structure.has_6cycle,
        )
        claims = [
            c for c in claim_checks.structure_claims(graph, structure) if c.name != degree_claim.name
        ]
        claims += claim_checks.relation_claims(task.n, canonical_relations(task.n, task.a)[1])

        if not task.skip_aut:
            try:
                group = automorphism_group(graph, task.search_budget)
                report = transitivity(graph, group)
                probe = arc_stabilizer_witness(graph, task.search_budget) is not None
            except SearchBudgetExceeded as exc:
                logger.warning(f'Γ({task.n},{task.a}): {exc}')
                row['classification'] = BUDGET_EXCEEDED
                failures.append(BUDGET_EXCEEDED)
            else:
                named = named_automorphisms(task.n, task.a, graph)
                row.update(classification=report.classification, aut_order=group.order)
                claims += claim_checks.transitivity_claims(
                    task.n, report.classification, group.order,
                    all(group.contains(p) for p in named), probe,
                )
        failures = sorted({c.name for c in claim_checks.failed(claims)}) + failures
    except GammaError as exc:
        logger.warning(f'Γ({task.n},{task.a}): {exc.__class__.__name__}: {exc}')
        failures.append(exc.__class__.__name__)

    row['status'] = FAIL if failures else PASS
    row['failed'] = ' '.join(failures)
    logger.info(f'Γ({task.n},{task.a}): {row["status"]}')
    return row


def relation_rows(pair):
    """
    Relations audit rows for one (n, a), with whether a vanishing relation is a
    documented exception. Rows carry the a < b orientation of the pair.
    """
    oriented, entries = canonical_relations(*pair)
    return [
        {
            'n': oriented.n, 'a': oriented.a, **entry.as_dict(), 'expression': entry.expression,
            'exceptional': relation_is_exceptional(entry.relation_id, oriented.n),
        }
        for entry in entries
    ]
