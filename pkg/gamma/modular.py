"""
Arithmetic in Z_n and its unit group.

Everything needed to pick the parameters of Γ(n,a): totient, element orders,
the order-3 units, canonical (a, b) pairs and the thirteen relations that the
half-transitivity argument needs to rule out.
"""
from dataclasses import dataclass
from math import gcd

from django.core.exceptions import ValidationError
from sympy import totient
from sympy.ntheory import n_order

# 3 does not divide phi(n) below this, so no order-3 unit exists.
MIN_MODULUS = 7


@dataclass(frozen=True)
class UnitGroupContext:
    """The unit group of Z_n as far as the construction needs it"""
    n: int
    phi: int
    order3: tuple

    @property
    def has_order3(self):
        return bool(self.order3)


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    """(n, a) with a of order 3 in Z_n*, and b = a^2 mod n"""
    n: int
    a: int
    b: int

    @property
    def is_canonical(self):
        return self.a < self.b

    def as_dict(self):
        return {'n': self.n, 'a': self.a, 'b': self.b}

    def __str__(self):
        return f'Γ({self.n},{self.a})'


@dataclass(frozen=True)
class RelationAuditEntry:
    relation_id: int
    expression: str
    lhs_value: int

    @property
    def holds(self):
        return self.lhs_value == 0

    def as_dict(self):
        return {'relation_id': self.relation_id, 'holds': self.holds, 'lhs_value': self.lhs_value}


# The thirteen expressions in a and b that must not vanish mod n.
RELATIONS = (
    (1, '2a-4b', lambda a, b: 2 * a - 4 * b),
    (2, '2a+4b', lambda a, b: 2 * a + 4 * b),
    (3, '4a-2b', lambda a, b: 4 * a - 2 * b),
    (4, '4a+2b', lambda a, b: 4 * a + 2 * b),
    (5, '2a-2b', lambda a, b: 2 * a - 2 * b),
    (6, '2a+2b', lambda a, b: 2 * a + 2 * b),
    (7, '4a+4', lambda a, b: 4 * a + 4),
    (8, '2a+6', lambda a, b: 2 * a + 6),
    (9, '2(a+b-1)', lambda a, b: 2 * (a + b - 1)),
    (10, '2(b-a+1)', lambda a, b: 2 * (b - a + 1)),
    (11, '2(a-b+1)', lambda a, b: 2 * (a - b + 1)),
    (12, '2(a+b+2)', lambda a, b: 2 * (a + b + 2)),
    (13, '2(a-b-2)', lambda a, b: 2 * (a - b - 2)),
)

# Moduli at which a relation is known to vanish; every other relation never does.
RELATION_EXCEPTIONS = {
    2: frozenset({9}),
    3: frozenset({7, 14}),
    4: frozenset({18}),
}


def euler_phi(n):
    """Count the units of Z_n"""
    if n < 1:
        raise ValidationError(f'Euler phi is undefined for n={n}', code='invalid_modulus')
    return int(totient(n))


def multiplicative_order(x, n):
    """Smallest k >= 1 with x^k = 1 (mod n)"""
    if n < 1:
        raise ValidationError(f'Invalid modulus n={n}', code='invalid_modulus')
    if gcd(x, n) != 1:
        raise ValidationError(f'{x} is not a unit modulo {n}', code='not_a_unit')
    if n == 1:
        return 1
    return int(n_order(x % n, n))


def order3_elements(n):
    """All a != 1 with a^3 = 1 (mod n), ascending"""
    if n < 2:
        raise ValidationError(f'Invalid modulus n={n}', code='invalid_modulus')
    if euler_phi(n) % 3:
        return []
    return [x for x in range(2, n) if gcd(x, n) == 1 and pow(x, 3, n) == 1]


def unit_group(n):
    return UnitGroupContext(n=n, phi=euler_phi(n), order3=tuple(order3_elements(n)))


def validate_pair(n, a):
    """Return the AdmissiblePair for (n, a), keeping the caller's orientation"""
    if n < MIN_MODULUS:
        raise ValidationError(
            f'n must be at least {MIN_MODULUS} (got {n})', code='modulus_too_small'
        )
    a %= n
    if gcd(a, n) != 1 or a == 1 or pow(a, 3, n) != 1:
        raise ValidationError(f'{a} is not an element of order 3 modulo {n}', code='not_order3')
    return AdmissiblePair(n=n, a=a, b=a * a % n)


def canonical(pair):
    if pair.is_canonical:
        return pair
    return AdmissiblePair(n=pair.n, a=pair.b, b=pair.a)


def admissible_pairs(n):
    """One canonical pair (a < b) per inverse pair {a, a^2}"""
    if n < MIN_MODULUS:
        raise ValidationError(
            f'n must be at least {MIN_MODULUS} (got {n})', code='modulus_too_small'
        )
    pairs = []
    for a in order3_elements(n):
        b = a * a % n
        if a < b:
            pairs.append(AdmissiblePair(n=n, a=a, b=b))
    return pairs


def pairs_up_to(max_n):
    """Canonical pairs for every n in [7, max_n], ordered by (n, a)"""
    return [pair for n in range(MIN_MODULUS, max_n + 1) for pair in admissible_pairs(n)]


def audit_relations(n, a):
    """Evaluate the thirteen relations for (n, a), normalised into {0, ..., n-1}"""
    pair = validate_pair(n, a)
    return [
        RelationAuditEntry(relation_id=rid, expression=text, lhs_value=expr(pair.a, pair.b) % n)
        for rid, text, expr in RELATIONS
    ]


def canonical_relations(n, a):
    """audit_relations on the a < b orientation of (n, a), which the exceptions are listed for"""
    pair = canonical(validate_pair(n, a))
    return pair, audit_relations(pair.n, pair.a)


def relation_is_exceptional(relation_id, n):
    return n in RELATION_EXCEPTIONS.get(relation_id, frozenset())
