from math import gcd

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import n_order, primefactors, totient

from gamma.modular import (
    RELATION_EXCEPTIONS,
    AdmissiblePair,
    admissible_pairs,
    audit_relations,
    canonical,
    euler_phi,
    multiplicative_order,
    order3_elements,
    pairs_up_to,
    relation_is_exceptional,
    unit_group,
    validate_pair,
)


class EulerPhiTests(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(euler_phi(1), 1)
        self.assertEqual(euler_phi(7), 6)
        self.assertEqual(euler_phi(63), 36)

    def test_matches_gcd_count(self):
        for n in range(1, 80):
            with self.subTest(n=n):
                self.assertEqual(euler_phi(n), sum(1 for k in range(1, n + 1) if gcd(k, n) == 1))

    def test_rejects_zero(self):
        with self.assertRaises(ValidationError):
            euler_phi(0)


class MultiplicativeOrderTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(multiplicative_order(2, 7), 3)
        self.assertEqual(multiplicative_order(4, 9), 3)
        self.assertEqual(multiplicative_order(3, 7), 6)

    def test_agrees_with_sympy(self):
        for n in (13, 21, 63, 100):
            for x in range(1, n):
                if gcd(x, n) == 1:
                    self.assertEqual(multiplicative_order(x, n), n_order(x, n))

    def test_rejects_non_unit(self):
        with self.assertRaises(ValidationError):
            multiplicative_order(3, 9)


class UnitGroupTests(SimpleTestCase):

    def test_order3_elements(self):
        self.assertEqual(order3_elements(7), [2, 4])
        self.assertEqual(order3_elements(9), [4, 7])
        self.assertEqual(order3_elements(10), [])

    def test_context_invariants(self):
        for n in range(2, 120):
            ctx = unit_group(n)
            with self.subTest(n=n):
                self.assertEqual(ctx.phi, int(totient(n)))
                self.assertEqual(ctx.has_order3, ctx.phi % 3 == 0)
                for a in ctx.order3:
                    self.assertEqual(gcd(a, n), 1)
                    self.assertIn(a * a % n, ctx.order3)

    def test_order3_units_exist_by_prime_form(self):
        for n in range(2, 501):
            cube_roots = [x for x in range(2, n) if gcd(x, n) == 1 and pow(x, 3, n) == 1]
            expected = n % 9 == 0 or any(p % 3 == 1 for p in primefactors(n))
            with self.subTest(n=n):
                self.assertEqual(order3_elements(n), cube_roots)
                self.assertEqual(bool(cube_roots), expected)


class AdmissiblePairTests(SimpleTestCase):

    def test_small_moduli(self):
        self.assertEqual(admissible_pairs(7), [AdmissiblePair(7, 2, 4)])
        self.assertEqual(admissible_pairs(9), [AdmissiblePair(9, 4, 7)])
        self.assertEqual(admissible_pairs(14), [AdmissiblePair(14, 9, 11)])
        self.assertEqual(admissible_pairs(8), [])

    def test_n63_has_four_canonical_pairs(self):
        pairs = admissible_pairs(63)
        self.assertIn(AdmissiblePair(63, 4, 16), pairs)
        self.assertIn(AdmissiblePair(63, 22, 43), pairs)
        self.assertEqual([(p.a, p.b) for p in pairs], [(4, 16), (22, 43), (25, 58), (37, 46)])

    def test_pairs_are_canonical_inverse_pairs(self):
        for pair in pairs_up_to(200):
            with self.subTest(pair=str(pair)):
                self.assertLess(pair.a, pair.b)
                self.assertEqual(pair.a * pair.b % pair.n, 1)
                self.assertEqual(pow(pair.a, 3, pair.n), 1)

    def test_rejects_small_modulus(self):
        with self.assertRaises(ValidationError):
            admissible_pairs(6)
        self.assertEqual(pairs_up_to(6), [])

    def test_validate_pair_keeps_orientation(self):
        pair = validate_pair(7, 4)
        self.assertEqual((pair.a, pair.b), (4, 2))
        self.assertFalse(pair.is_canonical)
        self.assertEqual(canonical(pair), AdmissiblePair(7, 2, 4))

    def test_validate_pair_rejects(self):
        for n, a in ((9, 2), (7, 1), (6, 1), (14, 7)):
            with self.subTest(n=n, a=a), self.assertRaises(ValidationError):
                validate_pair(n, a)


class RelationAuditTests(SimpleTestCase):

    def test_thirteen_entries(self):
        entries = audit_relations(9, 4)
        self.assertEqual([e.relation_id for e in entries], list(range(1, 14)))
        for e in entries:
            self.assertEqual(e.holds, e.lhs_value == 0)
            self.assertTrue(0 <= e.lhs_value < 9)

    def test_documented_exceptions(self):
        held = {e.relation_id for e in audit_relations(9, 4) if e.holds}
        self.assertEqual(held, {2})
        self.assertEqual({e.relation_id for e in audit_relations(7, 2) if e.holds}, {3})
        self.assertEqual({e.relation_id for e in audit_relations(14, 9) if e.holds}, {3})
        self.assertEqual({e.relation_id for e in audit_relations(18, 7) if e.holds}, {4})

    def test_vanishing_only_at_exceptions(self):
        for pair in pairs_up_to(200):
            for entry in audit_relations(pair.n, pair.a):
                with self.subTest(pair=str(pair), relation=entry.relation_id):
                    self.assertEqual(entry.holds, relation_is_exceptional(entry.relation_id, pair.n))

    def test_exception_table(self):
        self.assertEqual(set(RELATION_EXCEPTIONS), {2, 3, 4})
        self.assertTrue(relation_is_exceptional(3, 14))
        self.assertFalse(relation_is_exceptional(1, 7))
