# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import math
import unittest

from tdnls import mapping
from tdnls.records import (
    CriticalityReport, GridSection, RatePrediction, RunSection,
    SweepSection,
)


class FieldTestCase(unittest.TestCase):

    def test_init_default(self):
        f = mapping.Field()
        self.assertEqual(f.name, None)
        self.assertEqual(f.default, None)

    def test_callable_default_value(self):
        class Dummy(mapping.Mapping):
            field = mapping.Field(default=lambda: 'foobar')
        self.assertEqual(Dummy().field, 'foobar')


class IntegerTestCase(unittest.TestCase):

    def setUp(self):
        class Dummy(mapping.Mapping):
            field = mapping.IntegerField(min_value=1, max_value=10)
        self.Dummy = Dummy

    def test_set_string_value(self):
        obj = self.Dummy()
        obj.field = ' 4 '
        self.assertEqual(obj.field, 4)

    def test_reject_garbage(self):
        obj = self.Dummy()
        self.assertRaises(TypeError, setattr, obj, 'field', 'four')
        self.assertRaises(TypeError, setattr, obj, 'field', True)

    def test_bounds(self):
        obj = self.Dummy()
        self.assertRaises(ValueError, setattr, obj, 'field', 0)
        self.assertRaises(ValueError, setattr, obj, 'field', 11)


class FloatTestCase(unittest.TestCase):

    def setUp(self):
        class Dummy(mapping.Mapping):
            field = mapping.FloatField(min_value=0.0, exclusive=True)
        self.Dummy = Dummy

    def test_set_string_value(self):
        obj = self.Dummy(field='2.5e-3')
        self.assertEqual(obj.field, 2.5e-3)

    def test_exclusive_bound(self):
        obj = self.Dummy()
        self.assertRaises(ValueError, setattr, obj, 'field', 0.0)

    def test_non_finite_to_json(self):
        obj = self.Dummy(field=float('inf'))
        self.assertTrue(math.isinf(obj.field))
        self.assertEqual(obj.to_dict(), {'field': None})


class BoolTestCase(unittest.TestCase):

    def setUp(self):
        class Dummy(mapping.Mapping):
            field = mapping.BoolField(default=False)
        self.Dummy = Dummy

    def test_ini_spellings(self):
        for text, value in [('yes', True), ('On', True), ('0', False),
                            ('false', False)]:
            self.assertEqual(self.Dummy(field=text).field, value)

    def test_reject_garbage(self):
        self.assertRaises(ValueError, self.Dummy, field='maybe')

    def test_default(self):
        self.assertEqual(self.Dummy().field, False)


class SetTestCase(unittest.TestCase):

    def test_restricted_values(self):
        class Dummy(mapping.Mapping):
            field = mapping.SetField(values=('lens', 'original'))
        self.assertEqual(Dummy(field='lens').field, 'lens')
        self.assertRaises(ValueError, Dummy, field='fourier')


class ListTestCase(unittest.TestCase):

    def test_comma_string(self):
        class Dummy(mapping.Mapping):
            field = mapping.ListField(mapping.FloatField())
        self.assertEqual(Dummy(field='0.5, 1,2 ').field, [0.5, 1.0, 2.0])

    def test_items_are_validated(self):
        class Dummy(mapping.Mapping):
            field = mapping.ListField(mapping.IntegerField(min_value=0))
        self.assertRaises(ValueError, Dummy, field='1, -1')


class FromSectionTestCase(unittest.TestCase):

    def test_defaults(self):
        section = GridSection.from_section({}, 'grid')
        self.assertEqual(section.n, 1)
        self.assertEqual(section.points, 256)
        self.assertEqual(section.L, 32.0)
        self.assertFalse(section.dealias)

    def test_unknown_key(self):
        self.assertRaises(ValueError, GridSection.from_section,
                          {'points': '64', 'pionts': '32'}, 'grid')

    def test_empty_values_take_defaults(self):
        section = RunSection.from_section({'dt': '', 'seed': '7'}, 'run')
        self.assertEqual(section.dt, 0.01)
        self.assertEqual(section.seed, 7)

    def test_list_default(self):
        section = SweepSection.from_section({}, 'sweep')
        self.assertEqual(section.comparisons, ['ledger', 'fits'])
        self.assertEqual(section.amplitudes, None)

    def test_replace(self):
        section = GridSection.from_section({'points': '64'})
        other = section.replace(n=2)
        self.assertEqual(other.n, 2)
        self.assertEqual(other.points, 64)
        self.assertEqual(section.n, 1)


class RecordTestCase(unittest.TestCase):

    def test_nested_to_dict(self):
        report = CriticalityReport(n=1, p=3.0)
        report.predicted = [RatePrediction(theorem='x', norm='l2',
                                           variable='t', exponent=-0.5,
                                           applicable=True)]
        data = report.to_dict()
        self.assertEqual(data['record'], 'criticality')
        self.assertEqual(data['classification'], 'indeterminate')
        self.assertEqual(data['predicted'][0]['exponent'], -0.5)
        self.assertEqual(data['predicted'][0]['parameters'], {})

    def test_components_from_dicts(self):
        report = CriticalityReport(predicted=[{'theorem': 'x', 'norm': 'l2',
                                               'variable': 't'}])
        self.assertIsInstance(report.predicted[0], RatePrediction)
        self.assertEqual(report.predicted[0].theorem, 'x')

    def test_equality(self):
        first = GridSection.from_section({'points': '64'})
        self.assertEqual(first, GridSection(points=64))
        self.assertNotEqual(first, first.replace(n=2))
        self.assertNotEqual(first, [1, 64, 32.0, False])

    def test_constant_field(self):
        report = CriticalityReport()
        self.assertRaises(ValueError, setattr, report, 'record', 'fit')


if __name__ == '__main__':
    unittest.main()
