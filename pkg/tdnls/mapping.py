# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Declarative mappings for configuration sections and report records.

A mapping class lists its fields as class attributes. Each field knows how
to coerce raw values (strings read from an INI file, numpy scalars produced
by the numerics) into plain Python values, and how to write them back out as
JSON friendly data::

    >>> class Point(Record):
    ...     x = FloatField(default=0.0)
    ...     y = FloatField(default=0.0)
    >>> Point(y='2.5').to_dict()
    {'x': 0.0, 'y': 2.5}
"""

import logging
import math
from operator import itemgetter
from itertools import zip_longest

log = logging.getLogger(__name__)

__all__ = ['Field', 'TextField', 'IntegerField', 'FloatField', 'BoolField',
           'SetField', 'ListField', 'DictField', 'ConstantField',
           'ComponentField', 'RepeatedComponentField',
           'Mapping', 'Section', 'Record']

#: Strings accepted by :class:`BoolField`, as in :mod:`configparser`.
BOOLEAN_STATES = {'1': True, 'yes': True, 'true': True, 'on': True,
                  '0': False, 'no': False, 'false': False, 'off': False}


class Field(object):
    """Base mapping field class."""
    def __init__(self, name=None, default=None, required=False):
        self.name = name
        self.default = default
        self.required = required

    def __get__(self, instance, owner):
        if instance is None:
            return self
        value = instance._data.get(self.name)
        if value is not None:
            value = self._get_value(value)
        elif self.default is not None:
            default = self.default
            if hasattr(default, '__call__'):
                default = default()
            value = default
        return value

    def __set__(self, instance, value):
        if value is not None:
            value = self._set_value(value)
        instance._data[self.name] = value

    def _get_value(self, value):
        return value

    def _set_value(self, value):
        return value

    def to_json(self, value):
        return value


class TextField(Field):
    """Mapping field for string values."""
    def _set_value(self, value):
        if not isinstance(value, str):
            raise TypeError('String value expected, got %r' % value)
        return value.strip()


class ConstantField(Field):
    """Mapping field holding a value that may not change."""
    def __init__(self, name=None, default=None, field=None):
        field = field or Field()
        super(ConstantField, self).__init__(name, default, True)
        self.field = field
        if self.default is None:
            raise ValueError('Constant value should be defined')

    def _get_value(self, value):
        return self.default

    def _set_value(self, value):
        value = self.field._set_value(value)
        if self.default != value:
            raise ValueError('Field changing not allowed: got %r, accepts %r'
                             '' % (value, self.default))
        return value


class IntegerField(Field):
    """Mapping field for integer values with optional bounds."""
    def __init__(self, name=None, default=None, required=False,
                 min_value=None, max_value=None):
        super(IntegerField, self).__init__(name, default, required)
        self.min_value = min_value
        self.max_value = max_value

    def _set_value(self, value):
        if isinstance(value, bool):
            raise TypeError('Integer value expected, got %r' % value)
        try:
            value = int(str(value).strip()) if isinstance(value, str) \
                else int(value)
        except (TypeError, ValueError):
            raise TypeError('Integer value expected, got %r' % value)
        if self.min_value is not None and value < self.min_value:
            raise ValueError('Field %r value %d is below %d'
                             '' % (self.name, value, self.min_value))
        if self.max_value is not None and value > self.max_value:
            raise ValueError('Field %r value %d is above %d'
                             '' % (self.name, value, self.max_value))
        return value


class FloatField(Field):
    """Mapping field for real values.

    Bounds are inclusive unless `exclusive` is set. Non-finite values are
    kept in memory and serialized as ``None``.
    """
    def __init__(self, name=None, default=None, required=False,
                 min_value=None, max_value=None, exclusive=False):
        super(FloatField, self).__init__(name, default, required)
        self.min_value = min_value
        self.max_value = max_value
        self.exclusive = exclusive

    def _set_value(self, value):
        if isinstance(value, bool):
            raise TypeError('Real value expected, got %r' % value)
        try:
            value = float(value.strip() if isinstance(value, str) else value)
        except (TypeError, ValueError):
            raise TypeError('Real value expected, got %r' % value)
        low, high = self.min_value, self.max_value
        if low is not None and (value < low or self.exclusive and value == low):
            raise ValueError('Field %r value %r is out of range (min %r)'
                             '' % (self.name, value, low))
        if high is not None and (value > high or self.exclusive and value == high):
            raise ValueError('Field %r value %r is out of range (max %r)'
                             '' % (self.name, value, high))
        return value

    def to_json(self, value):
        if value is None or not math.isfinite(value):
            return None
        return value


class BoolField(Field):
    """Mapping field for flags, accepting the usual INI spellings."""
    def _set_value(self, value):
        if isinstance(value, str):
            try:
                return BOOLEAN_STATES[value.strip().lower()]
            except KeyError:
                raise ValueError('Not a boolean: %r' % value)
        return bool(value)


class SetField(Field):
    """Mapping field for predefined set of values."""
    def __init__(self, name=None, default=None, required=False,
                 values=None, field=None):
        field = field or TextField()
        super(SetField, self).__init__(name, default, required)
        self.field = field
        self.values = values and set(values) or set([])

    def _set_value(self, value):
        value = self.field._set_value(value)
        if value not in self.values:
            raise ValueError('Unexpectable value %r for field %r (one of %s)'
                             '' % (value, self.name,
                                   ', '.join(sorted(map(str, self.values)))))
        return value


class ListField(Field):
    """Mapping field for lists; strings are split on commas."""
    def __init__(self, field, name=None, default=None, required=False):
        self.field = field
        super(ListField, self).__init__(name, default, required)

    def _set_value(self, value):
        if isinstance(value, str):
            value = [item for item in value.split(',') if item.strip()]
        return [self.field._set_value(item) for item in value]

    def to_json(self, value):
        if value is None:
            return None
        return [self.field.to_json(item) for item in value]


class DictField(Field):
    """Mapping field for flat ``name -> value`` dictionaries."""
    def __init__(self, field=None, name=None, default=None, required=False):
        self.field = field or Field()
        super(DictField, self).__init__(name, default or dict, required)

    def _set_value(self, value):
        return dict((str(key), self.field._set_value(item))
                    for key, item in dict(value).items())

    def to_json(self, value):
        if value is None:
            return None
        return dict((key, self.field.to_json(item))
                    for key, item in value.items())


class MetaMapping(type):

    def __new__(mcs, name, bases, d):
        fields = []
        names = []
        def merge_fields(items):
            for n, field in items:
                if field.name is None:
                    field.name = n
                if n not in names:
                    fields.append((n, field))
                    names.append(n)
                else:
                    fields[names.index(n)] = (n, field)
        for base in bases:
            if hasattr(base, '_fields'):
                merge_fields(base._fields)
        merge_fields([(k, v) for k, v in d.items() if isinstance(v, Field)])
        if '_fields' not in d:
            d['_fields'] = fields
        else:
            merge_fields(d['_fields'])
            d['_fields'] = fields
        return super(MetaMapping, mcs).__new__(mcs, name, bases, d)


class Mapping(metaclass=MetaMapping):

    def __init__(self, *args, **kwargs):
        fieldnames = map(itemgetter(0), self._fields)
        values = dict(zip_longest(fieldnames, args))
        values.update(kwargs)
        self._data = {}
        for attrname, field in self._fields:
            attrval = values.pop(attrname, None)
            if attrval is None:
                setattr(self, attrname, getattr(self, attrname))
            else:
                setattr(self, attrname, attrval)
        if values:
            raise ValueError('Unexpected kwargs found: %r' % values)

    @classmethod
    def build(cls, *a):
        fields = []
        newcls = type('Generic' + cls.__name__, (cls,), {})
        for field in a:
            if field.name is None:
                raise ValueError('Name is required for ordered fields.')
            setattr(newcls, field.name, field)
            fields.append((field.name, field))
        newcls._fields = fields
        return newcls

    @classmethod
    def from_section(cls, section, name=None):
        """Builds mapping from a raw ``key -> string`` section.

        :param section: Section items, e.g. a :class:`configparser.SectionProxy`.
        :type section: collections.abc.Mapping

        :param name: Section name used in error messages.
        :type name: str

        :raises: :exc:`ValueError` on unknown keys or missing required ones,
                 :exc:`TypeError` on values of a wrong kind.
        """
        name = name or cls.__name__
        known = set(map(itemgetter(0), cls._fields))
        items = dict(section.items())
        unknown = sorted(set(items) - known)
        if unknown:
            raise ValueError('Unknown keys in [%s]: %s'
                             '' % (name, ', '.join(unknown)))
        values = dict((key, value) for key, value in items.items()
                      if not (isinstance(value, str) and not value.strip()))
        obj = cls(**values)
        for key, field in cls._fields:
            if field.required and getattr(obj, key) is None:
                raise ValueError('Key %r is required in [%s]' % (key, name))
        return obj

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return NotImplemented
        return self.items() == other.items()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__,
                           ', '.join('%s=%r' % (key, value)
                                     for key, value in self.items()))

    def keys(self):
        return [key for key, _ in self._fields]

    def values(self):
        return [getattr(self, key) for key in self.keys()]

    def items(self):
        return [(key, getattr(self, key)) for key in self.keys()]

    def replace(self, **kwargs):
        """Returns a copy with some fields replaced."""
        values = dict(self.items())
        values.update(kwargs)
        return self.__class__(**values)

    def to_dict(self):
        """Returns JSON friendly nested dictionary of the mapping values."""
        def convert(field, value):
            if isinstance(value, Mapping):
                return value.to_dict()
            elif isinstance(value, list) and value \
                    and isinstance(value[0], Mapping):
                return [item.to_dict() for item in value]
            return field.to_json(value)
        result = {}
        for key, field in self._fields:
            value = getattr(self, key)
            if value is None and field.required:
                raise ValueError('Field %r value should not be None' % key)
            result[key] = convert(field, value)
        return result


class Section(Mapping):
    """Configuration section mapping class."""


class Record(Mapping):
    """Report record mapping class."""


class ComponentField(Field):
    """Mapping field for storing nested record.

    Accepts an instance of the record class, a dict of its fields (as read
    back from JSON) or a sequence of positional values.
    """
    def __init__(self, mapping, name=None, default=None):
        self.mapping = mapping
        super(ComponentField, self).__init__(name, default)

    def _set_value(self, value):
        if isinstance(value, self.mapping):
            return value
        if isinstance(value, dict):
            return self.mapping(**value)
        return self.mapping(*value)

    _get_value = _set_value


class RepeatedComponentField(Field):
    """Mapping field for storing list of nested records."""
    def __init__(self, field, name=None, default=None):
        if not isinstance(field, ComponentField):
            field = ComponentField(field)
        self.field = field
        super(RepeatedComponentField, self).__init__(name, default or list)

    def _get_value(self, value):
        return [self.field._get_value(item) for item in value]

    def _set_value(self, value):
        return [self.field._set_value(item) for item in value]
