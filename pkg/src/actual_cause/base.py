#                           PUBLIC DOMAIN NOTICE
#              National Center for Biotechnology Information
#
# This software is a "United States Government Work" under the
# terms of the United States Copyright Act.  It was written as part of
# the authors' official duties as United States Government employees and
# thus cannot be copyrighted.  This software is freely available
# to the public for use.  The National Library of Medicine and the U.S.
# Government have not placed any restriction on its use or reproduction.
#
# Although all reasonable efforts have been taken to ensure the accuracy
# and reliability of the software and data, the NLM and the U.S.
# Government do not and cannot warrant the performance or results that
# may be obtained by using this software or data.  The NLM and the U.S.
# Government disclaim all warranties, express or implied, including
# warranties of performance, merchantability or fitness for any particular
# purpose.
#
# Please cite NCBI in any work or product based on this material.

"""
src/actual_cause/base.py - Definitions of types used by different actual-cause
modules

Created: Mon 12 Oct 2026 09:40:12 AM EDT
"""

import configparser
from dataclasses import dataclass, field, Field, fields, _MISSING_TYPE
from enum import Enum
from typing import Dict, List, Optional, NamedTuple, Union


class PositiveInteger(int):
    """A subclass of int that only accepts positive integers. The value is
    validated before object creation"""
    # a bug in mypy does not allow for type annotation here:
    # https://github.com/python/mypy/issues/6061
    def __new__(cls, value):
        """Constructor, validates that argumant is a positive integer after
        conversion to int"""
        try:
            if isinstance(value, float) and value != round(value):
                raise ValueError
            int_value = int(value)
            if int_value <= 0:
                raise ValueError()
        except ValueError:
            raise ValueError('Must be a positive integer.')
        return super(cls, cls).__new__(cls, int_value)


class NonNegativeInteger(int):
    """A subclass of int that accepts zero and positive integers. Used for
    limits where zero means 'no limit'"""
    def __new__(cls, value):
        try:
            if isinstance(value, float) and value != round(value):
                raise ValueError
            int_value = int(value)
            if int_value < 0:
                raise ValueError
        except ValueError:
            raise ValueError('Must be a non-negative integer.')
        return super(cls, cls).__new__(cls, int_value)


class UnitFraction(float):
    """A subclass of float that accepts values in the half open interval
    (0, 1]. Used for the under-approximation ratio alpha"""
    def __new__(cls, value):
        try:
            float_value = float(value)
            if not 0.0 < float_value <= 1.0:
                raise ValueError
        except ValueError:
            raise ValueError('Must be a number larger than 0 and at most 1.')
        return super(cls, cls).__new__(cls, float_value)


class NonNegativeFloat(float):
    """A subclass of float that accepts only finite values >= 0. Used for the
    over-approximation grid size beta and for tolerances"""
    def __new__(cls, value):
        try:
            float_value = float(value)
            # NaN fails both comparisons
            if not (0.0 <= float_value < float('inf')):
                raise ValueError
        except ValueError:
            raise ValueError('Must be a finite non-negative number.')
        return super(cls, cls).__new__(cls, float_value)


class BoolFromStr:
    """A class that converts strings to boolean values.
    False is created if string value is one of: n, no, 0, false, off, or empty
    string. True is created otherwise. String values are not case sensitive."""
    def __new__(cls, value):
        if isinstance(value, str):
            return not value.lower() in ['n', 'no', '0', 'false', 'off', '']
        return bool(value)


class NameList(list):
    """A list of unique variable names created from a comma separated string
    or an iterable of names. Order is kept, repetitions are dropped"""
    def __init__(self, value=()):
        if isinstance(value, str):
            value = value.split(',')
        names: List[str] = []
        for name in value:
            name = str(name).strip()
            if name and name not in names:
                names.append(name)
        super().__init__(names)

    def __str__(self):
        return ','.join(self)


class ParamInfo(NamedTuple):
    """Data structure used to link config parameters with ConfigParser
    parameter names:
        section: ConfigParser section name
        param_name: ConfigParser parameter name"""
    section: str
    param_name: str


@dataclass
class ConfigParserToDataclassMapper:
    """Base class that provides methods for dataclasses with elements linked
    to ConfigParser parameter names. A child class must be a dataclass.

    Attributes:
        mapping: A dictionary with a map (class attribute, ConfigParser
        parameter or None)
    """

    mapping: Dict[str, Optional[ParamInfo]] = field(init=False)

    def __init__(self):
        """Contructor needed so that dataclass does not auto generate one"""
        pass


    @classmethod
    def create_from_cfg(cls, parser: configparser.ConfigParser, **kwargs):
        """Create a subclass object initializing attribute values from a
        ConfigParser object using the mapping dictionary. Values passed in
        kwargs take precedence over the ConfigParser.

        Arguments:
            parser: A ConfigParser object
            kwargs: Other parameters required by sublcass constructor

        Raises:
            ValueError: if a required parameter is missing in ConfigParser or
            ValueError is raised during subclass attribute initialization;
            all problems are reported in a single exception
        """
        cls.validate_mapping()
        errors: List[str] = []
        for fld in fields(cls):
            if not fld.init or fld.name in kwargs:
                continue
            mapped = cls.mapping[fld.name]
            if mapped is None:
                continue
            present = mapped.section in parser and \
                      mapped.param_name in parser[mapped.section]
            has_default = not isinstance(fld.default, _MISSING_TYPE) or \
                          not isinstance(fld.default_factory, _MISSING_TYPE) # type: ignore
            if not present:
                if not has_default:
                    errors.append(f'Missing {mapped.param_name}')
                continue
            kwargs[fld.name] = cls.initialize_value(fld, mapped, parser, errors)

        if errors:
            raise ValueError('\n'.join(errors))
        return cls(**kwargs)


    @classmethod
    def validate_mapping(cls):
        """Verify that all class attributes appear in the mapping dictionary.
        Raises AttributeError if an attribute is not in mapping."""
        for fld in fields(cls):
            if fld.name not in cls.mapping and fld.name != 'mapping':
                raise AttributeError(f'Field {fld.name} does not have mapping to ConfigParser params')


    @staticmethod
    def get_non_union_type(fld: Field):
        """For a dataclass field, if the type is a Union, return the first type
        that is not None. Otherwise return field's type."""
        ftype = fld.type
        if getattr(ftype, '__origin__', None) is not None and \
               ftype.__origin__ == Union:
            ftype = [t for t in ftype.__args__ if t != type(None)][0]
        return ftype


    @classmethod
    def initialize_value(cls, fld, mapped, parser, errors):
        """Helper function to initialize a single attribute from a
        ConfigParser object parameter value.

        Attributes:
            fld: dataclass field object
            mapped: ParamInfo object
            parser: ConfigParser object
            errors: Error messages will be added to thie list
        """
        ftype = cls.get_non_union_type(fld)
        raw = parser[mapped.section][mapped.param_name]

        if isinstance(ftype, type) and issubclass(ftype, Enum):
            value = None
            # enum name, upper case name or enum value are all accepted
            for key in (raw, raw.upper(), raw.upper().replace('-', '_')):
                if key in ftype.__members__:
                    value = ftype[key]
                    break
            if value is None:
                try:
                    value = ftype(raw)
                except ValueError:
                    errors.append(f'Parameter "{mapped.param_name}" has invalid value: "{raw}", should be one of {", ".join([str(i.value) for i in ftype])}')
                    value = [i for i in ftype][0]

        elif ftype == bool:
            try:
                value = parser.getboolean(mapped.section, mapped.param_name)
            except ValueError as err:
                errors.append(f'Parameter "{mapped.param_name}" has an invalid value: "{raw}": {str(err)}')
                value = False

        else:
            try:
                value = ftype(raw)
            except ValueError as err:
                errors.append(f'Parameter "{mapped.param_name}" has an invalid value: "{raw}": {str(err)}')
                value = None
        return value
