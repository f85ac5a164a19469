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
Tests for actual_cause/base.py

Created: Sun 18 Oct 2026 07:02:51 PM EDT
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional
import configparser

import pytest

from actual_cause.base import ConfigParserToDataclassMapper, ParamInfo
from actual_cause.base import PositiveInteger, NonNegativeInteger, UnitFraction
from actual_cause.base import NonNegativeFloat, BoolFromStr, NameList


def test_positive_integer():
    """Test PositiveInteger type validation"""
    assert issubclass(type(PositiveInteger(1)), int)
    for val in [1, 2, 5, 100, 2.0, '1', '2', '25']:
        assert PositiveInteger(val) == int(val)

    for val in [0, -2, 1.5, '0', '-2', '0.1', 'many']:
        with pytest.raises(ValueError):
            PositiveInteger(val)


def test_non_negative_integer():
    for val in [0, 1, 100, 3.0, '0', '17']:
        assert NonNegativeInteger(val) == int(val)

    for val in [-1, 0.5, '-1', '1.5', '']:
        with pytest.raises(ValueError):
            NonNegativeInteger(val)


def test_unit_fraction():
    """Test UnitFraction accepts (0, 1] only"""
    for val in [1, 0.5, 1e-9, '0.1', '1.0']:
        assert UnitFraction(val) == float(val)

    for val in [0, -0.1, 1.0001, '0', '2', 'nan', 'alpha']:
        with pytest.raises(ValueError):
            UnitFraction(val)


def test_non_negative_float():
    for val in [0, 0.05, 7, '0.8', '0']:
        assert NonNegativeFloat(val) == float(val)

    for val in [-1e-12, '-0.5', 'inf', 'nan', 'beta']:
        with pytest.raises(ValueError):
            NonNegativeFloat(val)


def test_boolfromstr():
    """Test BoolFromStr type"""
    assert BoolFromStr(True)
    assert not BoolFromStr(False)
    for val in ['n', 'N', 'NO', 'No', '0', 'false', 'False', 'off', '']:
        assert not BoolFromStr(val)

    for val in ['y', 'Y', 'YES', 'Yes', '1', 'true', 'True', 'on']:
        assert BoolFromStr(val)


def test_name_list():
    assert NameList('action') == ['action']
    assert NameList(' pos, action ,pos,,vel ') == ['pos', 'action', 'vel']
    assert NameList(['b', 'a', 'b']) == ['b', 'a']
    assert NameList() == []
    assert NameList('') == []
    assert str(NameList('pos, vel')) == 'pos,vel'


class Shade(Enum):
    LIGHT = 'light'
    DARK_BLUE = 'dark-blue'


SECTION = 'section'


@dataclass
class Params(ConfigParserToDataclassMapper):
    count: PositiveInteger
    shade: Shade = Shade.LIGHT
    flag: bool = False
    ratio: Optional[UnitFraction] = None
    note: str = ''

    mapping = {'count': ParamInfo(SECTION, 'count'),
               'shade': ParamInfo(SECTION, 'shade'),
               'flag': ParamInfo(SECTION, 'flag'),
               'ratio': ParamInfo(SECTION, 'ratio'),
               'note': None}


def make_cfg(**values) -> configparser.ConfigParser:
    cfg = configparser.ConfigParser()
    cfg[SECTION] = values
    return cfg


def test_configparsertodataclassmapper():
    """Test basic functionality of ConfigParserToDataclassMapper base class"""
    obj = Params.create_from_cfg(make_cfg(count='3', shade='dark-blue', flag='yes', ratio='0.5'))
    assert obj.count == 3
    assert isinstance(obj.count, PositiveInteger)
    assert obj.shade == Shade.DARK_BLUE
    assert obj.flag is True
    assert obj.ratio == 0.5
    assert obj.note == ''

    # defaults are kept for parameters that are not set
    obj = Params.create_from_cfg(make_cfg(count='1'))
    assert (obj.shade, obj.flag, obj.ratio) == (Shade.LIGHT, False, None)

    # enum member names are accepted too
    assert Params.create_from_cfg(make_cfg(count='1', shade='DARK_BLUE')).shade == Shade.DARK_BLUE

    # keyword arguments take precedence over the ConfigParser object
    obj = Params.create_from_cfg(make_cfg(count='1'), count=PositiveInteger(7), note='kept')
    assert (obj.count, obj.note) == (7, 'kept')


def test_configparsertodataclassmapper_missing_parameter():
    with pytest.raises(ValueError) as err:
        Params.create_from_cfg(make_cfg(flag='no'))
    assert 'Missing count' in str(err.value)

    # a missing section is the same as a missing parameter
    with pytest.raises(ValueError) as err:
        Params.create_from_cfg(configparser.ConfigParser())
    assert 'Missing count' in str(err.value)


def test_configparsertodataclassmapper_reports_all_errors():
    with pytest.raises(ValueError) as err:
        Params.create_from_cfg(make_cfg(count='0', shade='green', flag='maybe', ratio='2'))
    lines = str(err.value).split('\n')
    assert len(lines) == 4
    assert 'Parameter "count" has an invalid value: "0"' in lines[0]
    assert 'should be one of light, dark-blue' in lines[1]
    assert '"flag"' in lines[2]
    assert '"ratio"' in lines[3]


def test_validate_mapping():
    @dataclass
    class Unmapped(ConfigParserToDataclassMapper):
        count: int = 1
        size: int = 2

        mapping = {'count': ParamInfo(SECTION, 'count')}

    with pytest.raises(AttributeError) as err:
        Unmapped.validate_mapping()
    assert 'size' in str(err.value)

    with pytest.raises(AttributeError):
        Unmapped.create_from_cfg(make_cfg(count='3'))
