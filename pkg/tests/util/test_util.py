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
Tests for actual_cause/util.py

Created: Sun 18 Oct 2026 07:15:40 PM EDT
"""

import argparse
import logging

import pytest

from actual_cause.constants import INPUT_ERROR
from actual_cause.util import UserReportError, UTCTimestampFormatter
from actual_cause.util import check_positive_int, parse_name_list
from actual_cause.util import parse_positive_int_list, format_names, config_logging


@pytest.fixture
def root_logger(monkeypatch):
    """Root logger with its handlers and level restored after the test"""
    monkeypatch.delenv('CAUSE_LOGLEVEL', raising=False)
    monkeypatch.delenv('CAUSE_LOGFILE', raising=False)
    logger = logging.getLogger()
    handlers, level = list(logger.handlers), logger.level
    yield logger
    for handler in logger.handlers:
        if handler not in handlers:
            handler.close()
    logger.handlers = handlers
    logger.setLevel(level)


def test_check_positive_int():
    assert check_positive_int('1') == 1
    assert check_positive_int('250') == 250
    with pytest.raises(ValueError) as err:
        check_positive_int('0')
    assert 'not a positive integer' in str(err.value)
    with pytest.raises(ValueError) as err:
        check_positive_int('ten')
    assert 'not a number' in str(err.value)
    with pytest.raises(ValueError):
        check_positive_int('-3')


def test_parse_name_list():
    assert parse_name_list('action') == ['action']
    assert parse_name_list('pos, vel,,pos ,action') == ['pos', 'vel', 'action']
    assert parse_name_list('') == []
    assert parse_name_list(' , ') == []


def test_parse_positive_int_list():
    assert parse_positive_int_list('250,500, 1000') == [250, 500, 1000]
    assert parse_positive_int_list('4,4,2') == [4, 2]
    for val in ['0', '10,-1', '1,x']:
        with pytest.raises(UserReportError) as err:
            parse_positive_int_list(val)
        assert err.value.returncode == INPUT_ERROR
        assert val in err.value.message


def test_format_names():
    assert format_names({'vel', 'action', 'pos'}) == '[action,pos,vel]'
    assert format_names([]) == '[]'


def test_user_report_error():
    err = UserReportError(INPUT_ERROR, 'bad input')
    assert str(err) == 'bad input'
    assert err.returncode == INPUT_ERROR
    assert isinstance(err, Exception)


def test_utc_timestamp_formatter():
    record = logging.makeLogRecord({'created': 0.0, 'msecs': 0.0, 'msg': 'm'})
    formatter = UTCTimestampFormatter()
    assert formatter.formatTime(record).startswith('1970-01-01 00:00:00.')
    assert formatter.formatTime(record, '%Y-%m-%dT%H:%M:%S.%fZ') == '1970-01-01T00:00:00.000000Z'


def test_config_logging_to_file(root_logger, tmpdir):
    logfile = str(tmpdir.join('actual-cause.log'))
    n_handlers = len(root_logger.handlers)
    config_logging(argparse.Namespace(logfile=logfile, loglevel='INFO'))
    assert root_logger.level == logging.INFO
    added = root_logger.handlers[n_handlers:]
    assert len(added) == 2
    assert added[0].level == logging.WARNING
    assert isinstance(added[1], logging.FileHandler)
    assert added[1].level == logging.INFO

    logging.info('written to the file')
    logging.debug('filtered out')
    added[1].flush()
    with open(logfile) as f:
        text = f.read()
    assert 'INFO: written to the file' in text
    assert 'filtered out' not in text


def test_config_logging_to_stderr(root_logger):
    n_handlers = len(root_logger.handlers)
    config_logging(argparse.Namespace(logfile='stderr', loglevel='ERROR'))
    assert root_logger.level == logging.ERROR
    assert len(root_logger.handlers) == n_handlers + 1
    assert logging.getLogger('z3').level == logging.CRITICAL


def test_config_logging_from_environment(root_logger, tmpdir, monkeypatch):
    logfile = str(tmpdir.join('from-env.log'))
    monkeypatch.setenv('CAUSE_LOGLEVEL', 'WARNING')
    monkeypatch.setenv('CAUSE_LOGFILE', logfile)
    args = argparse.Namespace(logfile=None, loglevel=None)
    config_logging(args)
    assert args.loglevel == 'WARNING'
    assert args.logfile == logfile
    assert root_logger.level == logging.WARNING


def test_config_logging_invalid_level(root_logger, tmpdir):
    with pytest.raises(ValueError) as err:
        config_logging(argparse.Namespace(logfile=str(tmpdir.join('x.log')), loglevel='LOUD'))
    assert 'Invalid log level: LOUD' in str(err.value)
