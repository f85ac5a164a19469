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
Module filehelper

Opens trace logs, signature sidecars and reports for reading and writing.

Implemented variants:
  read from local files or stdin ('-'), optionally gzip compressed
  write to local files (parent directories are created) or stdout ('-')
"""

import gzip
import io
import os
import sys
import logging
from contextlib import contextmanager
from typing import IO, Generator


def is_stdin(fname: str) -> bool:
    """ Checks whether the file name refers to standard input """
    return fname in ('-', 'stdin', '/dev/stdin')


def is_stdout(fname: str) -> bool:
    """ Checks whether the file name refers to standard output """
    return fname in ('-', 'stdout', '/dev/stdout')


def check_for_read(fname: str) -> None:
    """ Check that a local path can be read from.
    raises FileNotFoundError if there is no such file
    """
    if is_stdin(fname):
        return
    if not os.path.isfile(fname):
        raise FileNotFoundError(fname)
    if not os.access(fname, os.R_OK):
        raise PermissionError(f'File {fname} is not readable')


@contextmanager
def open_for_read(fname: str) -> Generator[IO, None, None]:
    """ Open path for read in text mode, or stdin. Files ending in .gz are
    decompressed on the fly. Standard input is never closed.
    """
    if is_stdin(fname):
        yield sys.stdin
        return
    check_for_read(fname)
    logging.debug(f'Reading {fname}')
    if fname.endswith('.gz'):
        f: IO = io.TextIOWrapper(gzip.open(fname, 'rb'), encoding='utf-8')
    else:
        f = open(fname, 'rt', encoding='utf-8', newline='')
    try:
        yield f
    finally:
        f.close()


@contextmanager
def open_for_write(fname: str) -> Generator[IO, None, None]:
    """ Open a local file for write in text mode, creating missing parent
    directories, or stdout. Standard output is never closed.
    """
    if is_stdout(fname):
        yield sys.stdout
        sys.stdout.flush()
        return
    path = os.path.dirname(fname)
    if path:
        os.makedirs(path, exist_ok=True)
    logging.debug(f'Writing {fname}')
    with open(fname, 'wt', encoding='utf-8', newline='') as f:
        yield f
