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
src/actual_cause/backend_factory.py - Factory for query backends

Created: Thu 15 Oct 2026 03:02:51 PM EDT
"""

from .backend import Backend, DirectBackend, BackendUnavailable
from .constants import Mode


def BackendFactory(mode: Mode) -> Backend:
    if not mode.uses_solver():
        return DirectBackend()
    try:
        from .z3_backend import Z3Backend
    except ImportError:
        raise BackendUnavailable(f'Mode {mode} requires the z3-solver package, please install it or use a direct mode')
    return Z3Backend()
