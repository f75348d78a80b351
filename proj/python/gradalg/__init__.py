"""Exact checks for graded algebras and modules in strict braided hosts."""

import json as _json

from ._gradalg import (
    FORMAT_VERSION,
    ConsistencyError,
    DomainError,
    Error,
    SchemaError,
    UnsupportedInput,
    commands,
    is_query,
)
from . import _gradalg

__all__ = [
    "FORMAT_VERSION",
    "ConsistencyError",
    "DomainError",
    "Error",
    "SchemaError",
    "UnsupportedInput",
    "cli",
    "commands",
    "is_query",
    "run",
    "scalar",
]


def scalar(value, max_root_order=240):
    """Canonical form of a scalar literal (int, "p/q", "zN^e", "i" or the object form)."""
    return _json.loads(_gradalg.normalize_scalar(_json.dumps(value), max_root_order))


def run(command, workspace, *, seed=0, samples=64, exhaustive_dim=4, max_root_order=240, task=None, **args):
    """Run one CLI command on a workspace dict. Returns (report dict, exit code)."""
    text, code = _gradalg.run(
        command,
        _json.dumps(workspace),
        seed,
        samples,
        exhaustive_dim,
        max_root_order,
        task,
        _json.dumps(args),
    )
    return _json.loads(text), code


def cli(*args):
    """Invoke the command-line entry point in-process. Returns (exit code, stdout, stderr)."""
    return _gradalg.cli([str(a) for a in args])
