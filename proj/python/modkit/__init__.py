"""Modular decomposition, thinness, simultaneous interval number and linear mim-width."""

import json

from ._core import *  # noqa: F401,F403
from ._core import ArgumentError, GuardError, ModkitError, ParseError, decompose as _decompose, run_cli


def decompose(g):
    """Modular decomposition tree as nested dicts."""
    return json.loads(_decompose(g))


def cli(*args, input=""):
    """Run a command line and return (exit code, parsed JSON or None, stderr)."""
    code, out, err = run_cli(list(args), input)
    return code, (json.loads(out) if out.strip() else None), err


__all__ = [name for name in dir() if not name.startswith("_")]
