"""Python bindings for the leibniz library.

The functions mirror the command line tool: every command returns the same report
document and exit code as ``leibniz <command> ...``.
"""

import json

from ._core import LeibnizError, fixture_names, normalize, render_text
from . import _core

__all__ = [
    "LeibnizError",
    "fixture",
    "fixture_names",
    "is_a_algebra",
    "normalize",
    "render_text",
    "run",
]


def run(*args):
    """Run one command; returns ``(exit_code, report)`` with the report as a dict."""
    code, text = _core.run([str(a) for a in args])
    return code, json.loads(text)


def fixture(name, field="q"):
    """A named fixture algebra as a document dict."""
    return json.loads(_core.fixture(name, field))


def is_a_algebra(doc):
    """Verdict dict (value, method, witness) for an algebra document or its JSON text."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_core.is_a_algebra(text))
