"""Exact greedy, lazy and Ito-Sadahiro representations in base -beta.

Every function returns the JSON report of the matching CLI command as a dict,
with the plain-text rendering under "text" and the CLI exit code under
"exit_code". Invalid input raises ValueError.
"""

import json

from . import _negbeta

__all__ = ["expand", "admissible", "alphabet", "unique", "compare"]


def _report(result):
    payload, text, code = result
    report = json.loads(payload)
    report["text"] = text
    report["exit_code"] = code
    return report


def expand(base, x, kind="greedy", depth=0):
    return _report(_negbeta.expand(base, str(x), kind, depth))


def admissible(word, level, base=""):
    return _report(_negbeta.admissible(base, word, level))


def alphabet(base):
    return _report(_negbeta.alphabet(base))


def unique(base, depth=10, samples=10, length=4, seed=1):
    return _report(_negbeta.unique(base, depth, samples, length, seed))


def compare(base, x, depth=0):
    return _report(_negbeta.compare(base, str(x), depth))
