"""Axiom checking and ordered/valued classification for quasi-ordered
commutative rings.

Every function returns the same JSON document the ``qring`` CLI prints with
``--json``, parsed into a dict. Structures come from a builtin name, a JSON
file, or a document passed as dict/text; windows use the CLI override syntax
(``all``, ``int:<lo>:<hi>``, ``poly:<deg>:<c1>,<c2>,...``).
"""

import json as _json

from . import _qring

__all__ = [
    "builtin_names",
    "check",
    "classify",
    "quotfield",
    "counterexample",
    "enumerate_zmod",
]


def builtin_names():
    """Names of the builtin structures."""
    return list(_qring.builtin_names())


def _text_of(structure):
    if structure is None:
        return ""
    if isinstance(structure, str):
        return structure
    return _json.dumps(structure)


def check(*, file="", builtin="", structure=None, window=""):
    """Axiom, lemma and support reports for one structure."""
    return _json.loads(
        _qring.check_json(file=file, builtin=builtin, text=_text_of(structure), window=window)
    )


def classify(*, file="", builtin="", structure=None, window=""):
    """Ordered/valued dichotomy verdict with the round-trip comparison."""
    return _json.loads(
        _qring.classify_json(
            file=file, builtin=builtin, text=_text_of(structure), window=window
        )
    )


def quotfield(*, file="", builtin="", structure=None, window=""):
    """Fraction-field extension checks (integral domains with support {0})."""
    return _json.loads(
        _qring.quotfield_json(
            file=file, builtin=builtin, text=_text_of(structure), window=window
        )
    )


def counterexample(*, builtin="", window=""):
    """The two-variable relation that defeats cancellation, fully checked."""
    return _json.loads(_qring.counterexample_json(builtin=builtin, window=window))


def enumerate_zmod(n, max_n=8):
    """Every quasi-order on Z/n with supports, classifications, cross-checks."""
    return _json.loads(_qring.enumerate_json(n, max_n))
