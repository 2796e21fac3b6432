"""Bundled example input documents.

``pslz-section5`` is the reducible-but-indecomposable three-dimensional
representation factoring through the projective modular group (diagonal
T-image with sixth-root angles); its roots are (0, -1, -2).
``aux-character`` maps both generators to -1 and has the single root -1.
"""

from __future__ import annotations

from .errors import SchemaError

_ZERO = [0.0, 0.0]
_ONE = [1.0, 0.0]
_MINUS_ONE = {"angle": "1/2"}

PRESETS = {
    "pslz-section5": {
        "version": "1",
        "reps": [
            {
                "label": "pslz-section5",
                "n": 3,
                "m0": [
                    [_ONE, _ZERO, _ZERO],
                    [_ZERO, {"angle": "5/6"}, _ZERO],
                    [_ZERO, _ZERO, {"angle": "1/6"}],
                ],
                "m1": [
                    [_ONE, _ONE, _ONE],
                    [_ZERO, _MINUS_ONE, _ZERO],
                    [_ZERO, _ZERO, _MINUS_ONE],
                ],
            }
        ],
    },
    "aux-character": {
        "version": "1",
        "reps": [
            {
                "label": "aux-character",
                "n": 1,
                "m0": [[_MINUS_ONE]],
                "m1": [[_MINUS_ONE]],
            }
        ],
    },
}


def preset(name: str) -> dict:
    try:
        return PRESETS[name]
    except KeyError:
        raise SchemaError(
            f"unknown preset {name!r}; available: {sorted(PRESETS)}") from None
