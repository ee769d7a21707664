"""Circle patterns with prescribed intersection and cone angles.

Instances are JSON documents (text, a dict, or a path to a file). Results come
back as plain dicts.
"""

import json
import os

from . import _core
from ._core import (
    InfeasibleError,
    InputError,
    NumericalError,
    UnsupportedError,
    euclidean_apex,
    hyperbolic_apex,
    lobachevsky,
)

__all__ = [
    "InfeasibleError",
    "InputError",
    "NumericalError",
    "UnsupportedError",
    "check",
    "euclidean_apex",
    "export",
    "forward_map",
    "hyperbolic_apex",
    "load",
    "lobachevsky",
    "solve",
]


def _text(instance):
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike) or (isinstance(instance, str) and not instance.lstrip().startswith("{")):
        with open(instance, encoding="utf-8") as f:
            return f.read()
    return instance


def load(instance):
    """Validated instance in canonical form."""
    return json.loads(_core.normalize(_text(instance)))


def check(instance, tol=1e-9):
    return json.loads(_core.check(_text(instance), tol))


def solve(instance, method="auto", tol=1e-10, gauge="sum", initial_radii=None):
    return json.loads(_core.solve(_text(instance), method, tol, gauge, initial_radii))


def forward_map(instance, radii):
    return json.loads(_core.forward_map(_text(instance), radii))


def export(instance, report):
    """SVG text and layout dict for a report returned by solve()."""
    svg, layout = _core.export(_text(instance), json.dumps(report))
    return svg, json.loads(layout)
