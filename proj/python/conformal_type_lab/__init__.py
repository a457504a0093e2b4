"""Python front end for the C++ core. Text formats (.spg, .gpt, .tlg) pass
through as strings; reports come back as plain dicts and lists."""

import json

from . import _core
from ._core import CtlError, circumradius_oracle, generate, partition, r_q_eps, regular_tiling, export_tiling

__all__ = [
    "CtlError",
    "generate",
    "validate",
    "faces",
    "excess",
    "mean_excess",
    "partition",
    "certify_t2",
    "certify_tfinal",
    "regular_tiling",
    "check_tiling",
    "constants",
    "constants_pi",
    "r_q_eps",
    "circumradius_oracle",
    "half_sheet_identity",
    "record",
    "export_tiling",
]


def _json(fn):
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


validate = _json(_core.validate)
faces = _json(_core.faces)
excess = _json(_core.excess)
mean_excess = _json(_core.mean_excess)
check_tiling = _json(_core.check_tiling)
constants = _json(_core.constants)
constants_pi = _json(_core.constants_pi)
half_sheet_identity = _json(_core.half_sheet_identity)
record = _json(_core.record)


def certify_t2(spg, gpt, eps, M, parallel=False):
    return json.loads(_core.certify_t2(spg, gpt, str(eps), M, parallel))


def certify_tfinal(spg, eps, M, mode="constructive", resolved_only=False):
    return json.loads(_core.certify_tfinal(spg, str(eps), M, mode, resolved_only))
