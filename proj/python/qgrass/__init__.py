"""Python access to the qgrass exact engine.

Polynomials travel as strings in the engine's own format, e.g. "u[1,1]u[2,2] + (-q)/(1) * u[1,2]u[2,1]".
"""

import json

from . import _qgrass
from ._qgrass import (
    count_ssyt,
    dbar,
    del_,
    dim_formula,
    h0_dim,
    hk_first_order_dim,
    minor,
    normal_form,
    product,
    qdet,
)

__all__ = [
    "commands",
    "count_ssyt",
    "dbar",
    "del_",
    "dim_formula",
    "h0_dim",
    "hk_first_order_dim",
    "ladder_witness",
    "minor",
    "normal_form",
    "product",
    "qdet",
    "run",
]


def commands():
    return list(_qgrass.commands())


def run(command, n=None, r=None, k_max=None, max_deg=None, prescreen=False, seed=1, jobs=1):
    """Run a check suite and return its report as a dict. Ranges are strings like "3" or "2..4"."""
    n = None if n is None else str(n)
    r = None if r is None else str(r)
    return json.loads(_qgrass.run(command, n, r, k_max, max_deg, prescreen, seed, jobs))


def ladder_witness(n, r, p, max_total=4):
    return json.loads(_qgrass.ladder_witness(n, r, p, max_total))
