"""Nondegenerate general polars of plane branches of genus one and two."""

import json

from ._core import (
    PolarndError,
    __version__,
    classify,
    continued_fraction,
    convergents,
    is_nondegenerate,
    locus_g1,
    locus_g2,
    newton_polygon,
    oka_topology,
    polar,
    puiseux,
    run,
    semigroup_from_char,
    topology_g1,
    topology_g2,
    verify_json,
)


def verify(p, q, d=None, e1=2, trials=50, seed=42, range=10):
    """Sampled verification report as a dict."""
    return json.loads(verify_json(p, q, d, e1, trials, seed, range))


__all__ = [
    "PolarndError",
    "__version__",
    "classify",
    "continued_fraction",
    "convergents",
    "is_nondegenerate",
    "locus_g1",
    "locus_g2",
    "newton_polygon",
    "oka_topology",
    "polar",
    "puiseux",
    "run",
    "semigroup_from_char",
    "topology_g1",
    "topology_g2",
    "verify",
]
