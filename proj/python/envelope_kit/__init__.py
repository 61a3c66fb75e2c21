"""Envelopes of finite distributive strong upper semilattices."""

import json

from ._core import (
    EnvelopeKitError,
    FilterLattice,
    Poset,
    Sus,
    ValuationRing,
    count_posets,
    dot_envelope,
    dot_poset,
    gen_dsus,
    instance_id,
    meet_in_v,
    parse_instance,
    serialize_instance,
)
from . import _core


def load(path):
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read())


def run_suite(sus, seed=0):
    """Verification report for one instance, as a dict."""
    return json.loads(_core.run_suite_json(sus, seed))


def sweep(max_size, jobs=1, seed=0):
    """Summary of run_suite over every instance up to max_size, as a dict."""
    return json.loads(_core.sweep_json(max_size, jobs, seed))


__all__ = [
    "EnvelopeKitError",
    "FilterLattice",
    "Poset",
    "Sus",
    "ValuationRing",
    "count_posets",
    "dot_envelope",
    "dot_poset",
    "gen_dsus",
    "instance_id",
    "load",
    "meet_in_v",
    "parse_instance",
    "run_suite",
    "serialize_instance",
    "sweep",
]
