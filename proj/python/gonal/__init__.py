"""Gonal maps, plane models and radical parametrizations of canonical curves."""

import json

from ._core import DEFAULT_SEED, SCHEMA_VERSION, Error, fnv1a_hex, stage_names
from ._core import render_text as _render_text
from ._core import run_job_json

__all__ = ["DEFAULT_SEED", "SCHEMA_VERSION", "Error", "fnv1a_hex", "stage_names", "run", "classify", "betti", "render_text"]


def run(command, text, *, field=None, seed=DEFAULT_SEED, jobs=1, stop_after="", patch="", parameter=None, samples=20,
        timings=False):
    """Run a job on input text and return the report as a dict.

    Errors inside a stage are recorded in the report under "error"; a bad
    job (unknown command or stage, malformed patch) raises Error.
    """
    if parameter is not None:
        parameter = tuple(parameter)
    out = run_job_json(command, text, field, seed, jobs, stop_after, patch, parameter, samples, timings)
    return json.loads(out)


def classify(text, **kwargs):
    return run("classify", text, **kwargs)


def betti(text, **kwargs):
    return run("betti", text, **kwargs)


def render_text(report):
    return _render_text(json.dumps(report))
