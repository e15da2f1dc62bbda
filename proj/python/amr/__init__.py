"""Algebraic reasoning over monomial-ideal encodings of Raven-style matrices.

Ideals and polynomials are passed as text ("<x*y, z>", "x^2 - y"). Instances
and reports are plain dicts in the same JSON layout the command-line tool
reads and writes.
"""

import json

from . import _amr
from ._amr import (
    EncodingError,
    GenerationError,
    IngestionError,
    ParseError,
    PreconditionError,
    groebner_basis,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    primary_decomposition,
    schema_variables,
)

__all__ = [
    "EncodingError",
    "GenerationError",
    "IngestionError",
    "ParseError",
    "PreconditionError",
    "generate",
    "groebner_basis",
    "ideal_intersection",
    "ideal_product",
    "ideal_sum",
    "load_raven_xml",
    "primary_decomposition",
    "schema_variables",
    "solve",
    "synthetic_instance",
]


def solve(instance, schema="iraven-full", deltas=(1, 2, -1, -2), ops="+-", modules="all"):
    """Selection report for an instance dict."""
    return json.loads(_amr.solve_json(json.dumps(instance), schema, list(deltas), ops, modules))


def generate(instance, seed=0, schema="iraven-full", deltas=(1, 2, -1, -2), ops="+-", modules="all"):
    """Generated missing panel, with a similarity block when ground truth is known."""
    return json.loads(_amr.generate_json(json.dumps(instance), seed, schema, list(deltas), ops, modules))


def synthetic_instance(family, configuration="center", seed=0):
    """Seeded synthetic instance over the iraven-full schema."""
    return json.loads(_amr.synthetic_json(family, configuration, seed))


def load_raven_xml(path, mapping=None):
    """Instance dict from a RAVEN/I-RAVEN annotation file."""
    return json.loads(_amr.raven_xml_json(str(path), None if mapping is None else str(mapping)))
