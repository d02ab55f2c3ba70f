"""Quadratic operads over the rationals: duals, tilde, tensor closure."""

from ._core import (
    Error,
    InvalidParameter,
    Operad,
    ParseError,
    UnknownName,
    closure_holds,
    dual,
    load,
    minimal_companion,
    normalize,
    paper_tables,
    parse_definition,
    preset,
    preset_names,
    run,
    theorem1,
    tilde,
)

__all__ = [
    "Error",
    "InvalidParameter",
    "Operad",
    "ParseError",
    "UnknownName",
    "closure_holds",
    "dual",
    "load",
    "minimal_companion",
    "normalize",
    "paper_tables",
    "parse_definition",
    "preset",
    "preset_names",
    "run",
    "theorem1",
    "tilde",
]
