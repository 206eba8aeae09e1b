"""Exact tropical (max-plus) geometry: polynomial arithmetic, rational
polyhedral sets, congruence generators, and chart functions on embedded
curve complexes.

Everything crosses the boundary as JSON strings; rational scalars are
decimal-free "p/q" strings and the bottom element is "-inf".
"""

try:
    from ._tropgeo import (
        DimensionError,
        ParseError,
        PreconditionError,
        canonicalize,
        chart,
        curve_check,
        eval_function,
        func_eq,
        generate,
        project_onto_cone,
        variety,
        verify,
    )
except ImportError:  # development tree: the extension sits on sys.path
    from _tropgeo import (
        DimensionError,
        ParseError,
        PreconditionError,
        canonicalize,
        chart,
        curve_check,
        eval_function,
        func_eq,
        generate,
        project_onto_cone,
        variety,
        verify,
    )

__all__ = [
    "DimensionError",
    "ParseError",
    "PreconditionError",
    "canonicalize",
    "chart",
    "curve_check",
    "eval_function",
    "func_eq",
    "generate",
    "project_onto_cone",
    "variety",
    "verify",
]
