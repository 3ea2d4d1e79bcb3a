"""Exact invariant theory for finite matrix groups over finite fields.

The library enumerates matrix groups defined by sparsity patterns,
analyzes their block structure, synthesizes explicit polynomial
generators of their invariant rings by an iterated gluing construction,
and certifies every result with independent brute-force checks.
"""

from . import errors
from .ffield import (
    FieldCtx,
    additive_span,
    is_subfield_set,
    make_field,
    multiplicative_closure,
    parse_field_spec,
    subfield_closure,
    subfield_degree,
    subfield_elements,
)

__all__ = [
    "errors",
    "FieldCtx",
    "make_field",
    "parse_field_spec",
    "subfield_elements",
    "additive_span",
    "subfield_closure",
    "multiplicative_closure",
    "is_subfield_set",
    "subfield_degree",
]
