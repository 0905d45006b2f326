"""Optimal symmetric, alternating and Hermitian rank-metric codes.

Evaluation encoding over finite-field towers and interpolation-based
unique decoding up to rank floor((d-1)/2).
"""

from .channel import error_rank, random_rank_error
from .codes import (CodeSpec, Family, LayoutError, ParameterError, compress_message,
                    encode, expand_message, make_code_spec, to_matrix_form)
from .decoder import DecodeResult, DecodingFailure, decode
from .field import FieldCtx, FieldError, make_field

__all__ = [
    "CodeSpec", "DecodeResult", "DecodingFailure", "Family", "FieldCtx", "FieldError",
    "LayoutError", "ParameterError", "compress_message", "decode", "encode",
    "error_rank", "expand_message", "make_code_spec", "make_field",
    "random_rank_error", "to_matrix_form",
]

__version__ = "0.1.0"
