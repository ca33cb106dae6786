"""Utilitaires transverses (sérialisation)."""

from sun_coherent.utils.serialization import (
    complex_pair,
    decode_matrix,
    dumps,
    encode_matrix,
    encode_vector,
    load_angles,
    load_matrix,
    read_json_source,
    to_csv,
    write_output,
)

__all__ = [
    "complex_pair",
    "decode_matrix",
    "dumps",
    "encode_matrix",
    "encode_vector",
    "load_angles",
    "load_matrix",
    "read_json_source",
    "to_csv",
    "write_output",
]
