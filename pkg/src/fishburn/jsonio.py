"""JSON encodings of the object classes, shared by the CLI and by check
witnesses.

Formats (class name -> shape):
  matching         {"n": N, "arcs": [[o, c], ...]}   arcs sorted by closer
  inversion_table  [a1, ..., an]
  permutation      [v1, ..., vn]
  poset            {"n": N, "less": [[i, j], ...]}   closed, lexicographic
  matrix           {"k": K, "rows": [[...], ...]}
"""

from __future__ import annotations

from .errors import InvalidObject
from .objects import (
    Matching,
    Poset,
    TriangularMatrix,
    validate_matching,
    validate_permutation,
    validate_table,
)


def encode(class_name: str, obj) -> object:
    if class_name == "matching":
        return {"n": obj.n, "arcs": [list(arc) for arc in obj.arcs]}
    if class_name == "inversion_table" or class_name == "ascent_sequence":
        return list(obj)
    if class_name == "permutation":
        return list(obj)
    if class_name == "poset":
        return {"n": obj.n, "less": [list(pair) for pair in sorted(obj.less)]}
    if class_name == "matrix":
        return {"k": obj.k, "rows": [list(row) for row in obj.rows]}
    raise ValueError(f"no JSON encoding for class {class_name!r}")


def decode(class_name: str, data) -> object:
    """Parse and re-validate; input is never trusted to be well formed."""
    try:
        if class_name == "matching":
            if isinstance(data, dict):
                data = data["arcs"]
            return validate_matching(data)
        if class_name == "inversion_table":
            return validate_table(data)
        if class_name == "permutation":
            return validate_permutation(data)
        if class_name == "poset":
            n = int(data["n"])
            return Poset.from_relations(n, data["less"])
        if class_name == "matrix":
            if isinstance(data, dict):
                data = data["rows"]
            return TriangularMatrix.from_rows(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidObject(f"malformed {class_name} JSON: {exc}") from exc
    raise ValueError(f"no JSON decoding for class {class_name!r}")


# plural generator-class name -> singular JSON class name
SINGULAR = {
    "matchings": "matching",
    "inversion_tables": "inversion_table",
    "permutations": "permutation",
    "factorial_posets": "poset",
    "natural_posets": "poset",
    "matrices": "matrix",
    "ascent_sequences": "ascent_sequence",
}
