"""Reading and writing ideals as JSON.

Format::

    {"vars": ["x", "y"], "weights": [1, 1], "gens": ["x*y - 1", "x^2"]}

``weights`` is optional and defaults to all ones.
"""

import json
from pathlib import Path
from typing import Any

from glvar.polyalg.exceptions import IdealFormatError, PolynomialError
from glvar.polyalg.ideal import Ideal
from glvar.polyalg.polynomial import PolynomialRing


def ideal_from_dict(data: Any, source: str = "<data>") -> Ideal:
    """Build an ideal from the decoded JSON structure.

    Raises:
        IdealFormatError: If keys are missing or polynomials fail to parse

    """
    if not isinstance(data, dict):
        raise IdealFormatError(source, message=f"Invalid ideal file: {source}\nExpected a JSON object")
    try:
        variables = [str(v) for v in data["vars"]]
        weights = [int(w) for w in data.get("weights", [1] * len(variables))]
        texts = [str(g) for g in data["gens"]]
    except (KeyError, TypeError, ValueError) as e:
        raise IdealFormatError(source, e) from e
    try:
        ring = PolynomialRing(tuple(variables), tuple(weights))
        return Ideal.from_strings(ring, texts)
    except (PolynomialError, ValueError) as e:
        raise IdealFormatError(source, e) from e


def load_ideal(path: str | Path) -> Ideal:
    """Load an ideal from a JSON file.

    Raises:
        IdealFormatError: If the file is missing, not JSON, or malformed

    Example:
        >>> I = load_ideal("data/ideals/shift_rank1_level2.json")
        >>> I.ring.variables[:2]
        ('x_1', 'x_2')

    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise IdealFormatError(str(path), e) from e
    return ideal_from_dict(data, str(path))


def dump_ideal(ideal: Ideal) -> dict[str, Any]:
    """JSON-ready representation of an ideal; inverse of :func:`ideal_from_dict`."""
    return {
        "vars": list(ideal.ring.variables),
        "weights": list(ideal.ring.weights),
        "gens": [str(g) for g in ideal.generators],
    }
