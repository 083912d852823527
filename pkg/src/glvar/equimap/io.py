"""Reading and writing maps as JSON.

Format::

    {
      "source": [[1], [1], [2], [2], [2]],
      "target": [[4]],
      "bodies": ["x^2*g + y^2*f - 2*x*y*h"],
      "source_names": ["x", "y", "f", "g", "h"],
      "target_names": ["a"],
      "parameters": []
    }

Only ``source``, ``target`` and ``bodies`` are required. Source symbols
are named from the default pools in declaration order.
"""

import json
from pathlib import Path
from typing import Any

from glvar.equimap.exceptions import MapFormatError
from glvar.equimap.forms import FormSpace
from glvar.equimap.maps import WeightedMap, map_ring
from glvar.exceptions import GlvarError
from glvar.partitions import Partition
from glvar.polyalg import parse_poly


def map_from_dict(data: Any, source: str = "<data>") -> WeightedMap:
    """Build a map from the decoded JSON structure.

    Raises:
        MapFormatError: If keys are missing, tuples are malformed or bodies
            fail to parse or are not weighted-homogeneous

    """
    if not isinstance(data, dict):
        raise MapFormatError(source, message=f"Invalid map file: {source}\nExpected a JSON object")
    try:
        source_parts = [Partition(tuple(int(x) for x in p)) for p in data["source"]]
        target_parts = [Partition(tuple(int(x) for x in p)) for p in data["target"]]
        texts = [str(b) for b in data["bodies"]]
        parameters = tuple(str(p) for p in data.get("parameters", []))
        source_names = data.get("source_names")
        target_names = data.get("target_names")
    except (KeyError, TypeError, ValueError) as e:
        raise MapFormatError(source, e) from e
    try:
        src = FormSpace.from_partitions(source_parts, source_names, taken=parameters)
        tgt = FormSpace.from_partitions(
            target_parts, target_names, taken=(*src.symbols, *parameters), target=True
        )
        ring = map_ring(src, parameters)
        return WeightedMap(src, tgt, tuple(parse_poly(text, ring) for text in texts), parameters)
    except (GlvarError, ValueError) as e:
        raise MapFormatError(source, e) from e


def load_map(path: str | Path) -> WeightedMap:
    """Load a map from a JSON file.

    Raises:
        MapFormatError: If the file is missing, not JSON, or malformed

    Example:
        >>> f = load_map("data/maps/phi0.json")
        >>> str(f.target_tuple)
        '[[4]]'

    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise MapFormatError(str(path), e) from e
    return map_from_dict(data, str(path))


def dump_map(f: WeightedMap) -> dict[str, Any]:
    """JSON-ready representation of a map; inverse of :func:`map_from_dict`."""
    return {
        "source": [[w] for w in f.source.weights],
        "target": [[w] for w in f.target.weights],
        "bodies": [str(b) for b in f.bodies],
        "source_names": list(f.source.symbols),
        "target_names": list(f.target.symbols),
        "parameters": list(f.parameters),
    }
