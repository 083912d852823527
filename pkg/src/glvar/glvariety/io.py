"""Reading level families from JSON.

Format::

    {
      "tuple": [[1], [1]],
      "names": ["x", "y"],
      "name": "rank<=1",
      "recipe": {"kind": "orbit", "generators": ["x_i*y_j - x_j*y_i"]}
    }

Recipe kinds and their keys:

- ``affine``, ``origin``: none
- ``orbit``: ``generators`` (index templates)
- ``minors``: ``rank``
- ``map_image``: ``map`` (an inline map object) or ``map_file`` (relative to
  the family file); the family space is the map target
- ``shift``: ``n`` and ``base`` (an inline family object)
"""

import json
from pathlib import Path
from typing import Any

from glvar.equimap import FormSpace, WeightedMap, load_map, map_from_dict
from glvar.exceptions import GlvarError
from glvar.glvariety.exceptions import FamilyFormatError
from glvar.glvariety.families import LevelFamily, RecipeKind, shift_level
from glvar.partitions import Partition, parse_partitions


def _space(data: dict[str, Any]) -> FormSpace:
    raw = data["tuple"]
    entries = parse_partitions(raw) if isinstance(raw, str) else [
        Partition(tuple(int(x) for x in p)) for p in raw
    ]
    return FormSpace.from_partitions(entries, data.get("names"))


def _map(recipe: dict[str, Any], source: str) -> WeightedMap:
    if "map" in recipe:
        return map_from_dict(recipe["map"], source)
    return load_map(Path(source).parent / recipe["map_file"])


def _family(data: Any, source: str) -> LevelFamily:
    if not isinstance(data, dict):
        raise FamilyFormatError(source, message=f"Invalid family file: {source}\nExpected a JSON object")
    recipe = data["recipe"]
    kind = RecipeKind(recipe["kind"])
    name = str(data.get("name", ""))
    if kind is RecipeKind.SHIFT:
        return shift_level(_family(recipe["base"], source), int(recipe["n"]))
    if kind is RecipeKind.MAP_IMAGE:
        f = _map(recipe, source)
        return LevelFamily(f.target, kind, map=f, name=name)
    space = _space(data)
    if kind is RecipeKind.ORBIT:
        templates = tuple(str(t) for t in recipe["generators"])
        return LevelFamily(space, kind, templates=templates, name=name)
    if kind is RecipeKind.MINORS:
        return LevelFamily(space, kind, rank=int(recipe["rank"]), name=name)
    return LevelFamily(space, kind, name=name)


def family_from_dict(data: Any, source: str = "<data>") -> LevelFamily:
    """Build a family from the decoded JSON structure.

    Raises:
        FamilyFormatError: If keys are missing or values are malformed

    """
    try:
        return _family(data, source)
    except FamilyFormatError:
        raise
    except (KeyError, TypeError, ValueError, GlvarError) as e:
        raise FamilyFormatError(source, e) from e


def load_family(path: str | Path) -> LevelFamily:
    """Load a family from a JSON file.

    Raises:
        FamilyFormatError: If the file is missing, not JSON, or malformed

    Example:
        >>> X = load_family("data/families/rank1.json")
        >>> X.kind.value
        'orbit'

    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise FamilyFormatError(str(path), e) from e
    return family_from_dict(data, str(path))
