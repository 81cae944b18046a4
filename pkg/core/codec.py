"""Reading JSON/YAML input documents and writing deterministic JSON."""

import json
import os
from typing import Any

import yaml

from core.errors import ParseError


def load_document(path: str) -> Any:
    """Load a .json, .yaml or .yml file."""
    if not os.path.exists(path):
        raise ParseError(path, "file not found")
    try:
        with open(path, "r") as f:
            if path.endswith(".yaml") or path.endswith(".yml"):
                return yaml.safe_load(f)
            if path.endswith(".json"):
                return json.load(f)
    except (yaml.YAMLError, json.JSONDecodeError) as e:
        raise ParseError(path, str(e))
    raise ParseError(path, "input file must be YAML or JSON")


def dumps(data: Any) -> str:
    """Sorted keys, two-space indent; equal data gives equal bytes."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
