"""Reading and writing the on-disk group format.

A group file is a JSON object with a ``schema`` tag of ``"group/1"`` and
exactly one of:

* ``"table"``: a row-major n x n matrix of element indices, or
* ``"perms"``: ``{"degree": d, "generators": [[...], ...]}`` giving
  generating permutations of ``0..d-1`` in one-line notation.

Optional keys: ``"name"`` and (table form only) ``"labels"``.  Unknown keys
are rejected.  Tables are fully validated on load; see the README for the
precise schema.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .groups import Group, group_from_permutations, group_from_table

__all__ = ["ParseError", "SCHEMA", "parse_group", "load_group", "group_to_json", "write_group"]

SCHEMA = "group/1"


class ParseError(ValueError):
    """The file is not a well-formed group document (names the bad field/line)."""


def parse_group(text: str) -> Group:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("schema") != SCHEMA:
        raise ParseError(f'field "schema" must be "{SCHEMA}"')
    allowed = {"schema", "name", "table", "perms", "labels"}
    for key in doc:
        if key not in allowed:
            raise ParseError(f'unknown field "{key}"')
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError('field "name" must be a string')
    has_table = "table" in doc
    has_perms = "perms" in doc
    if has_table == has_perms:
        raise ParseError('exactly one of "table" or "perms" is required')

    if has_table:
        table = doc["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise ParseError('field "table" must be a matrix of integers')
        for i, row in enumerate(table):
            if not all(isinstance(x, int) for x in row):
                raise ParseError(f'field "table" row {i} contains a non-integer')
        labels = doc.get("labels")
        if labels is not None and (
            not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
        ):
            raise ParseError('field "labels" must be a list of strings')
        return group_from_table(table, labels=labels, name=name)

    if "labels" in doc:
        raise ParseError('field "labels" is only allowed with "table"')
    perms = doc["perms"]
    if not isinstance(perms, dict):
        raise ParseError('field "perms" must be an object')
    for key in perms:
        if key not in {"degree", "generators"}:
            raise ParseError(f'unknown field "perms.{key}"')
    degree = perms.get("degree")
    gens = perms.get("generators")
    if not isinstance(degree, int) or degree <= 0:
        raise ParseError('field "perms.degree" must be a positive integer')
    if not isinstance(gens, list) or not all(isinstance(p, list) for p in gens):
        raise ParseError('field "perms.generators" must be a list of integer lists')
    return group_from_permutations(degree, gens, name=name)


def load_group(path: Union[str, Path]) -> Group:
    """Parse and fully validate the group stored at ``path``."""
    return parse_group(Path(path).read_text(encoding="utf-8"))


def group_to_json(G: Group) -> str:
    doc: dict = {"schema": SCHEMA, "table": G.table.tolist()}
    if G.name is not None:
        doc["name"] = G.name
    if G.labels is not None:
        doc["labels"] = list(G.labels)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_group(G: Group, path: Union[str, Path]) -> None:
    Path(path).write_text(group_to_json(G), encoding="utf-8")
