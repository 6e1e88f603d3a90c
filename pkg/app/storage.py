"""
Structure Storage
=================
JSON files for groups, bracoids and braces.

The canonical file is the compact pydantic dump plus a trailing newline,
so store(load(x)) reproduces a canonical file byte for byte. The kind of
structure is told apart by its keys. Groups are validated on load; action
tables are only shape-checked, leaving the axioms to the verifier so that a
broken file still yields a report with a witness.
"""

import json
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ValidationError

from .core.actions import LeftActionTable, RightActionTable
from .core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid
from .core.errors import ActionError, GroupError, StructureFormatError
from .core.groups import FiniteGroup, make_group_from_table
from .core.two_sided import TwoSidedSkewBracoid
from .schemas import (
    BraceSchema,
    GroupSchema,
    LeftBracoidSchema,
    RightBracoidSchema,
    TwoSidedBracoidSchema,
)

Structure = Union[SkewLeftBracoid, SkewRightBracoid, TwoSidedSkewBracoid, SkewBrace]


# ------------------------------------------------------------------
# To schemas
# ------------------------------------------------------------------

def group_to_schema(G: FiniteGroup) -> GroupSchema:
    return GroupSchema(name=G.name, order=G.order, elements=list(G.element_names), table=G.table.tolist())


def structure_to_schema(structure: Structure) -> BaseModel:
    if isinstance(structure, TwoSidedSkewBracoid):
        return TwoSidedBracoidSchema(
            G=group_to_schema(structure.G),
            H=group_to_schema(structure.H),
            N=group_to_schema(structure.N),
            left_action=structure.left.action.table.tolist(),
            right_action=structure.right.action.table.tolist(),
        )
    if isinstance(structure, SkewLeftBracoid):
        return LeftBracoidSchema(
            G=group_to_schema(structure.G),
            N=group_to_schema(structure.N),
            left_action=structure.action.table.tolist(),
        )
    if isinstance(structure, SkewRightBracoid):
        return RightBracoidSchema(
            H=group_to_schema(structure.H),
            N=group_to_schema(structure.N),
            right_action=structure.action.table.tolist(),
        )
    if isinstance(structure, SkewBrace):
        return BraceSchema(
            star_group=group_to_schema(structure.star_group),
            dot_group=group_to_schema(structure.dot_group),
        )
    raise TypeError(f"cannot serialize {type(structure).__name__}")


def dump_structure(structure: Union[Structure, FiniteGroup]) -> str:
    schema = group_to_schema(structure) if isinstance(structure, FiniteGroup) else structure_to_schema(structure)
    return schema.model_dump_json() + "\n"


def store_structure(structure: Union[Structure, FiniteGroup], path) -> None:
    Path(path).write_text(dump_structure(structure), encoding="utf-8")


# ------------------------------------------------------------------
# From schemas
# ------------------------------------------------------------------

def _group(schema: GroupSchema, label: str) -> FiniteGroup:
    if schema.order != len(schema.elements):
        raise StructureFormatError(
            f"{label}.order is {schema.order} but {label}.elements lists {len(schema.elements)}"
        )
    try:
        return make_group_from_table(schema.elements, schema.table, name=schema.name)
    except GroupError as e:
        raise StructureFormatError(f"{label}: {e}", witness=e.witness) from e


def _table(build, label: str, *groups):
    try:
        return build(*groups)
    except ActionError as e:
        raise StructureFormatError(f"{label}: {e}", witness=e.witness) from e


def _validate(model, raw: dict):
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise StructureFormatError(f"{where}: {first['msg']}", witness=(where,)) from e


def structure_from_dict(raw: dict) -> Structure:
    if not isinstance(raw, dict):
        raise StructureFormatError("top level of a structure file must be an object")
    keys = set(raw)

    if {"star_group", "dot_group"} <= keys:
        schema = _validate(BraceSchema, raw)
        star, dot = _group(schema.star_group, "star_group"), _group(schema.dot_group, "dot_group")
        if star.element_names != dot.element_names:
            raise StructureFormatError("star_group and dot_group must list the same elements")
        return SkewBrace(star, dot)

    if {"left_action", "right_action"} <= keys:
        schema = _validate(TwoSidedBracoidSchema, raw)
        G, H, N = _group(schema.G, "G"), _group(schema.H, "H"), _group(schema.N, "N")
        left = _table(LeftActionTable.unchecked, "left_action", G, N, schema.left_action)
        right = _table(RightActionTable.unchecked, "right_action", N, H, schema.right_action)
        return TwoSidedSkewBracoid(SkewLeftBracoid(G, N, left), SkewRightBracoid(H, N, right))

    if "left_action" in keys:
        schema = _validate(LeftBracoidSchema, raw)
        G, N = _group(schema.G, "G"), _group(schema.N, "N")
        return SkewLeftBracoid(G, N, _table(LeftActionTable.unchecked, "left_action", G, N, schema.left_action))

    if "right_action" in keys:
        schema = _validate(RightBracoidSchema, raw)
        H, N = _group(schema.H, "H"), _group(schema.N, "N")
        return SkewRightBracoid(H, N, _table(RightActionTable.unchecked, "right_action", N, H, schema.right_action))

    raise StructureFormatError(f"cannot tell the structure kind from keys {sorted(keys)}")


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise StructureFormatError(f"cannot read {path}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureFormatError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}") from e


def parse_structure(text: str) -> Structure:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureFormatError(f"invalid JSON at line {e.lineno} column {e.colno}") from e
    return structure_from_dict(raw)


def load_structure(path) -> Structure:
    return structure_from_dict(_read_json(path))


def load_group(path) -> FiniteGroup:
    schema = _validate(GroupSchema, _read_json(path))
    return _group(schema, "group")
