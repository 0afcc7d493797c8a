"""Dataclass <-> JSON-able conversion with every integer as a decimal string.

Unbounded integers would overflow fixed-width consumers, so all ints are
emitted as strings (bools stay bools).  Decoding is driven by the
dataclass field annotations, so parse(emit(x)) == x for every report type.
"""

from __future__ import annotations

import dataclasses
import typing
from enum import Enum

from .errors import DomainError


def encode(obj):
    """Recursively convert reports to JSON-able data."""
    if hasattr(obj, "to_jsonable"):
        return obj.to_jsonable()
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            field.name: encode(getattr(obj, field.name))
            for field in dataclasses.fields(obj)
        }
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (str, float)):
        return obj
    raise DomainError(f"cannot encode {type(obj).__name__}")


def decode(tp, data):
    """Inverse of encode for the annotated type tp."""
    origin = typing.get_origin(tp)
    if origin is typing.Union:  # Optional[...]
        args = [a for a in typing.get_args(tp) if a is not type(None)]
        if data is None:
            return None
        return decode(args[0], data)
    if tp is bool:
        return bool(data)
    if tp is int:
        return int(data)
    if tp is str:
        return data
    if isinstance(tp, type) and issubclass(tp, Enum):
        return tp(data)
    if hasattr(tp, "from_jsonable"):
        return tp.from_jsonable(data)
    if origin in (list, tuple):
        args = typing.get_args(tp)
        if origin is list:
            return [decode(args[0], x) for x in data]
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(decode(args[0], x) for x in data)
        return tuple(decode(a, x) for a, x in zip(args, data))
    if dataclasses.is_dataclass(tp):
        hints = typing.get_type_hints(tp)
        kwargs = {
            field.name: decode(hints[field.name], data[field.name])
            for field in dataclasses.fields(tp)
        }
        return tp(**kwargs)
    raise DomainError(f"cannot decode into {tp!r}")
