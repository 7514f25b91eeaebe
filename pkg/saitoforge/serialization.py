"""Versioned JSON persistence of groups, connections, structures and reports.

Every file is an envelope {"schema": "v1", "kind": ..., "payload": ...}
written with sorted keys, so identical inputs give byte-identical files.
"""

import json

from .connection import OmegaFamily
from .constants import SCHEMA
from .exceptions import ParseError, SchemaMismatch
from .groups import GroupData, build_group
from .structures import AlmostSaitoData, SaitoData

_KINDS = (
    (GroupData, SCHEMA.KIND_GROUP),
    (OmegaFamily, SCHEMA.KIND_CONNECTION),
    (SaitoData, SCHEMA.KIND_SAITO),
    (AlmostSaitoData, SCHEMA.KIND_ALMOST_SAITO),
)


def kind_of(payload):
    for cls, kind in _KINDS:
        if isinstance(payload, cls):
            return kind
    return SCHEMA.KIND_REPORT


def _payload_data(payload):
    if hasattr(payload, "serializable_data"):
        return payload.serializable_data()
    return payload


def dumps(payload):
    envelope = {
        "schema": SCHEMA.VERSION,
        "kind": kind_of(payload),
        "payload": _payload_data(payload),
    }
    return json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _group_of(data, attach_group):
    name = data.get("group") if isinstance(data, dict) else None
    if attach_group and name:
        return build_group(name)
    return None


def loads(text, attach_group=True):
    """Rebuild the object stored by dumps.

    A structure naming a group gets it rebuilt from the catalog unless
    ``attach_group`` is cleared; connections always need it.
    """
    try:
        envelope = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(text[:40], f"as JSON ({error.msg})") from error
    if not isinstance(envelope, dict) or "payload" not in envelope:
        raise ParseError(text[:40], "as a saito-forge envelope")
    found = envelope.get("schema")
    if found != SCHEMA.VERSION:
        raise SchemaMismatch(found, SCHEMA.VERSION)
    kind = envelope.get("kind")
    data = envelope["payload"]
    if kind == SCHEMA.KIND_GROUP:
        return build_group(data)
    if kind == SCHEMA.KIND_CONNECTION:
        return OmegaFamily.from_data(data, _group_of(data, True))
    if kind == SCHEMA.KIND_SAITO:
        return SaitoData.from_data(data, _group_of(data, attach_group))
    if kind == SCHEMA.KIND_ALMOST_SAITO:
        return AlmostSaitoData.from_data(data, _group_of(data, attach_group))
    if kind == SCHEMA.KIND_REPORT:
        return data
    raise ParseError(kind, "as a payload kind")


def store(path, payload):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(payload))
    return path


def load(path, attach_group=True):
    with open(path, encoding="utf-8") as handle:
        return loads(handle.read(), attach_group=attach_group)


def load_store(path, payload):
    """Write ``payload`` to ``path`` and read it back."""
    store(path, payload)
    return load(path)
