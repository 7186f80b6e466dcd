"""Persistent JSON-lines catalog of constructed codes and audit reports.

Entries are content-addressed: the id is the SHA-256 hash of the canonical
payload serialization, so putting the same record twice is a no-op.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field as dc_field
from datetime import datetime, timezone

from .errors import QctError

DEFAULT_PATH = "qct_catalog.jsonl"

KINDS = ("classical", "quantum", "report")


def payload_id(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


@dataclass
class CatalogEntry:
    id: str
    kind: str
    payload: dict
    created: str
    inputs: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {"id": self.id, "kind": self.kind, "payload": self.payload,
                "created": self.created, "inputs": self.inputs}


class Catalog:
    """Append-only store; one JSON entry per line."""

    def __init__(self, path: str = DEFAULT_PATH):
        self.path = path
        self._entries = {}
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self._entries[rec["id"]] = CatalogEntry(
                        rec["id"], rec["kind"], rec["payload"],
                        rec["created"], rec.get("inputs", []))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise QctError(f"cannot read catalog {self.path}: {exc}")

    def put(self, kind: str, payload: dict, inputs=()) -> CatalogEntry:
        if kind not in KINDS:
            raise QctError(f"unknown catalog kind {kind!r}")
        inputs = list(inputs)
        for ref in inputs:
            if ref not in self._entries:
                raise QctError(f"input id {ref} not found in catalog")
        eid = payload_id(payload)
        if eid in self._entries:
            return self._entries[eid]
        entry = CatalogEntry(eid, kind, payload,
                             datetime.now(timezone.utc).isoformat(), inputs)
        try:
            with open(self.path, "a") as fh:
                fh.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")
        except OSError as exc:
            raise QctError(f"cannot write catalog {self.path}: {exc}")
        self._entries[eid] = entry
        return entry

    def get(self, eid: str) -> CatalogEntry:
        if eid not in self._entries:
            raise QctError(f"id {eid} not found in catalog {self.path}")
        return self._entries[eid]

    def list(self, kind: str | None = None):
        out = [e for e in self._entries.values()
               if kind is None or e.kind == kind]
        return sorted(out, key=lambda e: e.created)

    def search(self, n=None, k=None, q=None, dz_min=None, dx_min=None):
        """Match quantum/classical payloads on parameters."""
        hits = []
        for entry in self.list():
            p = entry.payload
            if n is not None and p.get("n") != n:
                continue
            if k is not None and p.get("k") != k:
                continue
            if q is not None and p.get("q", p.get("field", {}).get("order")) != q:
                continue
            if dz_min is not None and (p.get("dz") or 0) < dz_min:
                continue
            if dx_min is not None and (p.get("dx") or 0) < dx_min:
                continue
            hits.append(entry)
        return hits
