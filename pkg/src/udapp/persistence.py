"""Saving and restoring every layout and visual parameter.

The medium is a single canonical JSON document per scene: sorted keys, UTF-8,
shortest round-trippable decimals.  Saving the same scene twice yields
identical bytes, which makes archives diffable and hashable.  Restoring needs
the construction-time roster: the same figures, in the same order, as when
the archive was written.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .geometry import RectF

SCHEMA = "udapp-scene/1"


class LoadError(Exception):
    """Archive rejected; the message carries the first offending path."""


def rect_to_list(r: RectF) -> list[float]:
    return [float(r.left), float(r.top), float(r.width), float(r.height)]


def rect_from_list(values) -> RectF:
    left, top, width, height = values
    return RectF(float(left), float(top), float(width), float(height))


def canonical_bytes(doc: dict) -> bytes:
    """The one serialization everything agrees on: CLI, engine, demo UI."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False).encode("utf-8")


class ParamStore:
    """Hierarchical key-value store: path segments to typed values.

    This is the file-backed stand-in for a per-form registry key.  Writes are
    idempotent and read-after-write returns the written value.
    """

    def __init__(self) -> None:
        self._data: dict[tuple[str, ...], object] = {}

    @staticmethod
    def _key(path) -> tuple[str, ...]:
        if isinstance(path, str):
            return tuple(seg for seg in path.split("/") if seg)
        return tuple(str(seg) for seg in path)

    def set(self, path, value) -> None:
        self._data[self._key(path)] = value

    def get(self, path, default=None):
        return self._data.get(self._key(path), default)

    def delete(self, path) -> None:
        self._data.pop(self._key(path), None)

    def __contains__(self, path) -> bool:
        return self._key(path) in self._data

    def __len__(self) -> int:
        return len(self._data)

    def paths(self) -> Iterator[str]:
        for key in sorted(self._data):
            yield "/".join(key)

    def to_document(self) -> dict:
        return {"/".join(k): v for k, v in sorted(self._data.items())}

    @classmethod
    def from_document(cls, doc: dict) -> "ParamStore":
        store = cls()
        for k, v in doc.items():
            store.set(k, v)
        return store

    def write(self, path) -> None:
        Path(path).write_bytes(canonical_bytes(self.to_document()))

    @classmethod
    def read(cls, path) -> "ParamStore":
        return cls.from_document(json.loads(Path(path).read_text("utf-8")))


@dataclass(frozen=True)
class SceneArchive:
    """A versioned scene document plus its canonical byte form."""

    doc: dict

    @property
    def schema(self) -> str:
        return self.doc.get("schema", "")

    def to_bytes(self) -> bytes:
        return canonical_bytes(self.doc)

    def write(self, path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def from_bytes(cls, data: bytes) -> "SceneArchive":
        return cls(json.loads(data.decode("utf-8")))

    @classmethod
    def read(cls, path) -> "SceneArchive":
        return cls.from_bytes(Path(path).read_bytes())


def save_scene(scene) -> SceneArchive:
    """Every registered figure contributes its parameters, groups delegating
    to their elements the same way registration recurses."""
    return SceneArchive(scene.to_doc())


def load_scene(archive: SceneArchive, scene):
    """Apply an archive onto a construction-time roster scene.

    The roster must present the same figures in the same order as when the
    archive was saved; any count or class-tag mismatch rejects the load with
    the first mismatching path.  Unknown document fields are ignored.
    """
    if archive.schema != SCHEMA:
        raise LoadError(f"schema: expected {SCHEMA!r}, archive has {archive.schema!r}")
    scene.apply_doc(archive.doc)
    return scene
