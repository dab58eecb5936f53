"""Headless driver: build sample scenes, replay scripts, diff snapshots.

Exit codes: 0 clean, 1 semantic failure (dropped events, differing
snapshots, unreadable inputs), 2 usage error.  The UDAPP_SEED environment
variable is reserved for future randomized-test drivers and is not read yet.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .persistence import SCHEMA, LoadError, SceneArchive, canonical_bytes, load_scene
from .samples import SAMPLES, build_sample, sample_names
from .session import InteractionScript, Scene


def _write_output(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data + b"\n")
    else:
        sys.stdout.buffer.write(data + b"\n")


def _load_scene_arg(source: str) -> Scene:
    """A scene source is a built-in sample name or an archive path."""
    if source in SAMPLES:
        return build_sample(source)
    path = Path(source)
    if not path.exists():
        raise LoadError(f"no such sample or archive: {source}")
    archive = SceneArchive.read(path)
    name = archive.doc.get("window", {}).get("scene", "")
    if name not in SAMPLES:
        raise LoadError(f"archive names unknown scene {name!r}; cannot "
                        f"rebuild its construction roster")
    scene = build_sample(name)
    load_scene(archive, scene)
    return scene


def _load_script_arg(source: str) -> InteractionScript:
    if source.startswith("golden:"):
        name = source.split(":", 1)[1]
        ref = resources.files("udapp").joinpath(f"data/scripts/{name}.jsonl")
        return InteractionScript.from_jsonl(ref.read_text("utf-8"))
    return InteractionScript.read(source)


def cmd_sample(args) -> int:
    if args.name not in SAMPLES:
        print(f"unknown sample {args.name!r}", file=sys.stderr)
        print("known samples: " + ", ".join(sample_names()), file=sys.stderr)
        return 2
    scene = build_sample(args.name)
    _write_output(scene.snapshot().data, args.output)
    return 0


def cmd_replay(args) -> int:
    try:
        scene = _load_scene_arg(args.scene)
    except (LoadError, json.JSONDecodeError) as exc:
        print(f"replay: cannot load scene: {exc}", file=sys.stderr)
        return 1
    try:
        script = _load_script_arg(args.script)
    except (FileNotFoundError, ValueError) as exc:
        print(f"replay: cannot read script: {exc}", file=sys.stderr)
        return 1
    snapshot, report = scene.replay(script)
    _write_output(snapshot.data, args.output)
    print(f"replay: {report['applied']}/{report['events']} events applied, "
          f"{report['changed']} changed, {len(report['dropped'])} dropped",
          file=sys.stderr)
    for drop in report["dropped"]:
        print(f"replay: dropped event {drop['index']}: {drop['reason']}",
              file=sys.stderr)
    print(f"snapshot: sha256 {snapshot.hash}", file=sys.stderr)
    return 1 if report["dropped"] else 0


def _walk(doc, path=""):
    if isinstance(doc, dict):
        for key in sorted(doc):
            yield from _walk(doc[key], f"{path}/{key}" if path else key)
    elif isinstance(doc, list):
        for i, item in enumerate(doc):
            yield from _walk(item, f"{path}/{i}")
    else:
        yield path, doc


def cmd_diff(args) -> int:
    docs = []
    for source in (args.a, args.b):
        try:
            docs.append(json.loads(Path(source).read_bytes()))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"diff: cannot parse {source}: {exc}", file=sys.stderr)
            return 1
    a, b = docs
    if a.get("schema") != b.get("schema"):
        print(f"schema: {a.get('schema')!r} != {b.get('schema')!r}")
        return 1
    flat_a = dict(_walk(a))
    flat_b = dict(_walk(b))
    differences = 0
    for path in sorted(set(flat_a) | set(flat_b)):
        if path not in flat_a:
            print(f"{path}: <absent> != {flat_b[path]!r}")
        elif path not in flat_b:
            print(f"{path}: {flat_a[path]!r} != <absent>")
        elif flat_a[path] != flat_b[path]:
            print(f"{path}: {flat_a[path]!r} != {flat_b[path]!r}")
        else:
            continue
        differences += 1
    return 1 if differences else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udapp",
        description="Deterministic direct-manipulation engine driver.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_sample = sub.add_parser("sample", help="emit a built-in sample scene archive")
    p_sample.add_argument("name")
    p_sample.add_argument("-o", "--output", default=None)
    p_sample.set_defaults(func=cmd_sample)

    p_replay = sub.add_parser("replay", help="apply a script to a scene; "
                                             "emit the final snapshot")
    p_replay.add_argument("scene", help="sample name or archive path")
    p_replay.add_argument("script", help="script path or golden:<name>")
    p_replay.add_argument("-o", "--output", default=None)
    p_replay.set_defaults(func=cmd_replay)

    p_diff = sub.add_parser("diff", help="field-level diff of two snapshots")
    p_diff.add_argument("a")
    p_diff.add_argument("b")
    p_diff.set_defaults(func=cmd_diff)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
