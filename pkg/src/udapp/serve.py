"""Development bridge for the browser demo.

Hosts one scene behind a tiny JSON API so a canvas frontend can drive the
engine with pointer and command events and render from snapshots.  Every
applied event is recorded; the session exports as a script that replays
headlessly to the same snapshot hash.

    python -m udapp.serve [--port 8787] [--root frontend/dist]

Endpoints (all JSON unless noted):
    GET  /api/samples            {"samples": [names]}
    POST /api/scene              {"sample": name} | {"archive": doc}
    GET  /api/snapshot           {"doc": .., "hash": ..}
    POST /api/event              pointer event wire form
    POST /api/cmd                {"name": .., "args": {..}}
    GET  /api/probe?x=..&y=..    hit info or null
    GET  /api/script             recorded session, JSONL (text/plain)
"""

from __future__ import annotations

import argparse
import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .geometry import Point2D
from .persistence import LoadError, SceneArchive, load_scene
from .samples import build_sample, sample_names
from .session import CommandError, IllegalEvent, Scene


class EngineHost:
    """One scene plus the recorded event log."""

    def __init__(self) -> None:
        self.scene: Scene | None = None
        self.recorded: list[dict] = []

    def reset(self, payload: dict) -> dict:
        if "archive" in payload:
            doc = payload["archive"]
            name = doc.get("window", {}).get("scene", "")
            if name not in sample_names():
                raise LoadError(f"archive names unknown scene {name!r}")
            scene = build_sample(name)
            load_scene(SceneArchive(doc), scene)
        else:
            scene = build_sample(payload.get("sample", "years-selection"))
        self.scene = scene
        self.recorded = []
        return self.snapshot_payload(True)

    def snapshot_payload(self, changed: bool) -> dict:
        snap = self.scene.snapshot()
        return {"changed": changed, "doc": snap.doc, "hash": snap.hash}

    def apply(self, event: dict) -> dict:
        if self.scene is None:
            raise LoadError("no scene loaded")
        changed = self.scene.apply_wire_event(event)
        self.recorded.append(event)
        return self.snapshot_payload(changed)

    def script_text(self) -> str:
        return "".join(json.dumps(ev, sort_keys=True) + "\n"
                       for ev in self.recorded)


def make_handler(host: EngineHost, root: Path | None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, body: bytes,
                  content_type: str = "application/json") -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(body)

        def _send_json(self, payload, status: int = 200) -> None:
            self._send(status, json.dumps(payload).encode("utf-8"))

        def _read_json(self) -> dict:
            length = int(self.headers.get("Content-Length", 0))
            if not length:
                return {}
            return json.loads(self.rfile.read(length).decode("utf-8"))

        def do_OPTIONS(self):
            self._send(204, b"")

        def do_GET(self):
            url = urlparse(self.path)
            if url.path == "/api/samples":
                self._send_json({"samples": sample_names()})
            elif url.path == "/api/snapshot":
                if host.scene is None:
                    self._send_json({"error": "no scene loaded"}, 409)
                else:
                    self._send_json(host.snapshot_payload(False))
            elif url.path == "/api/script":
                self._send(200, host.script_text().encode("utf-8"), "text/plain")
            elif url.path == "/api/probe":
                if host.scene is None:
                    self._send_json({"error": "no scene loaded"}, 409)
                    return
                query = parse_qs(url.query)
                p = Point2D(float(query["x"][0]), float(query["y"][0]))
                self._send_json({"hit": host.scene.probe(p)})
            elif root is not None:
                self._serve_static(url.path)
            else:
                self._send_json({"error": "not found"}, 404)

        def _serve_static(self, path: str) -> None:
            rel = path.lstrip("/") or "index.html"
            target = (root / rel).resolve()
            if not str(target).startswith(str(root.resolve())) or not target.is_file():
                self._send_json({"error": "not found"}, 404)
                return
            types = {".html": "text/html", ".js": "text/javascript",
                     ".css": "text/css", ".json": "application/json"}
            self._send(200, target.read_bytes(),
                       types.get(target.suffix, "application/octet-stream"))

        def do_POST(self):
            url = urlparse(self.path)
            try:
                payload = self._read_json()
                if url.path == "/api/scene":
                    self._send_json(host.reset(payload))
                elif url.path == "/api/event":
                    self._send_json(host.apply(payload))
                elif url.path == "/api/cmd":
                    event = {"k": "cmd", "name": payload.get("name", ""),
                             "args": payload.get("args", {})}
                    self._send_json(host.apply(event))
                else:
                    self._send_json({"error": "not found"}, 404)
            except (IllegalEvent, CommandError, LoadError, KeyError,
                    ValueError) as exc:
                self._send_json({"error": str(exc)}, 400)

    return Handler


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--root", default=None,
                        help="directory of static frontend files to serve")
    args = parser.parse_args(argv)
    root = Path(args.root) if args.root else None
    server = ThreadingHTTPServer((args.host, args.port),
                                 make_handler(EngineHost(), root))
    print(f"udapp engine bridge on http://{args.host}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
