"""In-process OpenAI-compatible fixture endpoint for tests and demos.

Serves POST /v1/chat/completions on an ephemeral localhost port.  The
reply is computed from the prompt by a pluggable function; built-in
modes echo the hypothesis slot back ("echo") or look the reference up
from a prompt-slot mapping ("reference").  Transient-failure injection
deterministically fails the FIRST attempt for a fixed fraction of
prompts (keyed by prompt hash), so a client with at least one retry
always completes.

Not a public pipeline stage: real runs point base_url at an actual
server.  Tests also use the request log and the high-water in-flight
counter this server keeps.
"""

from __future__ import annotations

import hashlib
import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable, Optional


def extract_hypothesis_slot(prompt: str) -> str:
    """Pull the filled slot back out of any task template."""
    marker = "转录文本："
    if marker in prompt:
        text = prompt.rsplit(marker, 1)[1]
        for stop in (" 拼音：", "\n"):
            if stop in text:
                text = text.split(stop, 1)[0]
        return text
    for marker in ("拼音：", "文本："):
        if marker in prompt:
            return prompt.rsplit(marker, 1)[1]
    return prompt


class MockEndpoint:
    def __init__(
        self,
        reply_fn: Optional[Callable[[str], str]] = None,
        reference_map: Optional[dict[str, str]] = None,
        transient_fail_rate: float = 0.0,
        latency_s: float = 0.0,
    ):
        """reply_fn wins if given; else reference_map lookup by the
        prompt's hypothesis slot (missing -> echo); else plain echo."""
        if reply_fn is not None:
            self.reply_fn = reply_fn
        elif reference_map is not None:
            self.reply_fn = lambda p: reference_map.get(
                extract_hypothesis_slot(p), extract_hypothesis_slot(p)
            )
        else:
            self.reply_fn = extract_hypothesis_slot
        self.transient_fail_rate = transient_fail_rate
        self.latency_s = latency_s
        self.log: list[str] = []
        self.max_in_flight = 0
        self._in_flight = 0
        self._failed_once: set[str] = set()
        self._lock = threading.Lock()
        self._server: Optional[ThreadingHTTPServer] = None
        self._thread: Optional[threading.Thread] = None

    def _should_fail(self, prompt: str) -> bool:
        if self.transient_fail_rate <= 0.0:
            return False
        digest = hashlib.sha256(prompt.encode("utf-8")).digest()
        selected = digest[0] / 256.0 < self.transient_fail_rate
        if not selected:
            return False
        with self._lock:
            if prompt in self._failed_once:
                return False
            self._failed_once.add(prompt)
            return True

    def start(self) -> str:
        endpoint = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):
                pass

            def do_POST(self):
                if self.path != "/v1/chat/completions":
                    self.send_error(404)
                    return
                length = int(self.headers.get("Content-Length", "0"))
                body = json.loads(self.rfile.read(length))
                prompt = body["messages"][-1]["content"]
                with endpoint._lock:
                    endpoint.log.append(prompt)
                    endpoint._in_flight += 1
                    endpoint.max_in_flight = max(endpoint.max_in_flight, endpoint._in_flight)
                try:
                    if endpoint.latency_s:
                        import time

                        time.sleep(endpoint.latency_s)
                    if endpoint._should_fail(prompt):
                        self.send_error(503, "injected transient failure")
                        return
                    reply = endpoint.reply_fn(prompt)
                    payload = json.dumps(
                        {"choices": [{"message": {"role": "assistant", "content": reply}}]},
                        ensure_ascii=False,
                    ).encode("utf-8")
                    self.send_response(200)
                    self.send_header("Content-Type", "application/json")
                    self.send_header("Content-Length", str(len(payload)))
                    self.end_headers()
                    self.wfile.write(payload)
                finally:
                    with endpoint._lock:
                        endpoint._in_flight -= 1

        self._server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)
        self._thread.start()
        host, port = self._server.server_address
        return f"http://{host}:{port}"

    def stop(self) -> None:
        if self._server is not None:
            self._server.shutdown()
            self._server.server_close()
            self._server = None

    def __enter__(self) -> str:
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()
