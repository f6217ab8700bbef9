"""Prompt construction and a resilient chat-completion client.

Prompts are fixed Chinese templates, one per task, rendered byte-stably
so responses can be cached by content hash.  The client speaks the
OpenAI-compatible chat API (POST {base_url}/v1/chat/completions) with
exponential-backoff retries and an append-only JSONL response cache.

The template text is versioned: bump TEMPLATE_VERSION on any template
edit so stale cache entries stop matching.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

import requests

TEMPLATE_VERSION = "1"


class TaskKind(Enum):
    DIRECT = "direct"
    PYGEC = "pygec"
    PINYIN_TO_TEXT = "pinyin_to_text"
    TEXT_TO_PINYIN = "text_to_pinyin"
    RERANK = "rerank"


# Spacing is load-bearing: an ASCII space follows the Direct instruction
# and separates the PyGec hypothesis from the 拼音 label; the conversion
# tasks have none.
_DIRECT_TEMPLATE = "请改正转录文本。 转录文本：{hypothesis}"
_PYGEC_TEMPLATE = (
    "请根据转录文本的拼音，改正转录文本。（注意同音词的错误）"
    "转录文本：{hypothesis} 拼音：{pinyin}"
)
_P2T_TEMPLATE = "请将拼音转化为文本。拼音：{pinyin}"
_T2P_TEMPLATE = "请将文本转化为拼音。文本：{reference}"
_RERANK_TEMPLATE = "请从以下候选纠正结果中选出最好的一个，只回答对应的编号。转录文本：{hypothesis}\n{numbered}"

_ANSWER_LABELS = ("转录文本：", "文本：", "拼音：")


class PromptError(ValueError):
    """A slot required by the task is missing, or an extraneous one given."""


def build_prompt(
    task: TaskKind,
    hypothesis: Optional[str] = None,
    pinyin: Optional[str] = None,
    reference: Optional[str] = None,
    candidates: Optional[Sequence[str]] = None,
) -> str:
    """Render the exact template for `task`.

    Slot presence is checked both ways: a missing required slot and a
    slot the task has no use for are equally errors, so call sites
    cannot silently feed data the prompt ignores.
    """
    slots = {
        "hypothesis": hypothesis,
        "pinyin": pinyin,
        "reference": reference,
        "candidates": candidates,
    }
    required = {
        TaskKind.DIRECT: ("hypothesis",),
        TaskKind.PYGEC: ("hypothesis", "pinyin"),
        TaskKind.PINYIN_TO_TEXT: ("pinyin",),
        TaskKind.TEXT_TO_PINYIN: ("reference",),
        TaskKind.RERANK: ("hypothesis", "candidates"),
    }[task]
    for name in required:
        if slots[name] is None:
            raise PromptError(f"{task.value} prompt needs {name}")
    for name, value in slots.items():
        if value is not None and name not in required:
            raise PromptError(f"{task.value} prompt does not take {name}")
    if task is TaskKind.DIRECT:
        return _DIRECT_TEMPLATE.format(hypothesis=hypothesis)
    if task is TaskKind.PYGEC:
        return _PYGEC_TEMPLATE.format(hypothesis=hypothesis, pinyin=pinyin)
    if task is TaskKind.PINYIN_TO_TEXT:
        return _P2T_TEMPLATE.format(pinyin=pinyin)
    if task is TaskKind.TEXT_TO_PINYIN:
        return _T2P_TEMPLATE.format(reference=reference)
    if not candidates:
        raise PromptError("rerank prompt needs at least one candidate")
    numbered = "\n".join(f"{i}. {c}" for i, c in enumerate(candidates, start=1))
    return _RERANK_TEMPLATE.format(hypothesis=hypothesis, numbered=numbered)


def extract_answer(raw: str) -> str:
    """Strip whitespace and one leading task label, if the model parroted
    one back."""
    text = raw.strip()
    for label in _ANSWER_LABELS:
        if text.startswith(label):
            text = text[len(label):].strip()
            break
    return text


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model: str
    api_key_env: str = "PYGEC_API_KEY"
    temperature: float = 0.0
    max_tokens: int = 256
    timeout_s: float = 30.0
    max_retries: int = 3
    backoff_s: float = 0.1
    max_concurrency: int = 4

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if self.max_concurrency < 1:
            raise ValueError("max_concurrency must be >= 1")


class EndpointError(RuntimeError):
    """Request failed after exhausting retries, or a non-retryable 4xx."""


def cache_key(model: str, task: TaskKind, prompt: str) -> str:
    payload = "\x00".join([model, task.value, TEMPLATE_VERSION, prompt])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ResponseCache:
    """Append-only JSONL response store, safe for concurrent writers
    within one process.

    Later entries for the same key win on load, so re-recording after a
    template bump needs no compaction.
    """

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._entries: dict[str, str] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    row = json.loads(line)
                    self._entries[row["key"]] = row["response"]

    def get(self, key: str) -> Optional[str]:
        with self._lock:
            return self._entries.get(key)

    def put(self, key: str, response: str, task: TaskKind, model: str) -> None:
        row = {"key": key, "task": task.value, "model": model, "response": response}
        line = json.dumps(row, ensure_ascii=False)
        with self._lock:
            self._entries[key] = response
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


class ChatClient:
    """Single-turn chat requests with retry on transport errors and 5xx."""

    def __init__(self, config: EndpointConfig, session: Optional[requests.Session] = None):
        self.config = config
        self.session = session or requests.Session()

    def _headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        key = os.environ.get(self.config.api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        return headers

    def complete(self, prompt: str) -> str:
        url = self.config.base_url.rstrip("/") + "/v1/chat/completions"
        body = {
            "model": self.config.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.config.temperature,
            "max_tokens": self.config.max_tokens,
        }
        last_error: Exception | None = None
        for attempt in range(self.config.max_retries + 1):
            if attempt:
                time.sleep(self.config.backoff_s * 2 ** (attempt - 1))
            try:
                resp = self.session.post(
                    url, json=body, headers=self._headers(), timeout=self.config.timeout_s
                )
            except requests.RequestException as exc:
                last_error = exc
                continue
            if resp.status_code >= 500:
                last_error = EndpointError(f"server error {resp.status_code}")
                continue
            if resp.status_code >= 400:
                raise EndpointError(f"request rejected: {resp.status_code} {resp.text[:200]}")
            try:
                return resp.json()["choices"][0]["message"]["content"]
            except (ValueError, KeyError, IndexError) as exc:
                raise EndpointError(f"malformed response: {exc}") from exc
        raise EndpointError(f"exhausted {self.config.max_retries} retries: {last_error}")


@dataclass
class CorrectionResult:
    id: str
    task: TaskKind
    raw_output: str
    text: str
    cache_hit: bool
    latency_ms: float
    failed: bool = False

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "task": self.task.value,
            "raw_output": self.raw_output,
            "text": self.text,
            "cache_hit": self.cache_hit,
            "latency_ms": round(self.latency_ms, 3),
            "failed": self.failed,
        }


@dataclass
class Corrector:
    """Drives one endpoint over utterances for a correction task.

    Pinyin for PyGec prompts is rendered from the hypothesis with the
    supplied dictionary.  On endpoint failure or empty model output the
    result is flagged failed and carries the input hypothesis, so a
    pipeline never loses an utterance.
    """

    client: ChatClient
    cache: ResponseCache
    pdict: object = None
    system_prompt: Optional[str] = None

    def prompt_for(self, utterance, task: TaskKind) -> str:
        from pygec.pinyin import pinyin_of

        if task is TaskKind.DIRECT:
            return build_prompt(task, hypothesis=self._hyp(utterance))
        if task is TaskKind.PYGEC:
            hyp = self._hyp(utterance)
            if self.pdict is None:
                raise PromptError("pygec task needs a pinyin dictionary")
            return build_prompt(task, hypothesis=hyp, pinyin=pinyin_of(hyp, self.pdict))
        if task is TaskKind.PINYIN_TO_TEXT:
            if self.pdict is None:
                raise PromptError("pinyin_to_text task needs a pinyin dictionary")
            return build_prompt(task, pinyin=pinyin_of(self._hyp(utterance), self.pdict))
        if task is TaskKind.TEXT_TO_PINYIN:
            return build_prompt(task, reference=utterance.reference)
        raise PromptError(f"batch correction does not drive task {task.value}")

    @staticmethod
    def _hyp(utterance) -> str:
        return utterance.hypothesis if utterance.hypothesis is not None else utterance.reference

    def correct(self, utterance, task: TaskKind) -> CorrectionResult:
        prompt = self.prompt_for(utterance, task)
        key = cache_key(self.client.config.model, task, prompt)
        start = time.monotonic()
        cached = self.cache.get(key)
        if cached is not None:
            raw = cached
            hit = True
        else:
            raw = self.client.complete(prompt)
            self.cache.put(key, raw, task, self.client.config.model)
            hit = False
        latency = (time.monotonic() - start) * 1000.0
        text = extract_answer(raw)
        if not text:
            return CorrectionResult(
                id=utterance.id, task=task, raw_output=raw, text=self._hyp(utterance),
                cache_hit=hit, latency_ms=latency, failed=True,
            )
        return CorrectionResult(
            id=utterance.id, task=task, raw_output=raw, text=text,
            cache_hit=hit, latency_ms=latency,
        )

    def batch_correct(self, utterances, task: TaskKind) -> list[CorrectionResult]:
        """All utterances under one task, in input order.

        Endpoint failures for individual items become flagged fallback
        results (text = hypothesis) instead of aborting the batch.
        """
        from concurrent.futures import ThreadPoolExecutor

        if not utterances:
            return []

        def run(item):
            index, utt = item
            try:
                return index, self.correct(utt, task)
            except EndpointError as exc:
                fallback = CorrectionResult(
                    id=utt.id, task=task, raw_output=f"<error: {exc}>",
                    text=self._hyp(utt), cache_hit=False, latency_ms=0.0, failed=True,
                )
                return index, fallback

        results: list[Optional[CorrectionResult]] = [None] * len(utterances)
        workers = min(self.client.config.max_concurrency, len(utterances))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for index, result in pool.map(run, enumerate(utterances)):
                results[index] = result
        return results


def failure_rate(results: Sequence[CorrectionResult]) -> float:
    if not results:
        return 0.0
    return sum(1 for r in results if r.failed) / len(results)
