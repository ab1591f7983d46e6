"""External LLM client contract used by quiz construction and evaluation.

Prompt templates ship as versioned resource files with {name} placeholders;
`llm_exchange` fills a template and hands it to whatever client the caller
configures. The package never requires a live endpoint: the HTTP client is
one implementation of the one-method contract, and tests substitute mocks.
"""

from __future__ import annotations

import json
import re
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from typing import Protocol

__all__ = [
    "TEMPLATE_IDS",
    "LlmTransportError",
    "LlmReplyError",
    "PromptTemplate",
    "load_template",
    "LlmClient",
    "LlmClientConfig",
    "HttpLlmClient",
    "llm_exchange",
]

TEMPLATE_IDS = (
    "quiz_extraction",
    "quiz_refinement",
    "quiz_generation",
    "slide_extraction",
    "quiz_evaluation",
)

_PLACEHOLDER = re.compile(r"\{([a-z_]+)\}")


class LlmTransportError(RuntimeError):
    """Endpoint unreachable, timed out, or returned a non-success status."""


class LlmReplyError(ValueError):
    """The endpoint replied, but the reply cannot be interpreted."""


@dataclass(frozen=True)
class PromptTemplate:
    id: str
    text: str

    @property
    def placeholders(self) -> tuple:
        return tuple(sorted(set(_PLACEHOLDER.findall(self.text))))

    def render(self, substitutions: dict) -> str:
        """Fill every placeholder; unfilled or unknown names are errors."""
        missing = [p for p in self.placeholders if p not in substitutions]
        if missing:
            raise ValueError(f"template {self.id!r}: missing substitutions for {missing}")
        unknown = [k for k in substitutions if k not in self.placeholders]
        if unknown:
            raise ValueError(f"template {self.id!r}: unknown substitutions {unknown}")
        out = self.text
        for key, value in substitutions.items():
            out = out.replace("{" + key + "}", str(value))
        return out


def load_template(template_id: str) -> PromptTemplate:
    if template_id not in TEMPLATE_IDS:
        raise ValueError(f"unknown template {template_id!r}; available: {TEMPLATE_IDS}")
    text = resources.files("deckeval.resources").joinpath(f"prompts/{template_id}.txt").read_text("utf-8")
    return PromptTemplate(id=template_id, text=text)


class LlmClient(Protocol):
    def complete(self, prompt: str) -> str: ...


@dataclass(frozen=True)
class LlmClientConfig:
    endpoint_url: str
    api_key: str = ""
    timeout: float = 60.0
    max_retries: int = 2
    retry_wait: float = 1.0
    parallel_requests: int = 1


class HttpLlmClient:
    """POSTs {"prompt": ...} as JSON and returns the reply's "text" field."""

    def __init__(self, config: LlmClientConfig):
        self.config = config

    def complete(self, prompt: str) -> str:
        body = json.dumps({"prompt": prompt}).encode("utf-8")
        headers = {"Content-Type": "application/json"}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        last_error = None
        for attempt in range(self.config.max_retries + 1):
            request = urllib.request.Request(self.config.endpoint_url, data=body, headers=headers)
            try:
                with urllib.request.urlopen(request, timeout=self.config.timeout) as reply:
                    raw = reply.read().decode("utf-8")
                break
            except (urllib.error.URLError, TimeoutError, OSError) as exc:
                last_error = exc
                if attempt < self.config.max_retries:
                    time.sleep(self.config.retry_wait)
        else:
            raise LlmTransportError(
                f"endpoint {self.config.endpoint_url} unreachable after "
                f"{self.config.max_retries + 1} attempts: {last_error}"
            )
        try:
            obj = json.loads(raw)
            return str(obj["text"])
        except (json.JSONDecodeError, KeyError, TypeError):
            raise LlmReplyError("endpoint reply is not a JSON object with a 'text' field") from None


def llm_exchange(template_id: str, substitutions: dict, client: LlmClient) -> str:
    """Fill a prompt template and return the client's raw reply text."""
    template = load_template(template_id)
    return client.complete(template.render(substitutions))
