"""Input checks shared by the estimator facade and the builder."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import InvalidAlpha
from .graph import BACKENDS, MIN_ALPHA
from .text import Rlbwt


def check_alpha(alpha) -> int:
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < MIN_ALPHA:
        raise InvalidAlpha(f"alpha must be an integer >= {MIN_ALPHA}, got {alpha!r}")
    return alpha


def check_backend(backend) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}, got {backend!r}")
    return backend


def check_text(text) -> bytes:
    """Accept bytes-like input only; ``str`` needs an explicit encoding."""
    if isinstance(text, str):
        raise TypeError("text must be bytes-like; encode str input first")
    try:
        return bytes(memoryview(text))
    except TypeError as exc:
        raise TypeError(f"expected a bytes-like object, got {type(text).__name__}") from exc


def check_texts(texts) -> list[bytes]:
    if isinstance(texts, (bytes, bytearray, memoryview, str)) or not isinstance(texts, Iterable):
        raise TypeError("expected a sequence of bytes-like texts")
    return [check_text(t) for t in texts]


def check_rlbwts(items) -> list[Rlbwt]:
    out = []
    for item in items:
        if not isinstance(item, Rlbwt):
            raise TypeError(f"expected Rlbwt, got {type(item).__name__}")
        out.append(item)
    return out
