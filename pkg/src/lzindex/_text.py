"""Text representation helpers.

Texts and patterns are sequences of integer symbols >= 1. Internally we keep
numpy int64 arrays for indexing math and a bytes shadow (when all symbols fit
in a byte) so scanning oracles can run at C speed.
"""

from __future__ import annotations

import numpy as np


def to_symbols(text) -> np.ndarray:
    """Coerce bytes / sequence of ints to an int64 numpy array."""
    if isinstance(text, np.ndarray):
        return text.astype(np.int64, copy=False)
    if isinstance(text, (bytes, bytearray)):
        return np.frombuffer(bytes(text), dtype=np.uint8).astype(np.int64)
    return np.asarray(list(text), dtype=np.int64)


def to_bytes_if_possible(arr: np.ndarray) -> bytes | None:
    if len(arr) == 0 or (arr.min() >= 0 and arr.max() <= 255):
        return arr.astype(np.uint8).tobytes()
    return None
