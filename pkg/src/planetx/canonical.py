"""Canonical JSON serialization and hashing.

Every hash in the package (match content hash, log hash, state digests) is
SHA-256 over this canonical form: sorted keys, compact separators, ASCII
only.  Same logical document always produces the same bytes, so hashes are
stable across runs and processes.
"""

import hashlib
import json
from typing import Any


def canonical_json(obj: Any) -> str:
    """Serialize to the canonical JSON form used for hashing."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def hash_documents(docs: list) -> str:
    """Hash a sequence of JSON documents: concatenated canonical forms, newline-delimited."""
    h = hashlib.sha256()
    for doc in docs:
        h.update(canonical_json(doc).encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()
