"""On-disk cache for Kostka tables and verification reports.

The cache directory comes from the CSF_CACHE_DIR environment variable
(which overrides the --cache-dir flag) or the flag; with neither set,
nothing touches disk.  Cached Kostka entries only ever extend the
in-memory memo, so cold and warm runs produce identical output.
"""

from __future__ import annotations

import json
import os

from .tableaux import kostka_memo_export, kostka_memo_import

KOSTKA_JSON_VERSION = "kostka-v1"


def resolve_cache_dir(flag_value: str | None) -> str | None:
    return os.environ.get("CSF_CACHE_DIR") or flag_value or None


def kostka_path(cache_dir: str) -> str:
    return os.path.join(cache_dir, "kostka.json")


def load_kostka(cache_dir: str) -> int:
    """Merge a cached Kostka table into the memo; returns entries added."""
    path = kostka_path(cache_dir)
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != KOSTKA_JSON_VERSION:
        return 0
    return kostka_memo_import(data.get("entries", []))


def save_kostka(cache_dir: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = kostka_path(cache_dir)
    payload = {"version": KOSTKA_JSON_VERSION, "entries": kostka_memo_export()}
    with open(path, "w") as fh:
        json.dump(payload, fh)
    return path


def save_report(cache_dir: str, n: int, report_dict: dict) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, "verify-n%d.json" % n)
    with open(path, "w") as fh:
        json.dump(report_dict, fh, indent=1)
    return path
