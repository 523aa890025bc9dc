"""On-disk census cache.

One JSON object per line.  The first line is a header
``{"format": ..., "N": ..., "d": ..., "classes": ...}``; every further line
is one graph class ``{"code", "aut", "labels", "edges"}``.  Files are
written with fixed key order and separators so that reading and
rewriting a file reproduces it byte for byte.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import IO, Iterable, Iterator

from .census import ColoredTree, GraphClass, enumerate_graphs

FORMAT_VERSION = "contact-curves-census/1"
CACHE_ENV = "CONTACT_CURVES_CACHE"


class CacheFormatError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def dump_census(N: int, d: int, classes: Iterable[GraphClass], fh: IO[str]) -> None:
    classes = list(classes)
    fh.write(_dumps({"format": FORMAT_VERSION, "N": N, "d": d, "classes": len(classes)}))
    fh.write("\n")
    for g in classes:
        record = {
            "code": g.code,
            "aut": g.aut_order,
            "labels": list(g.tree.labels),
            "edges": [list(e) for e in g.tree.edges],
        }
        fh.write(_dumps(record))
        fh.write("\n")


def iter_census(fh: IO[str]) -> tuple[dict, Iterator[GraphClass]]:
    """Parse the header eagerly and return a lazy iterator over the classes."""
    first = fh.readline()
    try:
        header = json.loads(first)
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"unreadable census header: {first!r}") from exc
    if header.get("format") != FORMAT_VERSION:
        raise CacheFormatError(f"unsupported census format {header.get('format')!r}")
    N = header["N"]

    def records() -> Iterator[GraphClass]:
        count = 0
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            tree = ColoredTree(tuple(rec["labels"]), tuple(map(tuple, rec["edges"])), N)
            count += 1
            yield GraphClass(tree, rec["aut"], rec["code"])
        if count != header["classes"]:
            raise CacheFormatError(f"expected {header['classes']} classes, read {count}")

    return header, records()


def load_census(path: str | os.PathLike) -> tuple[dict, list[GraphClass]]:
    with open(path, encoding="utf-8") as fh:
        header, it = iter_census(fh)
        return header, list(it)


def save_census(path: str | os.PathLike, N: int, d: int, classes: Iterable[GraphClass]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        dump_census(N, d, classes, fh)
    os.replace(tmp, path)


def cache_dir() -> Path | None:
    """Directory named by ``$CONTACT_CURVES_CACHE``, or None when caching is off."""
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def census_path(directory: str | os.PathLike, N: int, d: int) -> Path:
    return Path(directory) / f"census-N{N}-d{d}.jsonl"


def cached_graphs(N: int, d: int, directory: str | os.PathLike | None = None) -> list[GraphClass]:
    """Census for (N, d), read from the cache directory when possible.

    Without a directory argument the environment variable is consulted; if
    neither is set the census is computed in memory.
    """
    directory = directory if directory is not None else cache_dir()
    if directory is None:
        return enumerate_graphs(N, d)
    path = census_path(directory, N, d)
    if path.exists():
        try:
            header, classes = load_census(path)
            if header["N"] == N and header["d"] == d:
                return classes
        except (CacheFormatError, KeyError, ValueError):
            pass  # stale or foreign file; rebuild below
    classes = enumerate_graphs(N, d)
    save_census(path, N, d, classes)
    return classes
