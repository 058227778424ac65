"""Canonical JSON document for codes.

::

    {
      "format_version": 1,
      "q": 2,
      "s": 3,
      "r": 1,
      "codewords": [
        [0, 0, 0],
        [1, 1, 1]
      ]
    }

Each codeword is the row-major list of its ``s * r`` entries.  The list is
sorted lexicographically and free of duplicates; readers reject anything
else, so a file has exactly one valid spelling per code.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .codes import Code
from .core import NrtMatrix

FORMAT_VERSION = 1


class CodeFileError(ValueError):
    pass


def dumps(code: Code) -> str:
    lines = [
        "{",
        f'  "format_version": {FORMAT_VERSION},',
        f'  "q": {code.q},',
        f'  "s": {code.s},',
        f'  "r": {code.r},',
        '  "codewords": [',
    ]
    words = [json.dumps(list(w.flat()), separators=(", ", ": ")) for w in code.words]
    lines.extend(f"    {w}," for w in words[:-1])
    lines.append(f"    {words[-1]}")
    lines.extend(["  ]", "}"])
    return "\n".join(lines) + "\n"


def loads(text: str) -> Code:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CodeFileError("top level must be an object")
    expected = {"format_version", "q", "s", "r", "codewords"}
    if set(doc) != expected:
        raise CodeFileError(f"fields must be exactly {sorted(expected)}, got {sorted(doc)}")
    if doc["format_version"] != FORMAT_VERSION:
        raise CodeFileError(f"unsupported format_version {doc['format_version']!r}")
    q, s, r = doc["q"], doc["s"], doc["r"]
    for name, value, low in (("q", q, 2), ("s", s, 1), ("r", r, 1)):
        if not isinstance(value, int) or isinstance(value, bool) or value < low:
            raise CodeFileError(f"{name} must be an integer >= {low}, got {value!r}")
    words = doc["codewords"]
    if not isinstance(words, list) or not words:
        raise CodeFileError("codewords must be a non-empty list")
    flat = []
    for w in words:
        if not isinstance(w, list) or len(w) != s * r:
            raise CodeFileError(f"each codeword must list exactly {s * r} digits: {w!r}")
        for d in w:
            if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < q:
                raise CodeFileError(f"digit {d!r} outside [0, {q})")
        flat.append(tuple(w))
    if flat != sorted(set(flat)):
        raise CodeFileError("codewords must be sorted lexicographically with no duplicates")
    return Code(q, s, r, tuple(NrtMatrix.from_flat(q, s, r, w) for w in flat))


def write_code_file(path: Union[str, Path], code: Code) -> None:
    Path(path).write_text(dumps(code), encoding="utf-8")


def read_code_file(path: Union[str, Path]) -> Code:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc}") from exc
    return loads(text)
