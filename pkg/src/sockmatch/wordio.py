"""Parsing and serialization of words, matchings, traces and result tables.

Words are parsed into tuples of nonnegative ints. In the compact format the
letters ``A..Z`` map to ``0..25``; in the integer-token format the token ``t``
maps to ``t - 1``. Rendering inverts the same maps, so the round trip is exact.
"""

from __future__ import annotations

import csv
import enum
import json
import re
from fractions import Fraction
from typing import IO, Any, Iterable, Mapping, Sequence

from .core import DyckTrace, GaussWord, OrderedMatching, Word, letter_name


class WordFormat(enum.Enum):
    COMPACT = "compact"
    TOKENS = "tokens"


class WordParseError(ValueError):
    pass


_TOKEN = re.compile(r"[1-9][0-9]*")


def guess_format(text: str) -> WordFormat:
    return WordFormat.TOKENS if any(c.isdigit() for c in text) else WordFormat.COMPACT


def parse_word(text: str, fmt: WordFormat | str | None = None) -> Word:
    text = text.strip()
    if not text:
        raise WordParseError("empty input")
    if fmt is None:
        fmt = guess_format(text)
    fmt = WordFormat(fmt)
    if fmt is WordFormat.COMPACT:
        for c in text:
            if not ("A" <= c <= "Z"):
                raise WordParseError(f"invalid character {c!r} in compact word")
        return Word(tuple(ord(c) - ord("A") for c in text))
    tokens = text.split()
    for t in tokens:
        if not _TOKEN.fullmatch(t):
            raise WordParseError(f"invalid token {t!r}; expected a positive integer")
    return Word(tuple(int(t) - 1 for t in tokens))


def parse_gauss_word(text: str, r: int, fmt: WordFormat | str | None = None) -> GaussWord:
    return GaussWord.from_word(parse_word(text, fmt), r)


def format_word(w: Word | Sequence[int], fmt: WordFormat | str | None = None) -> str:
    """Render a word; compact when every letter is below 26 unless told otherwise."""
    letters = tuple(w.letters if isinstance(w, Word) else w)
    if letters and not all(isinstance(c, int) and c >= 0 for c in letters):
        letters = tuple(w.canonical().letters if isinstance(w, Word) else Word(letters).canonical().letters)
    if fmt is None:
        fmt = WordFormat.COMPACT if all(c < 26 for c in letters) else WordFormat.TOKENS
    fmt = WordFormat(fmt)
    if fmt is WordFormat.COMPACT:
        return "".join(letter_name(c) for c in letters)
    return " ".join(str(c + 1) for c in letters)


def format_matching(m: OrderedMatching) -> str:
    return " ".join("{" + ",".join(map(str, b)) + "}" for b in m.blocks)


def format_trace(t: DyckTrace | Sequence[int]) -> str:
    steps = t.steps if isinstance(t, DyckTrace) else t
    return "(" + ",".join(str(s) for s in steps) + ")"


def format_exact(x: Any) -> Any:
    """Integers stay integers, non-integral fractions become ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _cell(x: Any) -> str:
    x = format_exact(x)
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (tuple, list)):
        return " ".join(str(format_exact(v)) for v in x)
    return str(x)


def _jsonable(x: Any) -> Any:
    x = format_exact(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Mapping):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return x


def emit_table(
    rows: Iterable[Mapping[str, Any]],
    sink: IO[str],
    fmt: str = "csv",
    columns: Sequence[str] | None = None,
) -> None:
    """Write homogeneous records as CSV (header + LF rows) or a JSON array."""
    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        if not columns:
            return
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
    elif fmt == "json":
        payload = [{c: _jsonable(row[c]) for c in columns} for row in rows]
        sink.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        raise ValueError(f"unknown table format {fmt!r}")


def emit_object(obj: Mapping[str, Any], sink: IO[str]) -> None:
    sink.write(json.dumps(_jsonable(obj), separators=(",", ":")) + "\n")
