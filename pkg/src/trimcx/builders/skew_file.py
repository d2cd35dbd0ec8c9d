"""交代行列の入力ファイル

    ring x,y,z over QQ
    skew 5
    0, 0, 0, -x^2, -z^2
    ...

'#' で始まる行と空行は無視する。各行はカンマ区切りの多項式。
"""

from __future__ import annotations

import re

from pydantic import ValidationError

from trimcx.builders.matrices import SkewMatrix, SkewMatrixError
from trimcx.chain.serialization import SerializationError, format_ring_header, parse_ring_header
from trimcx.ring.polynomial import Polynomial, poly_format

_SKEW_PATTERN = re.compile(r"skew\s+(\d+)")


def load_skew_text(text: str) -> SkewMatrix:
    """交代行列ファイルの内容を読み込む

    Raises:
        SerializationError: 形式が不正な場合
        SkewMatrixError: 行列が交代行列でない場合
    """
    lines = [
        (k, line.strip())
        for k, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise SerializationError("'ring' 行と 'skew' 行が必要です", len(text.splitlines()) or 1)
    ring = parse_ring_header(lines[0][1], lines[0][0])
    number, header = lines[1]
    match = _SKEW_PATTERN.fullmatch(header)
    if not match:
        raise SerializationError(f"'skew <n>' 行が必要です: {header!r}", number)
    n = int(match.group(1))
    body = lines[2:]
    if len(body) != n:
        raise SerializationError(f"行数が一致しません: {len(body)} != {n}", number)

    rows: list[list[Polynomial | str | int]] = []
    for number, line in body:
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != n:
            raise SerializationError(f"列数が一致しません: {len(cells)} != {n}", number)
        try:
            rows.append([ring.parse(cell) for cell in cells])
        except ValueError as e:
            raise SerializationError(str(e), number) from e
    try:
        return SkewMatrix.from_rows(ring, rows)
    except ValidationError as e:
        raise SkewMatrixError(f"交代行列ではありません: {e.errors()[0]['msg']}") from e


def dump_skew_text(x: SkewMatrix) -> str:
    lines = [format_ring_header(x.ring), f"skew {x.size}"]
    for i in range(x.size):
        lines.append(", ".join(poly_format(x.entry(i, j)) for j in range(x.size)))
    return "\n".join(lines) + "\n"
