"""複体とBetti表の直列化

複体のテキスト形式(バージョン1):

    trimcx-complex 1
    ring x,y,z over QQ
    module 0: 0
    module 1: 2 2 2
    d 1: 1x3
    x^2, y^2, z^2

各微分の行は多項式文法で書いたカンマ区切りの成分。列数0の行列は行を書かない。
Betti表のJSONはキーをソートし、末尾に改行を付けるので再出力がバイト単位で一致する。
"""

from __future__ import annotations

import json
import re
from typing import Any

from trimcx.chain.betti import BettiTable
from trimcx.chain.complex import GradedFreeComplex, GradedFreeModule, GradedMap
from trimcx.linalg.matrices import poly_matrix
from trimcx.ring.field import CoefficientField
from trimcx.ring.polynomial import PolyRing, poly_format

FORMAT_VERSION = 1
_MAGIC = "trimcx-complex"

_RING_PATTERN = re.compile(r"ring\s+(.+?)\s+over\s+(\S+)")
_MODULE_PATTERN = re.compile(r"module\s+(\d+)\s*:(.*)")
_DIFFERENTIAL_PATTERN = re.compile(r"d\s+(\d+)\s*:\s*(\d+)x(\d+)")


class SerializationError(ValueError):
    """直列化テキストが不正な場合のエラー

    Attributes:
        line: エラー行番号(1始まり)
    """

    def __init__(self, message: str, line: int) -> None:
        self.line = line
        super().__init__(f"{message}(行 {line})")


def format_ring_header(ring: PolyRing) -> str:
    return f"ring {','.join(ring.variables)} over {ring.field.label}"


def parse_ring_header(line: str, line_number: int = 1) -> PolyRing:
    """'ring <vars> over <QQ|gf:p>' 行から環を作る(変数はカンマまたは空白区切り)"""
    match = _RING_PATTERN.fullmatch(line.strip())
    if not match:
        raise SerializationError(f"環の宣言が不正です: {line.strip()!r}", line_number)
    names = tuple(v for v in re.split(r"[,\s]+", match.group(1)) if v)
    try:
        return PolyRing(variables=names, field=CoefficientField.parse(match.group(2)))
    except ValueError as e:
        raise SerializationError(str(e), line_number) from e


def dump_complex(c: GradedFreeComplex) -> str:
    """複体をテキスト形式に変換する"""
    lines = [f"{_MAGIC} {FORMAT_VERSION}", format_ring_header(c.ring)]
    for i, module in enumerate(c.modules):
        lines.append(f"module {i}: {' '.join(str(d) for d in module.generator_degrees)}".rstrip())
    for i, d in enumerate(c.differentials, start=1):
        rows, cols = d.shape
        lines.append(f"d {i}: {rows}x{cols}")
        if cols == 0:
            continue
        dense = d.matrix.to_dense().to_list()
        for row in dense:
            lines.append(", ".join(poly_format(value) for value in row))
    return "\n".join(lines) + "\n"


def load_complex(text: str) -> GradedFreeComplex:
    """テキスト形式から複体を復元する

    Raises:
        SerializationError: 形式が不正な場合
    """
    lines = [(k, line) for k, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise SerializationError("空の入力です", 1)
    it = iter(lines)

    number, first = next(it)
    parts = first.split()
    if len(parts) != 2 or parts[0] != _MAGIC:
        raise SerializationError("先頭行は 'trimcx-complex <version>' である必要があります", number)
    if parts[1] != str(FORMAT_VERSION):
        raise SerializationError(f"未対応のバージョンです: {parts[1]}", number)

    number, header = next(it, (number + 1, ""))
    ring = parse_ring_header(header, number)

    modules: list[GradedFreeModule] = []
    differentials: list[GradedMap] = []
    pending = next(it, None)
    while pending is not None and _MODULE_PATTERN.fullmatch(pending[1].strip()):
        number, line = pending
        match = _MODULE_PATTERN.fullmatch(line.strip())
        assert match is not None
        if int(match.group(1)) != len(modules):
            raise SerializationError(f"加群の番号が連続していません: {match.group(1)}", number)
        modules.append(GradedFreeModule(generator_degrees=tuple(int(t) for t in match.group(2).split())))
        pending = next(it, None)

    while pending is not None:
        number, line = pending
        match = _DIFFERENTIAL_PATTERN.fullmatch(line.strip())
        if not match:
            raise SerializationError(f"微分の宣言が不正です: {line.strip()!r}", number)
        index, nrows, ncols = (int(g) for g in match.groups())
        if index != len(differentials) + 1 or index >= len(modules):
            raise SerializationError(f"微分の番号が不正です: {index}", number)
        rows = []
        if ncols > 0:
            for _ in range(nrows):
                row_item = next(it, None)
                if row_item is None:
                    raise SerializationError("行列の行が不足しています", number)
                number, row_line = row_item
                cells = [cell.strip() for cell in row_line.split(",")]
                if len(cells) != ncols:
                    raise SerializationError(f"列数が一致しません: {len(cells)} != {ncols}", number)
                try:
                    rows.append([ring.parse(cell) for cell in cells])
                except ValueError as e:
                    raise SerializationError(str(e), number) from e
        matrix = poly_matrix(ring, rows, ncols) if ncols > 0 else poly_matrix(ring, [[]] * nrows, 0)
        try:
            differentials.append(
                GradedMap(ring=ring, source=modules[index], target=modules[index - 1], matrix=matrix)
            )
        except ValueError as e:
            raise SerializationError(str(e), number) from e
        pending = next(it, None)

    if not modules:
        raise SerializationError("加群の宣言がありません", number)
    if len(differentials) != len(modules) - 1:
        raise SerializationError(f"微分の個数が不足しています: {len(differentials)}", number)
    return GradedFreeComplex(ring=ring, modules=tuple(modules), differentials=tuple(differentials))


def betti_document(table: BettiTable, nvars: int, field_label: str) -> dict[str, Any]:
    """Betti表のJSON文書({"betti": [...], "ring": {...}})"""
    return {
        "betti": [{"i": i, "j": j, "v": v} for (i, j), v in sorted(table.entries.items())],
        "ring": {"field": field_label, "vars": nvars},
    }


def dumps_json(document: Any, *, indent: int | None = None) -> str:
    """キーをソートした安定なJSON文字列(末尾改行付き)

    既定は区切りに空白を入れない1行の形式。indent を渡すと字下げして複数行にする。
    """
    if indent is None:
        return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"
    return json.dumps(document, sort_keys=True, indent=indent, ensure_ascii=False) + "\n"


def dump_betti_json(table: BettiTable, nvars: int, field_label: str) -> str:
    return dumps_json(betti_document(table, nvars, field_label))


def load_betti_json(text: str) -> tuple[BettiTable, dict[str, Any]]:
    """Betti表のJSONを読み込む

    Returns:
        (BettiTable, ring情報の辞書)

    Raises:
        ValueError: 必須キーが欠けている場合
    """
    document = json.loads(text)
    if "betti" not in document or "ring" not in document:
        raise ValueError("Betti JSONには 'betti' と 'ring' が必要です")
    counts = {(int(e["i"]), int(e["j"])): int(e["v"]) for e in document["betti"]}
    return BettiTable.from_counts(counts), dict(document["ring"])
