"""LocalIO実装

ローカルファイルシステムへのIO操作を提供する。
"""

import fnmatch
import json
from pathlib import Path

import polars as pl

from trimcx.chain.serialization import dumps_json
from trimcx.io.base import BaseIO, Format, Payload, check_payload
from trimcx.utils import get_workspace


class LocalIO(BaseIO):
    """ローカルファイルシステムIO実装

    相対パスはワークスペースディレクトリからの相対パスとして扱う。
    """

    def get_base_path(self, subdir: str) -> str:
        """ワークスペース配下のサブディレクトリパスを返す"""
        return str(get_workspace() / subdir)

    def _resolve(self, path: str) -> Path:
        file_path = Path(path)
        return file_path if file_path.is_absolute() else get_workspace() / file_path

    def save(self, path: str, data: Payload, format: Format) -> None:
        """ローカルファイルに保存

        jsonはキーをソートし末尾に改行を付ける。

        Raises:
            ValueError: サポートされていないフォーマット、
                       またはデータ型が不正な場合
        """
        check_payload(data, format)
        file_path = self._resolve(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)

        if format == "json":
            file_path.write_text(dumps_json(data), encoding="utf-8")
        elif format == "csv":
            assert isinstance(data, pl.DataFrame)
            data.write_csv(file_path)
        else:
            assert isinstance(data, str)
            file_path.write_text(data, encoding="utf-8")

    def load(self, path: str, format: Format) -> Payload | None:
        """ローカルファイルから読み込み

        Returns:
            読み込んだデータ。存在しない場合はNone

        Raises:
            ValueError: サポートされていないフォーマット
        """
        if format not in ("json", "csv", "text"):
            raise ValueError(f"サポートされていないフォーマット: {format}")
        file_path = self._resolve(path)
        if not file_path.exists():
            return None
        if format == "json":
            with open(file_path, encoding="utf-8") as f:
                return json.load(f)  # type: ignore[no-any-return]
        elif format == "csv":
            return pl.read_csv(file_path)
        return file_path.read_text(encoding="utf-8")

    def exists(self, path: str) -> bool:
        return self._resolve(path).exists()

    def list_files(self, path: str, pattern: str | None = None) -> list[str]:
        """指定パス配下のファイル一覧を取得

        Args:
            path: 検索対象ディレクトリパス
            pattern: ファイル名のフィルタパターン(fnmatch形式)

        Returns:
            マッチしたファイルパスのリスト(フルパス、ソート済み)
        """
        dir_path = self._resolve(path)
        if not dir_path.exists():
            return []

        files = [str(f) for f in dir_path.rglob("*") if f.is_file()]

        if pattern:
            files = [f for f in files if fnmatch.fnmatch(Path(f).name, pattern)]

        return sorted(files)
