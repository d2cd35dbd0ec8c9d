"""InMemoryIO実装

テスト用のインメモリIO実装を提供する。
"""

import copy
import fnmatch

from trimcx.io.base import BaseIO, Format, Payload, check_payload


class InMemoryIO(BaseIO):
    """テスト用インメモリIO実装

    内部dictにデータを保持し、ファイルシステムに依存しない。
    """

    def __init__(self) -> None:
        """インメモリストレージを初期化"""
        self.storage: dict[str, Payload] = {}

    def get_base_path(self, subdir: str) -> str:
        """memory://形式のパスを返す"""
        return f"memory://{subdir}"

    def save(self, path: str, data: Payload, format: Format) -> None:
        """インメモリストレージに保存

        Raises:
            ValueError: フォーマットとデータ型が合わない場合
        """
        check_payload(data, format)
        self.storage[path] = copy.deepcopy(data) if isinstance(data, (dict, list)) else data

    def load(self, path: str, format: Format) -> Payload | None:
        """インメモリストレージから読み込み

        Args:
            path: 読み込み元パス
            format: フォーマット(使用しないが互換性のため保持)

        Returns:
            保存されたデータ。存在しない場合はNone
        """
        return self.storage.get(path)

    def exists(self, path: str) -> bool:
        return path in self.storage

    def list_files(self, path: str, pattern: str | None = None) -> list[str]:
        """指定パス配下のデータ一覧を取得

        Args:
            path: 検索対象パス(プレフィックス)
            pattern: ファイル名のフィルタパターン(fnmatch形式)

        Returns:
            マッチしたパスのリスト(ソート済み)
        """
        files = [k for k in self.storage.keys() if k.startswith(path)]

        if pattern:
            files = [f for f in files if fnmatch.fnmatch(f.split("/")[-1], pattern)]

        return sorted(files)
