"""BaseIO ABC

レポート・Betti表・複体の読み書きを抽象化するIOレイヤーの基底クラスを定義する。
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Literal

import polars as pl

if TYPE_CHECKING:
    from trimcx.config import RunConfig

Format = Literal["json", "csv", "text"]
Payload = dict[str, Any] | list[Any] | pl.DataFrame | str


class BaseIO(ABC):
    """ファイル読み書きを抽象化するIOレイヤー

    パイプラインとCLIはこのクラスを経由して入出力を行う。
    """

    @classmethod
    def from_config(cls, config: RunConfig) -> BaseIO:
        """実行設定から適切なIO実装を返すファクトリメソッド

        Args:
            config: 実行設定

        Returns:
            storageに応じたIO実装(LocalIOまたはInMemoryIO)

        Raises:
            ValueError: storageがサポートされていない場合
        """
        # 循環importを避けるためここでimport
        from trimcx.io.in_memory import InMemoryIO
        from trimcx.io.local import LocalIO

        if config.storage == "local":
            return LocalIO()
        elif config.storage == "memory":
            return InMemoryIO()
        else:
            raise ValueError(f"サポートされていないストレージタイプ: {config.storage}")

    @abstractmethod
    def get_base_path(self, subdir: str) -> str:
        """ベースパスを取得する

        Args:
            subdir: サブディレクトリ("outputs"、"configs"等)

        Returns:
            ベースパス文字列
        """
        ...

    @abstractmethod
    def save(self, path: str, data: Payload, format: Format) -> None:
        """データを保存する

        Args:
            path: 保存先パス(ワークスペースからの相対パスまたは絶対パス)
            data: 保存するデータ(jsonはdict/list、csvはDataFrame、textは文字列)
            format: フォーマット("json"、"csv"、"text")

        Raises:
            ValueError: サポートされていないフォーマット、
                       またはデータ型が不正な場合
        """
        ...

    @abstractmethod
    def load(self, path: str, format: Format) -> Payload | None:
        """データを読み込む

        Args:
            path: 読み込み元パス
            format: フォーマット("json"、"csv"、"text")

        Returns:
            読み込んだデータ。存在しない場合はNone

        Raises:
            ValueError: サポートされていないフォーマット
        """
        ...

    @abstractmethod
    def exists(self, path: str) -> bool:
        """ファイルが存在するか確認する"""
        ...

    @abstractmethod
    def list_files(self, path: str, pattern: str | None = None) -> list[str]:
        """指定パス配下のファイル一覧を取得する

        Args:
            path: 検索対象ディレクトリパス
            pattern: ファイル名のフィルタパターン(例: "*.json")。Noneの場合は全ファイル

        Returns:
            マッチしたファイルパスのリスト(ソート済み)。存在しない場合は空リスト
        """
        ...


def check_payload(data: Payload, format: str) -> None:
    """フォーマットとデータ型の組み合わせを検証する"""
    if format == "json":
        if not isinstance(data, (dict, list)):
            raise ValueError("json形式の保存にはdictまたはlistが必要です")
    elif format == "csv":
        if not isinstance(data, pl.DataFrame):
            raise ValueError("csv形式の保存にはpl.DataFrameが必要です")
    elif format == "text":
        if not isinstance(data, str):
            raise ValueError("text形式の保存には文字列が必要です")
    else:
        raise ValueError(f"サポートされていないフォーマット: {format}")
