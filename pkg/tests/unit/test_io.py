"""IOレイヤーのテスト"""

import json
from pathlib import Path
from unittest.mock import MagicMock

import polars as pl
import pytest


class TestBaseIO:
    """BaseIO ABCのテスト"""

    def test_base_io_cannot_instantiate(self) -> None:
        """ABCは直接インスタンス化不可"""
        from trimcx.io.base import BaseIO

        with pytest.raises(TypeError):
            BaseIO()  # type: ignore[abstract]

    def test_from_config_returns_local_io(self) -> None:
        """storage='local'でLocalIOを返す"""
        from trimcx.config import RunConfig
        from trimcx.io.base import BaseIO
        from trimcx.io.local import LocalIO

        config = RunConfig(command="demo")
        assert isinstance(BaseIO.from_config(config), LocalIO)

    def test_from_config_returns_in_memory_io(self) -> None:
        """storage='memory'でInMemoryIOを返す"""
        from trimcx.config import RunConfig
        from trimcx.io.base import BaseIO
        from trimcx.io.in_memory import InMemoryIO

        config = RunConfig(command="demo", storage="memory")
        assert isinstance(BaseIO.from_config(config), InMemoryIO)

    def test_from_config_raises_on_unsupported_storage(self) -> None:
        """サポートされていないstorageでValueError"""
        from trimcx.io.base import BaseIO

        config = MagicMock()
        config.storage = "s3"

        with pytest.raises(ValueError, match="サポートされていないストレージタイプ"):
            BaseIO.from_config(config)


class TestLocalIO:
    """LocalIOのテスト"""

    def test_get_base_path(self, workspace: Path) -> None:
        """ワークスペース配下のパスを返す"""
        from trimcx.io.local import LocalIO

        assert LocalIO().get_base_path("outputs") == str(workspace / "outputs")

    def test_save_json_sorted(self, workspace: Path) -> None:
        """jsonはキーをソートし末尾に改行を付ける"""
        from trimcx.io.local import LocalIO

        io = LocalIO()
        io.save("outputs/betti.json", {"b": 1, "a": [1, 2]}, "json")
        text = (workspace / "outputs" / "betti.json").read_text(encoding="utf-8")
        assert text == '{"a":[1,2],"b":1}\n'
        assert io.load("outputs/betti.json", "json") == {"a": [1, 2], "b": 1}

    def test_save_and_load_csv(self, workspace: Path) -> None:
        """csvの保存と読み込み"""
        from trimcx.io.local import LocalIO

        io = LocalIO()
        df = pl.DataFrame({"i": [0, 1], "j": [0, 2], "v": [1, 4]})
        io.save("table.csv", df, "csv")
        loaded = io.load("table.csv", "csv")
        assert isinstance(loaded, pl.DataFrame)
        assert loaded.equals(df)

    def test_save_and_load_text_absolute(self, tmp_path: Path) -> None:
        """絶対パスはワークスペースに依らない"""
        from trimcx.io.local import LocalIO

        io = LocalIO()
        target = tmp_path / "nested" / "x.skew"
        io.save(str(target), "skew 1\n0\n", "text")
        assert io.exists(str(target))
        assert io.load(str(target), "text") == "skew 1\n0\n"

    def test_load_missing_returns_none(self, workspace: Path) -> None:
        """存在しないファイルはNone"""
        from trimcx.io.local import LocalIO

        assert LocalIO().load("missing.json", "json") is None

    def test_wrong_payload(self, workspace: Path) -> None:
        """フォーマットとデータ型が合わなければValueError"""
        from trimcx.io.local import LocalIO

        io = LocalIO()
        with pytest.raises(ValueError, match="pl.DataFrameが必要"):
            io.save("x.csv", {"a": 1}, "csv")
        with pytest.raises(ValueError, match="dictまたはlist"):
            io.save("x.json", "text", "json")
        with pytest.raises(ValueError, match="サポートされていないフォーマット"):
            io.load("x.parquet", "parquet")  # type: ignore[arg-type]

    def test_list_files(self, workspace: Path) -> None:
        """パターンで絞り込み、ソートして返す"""
        from trimcx.io.local import LocalIO

        io = LocalIO()
        io.save("outputs/b.json", {}, "json")
        io.save("outputs/a.json", {}, "json")
        io.save("outputs/c.csv", pl.DataFrame({"i": [0]}), "csv")
        files = io.list_files("outputs", "*.json")
        assert [Path(f).name for f in files] == ["a.json", "b.json"]
        assert io.list_files("missing") == []

    def test_json_round_trip_is_stable(self, workspace: Path) -> None:
        """書き出したjsonは json.loads で同じ辞書に戻る"""
        from trimcx.io.local import LocalIO

        document = {"z": {"y": 1, "x": 2}, "a": None}
        LocalIO().save("d.json", document, "json")
        assert json.loads((workspace / "d.json").read_text(encoding="utf-8")) == document


class TestInMemoryIO:
    """InMemoryIOのテスト"""

    def test_save_and_load(self) -> None:
        """保存したデータを読み戻せ、jsonはコピーされる"""
        from trimcx.io.in_memory import InMemoryIO

        io = InMemoryIO()
        document = {"betti": [{"i": 0, "j": 0, "v": 1}]}
        io.save("out/betti.json", document, "json")
        document["betti"].clear()
        assert io.load("out/betti.json", "json") == {"betti": [{"i": 0, "j": 0, "v": 1}]}
        assert io.exists("out/betti.json")
        assert io.load("missing", "json") is None
        assert io.get_base_path("outputs") == "memory://outputs"

    def test_list_files(self) -> None:
        """プレフィックスとパターンで絞り込む"""
        from trimcx.io.in_memory import InMemoryIO

        io = InMemoryIO()
        io.save("out/a.json", {}, "json")
        io.save("out/b.csv", pl.DataFrame({"i": [0]}), "csv")
        io.save("other/c.json", [], "json")
        assert io.list_files("out") == ["out/a.json", "out/b.csv"]
        assert io.list_files("out", "*.json") == ["out/a.json"]

    def test_wrong_payload(self) -> None:
        """フォーマットとデータ型が合わなければValueError"""
        from trimcx.io.in_memory import InMemoryIO

        with pytest.raises(ValueError, match="文字列が必要"):
            InMemoryIO().save("x.skew", {"a": 1}, "text")
