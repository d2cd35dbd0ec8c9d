"""CLIの統合テスト(終了コードと出力)"""

import json
from pathlib import Path

import pytest


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, str]:
    from trimcx.cli import main

    code = main(argv)
    return code, capsys.readouterr().out


class TestOutputs:
    """正常系の出力"""

    def test_demo(self, capsys: pytest.CaptureFixture[str]) -> None:
        """demoは計算例のBetti表を表示する"""
        from trimcx.examples.worked_pfaffian import WORKED_BETTI

        code, out = _run(["demo"], capsys)
        assert code == 0
        assert out == WORKED_BETTI.pretty() + "\n"

    def test_betti_pfaffian(self, capsys: pytest.CaptureFixture[str]) -> None:
        """一般5 x 5 交代行列の第1パフィアンを除いたBetti表"""
        from trimcx.detfacet.formulas import betti_pfaffian_trim

        code, out = _run(["betti", "--preset", "pfaffian", "--size", "5", "--remove", "1"], capsys)
        assert code == 0
        document = json.loads(out)
        assert document["ring"] == {"field": "QQ", "vars": 10}
        expected = betti_pfaffian_trim(5)
        assert {(e["i"], e["j"]): e["v"] for e in document["betti"]} == expected.entries

    def test_closed_form_json_file(self, workspace: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """closed-formはJSONとCSVを書き出す"""
        argv = ["closed-form", "--preset", "minors", "--rows", "2", "--cols", "4", "--remove-sets", "1,2;3,4"]
        code, out = _run([*argv, "--json", "out/b.json", "--csv", "out/b.csv"], capsys)
        assert code == 0
        saved = (workspace / "out" / "b.json").read_text(encoding="utf-8")
        assert saved == out
        assert json.loads(saved)["betti"][-1] == {"i": 4, "j": 6, "v": 2}
        assert (workspace / "out" / "b.csv").read_text(encoding="utf-8").startswith("i,j,v\n")

    def test_fvector(self, capsys: pytest.CaptureFixture[str]) -> None:
        """全列挙のf列と比較表"""
        code, out = _run(["fvector", "--rows", "2", "--cols", "4", "--remove-sets", "1,2"], capsys)
        assert code == 0
        document = json.loads(out)
        assert document["fvector"] == [4, 5, 2, 0]
        assert document["shifted_mismatch"] == [False, False, False]

    def test_verify_custom(self, worked_skew_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """ファイルの計算例の検証は全て成功する(閉じた式はスキップ)"""
        argv = ["verify", "--custom", str(worked_skew_path), "--remove", "1,2", "--a-ideal", "x,y,z"]
        code, out = _run(argv, capsys)
        assert code == 0
        document = json.loads(out)
        assert document["passed"] is True
        statuses = {c["check"]: c["status"] for c in document["checks"]}
        assert statuses["d_squared_zero"] == "pass"
        assert statuses["lifts_commute"] == "pass"
        assert statuses["oracle"] == "pass"
        assert statuses["closed_form"] == "skip"
        assert document["ring"] == {"field": "QQ", "vars": 3}

    def test_help_documents_constant_division(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--helpは定数での割り算を書けることを示す"""
        code, out = _run(["betti", "--help"], capsys)
        assert code == 0
        assert "x/2" in out

    def test_a_ideal_with_constant_division(self, worked_skew_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """x/2 は x と同じイデアルを生成し、Betti表は変わらない"""
        base = ["betti", "--custom", str(worked_skew_path), "--remove", "1,2", "--a-ideal"]
        code, scaled = _run([*base, "x/2,y,z"], capsys)
        assert code == 0
        _, plain = _run([*base, "x,y,z"], capsys)
        assert json.loads(scaled)["betti"] == json.loads(plain)["betti"]


class TestExitCodes:
    """異常系の終了コード"""

    def test_invalid_config(self, capsys: pytest.CaptureFixture[str]) -> None:
        """偶数サイズは設定エラー(2)"""
        code, _ = _run(["betti", "--preset", "pfaffian", "--size", "6"], capsys)
        assert code == 2

    def test_unknown_command(self, capsys: pytest.CaptureFixture[str]) -> None:
        """未知のサブコマンドは2"""
        code, _ = _run(["resolve"], capsys)
        assert code == 2

    def test_bad_remove_list(self, capsys: pytest.CaptureFixture[str]) -> None:
        """整数でない--removeは2"""
        code, _ = _run(["betti", "--preset", "pfaffian", "--size", "5", "--remove", "a"], capsys)
        assert code == 2

    def test_missing_config_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """存在しない--configは2"""
        code, _ = _run(["demo", "--config", str(tmp_path / "missing.toml")], capsys)
        assert code == 2

    def test_missing_custom_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """存在しない交代行列ファイルは2"""
        code, _ = _run(["betti", "--custom", str(tmp_path / "missing.skew"), "--remove", "1"], capsys)
        assert code == 2

    def test_unknown_variable_in_ideal(self, worked_skew_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """𝔞 に未定義の変数があれば2"""
        argv = ["betti", "--custom", str(worked_skew_path), "--remove", "1", "--a-ideal", "w"]
        code, _ = _run(argv, capsys)
        assert code == 2

    def test_lift_failure(self, worked_skew_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """d_0(F_2) ⊄ 𝔞e_0 なら前提の破れ(4)"""
        argv = ["betti", "--custom", str(worked_skew_path), "--remove", "1", "--a-ideal", "x"]
        code, _ = _run(argv, capsys)
        assert code == 4

    def test_guard_from_config(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """設定ファイルのガードを超えると3"""
        config = tmp_path / "guard.toml"
        config.write_text('command = "fvector"\nrows = 2\ncols = 4\n\n[guards]\nmax_fvector_ground = 3\n')
        code, out = _run(["fvector", "--config", str(config)], capsys)
        assert code == 3
        assert out == ""

    def test_corrupted_differential_fails_verify(
        self, worked_skew_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """壊した d_1 は検証の失敗(4)"""
        argv = [
            "verify",
            "--custom",
            str(worked_skew_path),
            "--remove",
            "1,2",
            "--a-ideal",
            "x,y,z",
            "--corrupt-differential",
        ]
        code, out = _run(argv, capsys)
        assert code == 4
        document = json.loads(out)
        assert document["passed"] is False
        assert {c["check"]: c["status"] for c in document["checks"]}["d_squared_zero"] == "fail"


@pytest.mark.slow
class TestAcceptance:
    """受け入れ基準の重いケース"""

    def test_pfaffian_seven(self, capsys: pytest.CaptureFixture[str]) -> None:
        """一般7 x 7 交代行列から1個除いたBetti表は閉じた式と一致"""
        from trimcx.detfacet.formulas import betti_pfaffian_trim

        code, out = _run(["betti", "--preset", "pfaffian", "--size", "7", "--remove", "1"], capsys)
        assert code == 0
        entries = {(e["i"], e["j"]): e["v"] for e in json.loads(out)["betti"]}
        assert entries == betti_pfaffian_trim(7).entries

    def test_single_minor_two_by_five(self, capsys: pytest.CaptureFixture[str]) -> None:
        """2 x 5 の小行列式1個を除いたBetti表は閉じた式と一致"""
        from trimcx.detfacet.formulas import betti_single_minor

        code, out = _run(["betti", "--preset", "minors", "--rows", "2", "--cols", "5"], capsys)
        assert code == 0
        entries = {(e["i"], e["j"]): e["v"] for e in json.loads(out)["betti"]}
        assert entries == betti_single_minor(2, 5).entries

    def test_verify_minors(self, capsys: pytest.CaptureFixture[str]) -> None:
        """2 x 4 の小行列式2個の除去は全ての検証に通る"""
        argv = ["verify", "--preset", "minors", "--rows", "2", "--cols", "4", "--remove-sets", "1,2;3,4"]
        code, out = _run(argv, capsys)
        assert code == 0
        document = json.loads(out)
        assert document["passed"] is True
        assert document["ring"] == {"field": "gf:32003", "vars": 8}
        assert {c["check"]: c["status"] for c in document["checks"]}["closed_form"] == "pass"
