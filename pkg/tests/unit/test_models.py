"""検証レポートとPipelineContextのテスト"""

import polars as pl


class TestVerifyReport:
    """VerifyReportのテスト"""

    def test_passed_ignores_skip(self) -> None:
        """スキップは失敗に数えない"""
        from trimcx.models.report import VerifyReport

        report = VerifyReport()
        report.add("complex", True)
        report.skip("oracle", "変数が多すぎます")
        assert report.passed
        assert report.status_of("oracle") == "skip"
        assert report.status_of("missing") is None

    def test_failure(self) -> None:
        """1つでも失敗すれば passed は False"""
        from trimcx.models.report import VerifyReport

        report = VerifyReport()
        report.add("complex", True)
        report.add("closed_form", False, "(1, 2) が一致しません")
        assert not report.passed
        assert report.checks[1].detail == "(1, 2) が一致しません"

    def test_to_frame(self) -> None:
        """検証結果のDataFrame"""
        from trimcx.models.report import VerifyReport

        report = VerifyReport()
        report.add("complex", True)
        report.skip("oracle", "無効")
        df = report.to_frame()
        assert df.columns == ["check", "status", "detail"]
        assert df["status"].to_list() == ["pass", "skip"]
        assert df.schema["detail"] == pl.String

    def test_empty_frame(self) -> None:
        """検証がなくても列は揃う"""
        from trimcx.models.report import VerifyReport

        assert VerifyReport().to_frame().height == 0

    def test_to_document(self) -> None:
        """JSON出力用の辞書"""
        from trimcx.chain.betti import BettiTable
        from trimcx.models.report import VerifyReport

        report = VerifyReport(betti=BettiTable.from_counts({(0, 0): 1, (1, 2): 3}))
        report.add("betti", True)
        document = report.to_document()
        assert document["betti"] == [{"i": 0, "j": 0, "v": 1}, {"i": 1, "j": 2, "v": 3}]
        assert document["expected"] is None
        assert document["passed"] is True
        assert document["checks"] == [{"check": "betti", "status": "pass", "detail": ""}]


class TestPipelineContext:
    """PipelineContextのテスト"""

    def test_defaults(self) -> None:
        """全フィールドは未設定で始まる"""
        from trimcx.models.context import PipelineContext

        context = PipelineContext()
        assert context.resolution is None
        assert context.summand_indices == ()
        assert context.a_ideals is None
        assert context.betti is None
        assert context.report is None
