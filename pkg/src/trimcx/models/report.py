"""検証レポートモデル

verifyコマンドの検証項目ごとの結果を定義する。
"""

from typing import Any, Literal

import polars as pl
from pydantic import BaseModel, Field

from trimcx.chain.betti import BettiTable
from trimcx.schemas import CheckReportSchema

CheckStatus = Literal["pass", "fail", "skip"]


class CheckResult(BaseModel):
    """1つの検証項目の結果

    Attributes:
        check: 検証名
        status: pass / fail / skip
        detail: 補足(スキップ理由や不一致の内容)
    """

    check: str
    status: CheckStatus
    detail: str = ""


class VerifyReport(BaseModel):
    """verifyの検証結果

    Attributes:
        checks: 検証項目の結果(実行順)
        betti: パイプラインで求めたBetti表
        expected: 閉じた式のBetti表(比較した場合)
    """

    checks: list[CheckResult] = Field(default_factory=list)
    betti: BettiTable | None = None
    expected: BettiTable | None = None

    def add(self, check: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(check=check, status="pass" if passed else "fail", detail=detail))

    def skip(self, check: str, reason: str) -> None:
        self.checks.append(CheckResult(check=check, status="skip", detail=reason))

    @property
    def passed(self) -> bool:
        """失敗した検証がないか(スキップは失敗に数えない)"""
        return all(c.status != "fail" for c in self.checks)

    def status_of(self, check: str) -> CheckStatus | None:
        for c in self.checks:
            if c.check == check:
                return c.status
        return None

    def to_frame(self) -> pl.DataFrame:
        """check, status, detail 列のDataFrame"""
        df = pl.DataFrame(
            {
                "check": [c.check for c in self.checks],
                "status": [c.status for c in self.checks],
                "detail": [c.detail for c in self.checks],
            },
            schema={"check": pl.String, "status": pl.String, "detail": pl.String},
        )
        return CheckReportSchema.validate(df)

    def to_document(self) -> dict[str, Any]:
        """JSON出力用の辞書"""

        def table(t: BettiTable | None) -> list[dict[str, int]] | None:
            if t is None:
                return None
            return [{"i": i, "j": j, "v": v} for (i, j), v in t.entries.items()]

        return {
            "betti": table(self.betti),
            "checks": [c.model_dump() for c in self.checks],
            "expected": table(self.expected),
            "passed": self.passed,
        }
