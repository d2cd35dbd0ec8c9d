"""PipelineContextモデル

パイプラインのステップ間で受け渡す中間結果を定義する。
"""

from pydantic import BaseModel, ConfigDict

from trimcx.chain.betti import BettiTable
from trimcx.chain.complex import GradedFreeComplex
from trimcx.models.report import VerifyReport
from trimcx.ring.polynomial import Polynomial
from trimcx.trim.lifts import LiftFamily
from trimcx.trim.setup import TrimSetup


class PipelineContext(BaseModel):
    """ステップ間で保持されるコンテキスト

    各フィールドは対応するステップで段階的に設定される。

    Attributes:
        resolution: R/I の自由分解 F(build_resolutionの出力)
        summand_indices: 取り除く e_0^s の位置(0始まり)
        a_ideals: 𝔞_s の生成元。Noneなら d_0^s から求める
        setup: トリミングの入力(build_setupの出力)
        lifts: q の族(liftの出力)
        cone: トリミング複体(trimの出力)
        betti: R/J のBetti表(bettiの出力)
        report: 検証結果(verifyの出力)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    resolution: GradedFreeComplex | None = None
    summand_indices: tuple[int, ...] = ()
    a_ideals: tuple[tuple[Polynomial, ...], ...] | None = None
    setup: TrimSetup | None = None
    lifts: LiftFamily | None = None
    cone: GradedFreeComplex | None = None
    betti: BettiTable | None = None
    report: VerifyReport | None = None
