"""コアモジュール

ステップ単位のパイプライン実行エンジンを提供する。
"""

from trimcx.core.pipeline import BETTI_STEPS, VERIFY_STEPS, PipelineError, StepName, TrimPipeline

__all__ = ["BETTI_STEPS", "VERIFY_STEPS", "PipelineError", "StepName", "TrimPipeline"]
