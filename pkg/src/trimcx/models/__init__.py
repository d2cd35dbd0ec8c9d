"""モデルモジュール

パイプラインのドメインモデル(PipelineContext、VerifyReport等)を提供する。
"""

from trimcx.models.context import PipelineContext
from trimcx.models.report import CheckResult, CheckStatus, VerifyReport

__all__ = ["CheckResult", "CheckStatus", "PipelineContext", "VerifyReport"]
