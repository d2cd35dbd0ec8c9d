"""DataFrameスキーマバリデータモジュール

Polars DataFrameの列スキーマを実行時に検証する。
"""

from trimcx.schemas.validators import BettiSchema, CheckReportSchema, FVectorSchema

__all__ = [
    "BettiSchema",
    "FVectorSchema",
    "CheckReportSchema",
]
