"""設定管理モジュール

Pydantic設定モデルとTOML読み込み機能を提供。
"""

from trimcx.config.models import Command, GuardConfig, Preset, RunConfig, VerifyConfig

__all__ = [
    "Command",
    "GuardConfig",
    "Preset",
    "RunConfig",
    "VerifyConfig",
]
