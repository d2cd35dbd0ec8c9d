"""ユーティリティ関数モジュール

ワークスペース管理と計算規模ガードを提供。
"""

from trimcx.utils.guards import SizeGuardError, check_guard
from trimcx.utils.workspace import WORKSPACE_ENV, get_workspace

__all__ = [
    "WORKSPACE_ENV",
    "SizeGuardError",
    "check_guard",
    "get_workspace",
]
