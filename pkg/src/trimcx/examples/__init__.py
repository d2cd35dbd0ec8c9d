"""計算例モジュール

demoコマンドとテストで使う入力と期待値を提供する。
"""

from trimcx.examples.worked_pfaffian import (
    WORKED_A_IDEAL,
    WORKED_BETTI,
    WORKED_REMOVE,
    WORKED_SKEW_TEXT,
    worked_matrix,
)

__all__ = [
    "WORKED_A_IDEAL",
    "WORKED_BETTI",
    "WORKED_REMOVE",
    "WORKED_SKEW_TEXT",
    "worked_matrix",
]
