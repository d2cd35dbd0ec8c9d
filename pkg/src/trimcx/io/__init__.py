"""IOレイヤーモジュール

レポート・Betti表・複体の読み書きを抽象化するIOレイヤーを提供する。
"""

from trimcx.io.base import BaseIO
from trimcx.io.in_memory import InMemoryIO
from trimcx.io.local import LocalIO

__all__ = ["BaseIO", "LocalIO", "InMemoryIO"]
