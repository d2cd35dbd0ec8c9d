"""計算規模のガード

全探索・線形代数の規模が上限を超える場合に計算前に拒否する。
"""


class SizeGuardError(RuntimeError):
    """計算規模が設定された上限を超えた場合のエラー

    Attributes:
        name: ガード名(GuardConfigのフィールド名)
        value: 要求された規模
        limit: 上限
    """

    def __init__(self, name: str, value: int, limit: int) -> None:
        self.name = name
        self.value = value
        self.limit = limit
        super().__init__(f"計算規模が上限を超えています: {name}={value}(上限 {limit})")


def check_guard(name: str, value: int, limit: int) -> None:
    """value > limit ならSizeGuardErrorを送出する"""
    if value > limit:
        raise SizeGuardError(name, value, limit)
