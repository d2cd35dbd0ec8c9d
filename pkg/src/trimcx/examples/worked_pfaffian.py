"""5 x 5 交代行列の計算例

R = k[x, y, z] 上の次数2の成分を持つ交代行列 X の部分極大パフィアンのイデアル I から、
第1・第2生成元を 𝔞_1 = 𝔞_2 = (x, y, z) でトリミングする。
R/J のBetti表の合計は (1, 9, 11, 3)。
"""

from trimcx.builders.matrices import SkewMatrix
from trimcx.builders.skew_file import load_skew_text
from trimcx.chain.betti import BettiTable

WORKED_SKEW_TEXT = """\
# 5 x 5 の交代行列(成分は次数2)
ring x,y,z over QQ
skew 5
0, 0, 0, -x^2, -z^2
0, 0, -x^2, -z^2, -y^2
0, x^2, 0, -y^2, 0
x^2, z^2, y^2, 0, 0
z^2, y^2, 0, 0, 0
"""

WORKED_REMOVE: tuple[int, ...] = (1, 2)
WORKED_A_IDEAL: tuple[str, ...] = ("x", "y", "z")

WORKED_BETTI = BettiTable.from_counts(
    {
        (0, 0): 1,
        (1, 4): 3,
        (1, 5): 6,
        (2, 6): 11,
        (3, 7): 2,
        (3, 10): 1,
    }
)


def worked_matrix() -> SkewMatrix:
    """計算例の交代行列 X(係数体はQQ)"""
    return load_skew_text(WORKED_SKEW_TEXT)
