"""Polars DataFrameスキーマバリデータ

各スキーマクラスは必須列の型検証を行う。
"""

import polars as pl


def _validate_columns(df: pl.DataFrame, required: dict[str, type[pl.DataType]]) -> None:
    for col, dtype in required.items():
        if col not in df.columns:
            raise ValueError(f"必須列が不足しています: {col}")
        if df[col].dtype != dtype:
            raise ValueError(f"列'{col}'の型が不正です。期待: {dtype}, 実際: {df[col].dtype}")


class BettiSchema:
    """Betti表のPolarsスキーマ定義

    必須列:
        i: pl.Int64 - ホモロジー次数
        j: pl.Int64 - 内部次数
        v: pl.Int64 - β_{i,j}(正)
    """

    REQUIRED_COLUMNS: dict[str, type[pl.DataType]] = {
        "i": pl.Int64,
        "j": pl.Int64,
        "v": pl.Int64,
    }

    @staticmethod
    def validate(df: pl.DataFrame) -> pl.DataFrame:
        """スキーマバリデーション

        Args:
            df: バリデーション対象のDataFrame

        Returns:
            バリデーション済みDataFrame

        Raises:
            ValueError: 必須列が不足、型が不正、値が正でない、または (i, j) が重複する場合
        """
        _validate_columns(df, BettiSchema.REQUIRED_COLUMNS)
        if df.height and df["v"].min() <= 0:  # type: ignore[operator]
            raise ValueError("列'v'の値は正である必要があります")
        if df.select("i", "j").is_duplicated().any():
            raise ValueError("(i, j) が重複しています")
        return df


class FVectorSchema:
    """f 列の比較表のPolarsスキーマ定義

    必須列:
        ell: pl.Int64 - ℓ
        dim: pl.Int64 - 面の次元 n+ℓ-2
        as_printed: pl.Int64 - 閉じた式(そのまま)
        shifted: pl.Int64 - 閉じた式(内側の添字をずらしたもの)
        enumerated: pl.Int64 - 全列挙
        as_printed_mismatch: pl.Boolean
        shifted_mismatch: pl.Boolean
    """

    REQUIRED_COLUMNS: dict[str, type[pl.DataType]] = {
        "ell": pl.Int64,
        "dim": pl.Int64,
        "as_printed": pl.Int64,
        "shifted": pl.Int64,
        "enumerated": pl.Int64,
        "as_printed_mismatch": pl.Boolean,
        "shifted_mismatch": pl.Boolean,
    }

    @staticmethod
    def validate(df: pl.DataFrame) -> pl.DataFrame:
        """スキーマバリデーション(必須列のみ)

        Raises:
            ValueError: 必須列が不足または型が不正な場合
        """
        _validate_columns(df, FVectorSchema.REQUIRED_COLUMNS)
        return df


class CheckReportSchema:
    """verifyの検証結果のPolarsスキーマ定義

    必須列:
        check: pl.String - 検証名
        status: pl.String - "pass" / "fail" / "skip"
        detail: pl.String - 補足
    """

    REQUIRED_COLUMNS: dict[str, type[pl.DataType]] = {
        "check": pl.String,
        "status": pl.String,
        "detail": pl.String,
    }

    @staticmethod
    def validate(df: pl.DataFrame) -> pl.DataFrame:
        """スキーマバリデーション

        Raises:
            ValueError: 必須列が不足、型が不正、またはstatusが不正な場合
        """
        _validate_columns(df, CheckReportSchema.REQUIRED_COLUMNS)
        allowed = {"pass", "fail", "skip"}
        invalid = set(df["status"].to_list()) - allowed
        if invalid:
            raise ValueError(f"statusは{allowed}のいずれかである必要があります: {invalid}")
        return df
