"""設定モデル

Pydanticを使用した実行設定のバリデーションとパース。
CLIの1回の呼び出しをRunConfigで表し、TOMLファイルとCLIフラグのどちらからも組み立てられる。
"""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from trimcx.builders.matrices import IndexSet
from trimcx.detfacet.formulas import check_sigmas
from trimcx.ring.field import CoefficientField

Command = Literal["betti", "closed-form", "verify", "fvector", "demo"]
Preset = Literal["pfaffian", "minors", "custom"]


class GuardConfig(BaseModel):
    """計算規模のガード

    Attributes:
        max_oracle_vars: Koszulオラクルの変数の数の上限
        max_oracle_degree: Koszulオラクルの内部次数の上限
        max_fvector_ground: f 列の全列挙で許す頂点数の上限
        max_lift_unknowns: 持ち上げの1列あたりの未知数の上限
        max_colon_monomials: コロン計算の単項式・積の個数の上限
    """

    max_oracle_vars: int = Field(default=10, ge=1, description="オラクルの変数の数の上限")
    max_oracle_degree: int = Field(default=12, ge=1, description="オラクルの次数の上限")
    max_fvector_ground: int = Field(default=20, ge=1, description="f 列の頂点数の上限")
    max_lift_unknowns: int = Field(default=60000, ge=1, description="持ち上げの未知数の上限")
    max_colon_monomials: int = Field(default=4000, ge=1, description="コロンの単項式数の上限")


class VerifyConfig(BaseModel):
    """verifyコマンドの設定

    Attributes:
        dmax_slack: 打ち切り次数 = J の最大生成元次数 + dmax_slack
        seeds: ランクによる非輪状性の証拠に使う乱数シード
        run_oracle: ガード内ならKoszulオラクルと比較する
    """

    dmax_slack: int = Field(default=3, ge=0, description="打ち切り次数の余裕")
    seeds: list[int] = Field(default_factory=lambda: [17, 4099], min_length=1, description="乱数シード")
    run_oracle: bool = Field(default=True, description="Koszulオラクルとの比較")


class RunConfig(BaseModel):
    """1回の実行の設定

    Attributes:
        command: サブコマンド
        field: 係数体("QQ" または "gf:<p>")。省略時はverifyでgf:32003、それ以外はQQ
        preset: 入力の種類(pfaffian / minors / custom)
        size: pfaffianの交代行列のサイズ n
        rows: minors / fvector の行数 n
        cols: minors / fvector の列数 m
        remove: 取り除く生成元の位置(1始まり)
        remove_sets: 取り除く小行列式の列集合 σ(1始まり)
        a_ideal: 全ての 𝔞 を置き換える生成元(多項式文字列)
        custom_path: customの交代行列ファイル
        dmax: 検証の打ち切り次数(省略時は自動)
        seed: 持ち上げ・ランク評価の乱数シード
        json_path: JSON出力先
        csv_path: CSV出力先
        storage: 出力先ストレージ(local: ファイル, memory: テスト用)
        log_level: ログレベル
        corrupt_differential: 検証の失敗経路を試すためのテスト用フック
        guards: 計算規模のガード
        verify: verifyの設定
    """

    command: Command = Field(..., description="サブコマンド")
    field: str | None = Field(default=None, description="係数体")
    preset: Preset | None = Field(default=None, description="入力の種類")
    size: int | None = Field(default=None, ge=1, description="交代行列のサイズ")
    rows: int | None = Field(default=None, ge=1, description="行数 n")
    cols: int | None = Field(default=None, ge=1, description="列数 m")
    remove: tuple[int, ...] = Field(default=(), description="取り除く生成元(1始まり)")
    remove_sets: tuple[IndexSet, ...] = Field(default=(), description="取り除く σ")
    a_ideal: tuple[str, ...] | None = Field(default=None, description="𝔞 の生成元")
    custom_path: str | None = Field(default=None, description="交代行列ファイル")
    dmax: int | None = Field(default=None, ge=0, description="打ち切り次数")
    seed: int = Field(default=0, description="乱数シード")
    json_path: str | None = Field(default=None, description="JSON出力先")
    csv_path: str | None = Field(default=None, description="CSV出力先")
    storage: Literal["local", "memory"] = Field(default="local", description="出力先ストレージ")
    log_level: str = Field(default="WARNING", description="ログレベル")
    corrupt_differential: bool = Field(default=False, description="テスト用フック")
    guards: GuardConfig = Field(default_factory=GuardConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)

    @field_validator("field")
    @classmethod
    def validate_field(cls, v: str | None) -> str | None:
        if v is not None:
            CoefficientField.parse(v)
        return v

    @field_validator("remove_sets", mode="before")
    @classmethod
    def parse_remove_sets(cls, v: Any) -> Any:
        """'1,2;3,4' や ["1,2", "3,4"]、[[1, 2], [3, 4]] を IndexSet の列に変換する"""
        if isinstance(v, str):
            v = [part for part in v.split(";") if part.strip()]
        if isinstance(v, (list, tuple)):
            out = []
            for item in v:
                if isinstance(item, str):
                    out.append(IndexSet.parse(item))
                elif isinstance(item, (list, tuple)):
                    out.append(IndexSet(indices=tuple(item)))
                else:
                    out.append(item)
            return tuple(out)
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        allowed = {"DEBUG", "INFO", "WARNING", "ERROR"}
        if v.upper() not in allowed:
            raise ValueError(f"log_levelは{allowed}のいずれかである必要があります: {v}")
        return v.upper()

    @model_validator(mode="after")
    def validate_command(self) -> "RunConfig":
        """サブコマンドとプリセットごとの必須パラメータを検証する"""
        if self.command in ("betti", "verify", "closed-form") and self.preset is None:
            raise ValueError(f"{self.command}にはpresetが必須です")
        if self.command == "closed-form" and self.preset == "custom":
            raise ValueError("closed-formはpfaffianまたはminorsのみ対応しています")
        if self.command == "fvector":
            self._require_minors_shape()
            return self
        if self.preset == "pfaffian":
            if self.size is None or self.size < 5 or self.size % 2 == 0:
                raise ValueError(f"pfaffianのsizeは5以上の奇数である必要があります: {self.size}")
            for index in self.remove:
                if not 1 <= index <= self.size:
                    raise ValueError(f"removeの位置が範囲外です: {index}(1..{self.size})")
            if len(set(self.remove)) != len(self.remove):
                raise ValueError(f"removeに重複があります: {self.remove}")
        elif self.preset == "minors":
            self._require_minors_shape()
        elif self.preset == "custom":
            if self.custom_path is None:
                raise ValueError("customにはcustom_pathが必須です")
            if not self.remove:
                raise ValueError("customにはremoveが必須です")
            if len(set(self.remove)) != len(self.remove) or any(i < 1 for i in self.remove):
                raise ValueError(f"removeは相異なる正の整数である必要があります: {self.remove}")
        return self

    def _require_minors_shape(self) -> None:
        if self.rows is None or self.cols is None:
            raise ValueError(f"{self.command}にはrowsとcolsが必須です")
        if self.rows > self.cols:
            raise ValueError(f"rows <= cols である必要があります: {self.rows} > {self.cols}")
        check_sigmas(self.rows, self.cols, self.remove_sets)

    @property
    def coefficient_field(self) -> CoefficientField:
        """係数体(未指定ならverifyはgf:32003、それ以外はQQ)"""
        if self.field is not None:
            return CoefficientField.parse(self.field)
        if self.command == "verify":
            return CoefficientField.prime()
        return CoefficientField.rationals()

    @property
    def removal_indices(self) -> tuple[int, ...]:
        """取り除く生成元(pfaffianで未指定なら (1,))"""
        if self.preset == "pfaffian" and not self.remove:
            return (1,)
        return self.remove

    @property
    def sigmas(self) -> tuple[IndexSet, ...]:
        """取り除く σ(minorsで未指定なら (1, ..., n))"""
        if self.remove_sets or self.preset != "minors" or self.rows is None:
            return self.remove_sets
        return (IndexSet(indices=tuple(range(1, self.rows + 1))),)

    @classmethod
    def from_toml(cls, path: Path | None = None, overrides: dict[str, Any] | None = None) -> "RunConfig":
        """tomlファイルから設定を読み込む

        Args:
            path: 設定ファイルのパス。Noneの場合、ワークスペース/configs/trimcx.tomlを使用
            overrides: ファイルの値を上書きする値(CLIフラグ)

        Returns:
            RunConfigインスタンス

        Raises:
            FileNotFoundError: ファイルが存在しない場合
            ValueError: TOMLパースエラーまたはバリデーションエラーの場合
        """
        if path is None:
            from trimcx.utils.workspace import get_workspace

            workspace = get_workspace()
            path = workspace / "configs" / "trimcx.toml"

        with open(path, "rb") as f:
            data = tomllib.load(f)
        data.update({k: v for k, v in (overrides or {}).items() if v is not None})
        return cls(**data)
