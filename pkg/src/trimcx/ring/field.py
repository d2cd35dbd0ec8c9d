"""係数体

有理数体QQと素体GF(p)を表す値オブジェクト。
実際の演算はsympyのドメイン(QQ, GF(p))に委譲する。
"""

from __future__ import annotations

import re
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ

DEFAULT_PRIME = 32003


class CoefficientField(BaseModel):
    """係数体

    Attributes:
        kind: "rationals"(QQ)または"prime-field"(GF(p))
        characteristic: 標数。rationalsの場合は0、prime-fieldの場合は素数p
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["rationals", "prime-field"] = Field(..., description="体の種類")
    characteristic: int = Field(default=0, ge=0, description="標数")

    @model_validator(mode="after")
    def validate_characteristic(self) -> CoefficientField:
        """標数と種類の整合性を検証する"""
        if self.kind == "rationals" and self.characteristic != 0:
            raise ValueError(f"rationalsの標数は0である必要があります: {self.characteristic}")
        if self.kind == "prime-field":
            if self.characteristic < 2 or not isprime(self.characteristic):
                raise ValueError(f"prime-fieldの標数は素数である必要があります: {self.characteristic}")
        return self

    @classmethod
    def rationals(cls) -> CoefficientField:
        return cls(kind="rationals", characteristic=0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> CoefficientField:
        return cls(kind="prime-field", characteristic=p)

    @classmethod
    def parse(cls, text: str) -> CoefficientField:
        """"QQ"または"gf:<p>"形式の文字列から係数体を生成する

        Args:
            text: 体指定文字列

        Returns:
            CoefficientFieldインスタンス

        Raises:
            ValueError: 不正な形式、またはpが素数でない場合
        """
        value = text.strip()
        if value.upper() == "QQ":
            return cls.rationals()
        match = re.fullmatch(r"gf:(\d+)", value.lower())
        if not match:
            raise ValueError(f"不正な体指定です: {text}(有効な形式: 'QQ', 'gf:32003')")
        return cls.prime(int(match.group(1)))

    @property
    def label(self) -> str:
        """CLI/JSONで使う表記("QQ"または"gf:p")"""
        if self.kind == "rationals":
            return "QQ"
        return f"gf:{self.characteristic}"

    @property
    def domain(self) -> Any:
        """対応するsympyドメイン"""
        if self.kind == "rationals":
            return QQ
        return GF(self.characteristic)

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime-field"
