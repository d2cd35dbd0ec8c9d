"""多項式環と多項式

標準次数付き多項式環 k[x_1, ..., x_n] と、その要素の構文解析・印字・特殊化を提供する。
多項式の実体はsympyの疎多項式(PolyElement, grevlex順序)であり、
PolyRingはそれを生成する変数名と係数体を保持する値オブジェクト。
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from trimcx.ring.field import CoefficientField

# 多項式の実体。sympyのPolyElement(辞書: 単項式 -> 非零係数)
Polynomial = PolyElement
# 単項式は各変数の指数のタプル
Monomial = tuple[int, ...]

_VARIABLE_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class RingMismatchError(ValueError):
    """異なる環の多項式・行列を組み合わせた場合のエラー"""


class PolynomialSyntaxError(ValueError):
    """多項式文字列の構文エラー

    Attributes:
        position: エラー位置(0始まりの文字オフセット)
    """

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message}(位置 {position})")


class UnknownVariableError(ValueError):
    """環に宣言されていない変数名が使われた場合のエラー"""

    def __init__(self, name: str, position: int) -> None:
        self.name = name
        self.position = position
        super().__init__(f"未定義の変数です: {name}(位置 {position})")


class PolyRing(BaseModel):
    """標準次数付き多項式環

    全ての変数は次数1。単項式順序はgrevlexで環ごとに固定。

    Attributes:
        variables: 変数名の順序付きタプル
        field: 係数体
    """

    model_config = ConfigDict(frozen=True)

    variables: tuple[str, ...] = Field(..., min_length=1, description="変数名")
    field: CoefficientField = Field(default_factory=CoefficientField.rationals, description="係数体")

    _ring: Any = PrivateAttr(default=None)
    _index: dict[str, int] = PrivateAttr(default_factory=dict)
    _poly_domain: Any = PrivateAttr(default=None)

    @field_validator("variables")
    @classmethod
    def validate_variables(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        """変数名が一意かつ識別子形式であることを検証"""
        if len(set(v)) != len(v):
            raise ValueError(f"変数名が重複しています: {v}")
        for name in v:
            if not _VARIABLE_PATTERN.fullmatch(name):
                raise ValueError(f"不正な変数名です: {name}")
        return v

    def model_post_init(self, context: Any, /) -> None:
        self._ring = SympyPolyRing([Symbol(name) for name in self.variables], self.field.domain, grevlex)
        self._index = {name: i for i, name in enumerate(self.variables)}
        self._poly_domain = self._ring.to_domain()

    @classmethod
    def from_sympy(cls, ring: Any) -> PolyRing:
        """sympyのPolyRingから対応するPolyRingを復元する"""
        domain = ring.domain
        if domain == QQ:
            field = CoefficientField.rationals()
        else:
            field = CoefficientField.prime(int(domain.mod))
        return cls(variables=tuple(str(s) for s in ring.symbols), field=field)

    @classmethod
    def of(cls, polynomial: Polynomial) -> PolyRing:
        return cls.from_sympy(polynomial.ring)

    @property
    def sympy_ring(self) -> Any:
        return self._ring

    @property
    def domain(self) -> Any:
        """係数体のsympyドメイン"""
        return self._ring.domain

    @property
    def poly_domain(self) -> Any:
        """多項式環自体のsympyドメイン(DomainMatrixの要素ドメイン)"""
        return self._poly_domain

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> Polynomial:
        return self._ring.zero

    @property
    def one(self) -> Polynomial:
        return self._ring.one

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self._ring.gens)

    def gen(self, name: str) -> Polynomial:
        """変数名から生成元を返す

        Raises:
            UnknownVariableError: 未定義の変数名の場合
        """
        if name not in self._index:
            raise UnknownVariableError(name, 0)
        return self._ring.gens[self._index[name]]

    def index(self, name: str) -> int:
        if name not in self._index:
            raise UnknownVariableError(name, 0)
        return self._index[name]

    def constant(self, value: Any) -> Polynomial:
        return self._ring.ground_new(self.domain.convert(value))

    def from_terms(self, terms: Mapping[Monomial, Any]) -> Polynomial:
        return self._ring.from_dict(dict(terms))

    def monomial(self, exponents: Monomial, coefficient: Any = 1) -> Polynomial:
        return self._ring.from_dict({tuple(exponents): coefficient})

    def owns(self, polynomial: Polynomial) -> bool:
        return isinstance(polynomial, PolyElement) and polynomial.ring == self._ring

    def parse(self, text: str) -> Polynomial:
        return poly_parse(text, self)

    def format(self, polynomial: Polynomial) -> str:
        return poly_format(polynomial)

    def monomial_basis(self, degree: int) -> tuple[Monomial, ...]:
        return monomial_basis(self.ngens, degree)


@lru_cache(maxsize=512)
def monomial_basis(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """次数degreeの単項式全体をgrevlex降順で返す(メモ化)

    Args:
        nvars: 変数の数
        degree: 全次数

    Returns:
        指数タプルのタプル。degree < 0 なら空
    """
    if degree < 0:
        return ()
    monomials = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for i in combo:
            exponents[i] += 1
        monomials.append(tuple(exponents))
    return tuple(sorted(monomials, key=grevlex, reverse=True))


def check_same_ring(a: Polynomial, b: Polynomial) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"環が一致しません: {a.ring} と {b.ring}")


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """多項式の積

    Raises:
        RingMismatchError: 異なる環の多項式の場合
    """
    check_same_ring(a, b)
    return a * b


def homogeneous_degree(a: Polynomial) -> int | None:
    """全ての項が同じ全次数dを持つときdを返す。零多項式・非斉次はNone"""
    degrees = {sum(monom) for monom in a.itermonoms()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def is_homogeneous(a: Polynomial, degree: int | None = None) -> bool:
    """斉次性の判定。零多項式は任意の次数で斉次とみなす"""
    if not a:
        return True
    d = homogeneous_degree(a)
    if d is None:
        return False
    return degree is None or d == degree


def constant_term(a: Polynomial) -> Any:
    """定数項(係数体の元)"""
    return a.const()


def specialize(a: Polynomial, point: Sequence[Any]) -> Any:
    """多項式を点に代入し係数体の元を返す

    Args:
        a: 多項式
        point: 各変数の値(係数体の元または整数)。長さは変数の数と一致

    Returns:
        係数体の元

    Raises:
        ValueError: 点の長さが変数の数と一致しない場合
    """
    ring = a.ring
    if len(point) != ring.ngens:
        raise ValueError(f"点の長さが変数の数と一致しません: {len(point)} != {ring.ngens}")
    domain = ring.domain
    values = [domain.convert(v) for v in point]
    total = domain.zero
    for monom, coeff in a.iterterms():
        term = coeff
        for value, exponent in zip(values, monom):
            if exponent:
                term = term * value**exponent
        total = total + term
    return total


# --- 印字 ---------------------------------------------------------------


def _coefficient_parts(domain: Any, coeff: Any) -> tuple[int, int]:
    """係数を(分子, 分母)の整数組に変換する。GF(p)は対称表現"""
    value = domain.to_sympy(coeff)
    return int(value.p), int(value.q)


def _format_monomial(names: Sequence[str], monom: Monomial) -> str:
    factors = []
    for name, exponent in zip(names, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def poly_format(a: Polynomial) -> str:
    """多項式を正準な文字列に変換する

    項はgrevlex降順。出力は poly_parse で同じ多項式に戻る。
    例: -x^2*y^2+z^4
    """
    if not a:
        return "0"
    names = [str(s) for s in a.ring.symbols]
    domain = a.ring.domain
    pieces: list[str] = []
    for monom, coeff in a.terms():
        num, den = _coefficient_parts(domain, coeff)
        sign = "-" if num < 0 else "+"
        num = abs(num)
        body = _format_monomial(names, monom)
        if body:
            if den != 1:
                text = f"{num}/{den}*{body}"
            elif num != 1:
                text = f"{num}*{body}"
            else:
                text = body
        else:
            text = f"{num}/{den}" if den != 1 else str(num)
        pieces.append(sign + text)
    out = "".join(pieces)
    return out[1:] if out.startswith("+") else out


# --- 構文解析 -----------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    position: int


_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _tokenize(text: str) -> Iterator[_Token]:
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_PATTERN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"不正な文字です: {text[offset]!r}", offset)
        integer, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        if integer is not None:
            yield _Token("int", integer, start)
        elif name is not None:
            yield _Token("name", name, start)
        else:
            yield _Token("op", op, start)
        pos = match.end()
    yield _Token("end", "", len(text))


class _Parser:
    """再帰下降パーサ

    文法:
        expr   := term (("+" | "-") term)*
        term   := unary (("*" | "/") unary)*
        unary  := ("-" | "+") unary | power
        power  := atom ("^" INT)?
        atom   := INT | NAME | "(" expr ")"

    "/" の右辺は非零の定数に限る。
    """

    def __init__(self, text: str, ring: PolyRing) -> None:
        self.ring = ring
        self.tokens = list(_tokenize(text))
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, text: str) -> None:
        token = self.current
        if token.kind != "op" or token.text != text:
            raise PolynomialSyntaxError(f"'{text}' が必要です", token.position)
        self.advance()

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise PolynomialSyntaxError("空の式です", self.current.position)
        value = self.expr()
        if self.current.kind != "end":
            raise PolynomialSyntaxError(f"予期しないトークンです: {self.current.text!r}", self.current.position)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.unary()
        while self.current.kind == "op" and self.current.text in "*/":
            token = self.advance()
            rhs = self.unary()
            if token.text == "*":
                value = value * rhs
            else:
                value = self._divide(value, rhs, token.position)
        return value

    def _divide(self, value: Polynomial, rhs: Polynomial, position: int) -> Polynomial:
        domain = self.ring.domain
        if not rhs or homogeneous_degree(rhs) != 0:
            raise PolynomialSyntaxError("'/' の右辺は非零の定数である必要があります", position)
        return value.mul_ground(domain.quo(domain.one, rhs.const()))

    def unary(self) -> Polynomial:
        token = self.current
        if token.kind == "op" and token.text in "+-":
            self.advance()
            operand = self.unary()
            return -operand if token.text == "-" else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            token = self.current
            if token.kind != "int":
                raise PolynomialSyntaxError("'^' の後には非負整数が必要です", token.position)
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "int":
            self.advance()
            return self.ring.constant(int(token.text))
        if token.kind == "name":
            self.advance()
            if token.text not in self.ring.variables:
                raise UnknownVariableError(token.text, token.position)
            return self.ring.gen(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "end":
            raise PolynomialSyntaxError("式が途中で終わっています", token.position)
        raise PolynomialSyntaxError(f"予期しないトークンです: {token.text!r}", token.position)


def poly_parse(text: str, ring: PolyRing) -> Polynomial:
    """文字列を多項式に変換する

    Args:
        text: 多項式の文字列(例: "-x^2*y^2+z^4")
        ring: 多項式環

    Returns:
        正準形の多項式

    Raises:
        PolynomialSyntaxError: 構文エラー(位置付き)
        UnknownVariableError: 未定義の変数
    """
    return _Parser(text, ring).parse()
