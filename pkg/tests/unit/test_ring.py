"""係数体と多項式環のテスト"""

import pytest

from trimcx.ring.polynomial import PolyRing


class TestCoefficientField:
    """CoefficientFieldのテスト"""

    def test_parse_rationals(self) -> None:
        """'QQ'でrationalsを返す"""
        from trimcx.ring.field import CoefficientField

        field = CoefficientField.parse("QQ")
        assert field.kind == "rationals"
        assert field.characteristic == 0
        assert field.label == "QQ"
        assert not field.is_finite

    def test_parse_prime_field(self) -> None:
        """'gf:32003'でprime-fieldを返す"""
        from trimcx.ring.field import CoefficientField

        field = CoefficientField.parse("gf:32003")
        assert field.kind == "prime-field"
        assert field.characteristic == 32003
        assert field.label == "gf:32003"
        assert field == CoefficientField.prime()

    def test_parse_rejects_composite(self) -> None:
        """素数でない標数でValueError"""
        from trimcx.ring.field import CoefficientField

        with pytest.raises(ValueError, match="素数"):
            CoefficientField.parse("gf:4")

    def test_parse_rejects_unknown_format(self) -> None:
        """不正な形式でValueError"""
        from trimcx.ring.field import CoefficientField

        with pytest.raises(ValueError, match="不正な体指定です"):
            CoefficientField.parse("GF(7)")


class TestPolyRing:
    """PolyRingのテスト"""

    def test_duplicate_variables_rejected(self) -> None:
        """変数名の重複でValueError"""
        from trimcx.ring.polynomial import PolyRing

        with pytest.raises(ValueError, match="重複"):
            PolyRing(variables=("x", "x"))

    def test_gens_and_constant(self) -> None:
        """生成元と定数"""
        from trimcx.ring.polynomial import PolyRing

        ring = PolyRing(variables=("x", "y"))
        x, y = ring.gens
        assert ring.ngens == 2
        assert ring.gen("y") == y
        assert ring.constant(3) == 3 * ring.one
        assert ring.owns(x + y)

    def test_unknown_gen(self) -> None:
        """未定義の変数名でUnknownVariableError"""
        from trimcx.ring.polynomial import PolyRing, UnknownVariableError

        ring = PolyRing(variables=("x", "y"))
        with pytest.raises(UnknownVariableError):
            ring.gen("w")

    def test_monomial_basis_grevlex(self) -> None:
        """次数2の単項式はgrevlex降順で6個"""
        from trimcx.ring.polynomial import monomial_basis

        basis = monomial_basis(3, 2)
        assert len(basis) == 6
        assert basis[0] == (2, 0, 0)
        assert basis[1] == (1, 1, 0)
        assert basis[-1] == (0, 0, 2)
        assert monomial_basis(3, -1) == ()


class TestParseAndFormat:
    """多項式の構文解析と印字のテスト"""

    def test_round_trip(self, ring_xyz: PolyRing) -> None:
        """印字した文字列は同じ多項式に戻る"""
        from trimcx.ring.polynomial import poly_format

        p = ring_xyz.parse("-x^2*y^2+z^4")
        x, y, z = ring_xyz.gens
        assert p == -(x**2) * y**2 + z**4
        assert poly_format(p) == "-x^2*y^2+z^4"
        assert ring_xyz.parse(poly_format(p)) == p

    def test_parentheses_and_powers(self, ring_xyz: PolyRing) -> None:
        """括弧と冪を展開する"""
        x, y, _ = ring_xyz.gens
        assert ring_xyz.parse("(x+y)^2") == x**2 + 2 * x * y + y**2

    def test_rational_coefficient(self, ring_xyz: PolyRing) -> None:
        """定数による除算は有理係数になる"""
        from trimcx.ring.polynomial import poly_format

        p = ring_xyz.parse("x/2")
        assert poly_format(p) == "1/2*x"

    def test_zero(self, ring_xyz: PolyRing) -> None:
        """零多項式は '0'"""
        from trimcx.ring.polynomial import poly_format

        assert not ring_xyz.parse("x-x")
        assert poly_format(ring_xyz.zero) == "0"

    def test_prime_field_reduces_coefficients(self) -> None:
        """GF(7)では係数が7を法として簡約される"""
        from trimcx.ring.field import CoefficientField
        from trimcx.ring.polynomial import PolyRing, poly_format

        ring = PolyRing(variables=("x",), field=CoefficientField.prime(7))
        assert poly_format(ring.parse("8*x")) == "x"
        assert not ring.parse("7*x")

    def test_syntax_error_position(self, ring_xyz: PolyRing) -> None:
        """構文エラーは位置を持つ"""
        from trimcx.ring.polynomial import PolynomialSyntaxError

        with pytest.raises(PolynomialSyntaxError) as exc_info:
            ring_xyz.parse("x+*y")
        assert exc_info.value.position == 2

    def test_unknown_variable(self, ring_xyz: PolyRing) -> None:
        """未定義の変数でUnknownVariableError"""
        from trimcx.ring.polynomial import UnknownVariableError

        with pytest.raises(UnknownVariableError) as exc_info:
            ring_xyz.parse("x+w")
        assert exc_info.value.name == "w"
        assert exc_info.value.position == 2

    def test_division_by_variable_rejected(self, ring_xyz: PolyRing) -> None:
        """変数による除算は構文エラー"""
        from trimcx.ring.polynomial import PolynomialSyntaxError

        with pytest.raises(PolynomialSyntaxError, match="定数"):
            ring_xyz.parse("x/y")

    def test_empty_expression(self, ring_xyz: PolyRing) -> None:
        """空文字列は構文エラー"""
        from trimcx.ring.polynomial import PolynomialSyntaxError

        with pytest.raises(PolynomialSyntaxError, match="空の式"):
            ring_xyz.parse("   ")


class TestPolynomialHelpers:
    """斉次性・特殊化・環の一致のテスト"""

    def test_homogeneous_degree(self, ring_xyz: PolyRing) -> None:
        """斉次なら次数、非斉次・零はNone"""
        from trimcx.ring.polynomial import homogeneous_degree, is_homogeneous

        assert homogeneous_degree(ring_xyz.parse("x^2+y*z")) == 2
        assert homogeneous_degree(ring_xyz.parse("x^2+y")) is None
        assert homogeneous_degree(ring_xyz.zero) is None
        assert is_homogeneous(ring_xyz.zero)
        assert is_homogeneous(ring_xyz.parse("x*y"), 2)
        assert not is_homogeneous(ring_xyz.parse("x*y"), 3)

    def test_specialize(self, ring_xyz: PolyRing) -> None:
        """点への代入"""
        from trimcx.ring.polynomial import specialize

        p = ring_xyz.parse("x^2*y+z")
        assert specialize(p, [2, 3, 5]) == ring_xyz.domain.convert(17)

    def test_specialize_wrong_length(self, ring_xyz: PolyRing) -> None:
        """点の長さが合わなければValueError"""
        from trimcx.ring.polynomial import specialize

        with pytest.raises(ValueError, match="点の長さ"):
            specialize(ring_xyz.parse("x"), [1, 2])

    def test_ring_mismatch(self, ring_xyz: PolyRing) -> None:
        """異なる環の積でRingMismatchError"""
        from trimcx.ring.polynomial import PolyRing, RingMismatchError, poly_mul

        other = PolyRing(variables=("u", "v"))
        with pytest.raises(RingMismatchError):
            poly_mul(ring_xyz.gens[0], other.gens[0])


_SAMPLES = ("x^2-3*y*z", "x/2+y-z", "y^3+x*z^2-7", "2*x*y*z+1")


class TestRingAxioms:
    """係数体上の多項式環の演算のテスト"""

    @pytest.mark.parametrize("field", ["QQ", "gf:32003"])
    def test_ring_laws(self, field: str) -> None:
        """加法・乗法の結合則と可換則、分配則"""
        from trimcx.ring.field import CoefficientField

        ring = PolyRing(variables=("x", "y", "z"), field=CoefficientField.parse(field))
        polys = [ring.parse(text) for text in _SAMPLES]
        for a in polys:
            assert a + ring.zero == a
            assert a * ring.one == a
            assert a - a == ring.zero
            for b in polys:
                assert a + b == b + a
                assert a * b == b * a
                for c in polys:
                    assert (a + b) + c == a + (b + c)
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c

    def test_degrees_add_under_product(self, ring_xyz: PolyRing) -> None:
        """斉次式の積の次数は次数の和"""
        from trimcx.ring.polynomial import homogeneous_degree

        forms = [ring_xyz.parse(text) for text in ("x^2-y*z", "x+y+z", "x*y*z-z^3")]
        for a in forms:
            for b in forms:
                assert homogeneous_degree(a * b) == homogeneous_degree(a) + homogeneous_degree(b)

    def test_fermat_in_small_prime(self) -> None:
        """GF(7) では a^7 = a、(x+y)^7 = x^7 + y^7"""
        from trimcx.ring.field import CoefficientField

        ring = PolyRing(variables=("x", "y"), field=CoefficientField.prime(7))
        for a in range(1, 7):
            assert ring.constant(a) ** 7 == ring.constant(a)
        assert ring.parse("(x+y)^7") == ring.parse("x^7+y^7")

    def test_fermat_in_default_prime(self, ring_xyz_gf: PolyRing) -> None:
        """GF(32003) の非零元は a^(p-1) = 1"""
        for a in (2, 3, 12345, 32002):
            assert ring_xyz_gf.constant(a) ** 32002 == ring_xyz_gf.one
