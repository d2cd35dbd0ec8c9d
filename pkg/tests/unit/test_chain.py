"""次数付き複体・写像錐・Betti表・直列化のテスト"""

import pytest

from trimcx.chain.complex import ChainMapData, GradedFreeComplex, GradedMap
from trimcx.ring.polynomial import PolyRing


def _identity_map(ring: PolyRing, c: GradedFreeComplex, i: int) -> GradedMap:
    from trimcx.linalg.matrices import from_entries

    module = c.module(i)
    matrix = from_entries(ring.poly_domain, (module.rank, module.rank), {(k, k): ring.one for k in range(module.rank)})
    return GradedMap(ring=ring, source=module, target=module, matrix=matrix)


def _identity(ring: PolyRing, c: GradedFreeComplex) -> ChainMapData:
    return ChainMapData(source=c, target=c, maps=tuple(_identity_map(ring, c, i) for i in range(c.length + 1)))


class TestGradedMap:
    """GradedMapのテスト"""

    def test_shape_validated(self, ring_xyz: PolyRing) -> None:
        """行列の形が加群と合わなければValueError"""
        from trimcx.chain.complex import free_module
        from trimcx.linalg.matrices import zero_matrix

        with pytest.raises(ValueError, match="行列の形"):
            GradedMap(
                ring=ring_xyz,
                source=free_module(1, 1),
                target=free_module(0),
                matrix=zero_matrix(ring_xyz.poly_domain, (1, 3)),
            )

    def test_infer_source(self, ring_xyz: PolyRing) -> None:
        """最初の非零成分から定義域の次数を推定する"""
        from trimcx.chain.complex import free_module
        from trimcx.linalg.matrices import poly_matrix

        m = poly_matrix(ring_xyz, [["x^2", "y^3", 0]])
        f = GradedMap.infer_source(ring_xyz, free_module(0), m)
        assert f.source.generator_degrees == (2, 3, 0)
        assert f.is_homogeneous()

    def test_non_homogeneous_entry(self, ring_xyz: PolyRing) -> None:
        """斉次でない成分はComplexError"""
        from trimcx.chain.complex import ComplexError, free_module
        from trimcx.linalg.matrices import poly_matrix

        with pytest.raises(ComplexError, match="斉次でない"):
            GradedMap.infer_source(ring_xyz, free_module(0), poly_matrix(ring_xyz, [["x+y^2"]]))

    def test_unit_entries(self, ring_xyz: PolyRing) -> None:
        """定数成分の検出"""
        from trimcx.chain.complex import free_module
        from trimcx.linalg.matrices import poly_matrix

        matrix = poly_matrix(ring_xyz, [[1, 0]])
        f = GradedMap(ring=ring_xyz, source=free_module(1, 1), target=free_module(1), matrix=matrix)
        assert f.has_unit_entries()
        assert f.is_homogeneous()


class TestKoszulComplex:
    """Koszul複体を使った複体の検証のテスト"""

    def test_ranks_and_degrees(self, ring_xyz: PolyRing) -> None:
        """Koszul(x, y, z) の階数と生成元次数"""
        from trimcx.builders.koszul import koszul_complex

        k = koszul_complex(list(ring_xyz.gens))
        assert k.ranks() == [1, 3, 3, 1]
        assert k.module(2).generator_degrees == (2, 2, 2)
        assert k.module(5).rank == 0

    def test_verify_and_minimal(self, ring_xyz: PolyRing) -> None:
        """d^2 = 0、極小、ランク条件"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import is_minimal, rank_acyclicity_evidence, verify_complex

        k = koszul_complex(list(ring_xyz.gens))
        assert verify_complex(k)
        assert is_minimal(k)
        assert rank_acyclicity_evidence(k, seed=17)

    def test_betti_from_minimal(self, ring_xyz: PolyRing) -> None:
        """Koszul複体のBetti表は 1 3 3 1"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.betti import betti_from_minimal, betti_from_resolution

        k = koszul_complex(list(ring_xyz.gens))
        table = betti_from_minimal(k)
        assert table.entries == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}
        assert betti_from_resolution(k) == table

    def test_rank_evidence_fails_for_truncated_complex(self, ring_xyz: PolyRing) -> None:
        """途中で切ったKoszul複体はランク条件を満たさない"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import rank_acyclicity_evidence, verify_complex

        k = koszul_complex(list(ring_xyz.gens[:2]))
        truncated = GradedFreeComplex.from_differentials(ring_xyz, [k.differentials[0]])
        assert verify_complex(truncated)
        assert not rank_acyclicity_evidence(truncated, seed=1)

    def test_corrupted_differential_detected(self, ring_xyz: PolyRing) -> None:
        """微分全体の符号反転では d^2 = 0 のまま、列の入れ替えでは崩れる"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import verify_complex

        k = koszul_complex(list(ring_xyz.gens))
        negated = GradedFreeComplex(
            ring=k.ring,
            modules=k.modules,
            differentials=(k.differentials[0], k.differentials[1].negate(), k.differentials[2]),
        )
        assert verify_complex(negated)
        swapped = GradedFreeComplex(
            ring=k.ring,
            modules=k.modules,
            differentials=(k.differentials[0], k.differentials[1].columns([1, 0, 2]), k.differentials[2]),
        )
        assert not verify_complex(swapped)

    def test_empty_generators(self) -> None:
        """生成元が空ならComplexError"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import ComplexError

        with pytest.raises(ComplexError, match="空"):
            koszul_complex([])


class TestConstructions:
    """直和・次数シフト・基底の置換のテスト"""

    def test_non_minimal_direct_sum(self, ring_xyz: PolyRing) -> None:
        """自明な複体 R(-1) -1-> R(-1) を足しても c ⊗ k のホモロジーは変わらない"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.betti import betti_from_minimal, betti_from_resolution
        from trimcx.chain.complex import NotMinimalError, direct_sum, free_module, is_minimal
        from trimcx.linalg.matrices import poly_matrix

        trivial_map = GradedMap(
            ring=ring_xyz, source=free_module(1), target=free_module(1), matrix=poly_matrix(ring_xyz, [[1]])
        )
        trivial = GradedFreeComplex.from_differentials(ring_xyz, [trivial_map])
        c = direct_sum(koszul_complex([ring_xyz.gens[0]]), trivial)

        assert c.ranks() == [2, 2]
        assert not is_minimal(c)
        assert betti_from_resolution(c).entries == {(0, 0): 1, (1, 1): 1}
        with pytest.raises(NotMinimalError):
            betti_from_minimal(c)

    def test_shift_degrees(self, ring_xyz: PolyRing) -> None:
        """内部次数だけがずれる"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.betti import betti_from_minimal
        from trimcx.chain.complex import shift_degrees, verify_complex

        shifted = shift_degrees(koszul_complex(list(ring_xyz.gens[:2])), 2)
        assert verify_complex(shifted)
        assert betti_from_minimal(shifted).entries == {(0, 2): 1, (1, 3): 2, (2, 4): 1}

    def test_permute_basis(self, ring_xyz: PolyRing) -> None:
        """基底を並べ替えても複体のまま"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.betti import betti_from_minimal
        from trimcx.chain.complex import ComplexError, permute_basis, verify_complex

        k = koszul_complex(list(ring_xyz.gens))
        permuted = permute_basis(k, 1, [2, 0, 1])
        assert verify_complex(permuted)
        assert betti_from_minimal(permuted) == betti_from_minimal(k)
        with pytest.raises(ComplexError, match="置換"):
            permute_basis(k, 1, [0, 0, 1])

    def test_chain_validation(self, ring_xyz: PolyRing) -> None:
        """微分の個数が合わなければValueError"""
        from trimcx.chain.complex import free_module

        with pytest.raises(ValueError, match="微分の個数"):
            GradedFreeComplex(ring=ring_xyz, modules=(free_module(0), free_module(1)), differentials=())


class TestMappingCone:
    """写像錐のテスト"""

    def test_cone_of_identity_is_exact(self, ring_xyz: PolyRing) -> None:
        """恒等写像の錐は複体で、c ⊗ k のホモロジーは0"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.betti import betti_from_resolution
        from trimcx.chain.complex import check_chain_map, verify_complex
        from trimcx.chain.cone import mapping_cone

        k = koszul_complex([ring_xyz.gens[0]])
        f = _identity(ring_xyz, k)
        assert check_chain_map(f)
        cone = mapping_cone(f)
        assert cone.ranks() == [1, 2, 1]
        assert cone.module(1).generator_degrees == (1, 0)
        assert verify_complex(cone)
        assert betti_from_resolution(cone).entries == {}

    def test_non_commuting_map_rejected(self, ring_xyz: PolyRing) -> None:
        """四角形が可換でなければNonCommutingMapError"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import NonCommutingMapError, check_chain_map
        from trimcx.chain.cone import mapping_cone

        k = koszul_complex([ring_xyz.gens[0]])
        f = ChainMapData(source=k, target=k, maps=(_identity_map(ring_xyz, k, 0),))
        assert not check_chain_map(f)
        with pytest.raises(NonCommutingMapError):
            mapping_cone(f)

    def test_sign_convention_required(self, ring_xyz: PolyRing) -> None:
        """sign=-1 の写像には錐をとらない"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.complex import NonCommutingMapError
        from trimcx.chain.cone import mapping_cone

        k = koszul_complex([ring_xyz.gens[0]])
        f = ChainMapData(source=k, target=k, maps=(_identity_map(ring_xyz, k, 0),), sign=-1)
        with pytest.raises(NonCommutingMapError, match="shift=0"):
            mapping_cone(f)


class TestBettiTable:
    """BettiTableのテスト"""

    def test_from_counts_drops_zero(self) -> None:
        """零は捨て、負はValueError"""
        from trimcx.chain.betti import BettiTable

        table = BettiTable.from_counts({(0, 0): 1, (1, 2): 0})
        assert table.entries == {(0, 0): 1}
        with pytest.raises(ValueError, match="負"):
            BettiTable.from_counts({(1, 2): -1})

    def test_non_positive_entry_rejected(self) -> None:
        """entriesに0を直接渡すとValueError"""
        from trimcx.chain.betti import BettiTable

        with pytest.raises(ValueError, match="正"):
            BettiTable(entries={(0, 0): 0})

    def test_totals_and_pretty(self) -> None:
        """合計とMacaulay2形式の表示"""
        from trimcx.chain.betti import BettiTable

        table = BettiTable(entries={(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1})
        assert table.projective_dimension == 3
        assert table.totals() == [1, 3, 3, 1]
        assert table.pretty() == "\n".join(["       0 1 2 3", "total: 1 3 3 1", "    0: 1 3 3 1"])

    def test_pretty_with_gaps(self) -> None:
        """零の成分は '.'"""
        from trimcx.chain.betti import BettiTable

        table = BettiTable(entries={(0, 0): 1, (1, 2): 4, (2, 3): 1, (2, 4): 6})
        lines = table.pretty().splitlines()
        assert lines[1] == "total: 1 4 7"
        assert lines[2] == "    0: 1 . ."
        assert lines[3] == "    1: . 4 1"
        assert lines[4] == "    2: . . 6"

    def test_pretty_shows_empty_rows(self) -> None:
        """成分のない行も '.' だけの行として表示する"""
        from trimcx.chain.betti import BettiTable

        table = BettiTable(
            entries={(0, 0): 1, (1, 4): 3, (1, 5): 6, (2, 6): 11, (3, 7): 2, (3, 10): 1},
        )
        assert table.pretty().splitlines() == [
            "       0 1  2 3",
            "total: 1 9 11 3",
            "    0: 1 .  . .",
            "    1: . .  . .",
            "    2: . .  . .",
            "    3: . 3  . .",
            "    4: . 6 11 2",
            "    5: . .  . .",
            "    6: . .  . .",
            "    7: . .  . 1",
        ]

    def test_linear_strand(self) -> None:
        """i >= 1 の最小の行"""
        from trimcx.chain.betti import BettiTable, linear_strand

        table = BettiTable(entries={(0, 0): 1, (1, 4): 3, (1, 5): 6, (2, 6): 11, (3, 7): 2, (3, 10): 1})
        assert linear_strand(table) == {1: 3}
        assert linear_strand(table, 4) == {1: 6, 2: 11, 3: 2}
        assert linear_strand(BettiTable()) == {}

    def test_frame_round_trip(self) -> None:
        """DataFrameはBettiSchemaを満たし、同じ表に戻る"""
        from trimcx.chain.betti import BettiTable
        from trimcx.schemas.validators import BettiSchema

        table = BettiTable(entries={(0, 0): 1, (1, 2): 4, (2, 3): 1})
        df = BettiSchema.validate(table.to_frame())
        assert df["i"].to_list() == [0, 1, 2]
        assert BettiTable.from_frame(df) == table


class TestSerialization:
    """複体テキストとBetti JSONのテスト"""

    def test_dump_complex(self, ring_xyz: PolyRing) -> None:
        """Koszul(x, y) のテキスト形式"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.serialization import dump_complex

        text = dump_complex(koszul_complex(list(ring_xyz.gens[:2])))
        assert text == (
            "trimcx-complex 1\n"
            "ring x,y,z over QQ\n"
            "module 0: 0\n"
            "module 1: 1 1\n"
            "module 2: 2\n"
            "d 1: 1x2\n"
            "x, y\n"
            "d 2: 2x1\n"
            "-y\n"
            "x\n"
        )

    def test_load_complex(self, ring_xyz: PolyRing) -> None:
        """読み込んだ複体は元の複体と一致する"""
        from trimcx.builders.koszul import koszul_complex
        from trimcx.chain.serialization import dump_complex, load_complex

        k = koszul_complex(list(ring_xyz.gens))
        loaded = load_complex(dump_complex(k))
        assert loaded.modules == k.modules
        assert all(a.matrix.to_dod() == b.matrix.to_dod() for a, b in zip(loaded.differentials, k.differentials))

    def test_load_complex_errors(self) -> None:
        """不正なテキストは行番号付きのSerializationError"""
        from trimcx.chain.serialization import SerializationError, load_complex

        with pytest.raises(SerializationError, match="空の入力"):
            load_complex("")
        with pytest.raises(SerializationError) as exc_info:
            load_complex("trimcx-complex 2\nring x over QQ\nmodule 0: 0\n")
        assert exc_info.value.line == 1
        with pytest.raises(SerializationError) as exc_info:
            load_complex("trimcx-complex 1\nring x,y over QQ\nmodule 0: 0\nmodule 1: 1 1\nd 1: 1x2\nx\n")
        assert exc_info.value.line == 6

    def test_ring_header(self) -> None:
        """環の宣言の解析"""
        from trimcx.chain.serialization import SerializationError, parse_ring_header

        ring = parse_ring_header("ring a b c over gf:7")
        assert ring.variables == ("a", "b", "c")
        assert ring.field.characteristic == 7
        with pytest.raises(SerializationError, match="環の宣言"):
            parse_ring_header("vars x,y")

    def test_betti_json_is_stable(self) -> None:
        """読み込んで再出力するとバイト単位で一致する"""
        from trimcx.chain.betti import BettiTable
        from trimcx.chain.serialization import dump_betti_json, load_betti_json

        table = BettiTable(entries={(0, 0): 1, (1, 2): 4, (2, 3): 1, (2, 4): 6, (3, 5): 5, (4, 6): 1})
        text = dump_betti_json(table, 10, "QQ")
        loaded, ring = load_betti_json(text)
        assert loaded == table
        assert ring == {"field": "QQ", "vars": 10}
        assert dump_betti_json(loaded, ring["vars"], ring["field"]) == text
        assert text.endswith("}\n")

    def test_json_compact_by_default(self) -> None:
        """既定は1行の形式で、indentを渡すと字下げする"""
        from trimcx.chain.betti import BettiTable
        from trimcx.chain.serialization import dump_betti_json, dumps_json

        text = dump_betti_json(BettiTable(entries={(0, 0): 1, (1, 2): 3}), 3, "gf:32003")
        assert text == (
            '{"betti":[{"i":0,"j":0,"v":1},{"i":1,"j":2,"v":3}],"ring":{"field":"gf:32003","vars":3}}\n'
        )
        assert dumps_json({"b": 1, "a": 2}, indent=2) == '{\n  "a": 2,\n  "b": 1\n}\n'

    def test_betti_json_missing_keys(self) -> None:
        """必須キーがなければValueError"""
        from trimcx.chain.serialization import load_betti_json

        with pytest.raises(ValueError, match="betti"):
            load_betti_json('{"betti": []}')
