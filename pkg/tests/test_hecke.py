import pytest

from doubleflag import (
    GeneratorCase,
    ModuleVector,
    Shape,
    apply_generator,
    classify,
    enumerate_graphs,
    make_graph,
    operator_matrix,
    verify_relations,
    weyl_decompose,
)
from doubleflag.hecke import Basis, generators, reflect
from doubleflag.polynomial import ONE, Q, ZERO

S222 = Shape(2, 2, 2)
CROSS = make_graph(S222, [(1, 2), (2, 1)])
NONCROSS = make_graph(S222, [(1, 1), (2, 2)])
BOTH_MARKED = make_graph(S222, marked_plus=[1, 2])


def idx(shape, g):
    return Basis(shape).index[g]


class TestClassify:
    def test_case_i_marked(self):
        assert classify(BOTH_MARKED, "+", 1) is GeneratorCase.CASE_I

    def test_case_i_free(self):
        g = make_graph(S222, marked_minus=[1, 2])
        assert classify(g, "+", 1) is GeneratorCase.CASE_I

    def test_case_ii_crossing(self):
        assert classify(CROSS, "+", 1) is GeneratorCase.CASE_II

    def test_case_iii_noncrossing(self):
        assert classify(NONCROSS, "+", 1) is GeneratorCase.CASE_III

    def test_degree_ascent_descent(self):
        g = make_graph(Shape(2, 1, 1), marked_plus=[2])
        assert classify(g, "+", 1) is GeneratorCase.CASE_II
        assert classify(reflect(g, "+", 1), "+", 1) is GeneratorCase.CASE_III

    def test_minus_side_mirror(self):
        # edges (1,1),(2,2): on the minus side sigma(1)=1 < sigma(2)=2, no crossing
        assert classify(NONCROSS, "-", 1) is GeneratorCase.CASE_III
        assert classify(CROSS, "-", 1) is GeneratorCase.CASE_II

    def test_case_duality(self):
        for shape in [S222, Shape(3, 2, 2), Shape(2, 3, 3)]:
            for g in enumerate_graphs(shape):
                for side, i in generators(shape):
                    case = classify(g, side, i)
                    dual = classify(reflect(g, side, i), side, i)
                    if case is GeneratorCase.CASE_I:
                        assert dual is GeneratorCase.CASE_I
                    elif case is GeneratorCase.CASE_II:
                        assert dual is GeneratorCase.CASE_III
                    else:
                        assert dual is GeneratorCase.CASE_II

    def test_bad_index(self):
        with pytest.raises(ValueError):
            classify(CROSS, "+", 2)
        with pytest.raises(ValueError):
            classify(CROSS, "x", 1)


class TestApplyGenerator:
    def test_case_i_scales_by_q(self):
        v = ModuleVector.basis_vector(S222, idx(S222, BOTH_MARKED))
        assert apply_generator("+", 1, v) == v.scale(Q)

    def test_case_ii(self):
        v = ModuleVector.basis_vector(S222, idx(S222, CROSS))
        out = apply_generator("+", 1, v)
        assert out.coords == {idx(S222, CROSS): Q - 1, idx(S222, NONCROSS): Q}

    def test_case_iii(self):
        v = ModuleVector.basis_vector(S222, idx(S222, NONCROSS))
        out = apply_generator("+", 1, v)
        assert out.coords == {idx(S222, CROSS): ONE}

    def test_linearity(self):
        a = ModuleVector.basis_vector(S222, idx(S222, CROSS)).scale(Q + 1)
        b = ModuleVector.basis_vector(S222, idx(S222, BOTH_MARKED)).scale(2)
        lhs = apply_generator("+", 1, a + b)
        rhs = apply_generator("+", 1, a) + apply_generator("+", 1, b)
        assert lhs == rhs


class TestOperatorMatrix:
    def test_entries_alphabet(self):
        allowed = {ZERO, ONE, Q, Q - 1}
        for side, i in generators(S222):
            op = operator_matrix(S222, side, i)
            assert {e for row in op.entries for e in row} <= allowed

    def test_column_sparsity(self):
        for shape in [S222, Shape(3, 2, 2)]:
            for side, i in generators(shape):
                op = operator_matrix(shape, side, i)
                n = len(op.entries)
                for c in range(n):
                    assert sum(1 for r in range(n) if op.entries[r][c]) <= 2

    def test_q1_column_sums(self):
        op = operator_matrix(S222, "+", 1)
        spec = op.specialize(1)
        n = len(spec)
        for c in range(n):
            assert sum(spec[r][c] for r in range(n)) == 1

    def test_trivial_shape(self):
        op = operator_matrix(Shape(2, 2, 0), "+", 1)
        assert op.entries == ((Q,),)

    def test_no_generators(self):
        with pytest.raises(ValueError):
            operator_matrix(Shape(1, 1, 1), "+", 1)


class TestRelations:
    @pytest.mark.parametrize("shape", [S222, Shape(3, 2, 2), Shape(2, 2, 0)])
    def test_all_pass(self, shape):
        report = verify_relations(shape)
        assert report, "expected at least one relation"
        assert all(rc.ok for rc in report)

    def test_braid_present_for_3_2(self):
        names = [rc.name for rc in verify_relations(Shape(3, 2, 2))]
        assert any(name.startswith("braid") for name in names)
        assert any(name.startswith("commute") for name in names)


class TestWeylDecompose:
    def test_2_2_2_blocks(self):
        blocks = weyl_decompose(S222)
        sizes = {blk.triple: blk.orbit_size for blk in blocks}
        assert sizes == {
            (0, 0, 2): 1,
            (0, 1, 1): 4,
            (0, 2, 0): 1,
            (1, 0, 1): 4,
            (1, 1, 0): 4,
            (2, 0, 0): 2,
        }
        assert sum(sizes.values()) == 16

    def test_stabilizer_orbit_product(self):
        import math

        for blk in weyl_decompose(Shape(3, 2, 3)):
            assert blk.orbit_size * blk.stabilizer_order == math.factorial(3) * math.factorial(2)

    def test_trivial_shape(self):
        blocks = weyl_decompose(Shape(3, 2, 0))
        assert len(blocks) == 1
        assert blocks[0].orbit_size == 1

    def test_total_is_orbit_count(self):
        from doubleflag import count_orbits

        shape = Shape(5, 3, 4)
        assert sum(blk.orbit_size for blk in weyl_decompose(shape)) == count_orbits(shape)
