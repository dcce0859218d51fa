import pytest

from doubleflag import (
    Shape,
    certify_theorem,
    classify_orbits,
    convolution_action,
    enumerate_grassmannian,
    gaussian_binomial,
    make_graph,
    rank_matrix,
    rank_profile,
)
from doubleflag.hecke import Basis
from doubleflag.oracle import graph_subspace, rref

S222 = Shape(2, 2, 2)


class TestFieldValidation:
    def test_char_two_rejected(self):
        with pytest.raises(ValueError):
            enumerate_grassmannian(S222, 2)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            enumerate_grassmannian(S222, 9)


class TestGrassmannian:
    def test_counts(self):
        assert gaussian_binomial(4, 2, 3) == 130
        assert gaussian_binomial(4, 2, 5) == 806
        assert len(enumerate_grassmannian(S222, 3)) == 130
        assert len(enumerate_grassmannian(S222, 5)) == 806

    def test_projective_line(self):
        pts = enumerate_grassmannian(Shape(1, 1, 1), 3)
        assert len(pts) == 4
        assert len(set(pts)) == 4

    def test_rref_canonical(self):
        pts = enumerate_grassmannian(S222, 3)
        for w in pts:
            canon, rank = rref(w, 3)
            assert canon == w
            assert rank == 2

    def test_budget(self):
        with pytest.raises(ValueError):
            enumerate_grassmannian(Shape(6, 6, 6), 7)


class TestRankProfile:
    def test_paper_base_point(self):
        shape = Shape(5, 3, 4)
        g = make_graph(shape, [(2, 3), (4, 1)], [5], [2])
        w = graph_subspace(g, 3)
        assert rank_profile(w, shape, 3) == rank_matrix(g).entries

    def test_flag_member(self):
        # W spanned by the first r "+" basis vectors
        shape = Shape(3, 2, 2)
        w = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
        prof = rank_profile(w, shape, 3)
        for i in range(4):
            for j in range(3):
                assert prof[i][j] == min(i, 2)

    def test_every_point_classified(self):
        profiles = {rank_matrix(g).entries for g in Basis(S222).graphs}
        for w in enumerate_grassmannian(S222, 3):
            assert rank_profile(w, S222, 3) in profiles


class TestClassifyOrbits:
    def test_2_2_2(self):
        cls = classify_orbits(S222, 3)
        assert len(cls.sizes) == 16
        assert sum(cls.sizes) == 130

    def test_1_1_1_by_hand(self):
        cls = classify_orbits(Shape(1, 1, 1), 3)
        by_graph = dict(zip(cls.graphs, cls.sizes))
        assert by_graph[make_graph(Shape(1, 1, 1), marked_plus=[1])] == 1
        assert by_graph[make_graph(Shape(1, 1, 1), marked_minus=[1])] == 1
        assert by_graph[make_graph(Shape(1, 1, 1), [(1, 1)])] == 2

    def test_r_zero(self):
        cls = classify_orbits(Shape(2, 2, 0), 3)
        assert cls.sizes == (1,)

    def test_max_dim_orbit_is_largest(self):
        from doubleflag import invariants

        for field in (3, 5):
            cls = classify_orbits(S222, field)
            dims = [invariants(g).dim for g in cls.graphs]
            top = dims.index(max(dims))
            assert cls.sizes[top] == max(cls.sizes)


class TestConvolution:
    def test_case_ii_counts(self):
        g = make_graph(S222, [(1, 2), (2, 1)])
        out = convolution_action(S222, 3, "+", 1, g)
        basis = Basis(S222)
        noncross = make_graph(S222, [(1, 1), (2, 2)])
        assert out.specialize(0) == {
            basis.index[g]: 2,
            basis.index[noncross]: 3,
        }

    def test_case_i_counts(self):
        g = make_graph(S222, marked_plus=[1, 2])
        out = convolution_action(S222, 3, "+", 1, g)
        assert out.specialize(0) == {Basis(S222).index[g]: 3}

    def test_case_iii_counts(self):
        g = make_graph(S222, [(1, 1), (2, 2)])
        out = convolution_action(S222, 3, "+", 1, g)
        cross = make_graph(S222, [(1, 2), (2, 1)])
        assert out.specialize(0) == {Basis(S222).index[cross]: 1}


class TestCertification:
    @pytest.mark.parametrize(
        "shape,fields",
        [
            (Shape(2, 2, 2), (3, 5)),
            (Shape(2, 1, 1), (3, 5, 7)),
            (Shape(3, 2, 2), (3,)),
        ],
    )
    def test_zero_mismatches(self, shape, fields):
        report = certify_theorem(shape, fields)
        assert report.ok
        assert report.mismatches == []

    def test_report_json(self):
        report = certify_theorem(Shape(1, 2, 1), (3,))
        data = report.to_json()
        assert data["ok"] is True
        assert data["records"]
        rec = data["records"][0]
        assert set(rec) == {"field", "generator", "orbit", "case", "expected", "observed"}
