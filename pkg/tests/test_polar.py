import random

from hypothesis import given, settings, strategies as st

from toricmather import (
    EulerSpec,
    PointConfiguration,
    build_face_poset,
    degree_sequence,
    degree_transform_matrix,
    dual_variety_degree,
    euler_from_input,
    mather_cycle,
    mather_from_polar_degrees,
    polar_degrees,
    polar_from_mather_degrees,
    validate,
)

from oracles import random_case


def simplex_poset(n):
    points = [tuple(0 for _ in range(n))]
    for i in range(n):
        points.append(tuple(1 if j == i else 0 for j in range(n)))
    config = validate(PointConfiguration(tuple(points)))
    poset = build_face_poset(config)
    data = euler_from_input(poset, EulerSpec("table", {}))
    return poset, data


class TestDegreeTransforms:
    def test_paper_surface(self):
        assert polar_from_mather_degrees((3, 5, 4)) == (3, 4, 3)
        assert mather_from_polar_degrees((3, 4, 3)) == (3, 5, 4)

    def test_projected_plane(self):
        assert polar_from_mather_degrees((6, 6, 0)) == (6, 12, 6)
        assert mather_from_polar_degrees((6, 12, 6)) == (6, 6, 0)

    def test_formal_basis_vector(self):
        # raw transform of a formal input, not a geometric one
        assert polar_from_mather_degrees((1, 0)) == (1, 2)

    def test_involution_matrix(self):
        for n in range(11):
            matrix = degree_transform_matrix(n)
            size = n + 1
            square = [
                [
                    sum(matrix[i][k] * matrix[k][j] for k in range(size))
                    for j in range(size)
                ]
                for i in range(size)
            ]
            assert square == [
                [1 if i == j else 0 for j in range(size)] for i in range(size)
            ]

    @settings(max_examples=100)
    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=11))
    def test_round_trip(self, degrees):
        degrees = tuple(degrees)
        assert mather_from_polar_degrees(polar_from_mather_degrees(degrees)) == degrees


class TestPolarDegrees:
    def test_paper_surface(self, ex1):
        _, poset, data = ex1
        assert polar_degrees(poset, data) == (3, 4, 3)

    def test_projected_plane(self, ex2):
        _, poset, data = ex2
        assert polar_degrees(poset, data) == (6, 12, 6)

    def test_unit_square(self, square):
        # smooth quadric surface: degrees (2,4,4) give mu = (2,2,2);
        # hand check: mu_1 = 3*2 - 4, mu_2 = 3*2 - 2*4 + 4
        _, poset, data = square
        assert degree_sequence(mather_cycle(data, poset), poset) == (2, 4, 4)
        assert polar_degrees(poset, data) == (2, 2, 2)

    def test_first_degree_is_volume(self):
        rng = random.Random(73)
        for _ in range(25):
            _, poset, data = random_case(rng)
            mu = polar_degrees(poset, data)
            assert mu[0] == poset.volumes[poset.top.id]

    def test_agrees_with_transformed_mather_degrees(self, ex1, ex2, square):
        for _, poset, data in (ex1, ex2, square):
            direct = polar_degrees(poset, data)
            via_cycle = polar_from_mather_degrees(
                degree_sequence(mather_cycle(data, poset), poset)
            )
            assert direct == via_cycle


class TestKnownVarieties:
    """Classical degrees from outside this codebase, as end-to-end goldens."""

    @staticmethod
    def smooth_pipeline(points):
        config = validate(PointConfiguration(tuple(points)))
        poset = build_face_poset(config)
        data = euler_from_input(poset, EulerSpec("table", {}))
        return poset, data

    def test_segre_three_lines_hyperdeterminant(self):
        # P1 x P1 x P1 in P7: the dual is the 2x2x2 hyperdeterminant, degree 4
        from itertools import product

        poset, data = self.smooth_pipeline(product((0, 1), repeat=3))
        assert polar_degrees(poset, data) == (6, 12, 12, 4)
        assert dual_variety_degree(poset, data).degree == 4

    def test_four_cube_hyperdeterminant(self):
        # the 2x2x2x2 hyperdeterminant has degree 24
        from itertools import product

        poset, data = self.smooth_pipeline(product((0, 1), repeat=4))
        dual = dual_variety_degree(poset, data)
        assert dual.degree == 24
        assert dual.is_hypersurface

    def test_rational_normal_curves(self):
        # dual of the degree-d rational normal curve has degree 2d - 2
        for d in range(2, 6):
            poset, data = self.smooth_pipeline((i,) for i in range(d + 1))
            dual = dual_variety_degree(poset, data)
            assert dual.degree == 2 * d - 2
            assert dual.is_hypersurface

    def test_rational_normal_scroll(self):
        # the scroll S(1,2): all five lattice points of the quadrilateral from
        # the double-line fixture; smooth, so the empty table resolves fully
        # through the smoothness default, and the dual degree is again 3
        poset, data = self.smooth_pipeline(
            ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1))
        )
        from toricmather import is_smooth_along

        assert all(is_smooth_along(f, poset) for f in poset.faces)
        assert degree_sequence(mather_cycle(data, poset), poset) == (3, 5, 4)
        assert polar_degrees(poset, data) == (3, 4, 3)
        assert dual_variety_degree(poset, data).degree == 3

    def test_cuspidal_cubic_self_dual(self):
        # the monomial curve (t^2, t^3) is a cuspidal plane cubic, whose dual
        # is again a cuspidal cubic: degree 3
        from toricmather import euler_curve_strategy

        config = validate(PointConfiguration(((0,), (2,), (3,))))
        poset = build_face_poset(config)
        data = euler_curve_strategy(poset)
        assert polar_degrees(poset, data) == (3, 3)
        assert dual_variety_degree(poset, data).degree == 3

    def test_doubled_simplex_is_defective(self):
        # only the vertices of 2*simplex: a re-embedded projective space,
        # dual-defective in every dimension
        for n in range(2, 5):
            points = [tuple(0 for _ in range(n))]
            points += [tuple(2 if j == i else 0 for j in range(n)) for i in range(n)]
            config = validate(PointConfiguration(tuple(points)))
            poset = build_face_poset(config)
            table = {poset.top.id: {f.id: 1 for f in poset.faces}}
            data = euler_from_input(poset, EulerSpec("table", table))
            dual = dual_variety_degree(poset, data)
            assert dual.degree == 0
            assert not dual.is_hypersurface


class TestDualDegree:
    def test_paper_surface(self, ex1):
        _, poset, data = ex1
        dual = dual_variety_degree(poset, data)
        assert dual.degree == 3
        assert dual.is_hypersurface

    def test_projected_plane(self, ex2):
        _, poset, data = ex2
        dual = dual_variety_degree(poset, data)
        assert dual.degree == 6
        assert dual.is_hypersurface

    def test_unit_square(self, square):
        _, poset, data = square
        dual = dual_variety_degree(poset, data)
        assert dual.degree == 2
        assert dual.is_hypersurface

    def test_defective_projective_plane(self):
        # the plane embedded in itself has empty dual: formula gives 0
        poset, data = simplex_poset(2)
        dual = dual_variety_degree(poset, data)
        assert dual.degree == 0
        assert not dual.is_hypersurface

    def test_equals_last_polar_degree(self, ex1, ex2, square):
        for _, poset, data in (ex1, ex2, square):
            mu = polar_degrees(poset, data)
            assert dual_variety_degree(poset, data).degree == mu[-1]

    def test_equals_last_polar_degree_random(self):
        rng = random.Random(79)
        for _ in range(25):
            _, poset, data = random_case(rng)
            mu = polar_degrees(poset, data)
            assert dual_variety_degree(poset, data).degree == mu[-1]
