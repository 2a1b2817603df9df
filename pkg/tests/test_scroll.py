import pytest
import sympy
from hypothesis import given, settings, strategies as st

from linkgenus.errors import DomainError, InvariantViolationError, ScrollShapeError, VariantMismatchError
from linkgenus.scroll import (
    H_TILDE,
    R_TILDE,
    ClassGroupKind,
    ConeClass,
    FreeClass,
    ResolutionClass,
    VertexDivisor,
    balanced_threefold,
    canonical_class,
    canonical_characteristic,
    ci_curve_invariants,
    class_group,
    divisor_degree,
    integral_total_transform,
    intersection_number,
    is_reflexive_pair,
    make_scroll,
    proper_transform_line_vertex,
    vertex_multiplicity,
)

H, R = sympy.symbols("H R")


def chow_oracle(scroll, classes):
    """Expand the product in Z[H, R] and read off the degree via R^2 = 0, H^r = f, H^(r-1) R = 1."""
    expr = sympy.expand(sympy.Mul(*[c.alpha * H + c.beta * R for c in classes]))
    poly = sympy.Poly(expr, H, R)
    r = scroll.r
    return int(poly.coeff_monomial(H**r)) * scroll.f + int(poly.coeff_monomial(H ** (r - 1) * R))


def line_vertex(f):
    return make_scroll(f + 2, [0, 0, f])


class TestScroll:
    def test_shape(self):
        s = make_scroll(5, [2, 0, 1])
        assert s.a == (0, 1, 2) and s.r == 3 and s.f == 3
        assert s.vertex_dim == 0 and s.vertex_codim == 3
        assert not s.cyclic_class_group

    def test_smooth(self):
        s = make_scroll(4, [1, 2])
        assert s.smooth and s.vertex_codim is None

    def test_cone_over_conic_is_cyclic(self):
        cone = make_scroll(3, [0, 2])
        assert cone.vertex_dim == 0 and cone.vertex_codim == 2
        cg = class_group(cone)
        assert cg.kind is ClassGroupKind.CYCLIC and cg.rank == 1 and cg.relation == "H = 2R"

    def test_line_vertex_threefold(self):
        s = line_vertex(3)
        assert s.vertex_dim == 1 and s.vertex_codim == 2 and s.cyclic_class_group

    @pytest.mark.parametrize("n,a", [(5, [0, 1, 1]), (4, [-1, 2, 2]), (3, [0, 0])])
    def test_bad_shapes(self, n, a):
        with pytest.raises(DomainError):
            make_scroll(n, a)

    def test_balanced(self):
        assert balanced_threefold(5).a == (1, 1, 1)
        assert balanced_threefold(7).a == (1, 2, 2)
        assert balanced_threefold(n := 9).f == n - 2


class TestIntersections:
    def test_lattice_rules(self):
        s = make_scroll(5, [1, 1, 1])
        assert intersection_number(s, [H_TILDE] * 3) == 3
        assert intersection_number(s, [H_TILDE, H_TILDE, R_TILDE]) == 1
        assert intersection_number(s, [H_TILDE, R_TILDE, R_TILDE]) == 0

    @settings(max_examples=150, deadline=None)
    @given(
        st.integers(2, 4),
        st.integers(1, 6),
        st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=4, max_size=4),
    )
    def test_against_chow_ring(self, r, f, pairs):
        scroll = make_scroll(f + r - 1, [0] * (r - 1) + [f])
        classes = [ResolutionClass(a, b) for a, b in pairs[:r]]
        assert intersection_number(scroll, classes) == chow_oracle(scroll, classes)

    def test_wrong_arity(self):
        with pytest.raises(DomainError):
            intersection_number(make_scroll(5, [1, 1, 1]), [H_TILDE, H_TILDE])

    def test_class_arithmetic(self):
        assert 3 * H_TILDE - R_TILDE == ResolutionClass(3, -1)
        assert -(H_TILDE + R_TILDE) == ResolutionClass(-1, -1)


class TestCanonical:
    def test_free(self):
        s = make_scroll(5, [1, 1, 1])
        assert canonical_class(s) == FreeClass(-3, 1)
        assert divisor_degree(s, canonical_class(s)) == -8
        assert canonical_characteristic(s) == 3

    def test_cyclic(self):
        s = line_vertex(3)
        assert canonical_class(s) == ConeClass(-8)
        assert divisor_degree(s, ConeClass(-8)) == -8

    def test_variant_mismatch(self):
        with pytest.raises(VariantMismatchError):
            divisor_degree(make_scroll(5, [1, 1, 1]), ConeClass(2))
        with pytest.raises(VariantMismatchError):
            divisor_degree(line_vertex(3), FreeClass(1, 0))


class TestTransforms:
    @pytest.mark.parametrize("f", range(2, 7))
    def test_total_transform_degree(self, f):
        for scroll in (make_scroll(f + 1, [0, f]), line_vertex(f)):
            for d in range(0, 60):
                cls = integral_total_transform(scroll, d)
                assert intersection_number(scroll, [cls] + [H_TILDE] * (scroll.r - 1)) == d

    def test_total_transform_value(self):
        assert integral_total_transform(line_vertex(3), 9) == ResolutionClass(3, 0)
        assert integral_total_transform(line_vertex(3), 7) == ResolutionClass(3, -2)

    def test_needs_codim_two(self):
        with pytest.raises(VariantMismatchError):
            integral_total_transform(make_scroll(5, [0, 1, 2]), 3)

    def test_proper_transform(self):
        assert proper_transform_line_vertex(line_vertex(3), 3, 1) == ResolutionClass(2, 3)
        with pytest.raises(DomainError):
            proper_transform_line_vertex(line_vertex(3), 2, 3)
        with pytest.raises(ScrollShapeError):
            proper_transform_line_vertex(make_scroll(3, [0, 2]), 2, 1)


class TestVertexMultiplicity:
    def test_hand_value(self):
        s = line_vertex(3)
        assert vertex_multiplicity(s, VertexDivisor(3, 1), VertexDivisor(11, 1)) == 3
        assert vertex_multiplicity(s, VertexDivisor(3, 2), VertexDivisor(ruling=True)) == 2
        assert vertex_multiplicity(s, VertexDivisor(ruling=True), VertexDivisor(3, 2)) == 2

    def test_ruling_pair_rejected(self):
        with pytest.raises(ScrollShapeError):
            vertex_multiplicity(line_vertex(2), VertexDivisor(ruling=True), VertexDivisor(ruling=True))

    def test_multiplicity_zero_away_from_vertex(self):
        s = line_vertex(4)
        assert vertex_multiplicity(s, VertexDivisor(2, 0), VertexDivisor(5, 3)) == 0


class TestCompleteIntersection:
    def test_anchor(self):
        assert ci_curve_invariants(balanced_threefold(5), 3, 11) == (99, 562)

    def test_twisted_cubic_section(self):
        # (1, 1) on the Segre-like cubic 3-fold: a twisted cubic
        assert ci_curve_invariants(balanced_threefold(5), 1, 1) == (3, 0)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(4, 10), st.integers(1, 8), st.integers(1, 8))
    def test_adjunction(self, n, a, b):
        # 2p - 2 = (K + aH + bH) . aH . bH with K = -3H + (f - 2)R
        scroll = balanced_threefold(n)
        deg, p = ci_curve_invariants(scroll, a, b)
        k_plus = ResolutionClass(a + b - 3, scroll.f - 2)
        assert 2 * p - 2 == intersection_number(scroll, [k_plus, a * H_TILDE, b * H_TILDE])
        assert deg == intersection_number(scroll, [a * H_TILDE, b * H_TILDE, H_TILDE])

    def test_needs_threefold(self):
        with pytest.raises(ScrollShapeError):
            ci_curve_invariants(make_scroll(4, [1, 2]), 1, 1)

    def test_reflexive(self):
        assert is_reflexive_pair(make_scroll(5, [1, 1, 1]), 2, 7)
        assert is_reflexive_pair(line_vertex(3), 2, 2)
        assert not is_reflexive_pair(line_vertex(3), 2, 3)


def test_invariant_violation_is_value_error():
    assert issubclass(InvariantViolationError, ValueError)
