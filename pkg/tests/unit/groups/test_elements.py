"""Unit tests for the normal-form product law of G(p, m, n).

The property tests draw random elements and check the group axioms and the
defining relations directly against the multiplication function.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.groups import (
    IDENTITY,
    GroupElement,
    check_relations,
    commutator,
    commutes,
    conjugate,
    element_arrays,
    element_at,
    element_index,
    enumerate_elements,
    generators,
    inverse,
    make_element,
    make_params,
    multiply,
    multiply_arrays,
    power,
)

SMALL_PARAMS = [
    (2, 1, 1),
    (2, 2, 1),
    (2, 2, 2),
    (2, 1, 3),
    (3, 1, 1),
    (3, 2, 2),
    (5, 1, 2),
]


def _exponents(g: GroupElement) -> tuple[int, int, int]:
    return (g.a, g.b, g.c)


@st.composite
def params_and_elements(draw, count: int = 3):
    """A small parameter triple with ``count`` elements of its group."""
    p, m, n = draw(st.sampled_from(SMALL_PARAMS))
    params = make_params(p, m, n)
    elements = [
        GroupElement(
            draw(st.integers(0, params.x_order - 1)),
            draw(st.integers(0, params.y_order - 1)),
            draw(st.integers(0, p - 1)),
        )
        for _ in range(count)
    ]
    return params, elements


class TestProductLaw:
    """Property tests for multiply, inverse and power."""

    @given(params_and_elements())
    @settings(max_examples=200)
    def test_associative(self, drawn):
        """
        Why: The normal-form product is only a group law if it associates
        What: Tests (gh)k == g(hk) on random triples
        How: Draws three elements of a random small group
        """
        params, (g, h, k) = drawn

        assert multiply(multiply(g, h, params), k, params) == multiply(
            g, multiply(h, k, params), params
        )

    @given(params_and_elements(count=1))
    def test_inverse_both_sides(self, drawn):
        """
        Why: inverse() uses the closed form c' = -c - ab
        What: Tests g g^-1 == g^-1 g == identity
        How: Draws one element and multiplies both ways
        """
        params, (g,) = drawn
        g_inv = inverse(g, params)

        assert multiply(g, g_inv, params) == IDENTITY
        assert multiply(g_inv, g, params) == IDENTITY

    @given(params_and_elements(count=1), st.integers(-40, 40), st.integers(-40, 40))
    def test_power_is_additive(self, drawn, i, j):
        """
        Why: power() uses repeated squaring and negative exponents
        What: Tests g^i g^j == g^(i+j)
        How: Draws an element and two signed exponents
        """
        params, (g,) = drawn

        assert multiply(power(g, i, params), power(g, j, params), params) == power(
            g, i + j, params
        )

    @given(params_and_elements(count=2))
    def test_commuting_criterion(self, drawn):
        """
        Why: Commuting pairs define the graph edges
        What: Tests g, h commute exactly when a b' = a' b (mod p)
        How: Compares commutes() with the congruence on random pairs
        """
        params, (g, h) = drawn

        expected = (g.a * h.b - h.a * g.b) % params.p == 0
        assert commutes(g, h, params) is expected

    @given(params_and_elements(count=2))
    def test_commutator_is_central(self, drawn):
        """
        Why: The group is nilpotent of class 2
        What: Tests every commutator is a power of z
        How: Checks the x and y exponents of [g, h] vanish
        """
        params, (g, h) = drawn

        c = commutator(g, h, params)
        assert (c.a, c.b) == (0, 0)


class TestGenerators:
    """Tests for the defining relations."""

    @pytest.mark.parametrize(("p", "m", "n"), SMALL_PARAMS)
    def test_check_relations(self, p, m, n):
        """
        Why: The product law must realise the presentation
        What: Tests every relation check passes on small groups
        How: Runs check_relations and inspects the report
        """
        report = check_relations(make_params(p, m, n), samples=50)

        assert report.ok
        assert report.triples_checked == 50

    def test_commutator_of_generators_is_z(self, g222):
        """
        Why: z is defined as [x, y] = x^-1 y^-1 x y
        What: Tests commutator(x, y) == z and [y, x] == z^-1
        How: Computes both commutators in G(2,2,2)
        """
        x, y, z = generators(g222)

        assert commutator(x, y, g222) == z
        assert commutator(y, x, g222) == inverse(z, g222)

    def test_yx_equals_xy_times_z_inverse(self, g311):
        """
        Why: Moving y past x costs z^-1
        What: Tests y x == x y z^-1 in G(3,1,1)
        How: Multiplies out both sides
        """
        x, y, z = generators(g311)

        lhs = multiply(y, x, g311)
        rhs = multiply(multiply(x, y, g311), inverse(z, g311), g311)
        assert lhs == rhs == GroupElement(1, 1, 2)

    def test_order_eight_products(self, g211):
        """
        Why: G(2,1,1) is the smallest member and is easy to check by hand
        What: Tests x y = (1,1,0), y x = (1,1,1) and that x is its own inverse
        How: Multiplies the generators in both orders
        """
        x, y, _ = generators(g211)

        assert multiply(x, y, g211) == GroupElement(1, 1, 0)
        assert multiply(y, x, g211) == GroupElement(1, 1, 1)
        assert inverse(x, g211) == x
        assert multiply(x, x, g211) == IDENTITY

    def test_conjugate_matches_definition(self, g221):
        """
        Why: Conjugacy classes are orbits of h^-1 g h
        What: Tests y conjugated by x is x^-1 y x, which is y z in G(2,2,1)
        How: Compares conjugate() with the explicit product and the normal form
        """
        x, y, _ = generators(g221)

        assert conjugate(y, x, g221) == multiply(
            multiply(inverse(x, g221), y, g221), x, g221
        )
        assert conjugate(y, x, g221) == GroupElement(0, 1, 1)

    def test_make_element_reduces(self, g221):
        """
        Why: Callers may pass unreduced exponents
        What: Tests exponents are reduced mod p^m, p^n and p
        How: Reduces (-1, 5, 3) in G(2,2,1)
        """
        assert make_element(-1, 5, 3, g221) == GroupElement(3, 1, 1)


class TestIndexing:
    """Tests for element_index, element_at and the vectorised arrays."""

    @pytest.mark.parametrize(("p", "m", "n"), SMALL_PARAMS)
    def test_index_is_bijection(self, p, m, n):
        """
        Why: Graph construction maps elements to array slots by index
        What: Tests enumerate_elements is in index order and element_at inverts it
        How: Walks the whole group
        """
        params = make_params(p, m, n)

        elements = list(enumerate_elements(params))
        assert len(elements) == params.order
        for index, g in enumerate(elements):
            assert element_index(g, params) == index
            assert element_at(index, params) == g
            assert g.is_valid_for(params)

    def test_element_arrays_follow_index_order(self, g311):
        """
        Why: The array columns must line up with element_index
        What: Tests column i holds the exponents of element_at(i)
        How: Compares every row of the arrays
        """
        a, b, c = element_arrays(g311)

        for index in range(g311.order):
            assert GroupElement(int(a[index]), int(b[index]), int(c[index])) == (
                element_at(index, g311)
            )

    @pytest.mark.parametrize(("p", "m", "n"), [(2, 2, 2), (3, 1, 1), (2, 1, 3)])
    def test_multiply_arrays_matches_scalar(self, p, m, n):
        """
        Why: The graph builder relies on the vectorised product
        What: Tests multiply_arrays(rep, all) and (all, rep) agree with multiply
        How: Fixes a representative and compares against scalar products
        """
        params = make_params(p, m, n)
        everything = element_arrays(params)
        rep = element_at(params.order // 3, params)

        left = multiply_arrays(rep, everything, params)
        right = multiply_arrays(everything, rep, params)
        for index, g in enumerate(enumerate_elements(params)):
            assert tuple(int(col[index]) for col in left) == _exponents(
                multiply(rep, g, params)
            )
            assert tuple(int(col[index]) for col in right) == _exponents(
                multiply(g, rep, params)
            )

    def test_str(self):
        """
        Why: Elements appear in log lines and error messages
        What: Tests the normal form rendering
        How: Formats one element
        """
        assert str(GroupElement(1, 0, 2)) == "x^1 y^0 z^2"


