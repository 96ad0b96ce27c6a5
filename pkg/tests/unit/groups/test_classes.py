"""Unit tests for centers and conjugacy classes."""

import pytest

from src.groups import (
    GroupElement,
    OrderCapExceededError,
    center,
    class_of,
    conjugacy_classes,
    element_index,
    enumerate_elements,
    generators,
    make_params,
    noncentral_classes,
)


class TestCenter:
    """Tests for center()."""

    def test_center_of_order_eight_group(self, g211):
        """
        Why: G(2,1,1) is small enough to check by hand
        What: Tests the center is {1, z}
        How: Compares with the two explicit elements
        """
        assert center(g211) == {GroupElement(0, 0, 0), GroupElement(0, 0, 1)}

    @pytest.mark.parametrize(
        ("p", "m", "n"), [(2, 2, 1), (2, 2, 2), (2, 1, 3), (3, 1, 1), (3, 2, 1)]
    )
    def test_center_size(self, p, m, n):
        """
        Why: The center is where both exponents a and b vanish mod p
        What: Tests |Z(G)| = p^(m+n-1)
        How: Enumerates the center of several groups
        """
        params = make_params(p, m, n)

        members = center(params)
        assert len(members) == p ** (m + n - 1)
        assert all(g.a % p == 0 and g.b % p == 0 for g in members)

    def test_center_respects_order_cap(self, g222):
        """
        Why: Enumeration must not run past the configured cap
        What: Tests center() raises OrderCapExceededError
        How: Asks for G(2,2,2) with max_order 16
        """
        with pytest.raises(OrderCapExceededError):
            center(g222, max_order=16)


class TestClassOf:
    """Tests for class_of()."""

    def test_class_of_generator(self, g221):
        """
        Why: conjugacy_classes builds every class through class_of
        What: Tests the class of x in G(2,2,1) is {x, xz} and matches the
             partition entry holding x
        How: Compares class_of(x) with the class found by conjugacy_classes
        """
        x, _, _ = generators(g221)

        cls = class_of(x, g221)

        assert cls.members == {GroupElement(1, 0, 0), GroupElement(1, 0, 1)}
        assert cls.representative == x
        assert cls in conjugacy_classes(g221)


class TestConjugacyClasses:
    """Tests for conjugacy_classes()."""

    @pytest.mark.parametrize(
        ("p", "m", "n"), [(2, 1, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1), (5, 1, 1)]
    )
    def test_partition(self, p, m, n):
        """
        Why: Classes must partition the group exactly once
        What: Tests members are disjoint, cover G, and sizes lie in {1, p}
        How: Collects every member and checks sizes
        """
        params = make_params(p, m, n)

        classes = conjugacy_classes(params)
        seen: set[GroupElement] = set()
        for cls in classes:
            assert not (seen & cls.members)
            seen |= cls.members
            assert cls.size in (1, p)
        assert seen == set(enumerate_elements(params))

    def test_class_counts_for_order_32(self, g222):
        """
        Why: G(2,2,2) has 8 central elements and 12 noncentral classes of size 2
        What: Tests the class count and the noncentral count
        How: Counts central and noncentral classes
        """
        classes = conjugacy_classes(g222)

        assert len(classes) == 20
        assert sum(cls.is_central for cls in classes) == 8
        assert len(noncentral_classes(classes)) == 12

    def test_representatives_are_ordered_minima(self, g311):
        """
        Why: Stable class ids keep graph vertices stable across runs
        What: Tests each representative is its class's lowest-index member
             and classes are ordered by representative index
        How: Compares indices for G(3,1,1)
        """
        classes = conjugacy_classes(g311)

        indices = [element_index(cls.representative, g311) for cls in classes]
        assert indices == sorted(indices)
        for cls in classes:
            assert element_index(cls.representative, g311) == min(
                element_index(g, g311) for g in cls.members
            )

    def test_noncentral_class_shape(self, g221):
        """
        Why: Conjugation only moves the z exponent
        What: Tests a noncentral class is {(a, b, c) : c in Z_p}
        How: Computes the class of x y in G(2,2,1)
        """
        cls = class_of(GroupElement(1, 1, 0), g221)

        assert cls.members == frozenset({GroupElement(1, 1, 0), GroupElement(1, 1, 1)})
        assert cls.representative == GroupElement(1, 1, 0)

    def test_order_cap(self, g222):
        """
        Why: Class enumeration is the expensive oracle stage
        What: Tests the cap is enforced before enumeration
        How: Requests G(2,2,2) with max_order 8
        """
        with pytest.raises(OrderCapExceededError):
            conjugacy_classes(g222, max_order=8)
