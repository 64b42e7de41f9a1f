import pytest
from hypothesis import given
from hypothesis import strategies as st

from varproj import l2_cone
from varproj.descriptors import SingletonSet
from varproj.l2_cone import OrderIntervalSet, SelfExclusionPartial
from varproj.vectors import SparseVector

nonzero = st.floats(min_value=0.1, max_value=3.0).flatmap(
    lambda v: st.sampled_from([v, -v])
)
sparse = st.dictionaries(st.integers(1, 8), nonzero, min_size=0, max_size=5).map(SparseVector)


class TestProjection:
    def test_frozen(self):
        assert l2_cone.project(SparseVector({1: 2.0, 3: -1.0})) == SparseVector({1: 2.0})
        assert l2_cone.project(SparseVector({2: -5.0})).is_zero()

    @given(sparse)
    def test_idempotent_feasible(self, x):
        p = l2_cone.project(x)
        assert all(v > 0.0 for _, v in p.items())
        assert l2_cone.project(p) == p

    @given(sparse, sparse)
    def test_nonexpansive(self, u, v):
        from varproj.vectors import norm

        assert norm(l2_cone.project(u) - l2_cone.project(v)) <= norm(u - v) + 1e-12


class TestSupportPredicates:
    def test_as_support(self):
        assert l2_cone.as_support([3, 1]) == frozenset({1, 3})
        with pytest.raises(ValueError):
            l2_cone.as_support([])
        with pytest.raises(ValueError):
            l2_cone.as_support([0, 1])

    def test_has_positive_support(self):
        M = frozenset({1, 3})
        assert l2_cone.has_positive_support(SparseVector({1: 0.5, 3: 2.0}), M)
        assert not l2_cone.has_positive_support(SparseVector({1: 0.5, 3: -2.0}), M)
        assert not l2_cone.has_positive_support(SparseVector({1: 0.5}), M)
        assert not l2_cone.has_positive_support(SparseVector({1: 0.5, 2: 1.0, 3: 2.0}), M)

    def test_nonnegative_off(self):
        M = frozenset({1})
        assert l2_cone.nonnegative_off(SparseVector({1: -4.0, 2: 0.5}), M)
        assert not l2_cone.nonnegative_off(SparseVector({1: 4.0, 2: -0.5}), M)
        assert l2_cone.nonnegative_off(SparseVector.zero(), M)

    def test_positive_mask(self):
        x = SparseVector({1: 2.0, 2: -1.0})
        w = SparseVector({1: 5.0, 2: 7.0, 3: 1.0})
        assert l2_cone.positive_mask(x, w) == SparseVector({1: 5.0})


class TestOrder:
    def test_examples(self):
        M = frozenset({1})
        y = SparseVector({1: 1.0, 2: 0.5})
        assert l2_cone.order_leq(SparseVector({1: 1.0, 2: 0.25}), y, M)
        assert l2_cone.order_leq(SparseVector({1: 1.0}), y, M)
        assert not l2_cone.order_leq(SparseVector({1: 0.9, 2: 0.25}), y, M)
        assert not l2_cone.order_leq(SparseVector({1: 1.0, 2: 0.6}), y, M)
        # off-support coordinates may drop below zero without breaking
        # the componentwise comparison
        assert l2_cone.order_leq(SparseVector({1: 1.0, 2: -1.0}), y, M)

    @given(sparse)
    def test_reflexive(self, z):
        assert l2_cone.order_leq(z, z, frozenset({1, 2}))

    @given(sparse, sparse)
    def test_antisymmetric(self, a, b):
        M = frozenset({1})
        if l2_cone.order_leq(a, b, M) and l2_cone.order_leq(b, a, M):
            assert a == b

    @given(sparse, sparse, sparse)
    def test_transitive(self, a, b, c):
        M = frozenset({2})
        if l2_cone.order_leq(a, b, M) and l2_cone.order_leq(b, c, M):
            assert l2_cone.order_leq(a, c, M)


class TestCoderivative:
    def setup_method(self):
        self.M = frozenset({1})
        self.xbar = SparseVector({1: 1.0})

    def test_zero_target_any_point(self):
        # the zero target never constrains the base point
        bad = SparseVector({2: -3.0})
        d = l2_cone.coderivative(bad, self.M, SparseVector.zero())
        assert isinstance(d, SingletonSet)
        assert d.contains(SparseVector.zero()) is True
        assert d.contains(SparseVector({1: 0.1})) is False

    def test_base_point_validation(self):
        with pytest.raises(ValueError):
            l2_cone.coderivative(SparseVector({1: -1.0}), self.M, SparseVector({1: 1.0}))
        with pytest.raises(ValueError):
            l2_cone.coderivative(SparseVector({1: 1.0, 2: 1.0}), self.M, SparseVector({1: 1.0}))

    def test_order_interval_frozen(self):
        y = SparseVector({1: 1.0, 2: 0.5})
        d = l2_cone.coderivative(self.xbar, self.M, y)
        assert isinstance(d, OrderIntervalSet)
        assert d.contains(y) is True
        assert d.contains(SparseVector({1: 1.0, 2: 0.25})) is True
        assert d.contains(SparseVector({1: 1.0})) is True
        assert d.contains(SparseVector({1: 1.0, 2: 0.6})) is False
        assert d.contains(SparseVector({1: 0.9, 2: 0.25})) is False
        assert d.contains(SparseVector({1: 1.0, 2: -0.1})) is False
        assert d.is_singleton is False

    def test_order_interval_members_are_distinct(self):
        y = SparseVector({1: -0.5, 2: 0.5, 4: 1.0})
        d = l2_cone.coderivative(self.xbar, self.M, y)
        members = d.example_members(limit=4)
        assert len(members) >= 2
        assert len(set(members)) == len(members)
        for z in members:
            assert d.contains(z) is True

    def test_collapse_to_singleton(self):
        y = SparseVector({1: -2.0})
        d = l2_cone.coderivative(self.xbar, self.M, y)
        assert isinstance(d, OrderIntervalSet) and d.is_singleton
        assert d.contains(y) is True
        assert d.contains(y + SparseVector({2: 0.5})) is False
        assert d.example_members() == [y]

    def test_self_exclusion(self):
        y = SparseVector({1: 0.4, 2: -0.7})
        d = l2_cone.coderivative(self.xbar, self.M, y)
        assert isinstance(d, SelfExclusionPartial)
        assert d.contains(y) is False
        assert d.contains(SparseVector.zero()) is None
        assert d.contains(SparseVector({1: 0.4})) is None

    def test_json_variants(self):
        y_in = SparseVector({1: 1.0, 2: 0.5})
        j = l2_cone.coderivative(self.xbar, self.M, y_in).to_json()
        assert j["variant"] == "order_interval"
        assert j["y"] == [[1, 1.0], [2, 0.5]] and j["support"] == [1]
        y_out = SparseVector({2: -0.7})
        j = l2_cone.coderivative(self.xbar, self.M, y_out).to_json()
        assert j["variant"] == "partial" and j["rule"] == "l2-self-exclusion"

    def test_interval_validates_bound(self):
        with pytest.raises(ValueError):
            OrderIntervalSet(bound=SparseVector({2: -1.0}), support=frozenset({1}))


class TestSubspaceRestriction:
    def test_identity_on_supported_targets(self):
        M = frozenset({1, 3})
        xbar = SparseVector({1: 0.5, 3: 2.0})
        y = SparseVector({1: -1.0, 3: 4.0})
        assert l2_cone.coderivative_on_subspace(xbar, M, y) == y

    def test_requires_supported_target(self):
        M = frozenset({1})
        xbar = SparseVector({1: 0.5})
        with pytest.raises(ValueError):
            l2_cone.coderivative_on_subspace(xbar, M, SparseVector({2: 1.0}))

    def test_requires_valid_base_point(self):
        M = frozenset({1})
        with pytest.raises(ValueError):
            l2_cone.coderivative_on_subspace(SparseVector({1: -0.5}), M, SparseVector({1: 1.0}))
