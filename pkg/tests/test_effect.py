import numpy as np
import pytest

from qwalg import AlgebraError, FiniteAlgebra, Status, build_effect, check_effect_axioms
from qwalg.effect import UNDEFINED, PartialOpTable, orthosupplements


class TestBuild:
    def test_partial_sum_on_prew_example(self, examples):
        a = examples["prew_not_iom"]
        p = build_effect(a)
        b, d = a.index("b"), a.index("d")
        assert p.defined[b, d] and a.names[p(b, d)] == "c"
        assert not p.defined[d, b] and p(d, b) is None

    def test_complement_sums_to_one(self, models5):
        for a in models5:
            p = build_effect(a)
            for x in range(a.size):
                assert p(x, a.ops.star[x]) == a.unit

    def test_zero_is_neutral(self, models5):
        for a in models5:
            p = build_effect(a)
            assert all(p(a.zero, y) == y for y in range(a.size))

    def test_non_involutive_refused(self):
        a = FiniteAlgebra([[2, 2, 2], [0, 2, 2], [0, 1, 2]], unit=2, zero=0)
        with pytest.raises(AlgebraError):
            build_effect(a)

    def test_value_only_where_defined(self):
        with pytest.raises(ValueError):
            PartialOpTable(np.array([[True]]), np.array([[UNDEFINED]]), 0, 0, ("1",))


class TestAxioms:
    def test_iom_example_is_an_effect_algebra(self, examples):
        assert all(o.passed for o in check_effect_axioms(build_effect(examples["iom_not_prew"])).values())

    def test_prew_example_fails_commutativity_at_b_d(self, examples):
        a = examples["prew_not_iom"]
        e1 = check_effect_axioms(build_effect(a))["E1"]
        assert e1.status is Status.FAIL
        assert tuple(a.names[i] for i in e1.witness) == ("b", "d")
        assert "undefined" in e1.detail

    def test_trivial_algebra(self):
        res = check_effect_axioms(build_effect(FiniteAlgebra([[0]], 0, 0)))
        assert all(o.passed for o in res.values())

    def test_every_iom_model(self, iom5):
        for a in iom5:
            res = check_effect_axioms(build_effect(a))
            assert all(o.passed for o in res.values()), (a.imp, res)

    def test_orthosupplement_is_the_involution(self, models5, examples):
        for a in [*models5, *examples.values()]:
            p = build_effect(a)
            if all(o.passed for o in check_effect_axioms(p).values()):
                assert orthosupplements(p) == tuple(int(v) for v in a.ops.star)

    def test_unequal_values_are_reported_as_such(self):
        # a hand-made partial table: both sums defined but different
        d = np.array([[True, True, True], [True, True, False], [True, False, False]])
        v = np.array([[0, 1, 2], [1, 2, UNDEFINED], [2, UNDEFINED, UNDEFINED]])
        v[0, 1], v[1, 0] = 1, 2
        p = PartialOpTable(d, v, 0, 2, ("0", "a", "1"))
        e1 = check_effect_axioms(p)["E1"]
        assert e1.witness == (0, 1) and "unequal" in e1.detail

    def test_zero_one_law_violation(self):
        d = np.array([[True, True], [True, True]])
        v = np.array([[0, 1], [1, 1]])
        e4 = check_effect_axioms(PartialOpTable(d, v, 0, 1, ("0", "1")))["E4"]
        assert e4.status is Status.FAIL and e4.witness == (1,)
