import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwalg import (CATALOGUE, AxiomId, ClassId, FiniteAlgebra, Status, check_axiom,
                   check_class, holds_at, parse_axiom_id, parse_class_id, phi_to_mbe)
from qwalg.terms import TermSyntaxError, eval_atom, parse


def named(a, out):
    return tuple(a.names[i] for i in out.witness)


def loop_oracle(a, axiom_id):
    """First failing assignment, in the axiom's own variable order, by plain iteration."""
    ax = CATALOGUE[axiom_id]
    try:
        s = parse(ax.text)
    except TermSyntaxError:
        return "unparsed"
    for values in itertools.product(range(a.size), repeat=len(ax.variables)):
        env = dict(zip(ax.variables, values))
        if all(eval_atom(a, p, env) for p in s.premises) and not eval_atom(a, s.conclusion, env):
            return values
    return None


@st.composite
def raw_tables(draw):
    n = draw(st.integers(2, 4))
    cells = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return FiniteAlgebra(np.array(cells).reshape(n, n), unit=n - 1, zero=0)


class TestPrintedWitnesses:
    def test_qw2_fails_on_prew_example(self, examples):
        a = examples["prew_not_iom"]
        out = check_axiom(a, AxiomId.QW2)
        assert out.status is Status.FAIL and named(a, out) == ("a", "0", "b")

    def test_qw1_and_qw3_fail_on_iom_example(self, examples):
        a = examples["iom_not_prew"]
        assert named(a, check_axiom(a, "QW1")) == ("d", "a")
        assert named(a, check_axiom(a, "QW3")) == ("a", "d")

    def test_metaw_example(self, examples):
        a = examples["metaw_not_iom"]
        assert named(a, check_axiom(a, "QW1")) == ("d", "a")
        assert named(a, check_axiom(a, "QW2")) == ("d", "0", "a")

    def test_bck4_fails_on_the_noncommutative_example(self, examples):
        a = examples["qw_noncommutative"]
        out = check_axiom(a, AxiomId.BCK4)
        assert named(a, out) == ("a", "c")

    def test_be2_passes_everywhere(self, models4, examples):
        for a in [*models4, *examples.values()]:
            assert check_axiom(a, "BE2").passed

    def test_describe_uses_names(self, examples):
        a = examples["iom_not_prew"]
        assert check_axiom(a, "QW1").describe(a) == "QW1: FAIL at x=d, y=a"


class TestClasses:
    @pytest.mark.parametrize("name,cid,expected", [
        ("qw_noncommutative", ClassId.QW, True),
        ("metaw_not_iom", ClassId.META_W, True),
        ("metaw_not_iom", ClassId.IOM, False),
        ("prew_not_iom", ClassId.PRE_W, True),
    ])
    def test_membership(self, examples, name, cid, expected):
        assert check_class(examples[name], cid).passed is expected

    def test_first_failing_conjunct_is_reported(self, examples):
        a = examples["prew_not_iom"]
        out = check_class(a, ClassId.QW)
        assert out.failed is AxiomId.QW2 and named(a, out) == ("a", "0", "b")

    def test_ids_parse_leniently(self):
        assert parse_class_id("pre-w") is ClassId.PRE_W
        assert parse_class_id("Meta_W") is ClassId.META_W
        assert parse_class_id("be") is ClassId.BE
        assert parse_axiom_id("qw2p") is AxiomId.QW2P

    def test_unknown_ids(self):
        with pytest.raises(KeyError):
            parse_axiom_id("QW9")
        with pytest.raises(KeyError):
            parse_class_id("heyting")


class TestProductSide:
    def test_prerequisite_on_non_involutive_input(self):
        a = FiniteAlgebra([[2, 2, 2], [0, 2, 2], [0, 1, 2]], unit=2, zero=0)
        for ax in ("PQMV", "PMV", "POM", "DELTA_M", "M_PIMPL", "G", "M_PABS_I",
                   "PU", "PCOMM", "PASS", "M_L", "M_RE"):
            out = check_axiom(a, ax)
            assert out.status is Status.PREREQ_FAILED and out.prereq is AxiomId.INVOLUTIVE

    def test_mbe_axioms_hold_on_every_image(self, models5):
        for a in models5:
            for ax in ("PU", "PCOMM", "PASS", "M_L", "M_RE"):
                assert check_axiom(a, ax).passed, (ax, a.imp)

    def test_product_view_matches_the_transform(self, examples):
        a = examples["qw_noncommutative"]
        m = phi_to_mbe(a)
        assert np.array_equal(m.prod, a.ops.odot)


EQUIVALENT = [
    ("QW", lambda r: r["QW1"] and r["QW2"]),
    ("QW3", lambda r: r["QW3P"]),
    ("QW2", lambda r: r["QW2P"]),
    ("IOM", lambda r: r["IOMP"]),
    ("IOM", lambda r: r["IOMPP"]),
    ("QW", lambda r: r["PQMV"]),
    ("QW1", lambda r: r["PMV"]),
    ("QW2", lambda r: r["POM"]),
    ("QW3", lambda r: r["DELTA_M"]),
    ("PIMPL", lambda r: r["M_PIMPL"]),
]


class TestEquivalentForms:
    def test_agreement_up_to_size_five(self, models5, examples):
        for a in [*models5, *examples.values()]:
            r = {ax.value: check_axiom(a, ax).passed for ax in AxiomId}
            for lhs, rhs in EQUIVALENT:
                assert r[lhs] == rhs(r), (lhs, a.imp)

    def test_s_algebra_axioms_hold_on_every_model(self, models5):
        for a in models5:
            for ax in ("S1", "S2", "S3", "S4", "S5", "S6", "S7"):
                assert check_axiom(a, ax).passed, (ax, a.imp)


class TestWitnesses:
    def test_every_witness_refalsifies(self, models4, examples):
        for a in [*models4, *examples.values()]:
            for ax in AxiomId:
                out = check_axiom(a, ax)
                if out.status is Status.FAIL:
                    assert not holds_at(a, ax, out.witness)

    def test_least_witness_agrees_with_loop_on_examples(self, examples):
        for a in examples.values():
            for ax in AxiomId:
                expected = loop_oracle(a, ax)
                if expected == "unparsed":
                    continue
                out = check_axiom(a, ax)
                assert out.witness == expected, ax

    @settings(max_examples=150, deadline=None)
    @given(raw_tables())
    def test_least_witness_agrees_with_loop_on_random_tables(self, a):
        for ax, axiom in CATALOGUE.items():
            if axiom.product_side:
                continue
            expected = loop_oracle(a, ax)
            if expected == "unparsed":
                continue
            assert check_axiom(a, ax).witness == expected, ax
