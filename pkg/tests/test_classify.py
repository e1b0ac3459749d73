import numpy as np
import pytest

from qwalg import (AlgebraError, ClassId, FiniteAlgebra, InconsistentReport, classify,
                   verify_meta_theorems)
from qwalg.classify import IMPLICATION_LATTICE, META_THEOREMS, lattice_violations


def verdicts(report, *cids):
    return tuple(report[c].passed for c in cids)


class TestExamples:
    def test_quantum_wajsberg_example(self, examples):
        r = classify(examples["qw_noncommutative"])
        assert verdicts(r, "QW", "PRE_W", "IOM", "META_W") == (True,) * 4
        assert not r["WAJSBERG"].passed and r["WAJSBERG"].witness == (1, 3)
        assert not r.commutative and not r.leq_antisymmetric

    def test_pre_wajsberg_example(self, examples):
        r = classify(examples["prew_not_iom"])
        assert verdicts(r, "PRE_W", "META_W", "IOM", "QW") == (True, True, False, False)

    def test_implicative_orthomodular_example(self, examples):
        r = classify(examples["iom_not_prew"])
        assert verdicts(r, "IOM", "QW", "PRE_W", "META_W") == (True, False, False, False)

    def test_meta_wajsberg_example(self, examples):
        r = classify(examples["metaw_not_iom"])
        assert verdicts(r, "META_W", "IOM", "PRE_W", "QW") == (True, False, False, False)

    def test_format_mentions_failures_by_name(self, examples):
        a = examples["iom_not_prew"]
        text = classify(a).format(a)
        assert "QW: FAIL (QW1) at x=d, y=a" in text


class TestLattice:
    def test_every_model_respects_the_lattice(self, models5):
        for a in models5:
            r = classify(a)
            for p, q in IMPLICATION_LATTICE:
                assert not r[p].passed or r[q].passed

    def test_violations_are_detected(self, examples):
        r = classify(examples["iom_not_prew"])
        forged = dict(r.outcomes)
        forged[ClassId.QW] = forged[ClassId.IOM]     # claim QW while pre-W fails
        assert "QW without PRE_W" in lattice_violations(forged, False)

    def test_classification_ignores_names(self, examples):
        a = examples["prew_not_iom"]
        b = a.rename(["o", "p", "q", "r", "s", "t"])
        assert classify(a).member_of() == classify(b).member_of()

    def test_trivial_and_two_element_algebras_are_wajsberg(self):
        for a in (FiniteAlgebra([[0]], 0, 0), FiniteAlgebra([[1, 1], [0, 1]], 1, 0)):
            assert classify(a)["WAJSBERG"].passed

    def test_inconsistent_report_is_an_assertion_error(self):
        assert issubclass(InconsistentReport, AssertionError)


class TestMetaTheorems:
    def test_examples(self, examples):
        rep = verify_meta_theorems(examples.values())
        assert rep.ok and rep.checked == 4

    def test_all_models_up_to_five(self, models5):
        rep = verify_meta_theorems(models5)
        assert rep.ok, [str(v) for v in rep.violations]
        # no theorem is checked vacuously
        assert all(n > 0 for n in rep.exercised.values()), rep.exercised
        assert set(rep.exercised) == set(META_THEOREMS)

    def test_non_involutive_model_named(self, models4):
        bad = FiniteAlgebra([[2, 2, 2], [0, 2, 2], [0, 1, 2]], unit=2, zero=0)
        with pytest.raises(AlgebraError, match="model #2"):
            verify_meta_theorems([models4[0], models4[1], bad])

    def test_single_cell_mutations_are_caught(self, examples):
        """Every one-cell change of the QW example is noticed: either some class
        verdict flips, or the recomputed meet no longer matches the stored one.

        Exactly two mutations (row a, column d set to a or to c) produce another,
        non-isomorphic QW algebra with the same verdicts; only the meet
        cross-check catches those.
        """
        a = examples["qw_noncommutative"]
        base = classify(a).member_of()
        same_verdicts = []
        for i in range(6):
            for j in range(6):
                for v in range(6):
                    if v == a.imp[i, j]:
                        continue
                    t = np.array(a.imp)
                    t[i, j] = v
                    m = FiniteAlgebra(t, a.unit, a.zero, a.names)
                    if classify(m).member_of() == base:
                        assert verify_meta_theorems([m]).ok
                        assert not np.array_equal(m.ops.meet, a.ops.meet)
                        same_verdicts.append((a.names[i], a.names[j], a.names[v]))
        assert same_verdicts == [("a", "d", "a"), ("a", "d", "c")]
