"""Finite-model workbench for involutive BE algebras and their quantum-Wajsberg
relatives: axiom checking, classification, the commutative center, the
partial-sum (effect) view, term evaluation and exhaustive model search.
"""
from .algebra import (AlgebraError, DerivedOps, FiniteAlgebra, MBEAlgebra, default_names,
                      derive_ops, phi_to_mbe, psi_to_be)
from .axioms import (CATALOGUE, CLASSES, AxiomId, CheckOutcome, ClassId, Status, check_axiom,
                     check_class, holds_at, is_involutive_be, leq_antisymmetric,
                     parse_axiom_id, parse_class_id)
from .bundled import EXAMPLES, all_examples, example
from .center import (CenterResult, center, check_commutation_equivalences,
                     commutation_conditions, commute_table, commutes)
from .classify import (ClassificationReport, InconsistentReport, MetaTheoremReport, classify,
                       verify_meta_theorems)
from .effect import PartialOpTable, build_effect, check_effect_axioms
from .fileio import AlgebraFile, AlgebraFileError, load, load_mbe, parse_text, save, to_text
from .search import (Counterexample, EnumerationConfig, SearchBudgetExceeded, canonical_form,
                     count, enumerate_models, find_counterexample, models_up_to)
from .terms import Statement, TermSyntaxError, UnboundVariable, check_statement, parse, render

__all__ = [name for name in dir() if not name.startswith("_")]
