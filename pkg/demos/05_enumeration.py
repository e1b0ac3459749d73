"""Exhaustive enumeration of involutive BE algebras, up to isomorphism."""
import time

from qwalg import ClassId, EnumerationConfig, count, enumerate_models, to_text

print(" n  labelled  classes   QW  pre-W  meta-W  IOM  Wajsberg   time")
for n in range(1, 7):
    t0 = time.perf_counter()
    labelled = count(EnumerationConfig(n, iso_reject=False))
    classes = count(EnumerationConfig(n))
    per_class = [count(EnumerationConfig(n, c)) for c in
                 (ClassId.QW, ClassId.PRE_W, ClassId.META_W, ClassId.IOM, ClassId.WAJSBERG)]
    print(f"{n:2d} {labelled:9d} {classes:8d} " + " ".join(f"{c:5d}" for c in per_class)
          + f"  {time.perf_counter() - t0:6.2f}s")

print("\nthe four-element models:")
for a in enumerate_models(EnumerationConfig(4)):
    print(to_text(a))
