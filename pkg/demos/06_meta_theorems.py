"""Relationships between the classes, tested on every model up to size 6."""
from qwalg import all_examples, models_up_to, verify_meta_theorems

models = models_up_to(6) + list(all_examples().values())
report = verify_meta_theorems(models)
print(f"{report.checked} models checked\n")
for name, hits in report.exercised.items():
    bad = sum(v.theorem == name for v in report.violations)
    print(f"  {'ok ' if not bad else 'BAD'} {name:<52} hypothesis met by {hits:4d} models")
print("\nviolations:", len(report.violations))
