"""Which classes do the four bundled examples belong to?

Each failed class is reported with the axiom that fails first and the
least falsifying assignment, written with element names.
"""
from qwalg import EXAMPLES, classify, example

SHOWN = ("QW", "PRE_W", "META_W", "IOM", "WAJSBERG", "IMPLICATIVE")

for name in EXAMPLES:
    a = example(name)
    report = classify(a)
    print(f"== {name}")
    for cid in SHOWN:
        out = report[cid]
        print("   ", "yes" if out.passed else "no ", f"{cid:<12}",
              "" if out.passed else out.describe(a))
    print("    <= antisymmetric:", report.leq_antisymmetric)
    print()

# the same information in product-signature terms agrees class by class
a = example("iom_not_prew")
r = classify(a)
for left, right in (("QW", "QMV"), ("PRE_W", "PRE_MV"), ("META_W", "META_MV"), ("IOM", "OM_ALG")):
    print(f"{left:>6} {r[left].passed!s:>5}   {right:<7} {r[right].passed}")
