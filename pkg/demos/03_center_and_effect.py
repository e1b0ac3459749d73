"""The commutative center and the partial-sum (effect algebra) view."""
from qwalg import build_effect, center, check_effect_axioms, example

# --- center --------------------------------------------------------------------
for name in ("iom_not_prew", "qw_noncommutative", "prew_not_iom"):
    a = example(name)
    res = center(a)
    print(f"{name}: center = {{{', '.join(res.names(a))}}}")
    for label, out in [*res.closure_report.items(), *res.wajsberg_report.items()]:
        print(f"    {str(label):<18} {out.status.value}")
    print()

# --- effect view ------------------------------------------------------------------
# x (+) y is defined when x <=Q y*, and then equals x* -> y
for name in ("iom_not_prew", "prew_not_iom"):
    a = example(name)
    p = build_effect(a)
    print(f"{name}: {int(p.defined.sum())} of {a.size ** 2} sums defined")
    for key, out in check_effect_axioms(p).items():
        print("   ", out.describe(a))
    print()

a = example("prew_not_iom")
p = build_effect(a)
b, d = a.index("b"), a.index("d")
print("b (+) d =", a.names[p(b, d)], "  but d (+) b is", p(d, b))
