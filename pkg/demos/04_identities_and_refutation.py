"""Checking identities on a model, and hunting for small counterexamples."""
from qwalg import ClassId, check_statement, example, find_counterexample, parse, render

a = example("iom_not_prew")

statements = [
    "x** = x",
    "(x -> y) -> y = (y -> x) -> x",                   # commutativity
    "x <=Q y |- (y -> x) -> x = y",                   # a quasi-identity
    "x -> (x /\\ y) = x -> y",
]
for text in statements:
    out = check_statement(a, text)
    print(f"{render(parse(text)):<36} {out.describe(a)}")
print()

# smallest counterexamples within a class
for text, cid in [("x /\\ y = y /\\ x", ClassId.QW),
                  ("x -> (x /\\ y) = x -> y", ClassId.IOM),
                  ("(x -> y) -> y = (y -> x) -> x", ClassId.QW),
                  ("x -> 1 = 1", ClassId.INVOLUTIVE_BE)]:
    cex = find_counterexample(text, cid, max_size=6)
    where = "none up to size 6" if cex is None else cex.describe()
    print(f"{cid.value:<14} {text:<32} -> {where}")
