"""
Boolean functions, variable negation and the g oracle
=====================================================

A function is stored as an XOR of product terms. Negating a variable and
XOR-ing with the original cancels every term that does not mention it, so
``g = f ^ f(x_i negated)`` is zero exactly when ``x_i`` is irrelevant.
"""

from qjunta.boolfn import derive_g, influence, negate_variable, parse_anf, to_truth_table
from qjunta.tester import build_g_oracle

f = parse_anf("x0x1 ^ x0x2 ^ x1x2 ^ x3")
print("f          =", f)

# substituting x0 -> x0 ^ 1 spawns the x0-free reduction of each x0 term
print("f(~x0)     =", negate_variable(f, 0))

for i in range(f.arity):
    g = derive_g(f, i)
    print(f"g for x{i}   = {g}")

###############################################################################
# The black-box route never looks at the terms: it XORs two table lookups.
# Both routes give the same table.
t = to_truth_table(f)
for i in range(f.arity):
    assert build_g_oracle(t, i) == to_truth_table(derive_g(f, i))

###############################################################################
# A variable that never appears yields g == 0. Influence measures how far a
# relevant variable is from being irrelevant.
h = parse_anf("x0x1 ^ x2", 4)
print("g for x3 in", h, "=", derive_g(h, 3))
for i in range(4):
    print(f"influence of x{i}: {influence(to_truth_table(h), i):.3f}")
