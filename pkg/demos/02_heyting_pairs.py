"""
Heyting algebras and the pair construction
==========================================

CD logic works on pairs (truth content, falsity content) taken from a
Heyting algebra and its opposite. With the two-element Boolean algebra the
pairs are exactly the p-bits; larger bases give finer truth values.
"""

# %%
from paralogic import heyting

# %% [markdown]
# Downsets of a poset always form a Heyting algebra.

# %%
p = heyting.poset_from_covers(["x", "y", "z"], [("x", "z"), ("y", "z")])
h = heyting.downset_algebra(p)
for i, lab in enumerate(h.labels):
    print(i, sorted(lab))
print("report:", heyting.validate(h))

# %% [markdown]
# The pentagon is a lattice but not distributive, and the validator says why.

# %%
labels = ["0", "a", "b", "c", "1"]
n5 = heyting.poset_from_covers(labels, [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
for v in heyting.validate(heyting.lattice_tables(n5.labels, n5.leq))[:3]:
    print(v.law, v.witness)

# %% [markdown]
# Over the three-element chain there are nine truth values; the tensor
# still has (top, top) as its unit.

# %%
pa = heyting.PairAlgebra(heyting.chain(3))
print(len(pa.elements), "values")
print(all(pa.tensor(a, pa.unit_i) == a for a in pa.elements))
print("arrow((2,0), (1,1)) =", pa.arrow((2, 0), (1, 1)))
