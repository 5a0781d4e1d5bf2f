"""
Four-valued p-bits
==================

A p-bit keeps a positive and a negative evidence bit side by side:
T=(1,0), F=(0,1), B=(1,1) and N=(0,0).
"""

# %%
from paralogic import pbit
from paralogic.pbit import ALL, B, F, N, T

# %% [markdown]
# Negation swaps the two bits, so it fixes B and N.

# %%
for a in ALL:
    print(f"~{a.name} = {pbit.neg(a).name}")

# %% [markdown]
# The tensor has B as its unit and the strong implication obeys the
# deduction rule on every triple.

# %%
def show(op):
    print(f"{op:>10} " + " ".join(b.name for b in ALL))
    for a in ALL:
        print(f"{a.name:>10} " + " ".join(pbit.apply_binary(op, a, b).name for b in ALL))

show("tensor")
show("strong_imp")

# %%
assert all(pbit.tensor(a, B) is a for a in ALL)

# %% [markdown]
# The "square root of not" cycles N -> T -> B -> F -> N; twice it behaves
# like negation on the classical values.

# %%
x = N
for _ in range(4):
    y = pbit.demi(x)
    print(f"demi({x.name}) = {y.name}")
    x = y
print(pbit.demi(pbit.demi(T)).name, pbit.demi(pbit.demi(F)).name)

# %% [markdown]
# Two orders live on the same four values.

# %%
print("knowledge: N <= B", pbit.knowledge_leq(N, B))
print("truth: F <= T", pbit.truth_leq(F, T))
print("B and N truth-comparable?", pbit.truth_leq(B, N) or pbit.truth_leq(N, B))
print("KC coordinates:", {a.name: tuple(pbit.to_kc(a)) for a in ALL})
