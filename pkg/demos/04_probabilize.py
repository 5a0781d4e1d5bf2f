"""
From p-bits to probabilities
============================

Evaluate a proposition in every situation of an ensemble, count positive
and negative evidence, and read off paraconsistent and PLN truth values.
"""

# %%
import numpy as np

from paralogic import probabilize as pz

# %%
ens = pz.make_ensemble(["A"], [{"A": v} for v in "TTBNF"])
c = pz.aggregate(ens, "A")
stv = pz.to_stv(c)
print("counts", c)
print("t_para", float(c.t_para.w_pos), float(c.t_para.w_neg))
print("t_PLN", c.t_pln, "stv", stv, "confidence(k=20)", pz.confidence(stv.n, 20))

# %% [markdown]
# Dropping situations at random gives nearby estimates.

# %%
rng = np.random.default_rng(0)
rows = [{"A": "TFBN"[i]} for i in rng.choice(4, size=2000, p=[0.5, 0.2, 0.2, 0.1])]
big = pz.make_ensemble(["A"], rows)
for seed in range(3):
    sub = pz.subsample(big, 0.7, seed)
    tp = pz.aggregate(sub, "A").t_para
    print(len(sub), round(float(tp.w_pos), 3), round(float(tp.w_neg), 3))

# %% [markdown]
# Two p-bits that are either both collapsed or both superposed share one
# bit of information, yet neither component bit tells anything about the
# other's.

# %%
pairs = [("T", "T"), ("F", "F"), ("T", "F"), ("F", "T"), ("B", "B"), ("N", "N"), ("B", "N"), ("N", "B")]
print(pz.dependency_stats({f"{a},{b}": 1 / 8 for a, b in pairs}))
print(pz.conj_independent(pz.Stv(0.5, 10), pz.Stv(0.5, 10), 100))
