"""
Entropy of paraconsistent distributions and intension degrees
=============================================================
"""

# %%
from paralogic import ppd

# %%
p = ppd.Ppd(("o1", "o2"), [0.5, 0.5], [0.9, 0.1])
q = ppd.Ppd(("o1", "o2"), [1.0, 0.0], [0.9, 0.1])
print("H(p) =", ppd.entropy(p))
print("KL(q || p) =", ppd.relative_entropy(q, p))

# %% [markdown]
# How strongly does "swims" characterise whales among these animals? The
# degree is the relative entropy of the whales' evidence against the
# context's.

# %%
whales = ppd.InstanceEvidence({"moby": (1, 0), "willy": (1, 0), "shamu": (1, 0)})
animals = ppd.InstanceEvidence(
    {
        "moby": (1, 0), "willy": (1, 0), "shamu": (1, 0), "nemo": (1, 0), "flipper": (1, 0),
        "rex": (0, 1), "tom": (0.25, 0.75), "tweety": (0, 1), "duck": (0.5, 0.5), "frog": (0.75, 0.25),
    }
)
fish = ppd.InstanceEvidence({"nemo": (1, 0)})
print("whales:", round(ppd.intension_degree(whales, animals), 4))
print("one fish:", round(ppd.intension_degree(fish, animals), 4))
