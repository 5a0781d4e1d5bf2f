"""
Concept lattices in three modes
===============================
"""

# %%
from paralogic import fca

# %%
ctx = fca.make_context(
    ["duck", "dog", "bat"],
    ["flies", "swims", "barks"],
    [
        ["duck", "flies", "T"], ["duck", "swims", "T"], ["duck", "barks", "F"],
        ["dog", "swims", "B"], ["dog", "barks", "T"], ["dog", "flies", "F"],
        ["bat", "flies", "T"], ["bat", "swims", "N"],
    ],
    "para",
)
lat = fca.enumerate_concepts(ctx)
for c in lat:
    print(fca.concept_label(lat, c))
print("verify:", fca.verify_lattice(lat))
print(fca.to_dot(lat))

# %% [markdown]
# Fuzzy mode keeps graded positive and negative incidence.

# %%
fz = fca.make_context(
    ["duck", "dog"], ["flies", "swims"],
    [["duck", "flies", 1.0, 0.0], ["duck", "swims", 0.75, 0.25], ["dog", "swims", 0.5, 0.5]],
    "fuzzy", grades=4,
)
flat = fca.enumerate_concepts(fz)
print(len(flat), "fuzzy concepts; verify:", fca.verify_lattice(flat))

# %% [markdown]
# Blending two concepts that disagree about flying.

# %%
bird = {"flies": (1, 0), "swims": (0, 0), "sings": (1, 0)}
fish = {"flies": (0, 1), "swims": (1, 0), "sings": (0, 1)}
print(fca.blend(bird, fish, "average"))
print(fca.blend(bird, fish, "sample", seed=3))
