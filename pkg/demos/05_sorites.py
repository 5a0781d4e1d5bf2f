"""
A glutty sorites boundary
=========================

Psi is "high-up". On the boundary b and c are both high-up and not, and
each comes out as a cutoff both truly and falsely.
"""

# %%
from paralogic import sorites
from paralogic.sorites import SituationClassification as SC

# %%
m = sorites.make_model(["a", "b", "c"], {"a": "T", "b": "B", "c": "B"}, [("a", "b"), ("b", "c")])
for z in m.domain:
    print(z, sorites.cutoff_value(m, z).name)
ex = sorites.existential_cutoff(m)
print("there is a cutoff:", ex.P.name, " there is none:", ex.N.name)

# %% [markdown]
# Averaged over situations, one temperature reading gets a fuzzy degree.

# %%
mixes = {
    "always high": [SC("high")],
    "always boundary": [SC("cutoff")],
    "thirds": [SC("cutoff"), SC("high"), SC("not_high")],
    "1/5 cut, 3/5 high, 1/5 not": [SC("cutoff", 1), SC("high", 3), SC("not_high", 1)],
    "2/5 cut, 1/5 high, 2/5 not": [SC("cutoff", 2), SC("high", 1), SC("not_high", 2)],
}
for name, cases in mixes.items():
    s_pos, s_neg = sorites.fuzzy_boundary(cases)
    print(f"{name:28} ({s_pos:.3f}, {s_neg:.3f})")
