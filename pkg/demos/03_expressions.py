"""
Expressions, valuations and derivability
========================================
"""

# %%
from paralogic.cdlang import Valuation, evaluate, is_derivable, parse, to_text
from paralogic.pbit import B, F, T

# %%
e = parse("(A (*) B) => C")
print(e)
print(to_text(e))

# %% [markdown]
# A formula is derivable when every assignment gives it a designated value
# (T or B). Excluded middle fails at N.

# %%
for text in ["A -> A", "!A => A", "A | ~A", "~~A => A"]:
    r = is_derivable(parse(text))
    print(f"{text:12} {bool(r)!s:5} {r.witness or ''}")

# %% [markdown]
# Quantifiers range over a declared finite domain.

# %%
v = Valuation(
    domain=("a", "b", "c"),
    preds={"Hot": {"a": T, "b": B, "c": F}},
    less={("a", "b"): T, ("b", "c"): T, ("a", "c"): T},
    open_world=True,
)
for text in ["all x. Hot(x)", "ex x. Hot(x)", "ex x. (Hot(x) & ~Hot(x))"]:
    print(f"{text:28} {evaluate(parse(text), v).name}")
