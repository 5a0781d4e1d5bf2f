"""Golden CLI cases shared by the CLI and acceptance tests.

Each case is ``(name, argv)``; ``{F}`` expands to the fixtures directory.
Expected stdout lives in ``golden/<name>.txt``.
"""
from pathlib import Path

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = [
    ("eval", ["eval", "--expr", "~A & all x. Psi(x)", "--valuation", "{F}/valuation.json"]),
    ("eval_json", ["eval", "--json", "--expr", "ex x. (x < c & Psi(x))", "--valuation", "{F}/valuation.json"]),
    ("taut_bang", ["taut", "--expr", "!A => A"]),
    ("taut_lem", ["taut", "--expr", "A | ~A"]),
    ("taut_json", ["taut", "--json", "--expr", "(A (*) B) => C"]),
    ("probabilize", ["probabilize", "--ensemble", "{F}/e.json", "--prop", "A", "--stv", "--k", "20"]),
    ("probabilize_meet", ["probabilize", "--ensemble", "{F}/ensemble40.json", "--prop", "A & ~B"]),
    ("probabilize_json", ["probabilize", "--json", "--ensemble", "{F}/ensemble40.json", "--prop", "A (*) B", "--stv"]),
    ("subsample", ["subsample", "--ensemble", "{F}/ensemble40.json", "--rate", "0.5", "--seed", "7"]),
    ("sorites", ["sorites", "--model", "{F}/weber.json"]),
    ("sorites_z", ["sorites", "--model", "{F}/weber.json", "--z", "b"]),
    ("sorites_json", ["sorites", "--json", "--model", "{F}/weber.json"]),
    ("boundary_third", ["boundary", "--cases", "{F}/cases_third.json"]),
    ("boundary_fifth", ["boundary", "--cases", "{F}/cases_fifth.json"]),
    ("dep", ["dep", "--joint", "{F}/joint_coupled.json"]),
    ("dep_json", ["dep", "--json", "--joint", "{F}/joint_coupled.json"]),
    ("entropy", ["entropy", "--ppd", "{F}/ppd_a.json"]),
    ("kl", ["kl", "--a", "{F}/ppd_sharp.json", "--b", "{F}/ppd_a.json"]),
    ("kl_eps", ["kl", "--a", "{F}/ppd_sharp.json", "--b", "{F}/ppd_flip.json", "--eps", "0.001"]),
    ("intension", ["intension", "--x", "{F}/whales_x.json", "--context", "{F}/animals_c.json"]),
    ("fca_para", ["fca", "--context", "{F}/ctx_para.json", "--verify"]),
    ("fca_fuzzy", ["fca", "--context", "{F}/ctx_fuzzy.json"]),
    ("fca_json", ["fca", "--json", "--context", "{F}/ctx_para.json"]),
    ("blend_average", ["blend", "--c1", "{F}/c1.json", "--c2", "{F}/c2.json", "--strategy", "average"]),
    ("blend_sample", ["blend", "--c1", "{F}/c1.json", "--c2", "{F}/c2.json", "--strategy", "sample", "--seed", "11"]),
    ("blend_first", ["blend", "--json", "--c1", "{F}/c1.json", "--c2", "{F}/c2.json", "--strategy", "select_first"]),
]

SUBCOMMANDS = {
    "eval", "taut", "probabilize", "subsample", "sorites", "boundary",
    "dep", "entropy", "kl", "intension", "fca", "blend",
}


def expand(argv):
    return [a.replace("{F}", str(FIXTURES)) for a in argv]


def golden_path(name):
    return GOLDEN / f"{name}.txt"
