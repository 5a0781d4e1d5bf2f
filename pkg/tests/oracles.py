"""Reference implementations written independently of the package.

Values are raw ``(pos, neg)`` bit tuples; nothing here imports paralogic.
"""
import itertools
import math


def neg(a):
    return (a[1], a[0])


def meet(a, b):
    return (a[0] & b[0], a[1] | b[1])


def join(a, b):
    return (a[0] | b[0], a[1] & b[1])


def arrow(a, b):
    return ((1 - a[0]) | b[0], a[0] & b[1])


def strong_imp(a, b):
    return meet(arrow(a, b), arrow(neg(b), neg(a)))


def tensor(a, b):
    return neg(strong_imp(a, neg(b)))


def par(a, b):
    return neg(tensor(neg(a), neg(b)))


BINARY = {
    "meet": meet,
    "join": join,
    "arrow": arrow,
    "strong_imp": strong_imp,
    "tensor": tensor,
    "par": par,
}
UNARY = {
    "neg": neg,
    "demi": lambda a: (1 - a[1], a[0]),
    "bang": lambda a: (a[0], 1),
    "gamma": lambda a: (1, a[1]),
    "weak_bang": lambda a: (0, a[1]),
    "weak_gamma": lambda a: (a[0], 0),
}
VALUES = [(1, 0), (0, 1), (1, 1), (0, 0)]


# Expressions as nested tuples: ("atom", name) | ("un", op, e) | ("bin", op, l, r)
def eval_tree(t, env):
    if t[0] == "atom":
        return env[t[1]]
    if t[0] == "un":
        return UNARY[t[1]](eval_tree(t[2], env))
    return BINARY[t[1]](eval_tree(t[2], env), eval_tree(t[3], env))


def tree_atoms(t, acc=None):
    acc = [] if acc is None else acc
    if t[0] == "atom":
        if t[1] not in acc:
            acc.append(t[1])
    else:
        for sub in t[2:]:
            tree_atoms(sub, acc)
    return acc


def derivable(t):
    names = tree_atoms(t)
    for combo in itertools.product(VALUES, repeat=len(names)):
        if eval_tree(t, dict(zip(names, combo)))[0] != 1:
            return False
    return True


UNARY_SYM = {"neg": "~", "demi": "%", "bang": "!", "gamma": "?", "weak_bang": "!-", "weak_gamma": "?-"}
BINARY_SYM = {"meet": "&", "join": "|", "arrow": "->", "strong_imp": "=>", "tensor": "(*)", "par": "(+)"}


def tree_text(t):
    if t[0] == "atom":
        return t[1]
    if t[0] == "un":
        return f"{UNARY_SYM[t[1]]}({tree_text(t[2])})"
    return f"({tree_text(t[2])}) {BINARY_SYM[t[1]]} ({tree_text(t[3])})"


def trees_up_to(depth, names):
    levels = [[("atom", n) for n in names]]
    every = list(levels[0])
    for _ in range(depth):
        new = [("un", op, t) for op in UNARY for t in every]
        new += [("bin", op, l, r) for op in BINARY for l in every for r in every]
        every = every + new
    return every


def random_tree(rng, depth, names):
    if depth == 0 or rng.random() < 0.15:
        return ("atom", rng.choice(names))
    if rng.random() < 0.35:
        return ("un", rng.choice(sorted(UNARY)), random_tree(rng, depth - 1, names))
    return (
        "bin",
        rng.choice(sorted(BINARY)),
        random_tree(rng, depth - 1, names),
        random_tree(rng, depth - 1, names),
    )


def entropy_bits(probs):
    return -sum(p * math.log2(p) for p in probs if p > 0)


def mutual_information(joint):
    """``joint`` maps (x, y) -> mass; I = H(X) + H(Y) - H(X, Y)."""
    px, py = {}, {}
    for (x, y), m in joint.items():
        px[x] = px.get(x, 0.0) + m
        py[y] = py.get(y, 0.0) + m
    return entropy_bits(px.values()) + entropy_bits(py.values()) - entropy_bits(joint.values())


def kl_bits(p, q):
    return sum(x * math.log2(x / y) for x, y in zip(p, q) if x > 0)
