"""``paralogic`` command-line front end.

Exit codes: 0 success, 1 domain or file errors, 2 usage or expression
syntax errors. Numbers print with six decimals; ``--json`` prints full
precision. Errors go to stderr and leave stdout empty.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import fca, ppd, probabilize, sorites
from .cdlang import evaluate, is_derivable, load_valuation, parse
from .errors import ParalogicError, ParseError


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def f6(x) -> str:
    return f"{float(x):.6f}"


def _pair6(p) -> str:
    return f"({f6(p[0])},{f6(p[1])})"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands -------------------------------------------------------------


def cmd_eval(args):
    v = load_valuation(args.valuation)
    e = parse(args.expr, free=v.domain)
    value = evaluate(e, v)
    if args.json:
        return _dumps({"value": value.name, "pair": list(value.pair)})
    return f"value: {value.name}\n"


def cmd_taut(args):
    e = parse(args.expr)
    res = is_derivable(e)
    witness = {k: v.name for k, v in (res.witness or {}).items()}
    if args.json:
        return _dumps({"derivable": res.derivable, "witness": witness or None})
    out = f"derivable: {'true' if res.derivable else 'false'}\n"
    if not res.derivable:
        out += "witness: " + " ".join(f"{k}={v}" for k, v in witness.items()) + "\n"
    return out


def cmd_probabilize(args):
    ens = probabilize.load_ensemble(args.ensemble)
    counts = probabilize.aggregate(ens, parse(args.prop))
    tp = counts.t_para
    result = {
        "n_pos": counts.n_pos,
        "n_neg": counts.n_neg,
        "n_total": counts.n_total,
        "t_para": [float(tp.w_pos), float(tp.w_neg)],
        "t_pln": list(counts.t_pln),
    }
    text = f"t_para=({f6(tp.w_pos)},{f6(tp.w_neg)}) t_pln=({counts.n_pos},{counts.n_neg})"
    if args.stv or args.k is not None:
        stv = probabilize.to_stv(counts)
        if args.stv:
            result["stv"] = [stv.s, stv.n]
            text += f" stv=({f6(stv.s)},{stv.n})"
        if args.k is not None:
            conf = probabilize.confidence(stv.n, args.k)
            result["conf"] = conf
            text += f" conf={f6(conf)}"
    return _dumps(result) if args.json else text + "\n"


def cmd_subsample(args):
    ens = probabilize.load_ensemble(args.ensemble)
    kept = probabilize.subsample(ens, args.rate, args.seed)
    return _dumps(kept.to_json())


def cmd_sorites(args):
    model = sorites.load_model(args.model)
    names = [args.z] if args.z is not None else list(model.domain)
    values = {z: sorites.cutoff_value(model, z) for z in names}
    if args.z is None:
        ex = sorites.existential_cutoff(model)
    if args.json:
        out = {"cutoff": {z: v.name for z, v in values.items()}}
        if args.z is None:
            out["exists_cutoff"] = ex.P.name
            out["not_exists_cutoff"] = ex.N.name
        return _dumps(out)
    lines = [f"{z}: {v.name}" for z, v in values.items()]
    if args.z is None:
        lines.append(f"exists-cutoff: {ex.P.name} / not-exists-cutoff: {ex.N.name}")
    return "\n".join(lines) + "\n"


def cmd_boundary(args):
    z, cases = sorites.load_cases(args.cases)
    t = sorites.fuzzy_boundary(cases)
    if args.json:
        return _dumps({"z": z, "t": list(t)})
    return f"z={z} t={_pair6(t)}\n"


def cmd_dep(args):
    stats = probabilize.dependency_stats(probabilize.load_joint(args.joint))
    if args.json:
        return _dumps(stats.__dict__)
    return f"mi_pbit={f6(stats.mi_pbit)} mi_pos={f6(stats.mi_pos)} mi_neg={f6(stats.mi_neg)}\n"


def cmd_entropy(args):
    p = ppd.load_ppd(args.ppd)
    hp, hn = ppd.shannon_bits(p.pos), ppd.shannon_bits(p.neg)
    if args.json:
        return _dumps({"entropy": hp + hn, "pos": hp, "neg": hn})
    return f"entropy={f6(hp + hn)} pos={f6(hp)} neg={f6(hn)}\n"


def cmd_kl(args):
    d = ppd.relative_entropy(ppd.load_ppd(args.a), ppd.load_ppd(args.b), args.eps)
    return _dumps({"kl": d}) if args.json else f"kl={f6(d)}\n"


def cmd_intension(args):
    d = ppd.intension_degree(ppd.load_evidence(args.x), ppd.load_evidence(args.context), args.eps)
    return _dumps({"degree": d}) if args.json else f"degree={f6(d)}\n"


def cmd_fca(args):
    ctx = fca.load_context(args.context)
    lattice = fca.enumerate_concepts(ctx, brute_force=args.brute_force)
    report = fca.verify_lattice(lattice) if args.verify else []
    if report:
        detail = "; ".join(f"{v.kind} {v.witness}" for v in report)
        raise _Failure(1, f"lattice verification failed: {detail}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(fca.to_dot(lattice))
    labels = [fca.concept_label(lattice, c) for c in lattice]
    if args.json:
        out = {"concepts": labels, "covers": [list(p) for p in lattice.covers()]}
        if args.verify:
            out["verified"] = True
        return _dumps(out)
    lines = labels + [f"concepts: {len(lattice)}"]
    if args.verify:
        lines.append("verify: ok")
    return "\n".join(lines) + "\n"


def cmd_blend(args):
    c1 = fca.load_property_map(args.c1)
    c2 = fca.load_property_map(args.c2)
    out = fca.blend(c1, c2, args.strategy, seed=args.seed, weight=args.weight)
    if args.json:
        return _dumps({p: list(v) for p, v in out.items()})
    return "".join(f"{p}: {_pair6(v)}\n" for p, v in out.items())


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="paralogic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate an expression under a valuation file")
    p.add_argument("--expr", required=True)
    p.add_argument("--valuation", required=True)

    p = add("taut", cmd_taut, "check that an expression is always designated")
    p.add_argument("--expr", required=True)

    p = add("probabilize", cmd_probabilize, "evidence counts of a proposition over an ensemble")
    p.add_argument("--ensemble", required=True)
    p.add_argument("--prop", required=True)
    p.add_argument("--k", type=float)
    p.add_argument("--stv", action="store_true")

    p = add("subsample", cmd_subsample, "randomly drop situations from an ensemble")
    p.add_argument("--ensemble", required=True)
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = add("sorites", cmd_sorites, "cutoff analysis of a series model")
    p.add_argument("--model", required=True)
    p.add_argument("--z")

    p = add("boundary", cmd_boundary, "aggregate per-situation boundary classifications")
    p.add_argument("--cases", required=True)

    p = add("dep", cmd_dep, "mutual information between two coupled p-bits")
    p.add_argument("--joint", required=True)

    p = add("entropy", cmd_entropy, "entropy of a paraconsistent distribution")
    p.add_argument("--ppd", required=True)

    p = add("kl", cmd_kl, "relative entropy between two paraconsistent distributions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--eps", type=float, default=0.0)

    p = add("intension", cmd_intension, "intension degree of instance evidence in a context")
    p.add_argument("--x", required=True)
    p.add_argument("--context", required=True)
    p.add_argument("--eps", type=float, default=ppd.DEFAULT_EPSILON)

    p = add("fca", cmd_fca, "enumerate the concept lattice of a formal context")
    p.add_argument("--context", required=True)
    p.add_argument("--dot")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--brute-force", action="store_true")

    p = add("blend", cmd_blend, "blend two concept property maps")
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--strategy", required=True, choices=fca.BLEND_STRATEGIES)
    p.add_argument("--seed", type=int)
    p.add_argument("--weight", type=float, default=0.5)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(code, out.getvalue() if code == 0 else "", err.getvalue())
    try:
        text = args.func(args)
    except ParseError as exc:
        return CommandResult(2, "", f"paralogic: syntax error: {exc}\n")
    except _Failure as exc:
        return CommandResult(exc.code, "", f"paralogic: {exc}\n")
    except (ParalogicError, ValueError) as exc:
        return CommandResult(1, "", f"paralogic: {exc}\n")
    except OSError as exc:
        return CommandResult(1, "", f"paralogic: {exc.filename or ''}: {exc.strerror or exc}\n")
    return CommandResult(0, text, "")


def main(argv: Sequence[str] | None = None) -> None:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
