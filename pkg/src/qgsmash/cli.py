"""Command-line driver.

    qgsmash qg build --quiver kronecker:3 --action gl:3 --component "2:[1]"
    qgsmash rc emit --quiver kronecker:4 --action gl:4 --component "2:[1]" --format yale
    qgsmash tc project --quiver kronecker:3 --action gl:3 --component "2:[1]" --dims 1,2
    qgsmash semiinv eval|check --family k3-first-top --a 2
    qgsmash semiinv span --quiver kronecker:3 --action gl:3 --component "2:[1]" --alpha 2,4 --beta 2,0,2
    qgsmash idempotents print --n 3 --d 3
    qgsmash verify fixtures-iso

Quivers are presets (kronecker:N, subspace:N) or JSON files holding
{"vertices": [...], "arrows": [[name, tail, head], ...]}.  Actions are
presets (symmetric, trivial, gl:N, gl-sym2) or JSON files holding
{"generators": [[images]], "vertex_action": [[images]], "arrow_action": [matrix]}
with matrices as {"shape": [r, c], "entries": ["p/q", ...]} in row order.
Dimension vectors follow the vertex order printed by `qg build`.
Every run prints a versioned header line; all randomness comes from --seed.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

FORMAT_VERSION = 1


class UsageError(ValueError):
    pass


def header(command: str) -> str:
    return f"# qgsmash output v{FORMAT_VERSION} {command}"


# ----------------------------------------------------------------------
# inputs


def load_quiver(spec: str):
    from .quiver import Quiver, kronecker_quiver, subspace_quiver
    if ":" in spec and spec.split(":")[0] in ("kronecker", "subspace"):
        kind, n = spec.split(":")
        n = int(n)
        return kronecker_quiver(n) if kind == "kronecker" else subspace_quiver(n)
    with open(spec) as fh:
        return Quiver.from_dict(json.load(fh))


def load_action(spec: str, q):
    """('finite', FiniteAction) or ('gl', GroupDatum)."""
    from .linalg import RatMatrix, matrix_from_dict
    from .qg import (GroupDatum, kronecker_symmetric_action, natural_gl_datum,
                     subspace_symmetric_action, sym_power_module)
    from .symmetric_group import FiniteAction, Permutation
    if spec == "symmetric":
        if q.name.startswith("K"):
            return "finite", kronecker_symmetric_action(q)
        if q.name.startswith("S"):
            return "finite", subspace_symmetric_action(q)
        raise UsageError("the symmetric preset needs a kronecker or subspace quiver")
    if spec == "trivial":
        nv, na = len(q.vertices), len(q.arrows)
        return "finite", FiniteAction(q, [Permutation([1])], [Permutation(list(range(1, nv + 1)))],
                                      [RatMatrix.identity(na)])
    if spec.startswith("gl:"):
        return "gl", natural_gl_datum(q, int(spec[3:]))
    if spec == "gl-sym2":
        if len(q.vertices) != 2:
            raise UsageError("gl-sym2 acts on a two-vertex quiver")
        return "gl", GroupDatum.gl(q, 2, {tuple(q.vertices): sym_power_module(2)})
    with open(spec) as fh:
        d = json.load(fh)
    gens = [Permutation(g) for g in d["generators"]]
    verts = [Permutation(v) for v in d["vertex_action"]]
    arrows = [matrix_from_dict(m) for m in d["arrow_action"]]
    return "finite", FiniteAction(q, gens, verts, arrows)


def parse_dims(text: str, vertices) -> dict:
    parts = [int(x) for x in text.split(",")] if text else []
    if len(parts) != len(vertices):
        raise UsageError(f"expected {len(vertices)} dimensions ({', '.join(vertices)}), got {text!r}")
    if any(x < 0 for x in parts):
        raise UsageError("dimensions must be nonnegative")
    return dict(zip(vertices, parts))


def build_component(args):
    """(QGQuiver, IdempotentData or None)."""
    from .qg import build_qg_finite, build_qg_gl, component_of, parse_vertex_name
    q = load_quiver(args.quiver)
    kind, act = load_action(args.action, q)
    if kind == "gl":
        if not args.component:
            raise UsageError("a GL action needs --component (a seed vertex such as '2:[1]')")
        u, lam = parse_vertex_name(args.component)
        qg = build_qg_gl(q, act, (u, list(lam)))
    else:
        qg = build_qg_finite(q, act)
        if args.component:
            qg = component_of(qg, args.component)
    return qg


def component_data(args):
    from .smash import build_idempotent_data
    qg = build_component(args)
    return qg, build_idempotent_data(qg)


# ----------------------------------------------------------------------
# commands


def cmd_qg(args, out):
    qg = build_component(args)
    if args.json:
        out(json.dumps(qg.to_dict(), sort_keys=True))
    else:
        for line in qg.summary():
            out(line)
    return 0


def cmd_rc(args, out):
    from .smash import rc_symbolic
    qg, data = component_data(args)
    for name, sm in rc_symbolic(data).items():
        _, t, h = data.base.arrow(name)
        out(f"arrow {name}: {t} -> {h}  shape {sm.rows}x{sm.cols}")
        if args.format == "dense":
            out(sm.dense_text() if sm.rows and sm.cols else "(empty)")
        else:
            for sym, y in sm.yale().items():
                out(f"  {sym}")
                for line in y.lines():
                    out("    " + line)
    return 0


def cmd_tc(args, out):
    from .quiver import Representation, canonical_resolution, decompose_indecomposables, random_rep
    from .smash import tc_apply, tc_on_projectives
    qg, data = component_data(args)
    q = data.base
    if args.rep:
        with open(args.rep) as fh:
            m = Representation.from_dict(q, json.load(fh))
    else:
        m = random_rep(q, parse_dims(args.dims, q.vertices), seed=args.seed, height=9)
    pres = tc_on_projectives(data, canonical_resolution(m))
    out(f"P1 summands {len(pres.p1)}: " + " ".join(v for v, _ in pres.p1))
    out(f"P0 summands {len(pres.p0)}: " + " ".join(v for v, _ in pres.p0))
    for (r, c), comb in sorted(pres.entries.items()):
        text = " + ".join(_term(x, ".".join(p) if p else "e") for p, x in comb.items())
        out(f"  ({r + 1},{c + 1}) {text}")
    t = tc_apply(data, m)
    out("cokernel dims " + " ".join(f"{v}={t.dims[v]}" for v in t.quiver.vertices))
    if args.decompose:
        for s, mult, flagged in decompose_indecomposables(t, seed=args.seed):
            out(f"  {mult} x {s.dim_tuple()}" + (" (inconclusive)" if flagged else ""))
    return 0


def _term(x, name: str) -> str:
    from .linalg import rat_str
    if x == 1:
        return name
    if x == -1:
        return "-" + name
    return f"{rat_str(x)}*{name}"


def cmd_semiinv(args, out):
    from .propositions import build, datum_for, family
    from .quiver import random_rep
    from .schofield import restricted_span_dim, schofield_c, transformation_check
    if args.action_name == "span":
        qg, data = component_data(args)
        alpha = parse_dims(args.alpha, data.base.vertices)
        beta = parse_dims(args.beta, qg.quiver.vertices)
        res = restricted_span_dim(alpha, data, beta, seed=args.seed)
        for k in ("left", "right", "tc"):
            out(f"{k} {res[k]}")
        return 0 if res["left"] == res["right"] == res["tc"] else 1
    try:
        f = family(args.family)
    except KeyError:
        raise UsageError(f"unknown family {args.family!r}") from None
    n, alpha = build(f, args.a, seed=args.seed + 1)
    out(f"family {f.name} a={args.a} alpha={tuple(alpha.values())} beta={n.dim_tuple()}")
    if args.action_name == "eval":
        rng = random.Random(args.seed)
        for k in range(args.trials):
            m = random_rep(n.quiver, alpha, seed=rng.randrange(10 ** 9), height=9)
            out(f"c(M_{k}, N) = {schofield_c(m, n)}")
        return 0
    rep = transformation_check(n, alpha, trials=args.trials, seed=args.seed, datum=datum_for(f),
                               group_trials=args.group_trials)
    for line in str(rep).splitlines():
        out(line)
    return 0 if rep.ok else 1


def cmd_idempotents(args, out):
    from .schur import schur_idempotents
    if args.d not in (2, 3):
        raise UsageError("tabulated idempotents exist for d = 2 and d = 3")
    for lam, x in schur_idempotents(args.n, args.d, printed=args.printed):
        out(f"{lam}  {x}")
    return 0


def cmd_verify(args, out):
    from .suites import SUITES
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITES)}, all")
    failed = 0
    for name in names:
        checks = SUITES[name](seed=args.seed)
        for c in checks:
            out(c.line())
        bad = sum(not c.ok for c in checks)
        failed += bad
        out(f"suite {name}: {len(checks) - bad}/{len(checks)} passed")
    return 0 if failed == 0 else 1


# ----------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qgsmash", description="Q_G quivers, functor matrices and semi-invariants")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def component_flags(sp):
        sp.add_argument("--quiver", required=True)
        sp.add_argument("--action", required=True)
        sp.add_argument("--component", default=None)

    qg = sub.add_parser("qg").add_subparsers(dest="action_name", required=True)
    b = qg.add_parser("build")
    component_flags(b)
    b.add_argument("--json", action="store_true")

    rc = sub.add_parser("rc").add_subparsers(dest="action_name", required=True)
    e = rc.add_parser("emit")
    component_flags(e)
    e.add_argument("--format", choices=("dense", "yale"), default="dense")

    tc = sub.add_parser("tc").add_subparsers(dest="action_name", required=True)
    t = tc.add_parser("project")
    component_flags(t)
    t.add_argument("--dims", default="")
    t.add_argument("--rep", default=None)
    t.add_argument("--decompose", action="store_true")

    si = sub.add_parser("semiinv").add_subparsers(dest="action_name", required=True)
    for name in ("eval", "check"):
        s = si.add_parser(name)
        s.add_argument("--family", required=True)
        s.add_argument("--a", type=int, default=1)
        s.add_argument("--trials", type=int, default=5)
        s.add_argument("--group-trials", type=int, default=3)
    s = si.add_parser("span")
    component_flags(s)
    s.add_argument("--alpha", required=True)
    s.add_argument("--beta", required=True)

    idp = sub.add_parser("idempotents").add_subparsers(dest="action_name", required=True)
    ip = idp.add_parser("print")
    ip.add_argument("--n", type=int, required=True)
    ip.add_argument("--d", type=int, required=True)
    ip.add_argument("--printed", action="store_true")

    v = sub.add_parser("verify")
    v.add_argument("suite")
    return p


COMMANDS = {"qg": cmd_qg, "rc": cmd_rc, "tc": cmd_tc, "semiinv": cmd_semiinv,
            "idempotents": cmd_idempotents, "verify": cmd_verify}


def main(argv=None, stdout=None) -> int:
    from .qg import ScopeError
    stdout = stdout or sys.stdout
    args = make_parser().parse_args(argv)

    def out(line: str):
        print(line, file=stdout)

    label = args.command + (f" {args.action_name}" if getattr(args, "action_name", None) else "")
    if args.command == "verify":
        label += f" {args.suite}"
    out(header(label))
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ScopeError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
