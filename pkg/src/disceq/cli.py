"""Command-line front end.

Each command reads an instance file (or flags, for the two demo commands),
runs one library operation, prints delimited plain-text sections and can
additionally write a JSON report, a TSV table and figures.

Exit codes: 0 success, 1 error, 2 a finiteness hypothesis of the solver
fails, 3 the candidate strategy is incomplete and ``--require-complete``
was given.
"""
from __future__ import annotations

import argparse
import csv
import os
import random
import sys
from dataclasses import dataclass, field

from . import __version__, instances, plotting
from .errors import ConditionFailure, DiscEqError
from .etale.orders import elem_equiv, order_K_part_reps, poly_equiv
from .etale.splitting import disc_native
from .modules import AModule, LinearSystemA, nth_division_reps, quotient_finite
from .oracle import CandidateStrategy
from .polyalg import GF, GREVLEX, LEX, QQ, ZZ, IdealBasis, groebner, ideal_member
from .polyalg.mpoly import MPoly, parse_poly, parse_rational_poly
from .polyalg.univariate import discriminant, taylor_shift
from .report import build_report, quotient_block, solution_block, write_report
from .rings import RingPresentation, base_field, integers
from .solver import (OrderDiscInstance, PolyDiscInstance, brute_force_poly_disc,
                     counterexample_family, fmt_poly, solve_order_disc, solve_poly_disc)

EXIT_OK, EXIT_ERROR, EXIT_CONDITION, EXIT_INCOMPLETE = 0, 1, 2, 3

# instance kinds accepted by each command
KINDS = {
    "gb": ("gb", "ring"),
    "member": ("member",),
    "linsolve": ("linsolve",),
    "quotient-reps": ("quotient",),
    "order-check": ("order-check", "order-disc"),
    "solve-poly-disc": ("poly-disc",),
    "solve-order-disc": ("order-disc",),
    "demo-counterexample": ("counterexample",),
}


@dataclass
class Outcome:
    result: dict
    sections: list = field(default_factory=list)     # (title, lines)
    table: list = field(default_factory=list)        # header row first
    figures: list = field(default_factory=list)      # (file name, callable(path))
    ring: RingPresentation | None = None
    incomplete: bool = False
    self_check: dict | None = None


def _check(cases, ok, seed):
    return {"seed": seed, "cases": cases, "passed": ok}


def _random_ring_elem(A: RingPresentation, rng: random.Random, size: int = 3):
    x = A.elem(rng.randint(-size, size))
    for g in A.gens():
        x = x + g * rng.randint(-size, size)
    return x


def _parse_domain(text: str):
    if text == "ZZ":
        return ZZ
    if text == "QQ":
        return QQ
    return GF(int(text[3:-1]))


# ---------------------------------------------------------------------------
# commands

def cmd_gb(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    names = list(A.var_names)
    if inst.kind == "ring":
        basis = list(A.cached_gb)
        result = {"basis": [b.fmt(names) for b in basis],
                  "integer_generator": A.ideal.integer_generator(),
                  "looks_prime": A.looks_prime()}
        lines = [f"relations   {len(A.relations)}", f"basis       {len(basis)}"]
        lines += [f"  {b.fmt(names)}" for b in basis]
        lines.append(f"prime test  {'passed' if result['looks_prime'] else 'inconclusive'}")
        return Outcome(result, [("ring", lines)], [["basis"]] + [[s] for s in result["basis"]], ring=A)
    dom = _parse_domain(data.get("domain", "ZZ"))
    order = LEX if data.get("order") == "lex" else GREVLEX
    if dom is QQ:
        polys = [parse_rational_poly(t, names, order) for t in data["polys"]]
    else:
        polys = [parse_poly(t, names, dom, order) for t in data["polys"]]
    polys += [r.change_domain(dom).with_order(order) for r in A.relations]
    basis = groebner(polys, order)
    result = {"domain": data.get("domain", "ZZ"), "order": data.get("order", "grevlex"),
              "basis": [b.fmt(names) for b in basis]}
    if dom is ZZ:
        result["integer_generator"] = IdealBasis(basis, len(names), dom, order).integer_generator()
    out = Outcome(result, ring=A)
    out.sections.append(("input", [f"domain      {result['domain']}", f"order       {result['order']}",
                                   f"generators  {len(polys)}"] + [f"  {p.fmt(names)}" for p in polys]))
    out.sections.append(("groebner basis", [f"  {s}" for s in result["basis"]]))
    out.table = [["index", "polynomial"]] + [[str(i + 1), s] for i, s in enumerate(result["basis"])]
    if args.seed is not None:
        rng = random.Random(args.seed)
        IB = IdealBasis(basis, len(names), dom, order)
        ok, cases = all(IB.contains(p) for p in polys), 0
        for _ in range(50):
            acc = MPoly.zero(len(names), dom, order)
            for p in polys:
                c = MPoly.const(rng.randint(-3, 3), len(names), dom, order)
                for i in range(len(names)):
                    c = c + MPoly.var(i, len(names), dom, order) * rng.randint(-2, 2)
                acc = acc + c * p
            ok = ok and IB.contains(acc)
            cases += 1
        out.self_check = _check(cases, ok, args.seed)
    return out


def cmd_member(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    names = list(A.var_names)
    gens = [A.poly(t) for t in data["gens"]]
    target = A.poly(data["target"])
    cof = ideal_member(target, gens + list(A.relations)) if (gens or A.relations) else \
        ([] if target.is_zero() else None)
    member = cof is not None
    result = {"member": member, "target": target.fmt(names), "gens": [g.fmt(names) for g in gens]}
    lines = [f"target      {result['target']}", f"member      {'yes' if member else 'no'}"]
    table = [["generator", "cofactor"]]
    if member:
        cofs = [A.canonical(c) for c in cof[:len(gens)]]
        result["cofactors"] = [c.fmt(names) for c in cofs]
        for g, c in zip(gens, cofs):
            lines.append(f"  ({c.fmt(names)}) * ({g.fmt(names)})")
            table.append([g.fmt(names), c.fmt(names)])
    out = Outcome(result, [("membership", lines)], table, ring=A)
    if args.seed is not None:
        rng = random.Random(args.seed)
        ok, n = True, 0
        for _ in range(25):
            acc = A.zero()
            for g in gens:
                acc = acc + _random_ring_elem(A, rng) * A.elem(g)
            c = ideal_member(acc.rep, gens + list(A.relations)) if gens else []
            ok = ok and c is not None
            n += 1
        out.self_check = _check(n, ok, args.seed)
    return out


def cmd_linsolve(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    M = [[A.parse_frac(t) for t in row] for row in data["matrix"]]
    b = [A.parse_frac(t) for t in data["rhs"]]
    system = LinearSystemA(A, M)
    x0 = system.particular(b)
    kern = system.kernel()
    result = {"solvable": x0 is not None,
              "solution": [x.fmt() for x in x0] if x0 is not None else None,
              "kernel": [[x.fmt() for x in v] for v in kern]}
    lines = [f"size        {len(M)} x {len(M[0]) if M else 0}",
             f"solvable    {'yes' if x0 is not None else 'no'}"]
    if x0 is not None:
        lines.append("solution    (" + ", ".join(result["solution"]) + ")")
    lines.append(f"kernel      {len(kern)} generators")
    lines += ["  (" + ", ".join(v) + ")" for v in result["kernel"]]
    table = [["vector", "entries"]]
    if x0 is not None:
        table.append(["particular", " ; ".join(result["solution"])])
    table += [[f"kernel {i + 1}", " ; ".join(v)] for i, v in enumerate(result["kernel"])]
    out = Outcome(result, [("linear system", lines)], table, ring=A)
    if args.seed is not None:
        rng = random.Random(args.seed)
        ok, n = True, 0
        for _ in range(25):
            x = list(x0) if x0 is not None else [A.zero()] * (len(M[0]) if M else 0)
            for v in kern:
                r = _random_ring_elem(A, rng)
                x = [xi + r * vi for xi, vi in zip(x, v)]
            for row, bi in zip(M, b):
                acc = A.frac(0)
                for mij, xj in zip(row, x):
                    acc = acc + mij * xj
                ok = ok and (acc == (bi if x0 is not None else 0))
            n += 1
        out.self_check = _check(n, ok, args.seed)
    return out


def _quotient_check(A, qr, M1, M2, rng, seed) -> dict:
    """Random elements of M2 must be congruent to exactly one representative mod M1."""
    reps = qr.representatives
    ok, n = True, 0
    for _ in range(25):
        x = A.frac(0)
        for g in M2.scalars():
            x = x + g * _random_ring_elem(A, rng)
        hits = sum(1 for r in reps if M1.contains(x - r))
        ok = ok and hits == 1
        n += 1
    return _check(n, ok, seed)


def _quotient_lines(block: dict) -> list:
    lines = [f"finite      {'yes' if block['finite'] else 'no'}"]
    if block.get("scale"):
        lines.append(f"scale       {block['scale']}")
    for i, st in enumerate(block["steps"]):
        size = st["size"] if st["size"] is not None else "infinite"
        lines.append(f"step {i + 1}      g = {st['generator']}, (I+J) ∩ ZZ = ({st['integer']}), "
                     f"primes {st['primes']}, size {size}")
    if block["finite"]:
        lines.append(f"primes      {block['primes']}")
        lines.append(f"reps        {len(block['representatives'])}")
        lines += [f"  {r}" for r in block["representatives"]]
    return lines


def cmd_quotient(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    if "nth_division" in data:
        nd = data["nth_division"]
        gens, certs = instances.closure_AK(A, nd.get("closure"))
        qr = nth_division_reps(A, gens, nd["n"], certs)
        M1 = AModule.rank_one(A, [A.frac(1)])
        M2 = AModule.rank_one(A, qr.witness["intersection"])
        what = f"((1/{nd['n']})A ∩ A_K)/A"
    else:
        M1 = AModule.rank_one(A, [A.parse_frac(t) for t in data["m1"]])
        M2 = AModule.rank_one(A, [A.parse_frac(t) for t in data["m2"]])
        qr = quotient_finite(M1, M2)
        what = "M2/M1"
    block = quotient_block(qr)
    out = Outcome(block, [(f"quotient {what}", _quotient_lines(block))], ring=A)
    out.table = [["index", "representative"]] + \
        [[str(i), r] for i, r in enumerate(block["representatives"])]
    out.figures.append(("quotient_layers.png",
                        lambda p: plotting.quotient_layers(block, p, f"layers of {what}")))
    if args.seed is not None and qr.finite:
        out.self_check = _quotient_check(A, qr, M1, M2, random.Random(args.seed), args.seed)
    return out


def cmd_order_check(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    Omega = instances.algebra(A, data["P"])
    O = instances.order(A, Omega, data["order_gens"])
    qr = order_K_part_reps(O)
    block = quotient_block(qr)
    result = {"verified": O.verified, "basis": [str(w) for w in O.gens], "K_part": block}
    lines = [f"algebra     K[theta]/({fmt_poly_K(Omega.min_poly, A)})",
             f"verified    {'yes' if O.verified else 'no'}",
             "basis       " + ", ".join(result["basis"])]
    out = Outcome(result, [("order", lines), ("(O ∩ K)/A", _quotient_lines(block))], ring=A)
    out.table = [["index", "generator"]] + [[str(i + 1), s] for i, s in enumerate(result["basis"])]
    return out


def fmt_poly_K(coeffs, A: RingPresentation, var: str = "X") -> str:
    K = base_field(A)
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        s = K.fmt(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and s == "1":
            terms.append(mono)
        elif mono and s == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"({s})*{mono}" if mono else s)
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _strategy(args, inst):
    if args.strategy:
        block = inst.data.get("strategy", {})
        if args.strategy == "user":
            return instances.strategy({**block, "variant": "user"})
        return CandidateStrategy.parse(args.strategy)
    return instances.strategy(inst.data["strategy"])


def _solution_sections(rep, block, header) -> list:
    lines = header + [f"strategy    {block['strategy']}",
                      f"candidates  {len(block['candidates'])}",
                      f"complete    {'true' if block['complete'] else 'false'}"]
    lines += [f"note        {n}" for n in block["notes"]]
    sections = [("instance", lines),
                ("shift representatives", _quotient_lines(block["quotient"])),
                ("tuple verdicts", [f"  {k:<13}{v}" for k, v in block["verdicts"].items()]),
                ("representatives", [f"classes     {block['class_count']}"] +
                 [f"  {i + 1}. {s}" for i, s in enumerate(block["representatives"])])]
    if "trace" in block:
        tl = []
        for t in block["trace"]:
            tl.append(f"  [{', '.join(t['gammas'])}] -> {t['verdict']}"
                      + (f": {', '.join(t['produced'])}" if t["produced"] else ""))
        sections.insert(3, ("trace", tl))
    return sections


def cmd_solve_poly(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    _, S = instances.splitting(A, data["splitting"])
    AK, certs = instances.closure_AK(A, data.get("closure_AK"))
    strat = _strategy(args, inst)
    pi = PolyDiscInstance(A, S, data["degree"], A.elem(str(data["delta"])), strat,
                          AK_gens=tuple(AK), AK_certificates=certs if AK else None, name=inst.name)
    rep = solve_poly_disc(pi)
    block = solution_block(rep, trace=args.trace, strategy=strat.describe())
    header = [f"degree      {data['degree']}", f"delta       {A.elem(str(data['delta'])).fmt()}",
              f"field       degree {S.degree} over K, u root of {fmt_poly_K(S.u_min_poly, A, 'u')}"]
    out = Outcome(block, _solution_sections(rep, block, header), ring=A, incomplete=not rep.complete)
    out.table = [["class", "representative", "discriminant"]] + \
        [[str(i + 1), s, discriminant(F).fmt()] for i, (s, F) in
         enumerate(zip(block["representatives"], rep.representatives))]
    counts = block["verdicts"]
    out.figures.append(("verdicts.png", lambda p: plotting.verdict_bars(counts, p)))
    if A.is_integers and rep.representatives:
        polys = [[int(c) for c in F] for F in rep.representatives]
        out.figures.append(("roots.png", lambda p: plotting.root_scatter(polys, p)))
    if args.seed is not None:
        rng = random.Random(args.seed)
        delta = A.elem(str(data["delta"]))
        ok, n = True, 0
        for F in rep.representatives:
            for _ in range(10):
                a = _random_ring_elem(A, rng, 5)
                G = taylor_shift(F, a)
                ok = ok and discriminant(G) == delta and poly_equiv(A, F, G) is not None
                n += 1
        for i, F in enumerate(rep.representatives):
            for G in rep.representatives[i + 1:]:
                ok = ok and poly_equiv(A, F, G) is None
                n += 1
        out.self_check = _check(n, ok, args.seed)
    return out


def cmd_solve_order(args, inst) -> Outcome:
    A, data = inst.ring, inst.data
    Omega = instances.algebra(A, data["P"])
    O = instances.order(A, Omega, data["order_gens"])
    _, S = instances.splitting(A, data.get("splitting", {"P": data["P"]}), Omega)
    AK, certs = instances.closure_AK(A, data.get("closure_AK"))
    strat = _strategy(args, inst)
    delta = A.elem(str(data["delta"]))
    oi = OrderDiscInstance(A, Omega, O, delta, S, strat, AK_gens=tuple(AK),
                           AK_certificates=certs if AK else None, name=inst.name)
    rep = solve_order_disc(oi)
    block = solution_block(rep, trace=args.trace, strategy=strat.describe())
    header = [f"algebra     K[theta]/({fmt_poly_K(Omega.min_poly, A)})",
              "order       " + ", ".join(str(w) for w in O.gens),
              f"delta       {delta.fmt()}"]
    out = Outcome(block, _solution_sections(rep, block, header), ring=A, incomplete=not rep.complete)
    out.table = [["class", "representative"]] + \
        [[str(i + 1), s] for i, s in enumerate(block["representatives"])]
    counts = block["verdicts"]
    out.figures.append(("verdicts.png", lambda p: plotting.verdict_bars(counts, p)))
    if args.seed is not None:
        rng = random.Random(args.seed)
        K = Omega.K
        ok, n = True, 0
        for a in rep.representatives:
            for _ in range(10):
                b = a + K.from_ring(_random_ring_elem(A, rng, 5))
                ok = ok and O.contains(b) and disc_native(b) == K(delta) and elem_equiv(a, b) is not None
                n += 1
        for i, a in enumerate(rep.representatives):
            for b in rep.representatives[i + 1:]:
                ok = ok and elem_equiv(a, b) is None
                n += 1
        out.self_check = _check(n, ok, args.seed)
    return out


def cmd_counterexample(args, inst) -> Outcome:
    if inst is not None:
        n, c, m = inst.data["n"], inst.data["c"], inst.data["m"]
    else:
        n, c, m = args.n, args.c, args.m
    rec = counterexample_family(n, c, m)
    A = rec.ring
    qr = nth_division_reps(A, rec.closure_gens, n, [list(x) for x in rec.closure_certificates])
    polys = [fmt_poly(A, F) for F in rec.polynomials]
    ineq = {f"{i},{j}": v for (i, j), v in sorted(rec.inequivalent.items())}
    result = {"n": n, "c": c, "m": m, "delta": rec.delta.fmt(), "polynomials": polys,
              "disc_ok": list(rec.disc_ok), "inequivalent": ineq,
              "all_inequivalent": all(rec.inequivalent.values()),
              "nth_division": quotient_block(qr)}
    lines = [f"delta       {result['delta']}",
             f"disc ok     {all(rec.disc_ok)} ({sum(rec.disc_ok)}/{m})",
             f"pairwise    {'all inequivalent' if result['all_inequivalent'] else 'some equivalent'}",
             f"((1/{n})A ∩ A_K)/A  {'finite' if qr.finite else 'infinite'}"]
    table = [["m", "F_m", "disc_ok", "inequivalent_to_all_others"]]
    for k, (s, ok) in enumerate(zip(polys, rec.disc_ok), start=1):
        others = all(v for (i, j), v in rec.inequivalent.items() if k in (i, j))
        table.append([str(k), s, str(ok).lower(), str(others).lower()])
    out = Outcome(result, [("family", lines),
                           ("polynomials", [f"  F_{k} = {s}" for k, s in enumerate(polys, 1)])],
                  table, ring=A)
    out.figures.append(("inequivalence.png",
                        lambda p: plotting.inequivalence_grid(m, rec.inequivalent, rec.disc_ok, p)))
    return out


def cmd_brute_force(args, inst) -> Outcome:
    res = brute_force_poly_disc(args.n, args.delta, args.box)
    Z = integers()
    polys = [fmt_poly(Z, F) for F in res.polynomials]
    # same normalization as the solver: coefficient of X^(n-1) in [0, n) when possible
    def rep_key(i):
        F = res.polynomials[i]
        return (not 0 <= F[-2] < res.degree, [abs(c) for c in reversed(F)], list(F))
    reps = [polys[min(cls, key=rep_key)] for cls in res.classes]
    result = {"degree": res.degree, "delta": res.delta, "box": res.box,
              "polynomials": polys, "classes": [list(c) for c in res.classes],
              "representatives": reps}
    lines = [f"degree      {res.degree}", f"delta       {res.delta}", f"box         {res.box}",
             f"solutions   {len(polys)}", f"classes     {len(res.classes)}"]
    lines += [f"  {k + 1}. {r}  ({len(c)} in box)" for k, (r, c) in enumerate(zip(reps, res.classes))]
    table = [["index", "polynomial", "class"]]
    for k, cls in enumerate(res.classes):
        table += [[str(i), polys[i], str(k + 1)] for i in cls]
    out = Outcome(result, [("brute force", lines)], table, ring=Z)
    plist, classes = [list(F) for F in res.polynomials], [list(c) for c in res.classes]
    out.figures.append(("brute_force.png",
                        lambda p: plotting.brute_force_scatter(plist, classes, p)))
    return out


COMMANDS = {
    "gb": cmd_gb,
    "member": cmd_member,
    "linsolve": cmd_linsolve,
    "quotient-reps": cmd_quotient,
    "order-check": cmd_order_check,
    "solve-poly-disc": cmd_solve_poly,
    "solve-order-disc": cmd_solve_order,
    "demo-counterexample": cmd_counterexample,
    "brute-force": cmd_brute_force,
}


# ---------------------------------------------------------------------------
# driver

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a machine-readable report")
    common.add_argument("--table", metavar="PATH", help="write the main result as a TSV table")
    common.add_argument("--figures", metavar="DIR", help="render figures into this directory")
    common.add_argument("--trace", action="store_true", help="include the per-tuple trace")
    common.add_argument("--strategy", help="exhaustive | bounded:<H> | lattice:<H> | user")
    common.add_argument("--seed", type=int, help="run randomized self-checks with this seed")
    common.add_argument("--require-complete", action="store_true",
                        help="exit with status 3 when the candidate set is not provably complete")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress the text report")

    parser = argparse.ArgumentParser(prog="disceq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "demo-counterexample":
            p.add_argument("instance", nargs="?")
            p.add_argument("--n", type=int, default=2)
            p.add_argument("--c", type=int, default=1)
            p.add_argument("--m", type=int, default=3)
        elif name == "brute-force":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--delta", type=int, required=True)
            p.add_argument("--box", type=int, default=20)
        else:
            p.add_argument("instance")
    return parser


def render(command: str, name: str, out: Outcome) -> str:
    title = f"{command}" + (f" [{name}]" if name else "")
    bar = "=" * max(40, len(title) + 8)
    lines = [bar, f"== {title}", bar]
    if out.ring is not None:
        lines.append(f"ring        {out.ring!r}")
    for sec, body in out.sections:
        lines.append(f"--- {sec} ---")
        lines.extend(body)
    if out.self_check is not None:
        sc = out.self_check
        lines.append("--- self-check ---")
        lines.append(f"seed {sc['seed']}: {sc['cases']} cases, {'passed' if sc['passed'] else 'FAILED'}")
    lines.append(bar)
    return "\n".join(lines)


def write_table(rows, path: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh, delimiter="\t", lineterminator="\n").writerows(rows)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    command = args.command
    path = getattr(args, "instance", None)
    name = ""
    status, code, result, ring, message, condition, check = "ok", EXIT_OK, None, None, None, None, None
    try:
        inst = None
        if path is not None:
            inst = instances.read_instance(path)
            name = inst.name
            if inst.kind not in KINDS.get(command, ()):
                raise DiscEqError(f"{command} does not accept instances of kind '{inst.kind}'")
        out = COMMANDS[command](args, inst)
        result, ring, check = out.result, out.ring, out.self_check
        if not args.quiet:
            print(render(command, name, out), file=stdout)
        if args.table and out.table:
            write_table(out.table, args.table)
        if args.figures:
            for fname, draw in out.figures:
                draw(os.path.join(args.figures, fname))
        if out.incomplete:
            print("warning: candidate set is not provably complete; "
                  "the representatives are sound but may not cover every class", file=stderr)
            if args.require_complete:
                status, code = "incomplete", EXIT_INCOMPLETE
        if check is not None and not check["passed"]:
            status, code, message = "error", EXIT_ERROR, "randomized self-check failed"
            print(f"error: {message}", file=stderr)
    except ConditionFailure as exc:
        status, code, condition = "condition-failure", EXIT_CONDITION, exc.condition
        message = f"condition {exc.condition} fails: {exc}"
        print(f"error: {message}", file=stderr)
    except (DiscEqError, ValueError, OSError) as exc:
        status, code, message = "error", EXIT_ERROR, str(exc) or type(exc).__name__
        print(f"error: {type(exc).__name__}: {message}", file=stderr)
    if args.json:
        rep = build_report(command, status, code, instance=path, name=name, ring=ring,
                           result=result, message=message, condition=condition, self_check=check)
        write_report(rep, args.json)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
