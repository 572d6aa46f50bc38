"""Command-line interface: ``isoconj <command> --group cmm --element "t[1,0]*s1"``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, coconj, conjgeo, oracle, render
from .group import ElementSyntaxError, Group, GroupSpec, GroupSpecError, Isometry

SCHEMA = 1


class DomainError(Exception):
    pass


def _rat(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_group(args) -> Group:
    if args.group_file:
        return Group(_spec_from_file(args.group_file))
    return catalog.group(args.group or "cmm")


def _spec_from_file(path):
    try:
        return GroupSpec.load(path)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _element(G: Group, text, flag="--element") -> Isometry:
    if text is None:
        raise DomainError(f"{flag} is required")
    return G.parse(text)


def _coset_json(coset):
    return {"offset": list(coset.offset), "basis": [list(c) for c in coset.lattice.columns]}


def _coset_text(coset) -> str:
    gens = ", ".join("(" + ",".join(map(str, c)) + ")" for c in coset.lattice.columns)
    off = "(" + ",".join(map(str, coset.offset)) + ")"
    return f"{off} + span_Z{{{gens}}}" if gens else off


def _component_json(G, c):
    return {"point": c.point, "point_name": G.point_name(c.point), **_coset_json(c.coset)}


def _branch_json(G, b):
    return {"u": b.u, "u_name": G.point_name(b.u), "eta": list(b.eta),
            "fix_basis": [list(c) for c in b.fix_lattice.columns]}


def _desc_text(G, desc) -> list[str]:
    return [f"  u={G.point_name(b.u)}: t^({_coset_text(b.coset)}) * {G.point_name(b.u)}"
            for b in desc.branches]


# ---------------------------------------------------------------------------
# commands: each returns (payload dict, text lines)


def cmd_info(G, args):
    entry = catalog.CATALOG.get(G.name)
    payload = {
        "name": G.name,
        "dim": G.dim,
        "gram": [[_rat(x) for x in row] for row in G.spec.gram],
        "order": G.order,
        "points": [{"index": i, "name": G.point_name(i), "matrix": [list(r) for r in M]}
                   for i, M in enumerate(G.points.elements)],
    }
    lines = [f"group {G.name}: dim {G.dim}, |H0| = {G.order}"]
    if entry is not None:
        lines.append(f"  {entry.notes}")
    for i, M in enumerate(G.points.elements):
        lines.append(f"  g{i} ({G.point_name(i)}): {[list(r) for r in M]}")
    return payload, lines


def cmd_element(G, args):
    h = _element(G, args.element)
    text = G.format(h)
    return {"element": text, "trans": list(h.trans), "point": h.point}, [text]


def cmd_modset(G, args):
    h = _element(G, args.element)
    m = conjgeo.mod_set(G, h)
    return {"element": G.format(h), **_coset_json(m), "rank": m.lattice.rank}, [_coset_text(m)]


def cmd_movset(G, args):
    h = _element(G, args.element)
    m = conjgeo.mov_set(G, h)
    basis = [[_rat(x) for x in v] for v in m.basis]
    return ({"element": G.format(h), "offset": [_rat(x) for x in m.offset], "basis": basis, "dim": m.dim},
            [f"({','.join(map(str, m.offset))}) + span_Q{basis} (dim {m.dim})"])


def cmd_fixset(G, args):
    h = _element(G, args.element)
    basis = [[_rat(x) for x in v] for v in conjgeo.fix_set(G, h.point)]
    lat = conjgeo.fix_lattice(G, h.point)
    return ({"element": G.format(h), "point": h.point, "basis": basis,
             "lattice_basis": [list(c) for c in lat.columns]},
            [f"Fix({G.point_name(h.point)}) = span_Q{basis}; lattice span_Z{[list(c) for c in lat.columns]}"])


def cmd_filling(G, args):
    h = _element(G, args.element)
    ok = conjgeo.filling_check(G, h)
    return {"element": G.format(h), "fills": ok}, ["true" if ok else "false"]


def cmd_class(G, args):
    h = _element(G, args.element)
    cls = conjgeo.conjugacy_class(G, h)
    payload = {"element": G.format(h), "component_count": len(cls),
               "components": [_component_json(G, c) for c in cls.components]}
    lines = [f"class of {G.format(h)}: {len(cls)} component(s)"]
    lines += [f"  t^({_coset_text(c.coset)}) * {G.point_name(c.point)}" for c in cls.components]
    if args.radius is not None:
        members = sorted(cls.members_in_box(args.radius))
        payload["members"] = [G.format(g) for g in members]
        lines.append(f"members with |translation| <= {args.radius}: {len(members)}")
        lines += [f"  {G.format(g)}" for g in members]
    return payload, lines


def cmd_components(G, args):
    h = _element(G, args.element)
    comps = conjgeo.components(G, h)
    lin = conjgeo.linearized_components(G, h)
    payload = {"element": G.format(h), "count": len(comps), "linearized_count": len(lin),
               "components": [_component_json(G, c) for c in comps]}
    lines = [f"#Comp[h] = {len(comps)}, #Comp[h0] = {len(lin)}"]
    return payload, lines


def cmd_stabilizer(G, args):
    h = _element(G, args.element)
    stab = conjgeo.component_stabilizer(G, h)
    names = [G.point_name(u) for u in stab]
    return {"element": G.format(h), "stabilizer": stab, "names": names}, [" ".join(names)]


def _pair(G, args):
    return _element(G, args.element, "--h"), _element(G, args.h2, "--h2")


def cmd_coconj(G, args):
    h, h2 = _pair(G, args)
    desc = coconj.coconjugation_set(G, h, h2)
    payload = {"h": G.format(h), "h2": G.format(h2), "empty": desc.empty,
               "branches": [_branch_json(G, b) for b in desc.branches]}
    lines = ["empty"] if desc.empty else [f"{len(desc.branches)} branch(es)"] + _desc_text(G, desc)
    return payload, lines


def cmd_centralizer(G, args):
    h = _element(G, args.element)
    desc = coconj.centralizer(G, h)
    payload = {"h": G.format(h), "branches": [_branch_json(G, b) for b in desc.branches]}
    return payload, [f"{len(desc.branches)} branch(es)"] + _desc_text(G, desc)


def cmd_conjugate_p(G, args):
    h, h2 = _pair(G, args)
    desc = coconj.coconjugation_set(G, h, h2)
    verdict = "CONJUGATE" if desc else "NOT CONJUGATE"
    payload = {"h": G.format(h), "h2": G.format(h2), "verdict": verdict,
               "branches": [_branch_json(G, b) for b in desc.branches]}
    lines = [verdict] + _desc_text(G, desc)
    return payload, lines


def _random_element(G, rng, spread):
    return Isometry(tuple(rng.randint(-spread, spread) for _ in range(G.dim)), rng.randrange(G.order))


def cmd_verify(G, args):
    """Closed forms against the brute-force oracle on random elements."""
    rng = random.Random(args.seed)
    window = oracle.Ball(args.radius)
    conj_ball = oracle.Ball(args.conj_radius if args.conj_radius is not None else 6 * args.radius)
    coconj_ball = oracle.Ball(args.radius)
    results = []
    for _ in range(args.samples):
        h = _random_element(G, rng, 2)
        cls = conjgeo.conjugacy_class(G, h)
        found = oracle.brute_class(G, h, conj_ball, window)
        rep = oracle.compare(cls.members_in_box(window.radius), found, window)
        results.append({"check": "class", "element": G.format(h), "equal": rep.equal})

        k = _random_element(G, rng, 2)
        for h2 in (G.conjugate(k, h), _random_element(G, rng, 2)):
            desc = coconj.coconjugation_set(G, h, h2)
            rep2 = oracle.compare(desc.members_in_box(coconj_ball.radius),
                                  oracle.brute_coconj(G, h, h2, coconj_ball), coconj_ball)
            results.append({"check": "coconj", "element": G.format(h), "h2": G.format(h2),
                            "equal": rep2.equal})
    for p in range(G.order):
        s = G.spherical(p)
        agree = conjgeo.filling_check(G, s) == conjgeo.filling_by_saturation(G, s)
        results.append({"check": "filling", "element": G.format(s), "equal": agree})
    ok = all(r["equal"] for r in results)
    lines = [f"{r['check']:8s} {r['element']}{' -> ' + r['h2'] if 'h2' in r else ''}: "
             f"{'ok' if r['equal'] else 'MISMATCH'}" for r in results]
    lines.append("ALL OK" if ok else "FAILURES")
    payload = {"radius": args.radius, "conj_radius": conj_ball.radius, "seed": args.seed,
               "ok": ok, "results": results}
    return payload, lines


def cmd_plot(G, args):
    window = render.parse_window(args.window)
    h = _element(G, args.element)
    if args.h2 is not None:
        svg = render.render_coconj(G, coconj.coconjugation_set(G, h, G.parse(args.h2)), window)
    else:
        svg = render.render_class(G, h, window)
    if args.out:
        Path(args.out).write_text(svg)
        return {"out": args.out, "bytes": len(svg.encode())}, [f"wrote {args.out}"]
    return None, [svg.rstrip("\n")]


COMMANDS = {
    "info": (cmd_info, "describe the group and its point group"),
    "element": (cmd_element, "parse and normalise an element"),
    "modset": (cmd_modset, "mod-set of an element"),
    "movset": (cmd_movset, "move-set of an element"),
    "fixset": (cmd_fixset, "fix-set of the spherical part"),
    "filling": (cmd_filling, "does the element fill its move-set"),
    "class": (cmd_class, "closed form of the conjugacy class"),
    "components": (cmd_components, "components of the conjugacy class"),
    "stabilizer": (cmd_stabilizer, "point elements stabilising the base component"),
    "coconj": (cmd_coconj, "all k with k h k^-1 = h2"),
    "centralizer": (cmd_centralizer, "centralizer of an element"),
    "conjugate-p": (cmd_conjugate_p, "decide whether h and h2 are conjugate"),
    "verify": (cmd_verify, "check closed forms against brute force"),
    "plot": (cmd_plot, "SVG picture of a class (or coconjugation set with --h2)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isoconj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--group", help=f"catalog key ({', '.join(catalog.keys())})")
        src.add_argument("--group-file", help="JSON group spec")
        p.add_argument("--element", "--h", dest="element", help='element, e.g. "t[1,0]*s1"')
        p.add_argument("--h2", help="second element for coconj / conjugate-p / plot")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--radius", type=int, default=4 if name == "verify" else None)
        if name == "verify":
            p.add_argument("--samples", type=int, default=20)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--conj-radius", type=int, default=None,
                           help="conjugator box for the class oracle (default 6 * radius)")
        if name == "plot":
            p.add_argument("--window", help="x0,y0,x1,y1 in plane coordinates")
            p.add_argument("--out", help="write the SVG here instead of stdout")
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        G = _load_group(args)
        payload, lines = func(G, args)
    except (DomainError, GroupSpecError, ElementSyntaxError, catalog.UnknownGroupError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"isoconj: error: {msg}", file=sys.stderr)
        return 1
    if args.json and payload is not None:
        doc = {"schema": SCHEMA, "command": args.command, "group": G.name, **payload}
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    if args.command == "verify" and not payload["ok"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
