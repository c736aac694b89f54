"""Command-line front end.

Every subcommand parses its arguments, calls one library function and formats
the result.  ``--format structured`` prints one JSON object instead of text.
The keys used are ``verdict``, ``witness``, ``counts``, ``matrix``, ``cuts``
and ``result``.  Exit status is 0 on success, 1 on a domain error (one line on
stderr) and 2 on a usage error.

In text output, permutations of length at most 9 are printed in compact digit
form and longer ones with spaces.  Structured output and ``convert`` always use
the spaced form.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import antichain, enumeration, graphs, grid, substitution
from .perm import Basis, Perm, contains, symmetry

SYMMETRIES = ("inverse", "reverse", "complement", "reverse_complement", "inverse_reverse_complement")


class DomainError(Exception):
    pass


def show(p: Perm) -> str:
    return p.pretty()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _graph_json(g: graphs.Graph) -> dict:
    out = {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def _cuts_json(g: grid.Gridding) -> dict:
    return {"columns": list(g.col_cuts), "rows": list(g.row_cuts)}


def _cuts_text(g: grid.Gridding) -> list[str]:
    return [
        "columns " + " ".join(map(str, g.col_cuts)),
        "rows " + " ".join(map(str, g.row_cuts)),
    ]


def _parse_rects(text: str) -> list[grid.Rectangle]:
    rects = []
    for chunk in text.replace("\n", ";").split(";"):
        if not chunk.strip():
            continue
        nums = chunk.split()
        if len(nums) != 4:
            raise DomainError(f"rectangle {chunk.strip()!r} needs four integers x1 x2 y1 y2")
        rects.append(grid.Rectangle(*map(int, nums)))
    return rects


def _parse_hulls(text: str) -> list[grid.Hull]:
    hulls = []
    for chunk in text.replace("\n", ";").split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split()
        if len(parts) != 5:
            raise DomainError(f"hull {chunk.strip()!r} needs x1 x2 y1 y2 inc|dec")
        hulls.append(grid.Hull(grid.Rectangle(*map(int, parts[:4])), parts[4]))
    return hulls


# -- subcommands ----------------------------------------------------------------


def cmd_contains(a) -> tuple[list[str], dict]:
    pattern, host = Perm.parse(a.pattern), Perm.parse(a.host)
    hit = contains(pattern, host)
    text = ["contained", " ".join(map(str, hit))] if hit is not None else ["avoided"]
    return text, {"verdict": hit is not None, "witness": list(hit) if hit is not None else None}


def cmd_symmetry(a):
    p = symmetry(Perm.parse(a.perm), a.which)
    return [show(p)], {"result": list(p)}


def cmd_graph(a):
    g = graphs.graph_of(Perm.parse(a.perm))
    return g.to_text().splitlines(), {"result": _graph_json(g)}


def cmd_perms_of(a):
    if a.file:
        g = graphs.parse_graph(_read(a.file))
    else:
        kind, n = next((k, getattr(a, k)) for k in ("path", "clique", "edgeless") if getattr(a, k))
        g = graphs.build_named(kind, n)
    found = sorted(graphs.perms_of_graph(g, a.cap))
    return [show(p) for p in found], {"result": [list(p) for p in found]}


def cmd_decompose(a):
    tree = substitution.decompose(Perm.parse(a.perm))
    return [str(tree)], {"result": str(tree), "height": tree.height}


def cmd_depth(a):
    d = substitution.substitution_depth(Perm.parse(a.perm))
    return [str(d)], {"result": d}


def _matrix_arg(a) -> grid.GridMatrix:
    return grid.parse_matrix(_read(a.matrix_file) if a.matrix_file else a.matrix)


def cmd_grid_check(a):
    m = _matrix_arg(a)
    g = grid.grid_membership(Perm.parse(a.perm), m)
    text = ["member"] + _cuts_text(g) if g else ["not a member"]
    return text, {"verdict": g is not None, "matrix": m.to_text(), "cuts": _cuts_json(g) if g else None}


def cmd_corner_grid(a):
    found = grid.min_corner_free_gridding(Perm.parse(a.perm), a.dim_cap)
    if found is None:
        return ["none within the dimension cap"], {"verdict": False, "matrix": None, "cuts": None}
    m, g = found
    return m.to_text().splitlines() + _cuts_text(g), {
        "verdict": True,
        "matrix": m.to_text(),
        "cuts": _cuts_json(g),
    }


def cmd_slice(a):
    rects = _parse_rects(_read(a.file) if a.file else a.rects or "")
    if not rects:
        raise DomainError("no rectangles given")
    lines = grid.min_slicing_lines(rects)
    size, _ = grid.max_independent_rectangles(rects)
    text = [f"{axis} {c}" for axis, c in lines] + [f"independent {size}"]
    return text, {"result": [[axis, c] for axis, c in lines], "independent": size}


def cmd_propagate(a):
    cfg = grid.HullConfig(Perm.parse(a.perm), tuple(_parse_hulls(_read(a.file) if a.file else a.hulls or "")))
    prop = grid.propagate_hulls(cfg)
    text = prop.matrix.to_text().splitlines() + _cuts_text(prop.gridding)
    text.append(f"max sliced {prop.max_sliced}")
    return text, {
        "matrix": prop.matrix.to_text(),
        "cuts": _cuts_json(prop.gridding),
        "verdict": grid.corner_free(prop.matrix),
        "max_sliced": prop.max_sliced,
    }


def cmd_antichain_gen(a):
    fam = antichain.FamilyId.parse(a.family, a.k)
    if fam.kind in ("ding", "split"):
        if not a.perm:
            raise DomainError(f"{a.family} needs --perm")
        build = antichain.ding_graph if fam.kind == "ding" else antichain.split_graph
        g = build(Perm.parse(a.perm))
        return g.to_text().splitlines(), {"result": _graph_json(g)}
    elems = [antichain.antichain_element(antichain.FamilyId(fam.kind, k)) for k in range(a.k, a.k + a.count)]
    return [show(p) for p in elems], {"result": [list(p) for p in elems]}


def cmd_antichain_verify(a):
    if a.perms:
        elems = [Perm.parse(t) for t in a.perms.split(",") if t.strip()]
        matrix = None
    else:
        fam = antichain.FamilyId.parse(a.family or "", 1)
        elems = antichain.family_prefix(fam.kind, a.count)
        matrix = antichain.family_matrix(fam.kind) if fam.kind in antichain.FAMILY_MATRIX else None
    if a.mode == "perm":
        report = antichain.verify_perm_antichain(elems, matrix)
    else:
        report = antichain.verify_graph_antichain(elems, a.mode, matrix, a.cap)
    witness = [
        {"pair": [v.i + 1, v.j + 1], "embedding": list(v.witness), "via": v.via} for v in report.violations
    ]
    return report.lines(), {
        "verdict": report.is_antichain,
        "witness": witness,
        "membership": list(report.membership) if report.membership is not None else None,
    }


def cmd_count(a):
    seq = enumeration.count_avoiders(Basis.parse(a.basis, reduce=True), a.n)
    return seq.lines(), {"counts": list(seq.counts)}


def cmd_guess(a):
    if a.terms:
        terms = [int(t) for t in a.terms.replace(",", " ").split()]
    elif a.basis:
        terms = list(enumeration.count_avoiders(Basis.parse(a.basis, reduce=True), a.n).counts)
    else:
        raise DomainError("give --terms or --basis")
    rec = enumeration.guess_recurrence(terms, a.max_order, a.holdout)
    if rec is None:
        return ["no recurrence"], {"verdict": False, "counts": terms, "result": None}
    return str(rec).splitlines(), {
        "verdict": True,
        "counts": terms,
        "result": {"coefficients": [str(c) for c in rec.coefficients], "initial": list(rec.initial)},
    }


def cmd_convert(a):
    text = _read(a.file) if a.file else a.text
    if text is None:
        raise DomainError("give the input text or --file")
    if a.kind == "perm":
        p = Perm.parse(text)
        if a.to == "compact":
            if len(p) > 9:
                raise DomainError(f"compact form is ambiguous for length {len(p)} >= 10")
            out = p.compact()
        else:
            out = str(p)
        return [out], {"result": out}
    g = graphs.parse_graph(text)
    return g.to_text().splitlines(), {"result": _graph_json(g)}


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="permwqo", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("contains", help="pattern containment with a witness")
    s.add_argument("pattern")
    s.add_argument("host")
    s.set_defaults(run=cmd_contains)

    s = sub.add_parser("symmetry", help="apply a symmetry")
    s.add_argument("perm")
    s.add_argument("--which", choices=SYMMETRIES, default="inverse")
    s.set_defaults(run=cmd_symmetry)

    s = sub.add_parser("graph", help="permutation graph as an edge list")
    s.add_argument("perm")
    s.set_defaults(run=cmd_graph)

    s = sub.add_parser("perms-of", help="all permutations with a given graph")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--path", type=int)
    src.add_argument("--clique", type=int)
    src.add_argument("--edgeless", type=int)
    src.add_argument("--file")
    s.add_argument("--cap", type=int, default=graphs.PERMS_OF_HARD_CAP)
    s.set_defaults(run=cmd_perms_of)

    s = sub.add_parser("decompose", help="substitution decomposition tree")
    s.add_argument("perm")
    s.set_defaults(run=cmd_decompose)

    s = sub.add_parser("depth", help="substitution depth")
    s.add_argument("perm")
    s.set_defaults(run=cmd_depth)

    s = sub.add_parser("grid-check", help="grid class membership")
    s.add_argument("perm")
    mat = s.add_mutually_exclusive_group(required=True)
    mat.add_argument("--matrix", help="rows top to bottom separated by '/'")
    mat.add_argument("--matrix-file")
    s.set_defaults(run=cmd_grid_check)

    s = sub.add_parser("corner-grid", help="smallest corner-free 0/1 gridding")
    s.add_argument("perm")
    s.add_argument("--dim-cap", type=int, default=8)
    s.set_defaults(run=cmd_corner_grid)

    s = sub.add_parser("slice", help="fewest axis-parallel lines slicing rectangles")
    s.add_argument("--rects", help="'x1 x2 y1 y2; ...'")
    s.add_argument("--file")
    s.set_defaults(run=cmd_slice)

    s = sub.add_parser("propagate", help="grid a permutation by hull propagation")
    s.add_argument("perm")
    s.add_argument("--hulls", help="'x1 x2 y1 y2 inc|dec; ...'")
    s.add_argument("--file")
    s.set_defaults(run=cmd_propagate)

    s = sub.add_parser("antichain", help="generate or verify antichains")
    asub = s.add_subparsers(dest="action", required=True)
    g = asub.add_parser("gen")
    g.add_argument("family", choices=sorted(antichain.CLI_NAMES))
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--perm", help="input permutation for ding and split")
    g.set_defaults(run=cmd_antichain_gen)
    v = asub.add_parser("verify")
    v.add_argument("family", nargs="?", choices=sorted(set(antichain.CLI_NAMES) - {"ding", "split"}))
    v.add_argument("--perms", help="comma-separated permutations instead of a family")
    v.add_argument("--count", type=int, default=3)
    v.add_argument("--mode", choices=("perm", "direct", "symmetry"), default="perm")
    v.add_argument("--cap", type=int, default=antichain.DIRECT_VERTEX_CAP)
    v.set_defaults(run=cmd_antichain_verify)

    s = sub.add_parser("count", help="count avoiders of a basis")
    s.add_argument("--basis", required=True, help="comma-separated patterns")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(run=cmd_count)

    s = sub.add_parser("guess", help="guess a linear recurrence")
    s.add_argument("--terms")
    s.add_argument("--basis")
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--max-order", type=int)
    s.add_argument("--holdout", type=int, default=2)
    s.set_defaults(run=cmd_guess)

    s = sub.add_parser("convert", help="normalise permutation or graph text")
    s.add_argument("kind", choices=("perm", "graph"))
    s.add_argument("text", nargs="?")
    s.add_argument("--file")
    s.add_argument("--to", choices=("spaced", "compact"), default="spaced")
    s.set_defaults(run=cmd_convert)
    return ap


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "antichain" and args.action == "verify" and not (args.family or args.perms):
        parser.print_usage(err)
        err.write("permwqo: antichain verify needs a family or --perms\n")
        return 2
    try:
        text, data = args.run(args)
    except (DomainError, ValueError) as exc:
        err.write(f"error: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}\n")
        return 1
    if args.format == "structured":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write("".join(line + "\n" for line in text))
    return 0


def main() -> None:
    sys.exit(run())
