"""Command line front end.

Subcommands: validate, analyze, enumerate, link, truncate, ham2lambda.
Outputs are deterministic, line-oriented text files so runs can be compared
byte for byte.

Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
3 non-orientable labeling, 4 non-Hamiltonian (no involution with k = 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .charfun import (
    CharacteristicFunction,
    canonicalize,
    coloring_from_hamiltonian,
    enumerate_characteristic_functions,
    validate_star,
)
from .covers import analyze_involutions, render_analysis
from .errors import (
    NotHamiltonian,
    NotOrientable,
    SmallCoverError,
)
from .links import (
    chainmail_diagram,
    chord_diagram,
    intersection_graph,
    intersection_graph_dot,
    render_chord_diagram,
    render_gauss,
    render_pd,
    verify_alternating,
)
from .polytope import (
    SimplePolytope3,
    parse_polytope,
    polytope_document,
    polytope_hash,
    truncate_vertex,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_NONORIENTABLE = 3
EXIT_NONHAMILTONIAN = 4


def _read_polytope(path: str) -> SimplePolytope3:
    return parse_polytope(Path(path).read_text())


def _read_lambda(path: str) -> list[int]:
    doc = json.loads(Path(path).read_text())
    if isinstance(doc, dict):
        doc = doc.get("lambda")
    if not isinstance(doc, list):
        raise ValueError(
            "lambda file must hold a JSON array (or {\"lambda\": [...]})"
        )
    return doc


def _write(out_dir: str, name: str, text: str) -> None:
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    (target / name).write_text(text)
    print(f"wrote {target / name}")


def _lambda_classes(
    P: SimplePolytope3, spec: str
) -> list[tuple[str, CharacteristicFunction]]:
    """Resolve --lambda into (suffix, labeling) pairs.

    A path gives one unsuffixed labeling; the literal "enumerate" gives
    every orientable class with stable numeric suffixes.
    """
    if spec == "enumerate":
        classes = enumerate_characteristic_functions(P, orientable_only=True)
        width = max(2, len(str(len(classes))))
        return [
            (f"_{i:0{width}d}", cf) for i, cf in enumerate(classes, start=1)
        ]
    return [("", CharacteristicFunction(tuple(_read_lambda(spec))))]


# -- subcommands -------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    lines = [
        f"polytope: {polytope_hash(P)}",
        f"facets: {P.facet_count}",
        f"vertices: {P.vertex_count}",
        f"edges: {P.edge_count}",
    ]
    if args.lam is not None:
        cf = validate_star(P, _read_lambda(args.lam))
        lines.append("lambda: " + " ".join(map(str, cf.values)))
    lines.append("valid: true")
    print("\n".join(lines))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    for suffix, cf in _lambda_classes(P, args.lam):
        report = analyze_involutions(P, cf)
        text = render_analysis(P, report)
        _write(args.out, f"analysis{suffix}.txt", text)
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    classes = enumerate_characteristic_functions(
        P, orientable_only=args.orientable
    )
    lines = [
        f"polytope: {polytope_hash(P)}",
        f"orientable_only: {str(args.orientable).lower()}",
        f"classes: {len(classes)}",
    ]
    for i, cf in enumerate(classes, start=1):
        lines.append(f"class {i}: " + " ".join(map(str, cf.values)))
    text = "\n".join(lines) + "\n"
    _write(args.out, "enumerate.txt", text)
    sys.stdout.write(text)
    return EXIT_OK


_LINK_FILES = ("report", "dot", "pd", "gauss")


def cmd_link(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    cf = CharacteristicFunction(tuple(_read_lambda(args.lam)))
    report = analyze_involutions(P, cf)
    chosen = None
    for s in report.involutions:
        if args.g is not None and s.g != args.g:
            continue
        if s.k == 1:
            chosen = s
            break
    if chosen is None:
        which = f"g={args.g}" if args.g is not None else "any involution"
        raise NotHamiltonian(f"no Hamiltonian two-factor for {which}")

    D = chord_diagram(P, chosen.hamiltonian_cycle)
    G = intersection_graph(D)
    diagram = chainmail_diagram(G, D)
    ok, why = verify_alternating(diagram)
    if not ok:
        raise SmallCoverError(f"alternation check failed: {why}")

    wanted = _LINK_FILES if args.format == "all" else (args.format,)
    outputs = {
        "report": ("chord_diagram.txt", render_chord_diagram(D)),
        "dot": ("intersection_graph.dot", intersection_graph_dot(G)),
        "pd": ("link.pd", render_pd(diagram)),
        "gauss": ("link.gauss", render_gauss(diagram)),
    }
    for key in wanted:
        name, text = outputs[key]
        _write(args.out, name, text)
    print(f"g: {chosen.g}")
    print(f"components: {len(diagram.components)}")
    print(f"crossings: {len(diagram.crossings)}")
    return EXIT_OK


def cmd_truncate(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    for v in args.vertices:
        P = truncate_vertex(P, v)
    doc = polytope_document(P)
    _write(args.out, "truncated.json", json.dumps(doc) + "\n")
    print(f"facets: {P.facet_count}")
    print(f"vertices: {P.vertex_count}")
    print(f"edges: {P.edge_count}")
    return EXIT_OK


def cmd_ham2lambda(args: argparse.Namespace) -> int:
    P = _read_polytope(args.polytope)
    cycle = tuple(int(x) for x in args.cycle.split(","))
    cf = coloring_from_hamiltonian(P, cycle)
    canonical, _ = canonicalize(P, cf)
    _write(args.out, "lambda.json", json.dumps(list(cf.values)) + "\n")
    print("lambda: " + " ".join(map(str, cf.values)))
    print("class: " + " ".join(map(str, canonical.values)))
    return EXIT_OK


# -- parser and dispatch ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smallcover",
        description="Analyze small covers of simple 3-polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, lam: str | None) -> None:
        p.add_argument(
            "--polytope", required=True, help="polytope JSON file"
        )
        if lam is not None:
            p.add_argument(
                "--lambda",
                dest="lam",
                required=lam == "required",
                default=None,
                help="labeling JSON file"
                + (
                    " or the literal 'enumerate'"
                    if lam == "enumerable"
                    else ""
                ),
            )
        p.add_argument(
            "--out", default=".", help="output directory (default: .)"
        )

    p = sub.add_parser("validate", help="check a polytope (and labeling)")
    common(p, "optional")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="classify the involution quotients")
    common(p, "enumerable")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list labeling classes")
    common(p, None)
    p.add_argument(
        "--orientable",
        action="store_true",
        help="keep only orientable classes",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("link", help="emit chord diagram and link files")
    common(p, "required")
    p.add_argument(
        "--g",
        type=int,
        choices=range(1, 8),
        default=None,
        help="packed involution (must have k=1; default: first such)",
    )
    p.add_argument(
        "--format",
        choices=("report", "dot", "pd", "gauss", "all"),
        default="all",
        help="which artifact to write (default: all)",
    )
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("truncate", help="cut vertices off, one by one")
    common(p, None)
    p.add_argument("vertices", type=int, nargs="+")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser(
        "ham2lambda", help="labeling induced by a Hamiltonian cycle"
    )
    common(p, None)
    p.add_argument(
        "--cycle", required=True, help="comma-separated vertex cycle"
    )
    p.set_defaults(func=cmd_ham2lambda)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    except NotOrientable as exc:
        print(f"error: NotOrientable: {exc}", file=sys.stderr)
        return EXIT_NONORIENTABLE
    except NotHamiltonian as exc:
        print(f"error: NotHamiltonian: {exc}", file=sys.stderr)
        return EXIT_NONHAMILTONIAN
    except SmallCoverError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
