"""Command-line entry point ``gpfp``.

Exit codes: 0 success, 1 a certificate failed, 2 bad arguments,
3 a size budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Callable

from .core import DEFAULT_ENUMERATION_BUDGET, BudgetExceeded, BVector, NotAVertex, VertexDescriptor
from .polytope import DEFAULT_VERTEX_BUDGET

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CERTIFICATE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CertificateFailure(Exception):
    def __init__(self, report: dict):
        super().__init__("certificate failed")
        self.report = report


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _frac_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _bvector(text: str) -> BVector:
    try:
        return BVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _budget() -> int:
    raw = os.environ.get("GPFP_BUDGET")
    if raw is None:
        return DEFAULT_VERTEX_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"gpfp: GPFP_BUDGET must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise SystemExit("gpfp: GPFP_BUDGET must be positive")
    return value


def _guard(b: BVector, budget: int) -> None:
    from .polytope import vertex_count

    count = vertex_count(b)
    if count > budget:
        raise BudgetExceeded(f"{count} vertices exceed the budget {budget} (set GPFP_BUDGET)")


# -- subcommands ------------------------------------------------------------------
# Each returns (claim, result dict).


def cmd_vertices(a, budget):
    from .polytope import vertex_points

    pts = vertex_points(a.b, budget)
    return "vertices are the coordinate permutations of the points y_k", {
        "count": len(pts),
        "vertices": [list(p) for p in pts],
    }


def cmd_facets(a, budget):
    from .polytope import facets

    fs = facets(a.b)
    return "minimal inequality description", {
        "count": len(fs),
        "facets": [f.to_json(a.b) for f in fs],
    }


def cmd_edges(a, budget):
    from .polytope import edge_graph, label_to_json

    g = edge_graph(a.b, budget)
    return "edges join vertices differing by one raise, drop or adjacent swap", {
        "vertices": [list(p) for p in g.points],
        "edges": [{"u": i, "v": j, "label": label_to_json(lab)} for i, j, lab in g.edges],
    }


def cmd_hpoly(a, budget):
    from .counting import h_polynomial, h_polynomial_from_posets

    h = h_polynomial(a.b)
    _guard(a.b, budget)
    other = h_polynomial_from_posets(a.b)
    return "h-polynomial from Eulerian polynomials and from vertex-poset descents", {
        "h": list(h.coeffs),
        "routes_agree": h == other,
    }


def cmd_fvector(a, budget):
    from .counting import f_from_h, f_vector, h_polynomial

    f = f_vector(a.b)
    return "f-vector from Stirling sums and from h(t+1)", {
        "f": list(f),
        "routes_agree": f == f_from_h(h_polynomial(a.b), a.b.n),
    }


def cmd_faces(a, budget):
    from .nestedsets import face_lattice

    if a.dim is not None and not 0 <= a.dim <= a.b.n:
        raise ValueError(f"--dim must lie in [0, {a.b.n}]")
    _guard(a.b, budget)
    lat = face_lattice(a.b)
    recs = lat.faces if a.dim is None else lat.of_dim(a.dim)
    return "faces correspond to nested sets of the building set", {
        "rank_sizes": list(lat.rank_sizes()),
        "faces": [r.to_json(a.b) for r in recs],
    }


def cmd_type(a, budget):
    from .nestedsets import combinatorial_type

    return "combinatorial type depends only on whether b_1 = 1", {
        "type": combinatorial_type(a.b).value,
    }


def cmd_minkowski(a, budget):
    from .minkowski import (
        count_passing_directions,
        is_y_positive,
        random_directions,
        y_coefficients,
        z_parameters,
    )

    _guard(a.b, budget)
    dirs = random_directions(a.b.n + 1, a.check_dirs, a.seed)
    passed = count_passing_directions(a.b, dirs)
    if passed != len(dirs):
        raise CertificateFailure({"support_checks": len(dirs), "support_checks_passed": passed})
    return "signed Minkowski decomposition into simplices", {
        "z": z_parameters(a.b).to_json(),
        "y": y_coefficients(a.b).to_json(),
        "is_y_positive": is_y_positive(a.b),
        "support_checks": len(dirs),
        "support_checks_passed": passed,
    }


def cmd_greedy(a, budget):
    from .polymatroid import greedy_maximize

    if len(a.w) != a.b.n:
        raise argparse.ArgumentTypeError(f"--w needs {a.b.n} entries")
    y, value = greedy_maximize(a.b, a.w)
    return "greedy optimum over the translated polymatroid", {
        "w": list(a.w),
        "y": list(y),
        "x": [v + 1 for v in y],
        "value": value,
    }


def cmd_diameter(a, budget):
    from .oracle import bfs_diameter
    from .polymatroid import (
        circuit_bound_swapped,
        circuit_bound,
        combinatorial_diameter,
    )
    from .polytope import edge_graph

    out = {
        "combinatorial": combinatorial_diameter(a.b),
        "circuit_bound": circuit_bound(a.b),
        "circuit_bound_swapped": circuit_bound_swapped(a.b),
    }
    if a.verify_bfs:
        bfs = bfs_diameter(edge_graph(a.b, budget))
        out["bfs"] = bfs
        out["match"] = bfs == out["combinatorial"]
        if not out["match"]:
            raise CertificateFailure(out)
    return "combinatorial and circuit diameters", out


def cmd_circuit_walk(a, budget):
    from .polymatroid import circuit_walk, walk_bound

    start = VertexDescriptor.from_point(a.b, a.start)
    end = VertexDescriptor.from_point(a.b, a.end)
    walk = circuit_walk(a.b, start, end)
    out = walk.to_json(a.b)
    out["bound"] = walk_bound(a.b, start, end)
    return "maximal integral steps along +-e_i and e_i - e_j", out


def cmd_birkhoff(a, budget):
    from .birkhoff import build_relaxed_partition, verify_projection_theorem

    sys_ = build_relaxed_partition(a.b)
    out: dict[str, Any] = {
        "variables": sys_.num_vars,
        "equalities": len(sys_.equalities),
        "prefix_cuts": list(a.b.prefix_sums),
    }
    if a.verify:
        cert = verify_projection_theorem(a.b)
        out["certificate"] = cert.to_json()
        if not cert.passed:
            raise CertificateFailure(out)
    return "projection of the relaxed assignment system", out


def _verify_battery(b: BVector, level: str, seed: int, budget: int) -> list[dict]:
    from .birkhoff import verify_projection_theorem
    from .counting import f_from_h, f_vector, h_polynomial, h_polynomial_from_posets
    from .minkowski import certify_generalized_permutahedron, random_directions, verify_signed_minkowski
    from .nestedsets import face_lattice
    from .oracle import bfs_diameter, brute_face_lattice, certify_hull, compare_face_lattices
    from .polymatroid import circuit_diameter_upper, circuit_bound, combinatorial_diameter
    from .polytope import edge_graph

    _guard(b, budget)
    n = b.n
    checks: list[tuple[str, Callable[[], Any]]] = []
    h = h_polynomial(b)
    checks.append(("h_routes", lambda: h == h_polynomial_from_posets(b)))
    checks.append(("f_routes", lambda: f_vector(b) == f_from_h(h, n)))
    checks.append(("hull", lambda: certify_hull(b, budget * 100).to_json()))
    checks.append(("diameter", lambda: bfs_diameter(edge_graph(b, budget)) == combinatorial_diameter(b)))
    checks.append(("generalized_permutahedron", lambda: certify_generalized_permutahedron(b)))
    dirs = random_directions(n + 1, 200 if level == "full" else 20, seed)
    checks.append(("signed_minkowski", lambda: verify_signed_minkowski(b, dirs)))
    if level == "full":
        checks.append(
            ("face_lattice", lambda: compare_face_lattices(face_lattice(b), brute_face_lattice(b)).to_json())
        )
        checks.append(
            ("circuit_walks", lambda: circuit_diameter_upper(b, budget=budget) <= circuit_bound(b))
        )
        if n * b.S(n) <= 12:
            checks.append(("projection", lambda: verify_projection_theorem(b).to_json()))
    report = []
    for name, fn in checks:
        res = fn()
        passed = res["passed"] if isinstance(res, dict) else bool(res)
        entry = {"check": name, "passed": passed}
        if isinstance(res, dict):
            entry["certificate"] = res
        report.append(entry)
    return report


def cmd_verify(a, budget):
    report = _verify_battery(a.b, a.level, a.seed, budget)
    out = {"level": a.level, "checks": report, "all_passed": all(c["passed"] for c in report)}
    if not out["all_passed"]:
        raise CertificateFailure(out)
    return "certificate battery", out


# -- output ---------------------------------------------------------------------------


def _table(doc: dict) -> str:
    lines = []

    def emit(key: str, value: Any, indent: int) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{key}: ({len(value)})")
            for v in value:
                if isinstance(v, dict):
                    lines.append(pad + "  - " + "  ".join(f"{k}={json.dumps(x)}" for k, x in v.items()))
                else:
                    lines.append(pad + "  - " + json.dumps(v))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")

    for k, v in doc.items():
        emit(k, v, 0)
    return "\n".join(lines)


def _render(doc: dict, fmt: str) -> str:
    return json.dumps(doc, indent=2) if fmt == "json" else _table(doc)


COMMANDS = {
    "vertices": (cmd_vertices, "list the vertices"),
    "facets": (cmd_facets, "list the facet inequalities"),
    "edges": (cmd_edges, "list the edges with their labels"),
    "hpoly": (cmd_hpoly, "h-polynomial, checked by two routes"),
    "fvector": (cmd_fvector, "f-vector, checked by two routes"),
    "faces": (cmd_faces, "faces with their nested sets"),
    "type": (cmd_type, "combinatorial type"),
    "minkowski": (cmd_minkowski, "z and y parameters with support-function checks"),
    "greedy": (cmd_greedy, "maximize a linear objective by the greedy algorithm"),
    "diameter": (cmd_diameter, "combinatorial and circuit diameters"),
    "circuit-walk": (cmd_circuit_walk, "circuit walk between two vertices"),
    "birkhoff": (cmd_birkhoff, "relaxed assignment system and its projection"),
    "verify": (cmd_verify, "run the certificate battery"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpfp",
        description="Exact computations on b-parking-function polytopes. "
        "The environment variable GPFP_BUDGET caps the vertex count (default "
        f"{DEFAULT_VERTEX_BUDGET}); enumeration is capped at 100 times that.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--b", required=True, type=_bvector, help="comma-separated positive integers, e.g. 1,2,3")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for any random sampling (recorded in output)")
        if name == "faces":
            p.add_argument("--dim", type=int, default=None, help="only faces of this dimension")
        elif name == "minkowski":
            p.add_argument("--check-dirs", type=int, default=200, help="number of random directions")
        elif name == "greedy":
            p.add_argument("--w", required=True, type=_frac_list, help="objective, comma-separated")
        elif name == "diameter":
            p.add_argument("--verify-bfs", action="store_true", help="also compute the diameter by BFS")
        elif name == "circuit-walk":
            p.add_argument("--from", dest="start", required=True, type=_int_list)
            p.add_argument("--to", dest="end", required=True, type=_int_list)
        elif name == "birkhoff":
            p.add_argument("--verify", action="store_true", help="run the projection certificate")
        elif name == "verify":
            p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = _budget()
    fn = COMMANDS[args.command][0]
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "b": list(args.b.entries),
        "seed": args.seed,
    }
    code = EXIT_OK
    try:
        claim, result = fn(args, budget)
    except CertificateFailure as exc:
        claim, result, code = "certificate failure", exc.report, EXIT_CERTIFICATE
    except BudgetExceeded as exc:
        print(f"gpfp: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (argparse.ArgumentTypeError, NotAVertex, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"gpfp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc["claim"] = claim
    doc["result"] = _jsonable(result)
    print(_render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
