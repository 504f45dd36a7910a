"""Command-line surface: parse graph files, run solvers, emit certificates.

Exit codes: 0 success, 1 infeasible or invalid input, 2 internal assertion
(search budget, stuck construction), 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import reference
from .decomposition import decompose, width
from .errors import INPUT_ERRORS, INTERNAL_ERRORS, ParseError
from .graph import Graph, WeightedGraph
from .loads import DEFAULT_SEARCH_BUDGET
from .pieces import PathPiece, path_piece, spider_piece
from .solver import solve_mbv, solve_pp, solve_psc
from .treebuild import SpanningTreeResult
from .weighted import solve_cbv

BUDGET_ENV = "BRANCHWISE_BUDGET"


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    format: str
    seed: int
    oracle_check: bool
    search_budget: int
    output_path: str | None


def parse_graph(text: str, fmt: str):
    """Parse edgelist or DIMACS text into a Graph or WeightedGraph."""
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ParseError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str):
    n = m = None
    pairs = []
    weights = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2:
                raise ParseError("expected header 'n m'", lineno)
            n, m = _ints(tokens, lineno)
            continue
        if tokens[0] == "w":
            if len(tokens) != 3:
                raise ParseError("expected 'w vertex cost'", lineno)
            v, c = _ints(tokens[1:], lineno)
            weights[v] = c
            continue
        if len(tokens) != 2:
            raise ParseError("expected 'u v'", lineno)
        pairs.append(tuple(_ints(tokens, lineno)))
    if n is None:
        raise ParseError("empty input")
    if len(pairs) != m:
        raise ParseError(f"header promised {m} edges, found {len(pairs)}")
    graph = Graph(n, pairs)
    if not weights:
        return graph
    return WeightedGraph(graph, [weights.get(v, 1) for v in range(n)])


def _parse_dimacs(text: str):
    n = m = None
    pairs = []
    weights = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("expected 'p edge n m'", lineno)
            n, m = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError("expected 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            pairs.append((u - 1, v - 1))
        elif tokens[0] == "n":
            if len(tokens) != 3:
                raise ParseError("expected 'n vertex cost'", lineno)
            v, c = _ints(tokens[1:], lineno)
            weights[v - 1] = c
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(pairs) != m:
        raise ParseError(f"problem line promised {m} edges, found {len(pairs)}")
    graph = Graph(n, pairs)
    if not weights:
        return graph
    return WeightedGraph(graph, [weights.get(v, 1) for v in range(n)])


def _ints(tokens, lineno):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno)
    return out


# ----- serialization ---------------------------------------------------

def tree_payload(tree: SpanningTreeResult, n: int):
    return {
        "root": tree.root,
        "parent": [tree.parent[v] for v in range(n)],
        "branch": sorted(tree.branch),
    }


def piece_payload(piece: PathPiece):
    if piece.kind == "path":
        return {"kind": "path", "vertices": list(piece.vertices)}
    return {
        "kind": "spider",
        "center": piece.vertices[0],
        "legs": [list(leg) for leg in piece.legs],
    }


def piece_from_payload(data) -> PathPiece:
    if data.get("kind") == "path":
        return path_piece(data["vertices"])
    if data.get("kind") == "spider":
        return spider_piece(data["center"], data["legs"])
    raise ParseError(f"unknown piece kind {data.get('kind')!r}")


def decompose_payload(node):
    if node.is_leaf:
        return {"kind": "leaf", "vertex": node.vertex}
    return {
        "kind": node.kind,
        "quotient_edges": [list(e) for e in node.quotient.sorted_edges()],
        "children": [decompose_payload(c) for c in node.children],
    }


# ----- commands --------------------------------------------------------

def _plain_graph(parsed) -> Graph:
    return parsed.graph if isinstance(parsed, WeightedGraph) else parsed


def _as_weighted(parsed) -> WeightedGraph:
    if isinstance(parsed, WeightedGraph):
        return parsed
    return WeightedGraph(parsed, [1] * parsed.n)  # uniform-cost degeneration


def _cmd_mbv(cfg, parsed):
    g = _plain_graph(parsed)
    answer = solve_mbv(g, search_budget=cfg.search_budget)
    payload = {"b": answer.b}
    payload.update(tree_payload(answer.tree, g.n))
    payload["branch_modules"] = list(answer.branch_modules)
    if cfg.oracle_check:
        if g.n <= reference.DEFAULT_ORACLE_CAP:
            expected, _ = reference.oracle_b(g)
            payload["oracle_b"] = expected
            payload["oracle_agrees"] = expected == answer.b
        else:
            payload["oracle_agrees"] = None
    return payload


def _cmd_cbv(cfg, parsed):
    wg = _as_weighted(parsed)
    answer = solve_cbv(wg, search_budget=cfg.search_budget)
    payload = {"cost": answer.cost}
    payload.update(tree_payload(answer.tree, wg.graph.n))
    payload["branch_classes"] = list(answer.branch_classes)
    if cfg.oracle_check:
        if wg.graph.n <= reference.DEFAULT_ORACLE_CAP:
            expected, _ = reference.oracle_w(wg)
            payload["oracle_w"] = expected
            payload["oracle_agrees"] = expected == answer.cost
        else:
            payload["oracle_agrees"] = None
    return payload


def _cmd_cover(cfg, parsed, kind):
    g = _plain_graph(parsed)
    if kind == "psc":
        value, cover = solve_psc(g, search_budget=cfg.search_budget)
        payload = {"spi": value}
        oracle_fn = reference.oracle_spi
    else:
        value, cover = solve_pp(g, search_budget=cfg.search_budget)
        payload = {"ham": value}
        oracle_fn = reference.oracle_ham
    payload["cover"] = [piece_payload(p) for p in cover]
    if cfg.oracle_check:
        if g.n <= reference.DEFAULT_ORACLE_CAP:
            expected = oracle_fn(g)
            payload["oracle_" + ("spi" if kind == "psc" else "ham")] = expected
            payload["oracle_agrees"] = expected == value
        else:
            payload["oracle_agrees"] = None
    return payload


def _cmd_decompose(cfg, parsed):
    g = _plain_graph(parsed)
    tree = decompose(g)
    return {"width": width(tree), "tree": decompose_payload(tree)}


def _cmd_oracle(cfg, parsed):
    g = _plain_graph(parsed)
    payload = {"n": g.n}
    b, _ = reference.oracle_b(g)
    payload["b"] = b
    payload["ham"] = reference.oracle_ham(g)
    payload["spi"] = reference.oracle_spi(g)
    if isinstance(parsed, WeightedGraph):
        w, _ = reference.oracle_w(parsed)
        payload["w"] = w
    return payload


def _cmd_verify(cfg, parsed, certificate_path):
    g = _plain_graph(parsed)
    with open(certificate_path, "r", encoding="utf-8") as fh:
        cert = json.load(fh)
    if "parent" in cert:
        parent = {v: p for v, p in enumerate(cert["parent"])}
        tree = SpanningTreeResult(
            parent=parent,
            root=cert["root"],
            branch=frozenset(cert["branch"]),
        )
        diag = reference.verify_spanning_tree(g, tree)
    elif "cover" in cert:
        pieces = [piece_from_payload(p) for p in cert["cover"]]
        expected = "psc" if "spi" in cert else "pp"
        diag = reference.verify_cover(g, pieces, expected)
    else:
        raise ParseError("certificate holds neither a tree nor a cover")
    return {"valid": diag.ok, "failure": diag.failure}, 0 if diag.ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _build_parser():
    parser = _Parser(prog="branchwise",
                     description="Exact spanning-tree branch-vertex solvers")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("mbv", "minimum number of branch vertices"),
        ("cbv", "minimum total cost of branch vertices"),
        ("psc", "minimum path-spider cover"),
        ("pp", "minimum partition into paths"),
        ("decompose", "modular decomposition parse tree"),
        ("oracle", "brute-force reference values"),
        ("verify", "check a certificate against the graph"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("input", help="graph file")
        cmd.add_argument("--format", choices=("edgelist", "dimacs"),
                         default="edgelist")
        cmd.add_argument("--seed", type=int, default=0,
                         help="seed for corpus generation (reserved)")
        cmd.add_argument("--budget", type=int, default=None,
                         help="search node budget (default from "
                              f"{BUDGET_ENV} or {DEFAULT_SEARCH_BUDGET})")
        cmd.add_argument("--output", default=None,
                         help="write the JSON result to this file")
        if name in ("mbv", "cbv", "psc", "pp"):
            cmd.add_argument("--oracle-check", action="store_true",
                             help="cross-validate against the brute-force "
                                  "oracle when within its size cap")
        if name == "verify":
            cmd.add_argument("--certificate", required=True,
                             help="JSON certificate to check")
    return parser


def _resolve_budget(value):
    if value is not None:
        return value
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{BUDGET_ENV} must be an integer, got {env!r}")
    return DEFAULT_SEARCH_BUDGET


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input_path=args.input,
            format=args.format,
            seed=args.seed,
            oracle_check=getattr(args, "oracle_check", False),
            search_budget=_resolve_budget(args.budget),
            output_path=args.output,
        )
        try:
            with open(cfg.input_path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc))
        parsed = parse_graph(text, cfg.format)
        code = 0
        if cfg.command == "mbv":
            payload = _cmd_mbv(cfg, parsed)
        elif cfg.command == "cbv":
            payload = _cmd_cbv(cfg, parsed)
        elif cfg.command == "psc":
            payload = _cmd_cover(cfg, parsed, "psc")
        elif cfg.command == "pp":
            payload = _cmd_cover(cfg, parsed, "pp")
        elif cfg.command == "decompose":
            payload = _cmd_decompose(cfg, parsed)
        elif cfg.command == "oracle":
            payload = _cmd_oracle(cfg, parsed)
        else:
            payload, code = _cmd_verify(cfg, parsed, args.certificate)
        if payload.get("oracle_agrees") is False:
            code = 2  # solver/oracle mismatch is an internal failure
    except INPUT_ERRORS as exc:
        print(f"branchwise: error: {exc}", file=sys.stderr)
        return 1
    except INTERNAL_ERRORS as exc:
        print(f"branchwise: internal: {exc}", file=sys.stderr)
        return 2
    text_out = json.dumps(payload)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text_out + "\n")
    else:
        print(text_out)
    return code


if __name__ == "__main__":
    sys.exit(main())
