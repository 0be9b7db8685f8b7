"""``chromatic-ramsey`` command line.

Exit codes: 0 success, 1 usage or input error, 2 dataset/validation error,
3 budget or size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .constructions import (
    ZhuSpec,
    bel_join,
    named_graph,
    read_hypergraph,
    turan2_number,
    tutte_graph,
    zhu_family,
    zhu_graph,
)
from .core import (
    INFINITE,
    Graph,
    chromatic_number,
    girth,
    graph6_decode,
    graph6_str,
    make_graph,
)
from .core.graph6 import read_file
from .errors import (
    BudgetExceededError,
    CapacityError,
    ChromaticRamseyError,
    DatasetError,
    SizeLimitError,
)
from .fractional import fractional_certificate
from .homo import minimal_hom_images
from .ramsey import (
    DEFAULT_PATTERN,
    algorithm1,
    catalogue_levels,
    chromatic_ramsey_small,
    enumerate_ramsey_graphs,
    is_ramsey_graph,
    load_lists,
)

DATA_ENV = "CHROMATIC_RAMSEY_DATA"
EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    data_dir: str | None
    mode: str
    workers: int
    output: str
    cap_n: int

    @classmethod
    def from_args(cls, args) -> RunConfig:
        workers = getattr(args, "workers", 1)
        cap_n = getattr(args, "cap_n", 8)
        if workers < 1:
            raise UsageError("--workers must be at least 1")
        if cap_n < 1:
            raise UsageError("--cap-n must be positive")
        return cls(
            data_dir=getattr(args, "data", None) or os.environ.get(DATA_ENV) or None,
            mode=getattr(args, "mode", "canonical"),
            workers=workers,
            output=args.output,
            cap_n=cap_n,
        )


def read_edge_file(path: str) -> Graph:
    """Edge list: one ``u v`` pair per line; an optional first line holds only ``n``."""
    lines = [ln.split("#")[0].split() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    n = None
    if lines and len(lines[0]) == 1:
        n = int(lines.pop(0)[0])
    edges = []
    for ln in lines:
        if len(ln) != 2:
            raise UsageError(f"{path}: expected 'u v', got {' '.join(ln)!r}")
        edges.append((int(ln[0]), int(ln[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return make_graph(n, edges)


def _input_graph(args) -> Graph:
    given = [x for x in (args.graph6, args.edges, args.named) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --named")
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    if args.edges is not None:
        return read_edge_file(args.edges)
    return named_graph(args.named)


def _emit(cfg_output: str, doc: dict, human_lines: list[str]) -> None:
    if cfg_output == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(human_lines))


def _girth_str(value) -> str:
    return "INFINITE" if value is INFINITE else str(value)


# ---------------------------------------------------------------------------
# subcommands


def cmd_chromatic_ramsey(args) -> int:
    cfg = RunConfig.from_args(args)
    g = _input_graph(args)
    k = chromatic_number(g)
    if k >= 5:
        print(f"chromatic number {k} is out of scope (supported: 2, 3, 4)", file=sys.stderr)
        return EXIT_USAGE
    if k < 2:
        raise UsageError("the input graph needs at least one edge")
    if k <= 3:
        report = chromatic_ramsey_small(g, cfg.cap_n)
    else:
        if not cfg.data_dir:
            raise DatasetError(
                f"4-chromatic input needs Ramsey(4,4) lists: pass --data or set {DATA_ENV}"
            )
        levels = catalogue_levels(4)
        lists, summaries = load_lists(cfg.data_dir, levels, 4, args.pattern)
        provenance = [(s.level, s.path, s.count, s.sha256) for s in summaries]
        report = algorithm1(
            g, None, lists, mode=cfg.mode, workers=cfg.workers,
            trusted_levels=levels, provenance=provenance,
        )
    doc = report.to_dict(timings=args.timings)
    human = [
        f"graph: {report.graph}",
        f"chromatic number: {report.chromatic_number}",
        f"Hom': {' '.join(report.hom_prime.graph6_list())}",
        f"R_chi: {report.value}",
        f"pi2: {report.turan_density_2}",
        f"method: {report.method}",
    ]
    if report.witness is not None:
        human.append(f"witness: level {report.witness[0]} {report.witness[1]}")
    if args.timings:
        human += [f"elapsed[{lv}]: {t:.3f}s" for lv, t in sorted(report.elapsed.items())]
    _emit(cfg.output, doc, human)
    return EXIT_OK


def cmd_validate_lists(args) -> int:
    cfg = RunConfig.from_args(args)
    if not cfg.data_dir:
        raise UsageError(f"pass --data or set {DATA_ENV}")
    root = Path(cfg.data_dir)
    levels = args.levels or catalogue_levels(args.k)
    rows = []
    status = EXIT_OK
    for level in levels:
        path = root / args.pattern.format(s=args.k, n=level)
        row = {"level": level, "path": str(path), "count": None, "valid": False,
               "sha256": None, "message": ""}
        try:
            _, summaries = load_lists(root, [level], args.k, args.pattern, not args.no_cache)
            s = summaries[0]
            row.update(count=s.count, valid=True, sha256=s.sha256,
                       message="" if s.validated else "cached")
            if s.count == 0:
                row["message"] = "warning: empty level (suspicious)"
        except ChromaticRamseyError as exc:
            row["message"] = str(exc)
            status = EXIT_DATA
        rows.append(row)
    human = []
    for r in rows:
        verdict = "valid" if r["valid"] else "INVALID"
        human.append(f"level {r['level']}: {verdict} count={r['count']} {r['message']}".rstrip())
    _emit(cfg.output, {"levels": rows}, human)
    return status


def cmd_hom_prime(args) -> int:
    cfg = RunConfig.from_args(args)
    fam = minimal_hom_images(_input_graph(args))
    _emit(cfg.output, {"hom_prime": fam.graph6_list()}, fam.graph6_list())
    return EXIT_OK


def cmd_chi_f(args) -> int:
    cfg = RunConfig.from_args(args)
    cert = fractional_certificate(_input_graph(args))
    doc = {"chi_f": str(cert.value)}
    human = [str(cert.value)]
    if args.certificate:
        colouring = [
            {"set": list(s), "weight": str(w)} for s, w in zip(cert.sets, cert.set_weights) if w
        ]
        clique = [str(w) for w in cert.vertex_weights]
        doc.update(colouring=colouring, clique=clique)
        human += [f"  {list(c['set'])}: {c['weight']}" for c in colouring]
        human.append(f"  vertex weights: {' '.join(clique)}")
    _emit(cfg.output, doc, human)
    return EXIT_OK


def _graph_doc(g: Graph, verify: bool) -> tuple[dict, list[str]]:
    doc = {"vertices": g.n, "edges": g.num_edges(), "graph6": graph6_str(g)}
    human = [f"vertices: {g.n}", f"edges: {g.num_edges()}"]
    if verify:
        doc["chromatic_number"] = chromatic_number(g)
        doc["girth"] = _girth_str(girth(g))
        human += [f"chromatic number: {doc['chromatic_number']}", f"girth: {doc['girth']}"]
    human.append(f"graph6: {doc['graph6']}")
    return doc, human


def cmd_zhu(args) -> int:
    cfg = RunConfig.from_args(args)
    spec = ZhuSpec(args.level, args.n, reduced=not args.unreduced)
    if args.join_k is not None:
        g = bel_join(args.join_k, args.level, spec, args.max_vertices)
    else:
        g = zhu_graph(spec, args.max_vertices)
    factors = zhu_family(spec)
    doc, human = _graph_doc(g, args.verify)
    doc = {"factors": [graph6_str(f) for f in factors], **doc}
    human.insert(0, f"factors: {' '.join(doc['factors'])}")
    _emit(cfg.output, doc, human)
    return EXIT_OK


def cmd_tutte(args) -> int:
    cfg = RunConfig.from_args(args)
    hypergraphs = [read_hypergraph(p) for p in args.hypergraph]
    g = tutte_graph(len(hypergraphs) + 1, hypergraphs)
    doc, human = _graph_doc(g, args.verify)
    _emit(cfg.output, doc, human)
    return EXIT_OK


def cmd_turan2(args) -> int:
    cfg = RunConfig.from_args(args)
    forbidden = graph6_decode(args.forbid_graph6) if args.forbid_graph6 else named_graph(args.forbid)
    value, cert = turan2_number(args.n, forbidden)
    doc = {
        "n": args.n,
        "forbidden": graph6_str(forbidden),
        "value": value,
        "host": graph6_str(cert.host),
        "red": graph6_str(cert.red),
        "blue": graph6_str(cert.blue),
        "certificate_valid": cert.validate(forbidden),
    }
    human = [f"ex2({args.n}) = {value}", f"host: {doc['host']}",
             f"red: {doc['red']}", f"blue: {doc['blue']}",
             f"certificate valid: {doc['certificate_valid']}"]
    _emit(cfg.output, doc, human)
    return EXIT_OK


def cmd_ramsey_enum(args) -> int:
    cfg = RunConfig.from_args(args)
    fam = enumerate_ramsey_graphs(args.s, args.t, args.n, args.max_graphs)
    if args.write:
        with open(args.write, "w") as fh:
            fh.writelines(line + "\n" for line in fam.graph6_list())
    doc = {"s": args.s, "t": args.t, "n": args.n, "count": len(fam), "graphs": fam.graph6_list()}
    human = [f"Ramsey({args.s},{args.t},{args.n}) graphs: {len(fam)}"]
    if not args.write:
        human += fam.graph6_list()
    _emit(cfg.output, doc, human)
    return EXIT_OK


def cmd_check(args) -> int:
    """Report clique and independence numbers of every graph in a graph6 file."""
    cfg = RunConfig.from_args(args)
    rows = [
        {"line": ln, "graph6": graph6_str(g), "ramsey": is_ramsey_graph(g, args.s, args.t)}
        for ln, g in read_file(args.file)
    ]
    bad = [r for r in rows if not r["ramsey"]]
    human = [f"{len(rows)} graphs, {len(bad)} not Ramsey({args.s},{args.t})"]
    human += [f"line {r['line']}: {r['graph6']}" for r in bad]
    _emit(cfg.output, {"count": len(rows), "failures": bad}, human)
    return EXIT_DATA if bad else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("human", "json"), default="human")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="input graph as a graph6 string")
    p.add_argument("--edges", metavar="FILE", help="input graph as an edge-list file")
    p.add_argument("--named", metavar="ID", help="named graph (moser_spindle, gamma, w5, k4, c5, ...)")


def _add_data(p: argparse.ArgumentParser) -> None:
    p.add_argument("--data", metavar="DIR", help=f"Ramsey list directory (default ${DATA_ENV})")
    p.add_argument("--pattern", default=DEFAULT_PATTERN,
                   help="file name pattern; {s} is k and {n} the level (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromatic-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rchi", help="chromatic Ramsey number of a graph")
    _add_input(p)
    _add_data(p)
    _add_common(p)
    p.add_argument("--mode", choices=("canonical", "fast"), default="canonical")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap-n", type=int, default=8, help="largest N for the exhaustive search")
    p.add_argument("--timings", action="store_true", help="include per-level timings")
    p.set_defaults(func=cmd_chromatic_ramsey)

    p = sub.add_parser("validate-lists", help="validate and checksum Ramsey(k,k) list files")
    _add_data(p)
    _add_common(p)
    p.add_argument("-k", type=int, default=4)
    p.add_argument("--levels", type=int, nargs="+")
    p.add_argument("--no-cache", action="store_true", help="revalidate even if checksums match")
    p.set_defaults(func=cmd_validate_lists)

    p = sub.add_parser("hom-prime", help="minimal homomorphic images")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_hom_prime)

    p = sub.add_parser("chi-f", help="exact fractional chromatic number")
    _add_input(p)
    _add_common(p)
    p.add_argument("--certificate", action="store_true", help="print optimal primal and dual")
    p.set_defaults(func=cmd_chi_f)

    p = sub.add_parser("zhu", help="tensor product over the small graphs with chi_f > level-1")
    _add_common(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--unreduced", action="store_true", help="use every labelled factor")
    p.add_argument("--join-k", type=int, help="join K_(k-level) to the product")
    p.add_argument("--max-vertices", type=int, default=1024)
    p.add_argument("--verify", action="store_true", help="also compute chromatic number and girth")
    p.set_defaults(func=cmd_zhu)

    p = sub.add_parser("tutte", help="iterated hypergraph build (one file per level from 2)")
    _add_common(p)
    p.add_argument("hypergraph", nargs="*", help="text hypergraph files: 'n r' then one edge per line")
    p.add_argument("--verify", action="store_true", help="also compute chromatic number and girth")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("turan2", help="2-colour Turan number of a small graph")
    _add_common(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--forbid", default="k3", help="named forbidden graph (default %(default)s)")
    p.add_argument("--forbid-graph6", help="forbidden graph as graph6")
    p.set_defaults(func=cmd_turan2)

    p = sub.add_parser("ramsey-enum", help="enumerate Ramsey(s,t,n)-graphs")
    _add_common(p)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-graphs", type=int, default=2_000_000)
    p.add_argument("--write", metavar="FILE", help="write the graphs as a graph6 file")
    p.set_defaults(func=cmd_ramsey_enum)

    p = sub.add_parser("check", help="check every graph in a graph6 file is Ramsey(s,t)")
    _add_common(p)
    p.add_argument("file")
    p.add_argument("-s", type=int, default=4)
    p.add_argument("-t", type=int, default=4)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DatasetError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (BudgetExceededError, CapacityError, SizeLimitError) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ChromaticRamseyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
