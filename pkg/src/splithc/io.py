"""File formats, run reports and the batch verification harness.

Graph file format (one graph per file)::

    split-hc v1 <n> <m>
    partition K: <space-separated indices>   # optional
    <u> <v>                                  # m lines, u < v, sorted

``#`` starts a comment anywhere; blank lines are ignored.  Rendering is
canonical (edges sorted lexicographically), so parse/render round-trips
are bit-exact.

Report records are line-delimited and tab-separated::

    id  premise  verdict  method  micros  certificate

Certificates are always printed: the cycle itself, the cut vertex, the
short cycle with its excluded clique vertex, or the exhaustive-search
tag.  By default the micros column is written as 0 so that reports are
byte-identical across runs; pass ``timing=True`` for wall-clock numbers.

Manifests list instances, one per line, as either ``<id> file <path>``
(relative to the manifest) or ``<id> gen <Family> key=val ... seed=N``,
so corpora are reproducible from seeds alone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import NotSplitGraph, ParseError
from .generators import GenSpec, generate
from .graph import Graph, HamCycle, graph_from_edges, validate_ham_cycle
from .oracle import OracleBudget, oracle_solve
from .solver import SolveOutcome, solve

HEADER = "split-hc v1"


def render_graph(g: Graph, clique: Sequence[int] | None = None) -> str:
    lines = [f"{HEADER} {g.n} {g.m}"]
    if clique is not None:
        lines.append("partition K: " + " ".join(str(v) for v in sorted(clique)))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[Graph, tuple[int, ...] | None]:
    """Parse the graph format; returns (graph, clique hint or None)."""
    n = m = None
    clique: tuple[int, ...] | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 4 or " ".join(parts[:2]) != HEADER:
                raise ParseError(f"bad header {line!r}", line_no)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad header counts {line!r}", line_no) from None
            if n < 0 or m < 0:
                raise ParseError("negative counts in header", line_no)
            continue
        if line.startswith("partition K:"):
            try:
                clique = tuple(int(x) for x in line.split(":", 1)[1].split())
            except ValueError:
                raise ParseError("bad partition line", line_no) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected edge line, got {line!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge {line!r}", line_no) from None
        if u == v:
            raise ParseError(f"self-loop {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {u} {v} outside [0, {n})", line_no)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header")
    g = graph_from_edges(n, edges)
    if g.m != m:
        if len(edges) != m:
            raise ParseError(f"header promises {m} edges, file has {len(edges)}")
        # Duplicates were merged; warn by raising only on count mismatch.
    return g, clique


def read_graph(path: str | Path) -> tuple[Graph, tuple[int, ...] | None]:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path: str | Path, g: Graph, clique: Sequence[int] | None = None) -> None:
    Path(path).write_text(render_graph(g, clique), encoding="utf-8")


def render_cycle(cycle: HamCycle | Sequence[int]) -> str:
    order = cycle.order if isinstance(cycle, HamCycle) else tuple(cycle)
    return " ".join(str(v) for v in order) + "\n"


def parse_cycle(text: str) -> HamCycle:
    vals: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            vals.extend(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"bad cycle entry on {line!r}", line_no) from None
    if not vals:
        raise ParseError("empty cycle file")
    return HamCycle(tuple(vals))


def certificate_string(outcome: SolveOutcome) -> str:
    if outcome.cycle is not None:
        return "cycle " + ",".join(str(v) for v in outcome.cycle.order)
    return outcome.certificate.render()


@dataclass(frozen=True)
class ManifestEntry:
    instance_id: str
    kind: str  # "file" or "gen"
    path: str = ""
    spec: GenSpec | None = None


def parse_manifest(text: str) -> list[ManifestEntry]:
    entries: list[ManifestEntry] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 3:
            raise ParseError(f"manifest line too short: {line!r}", line_no)
        instance_id, kind = parts[0], parts[1]
        if kind == "file":
            entries.append(ManifestEntry(instance_id, "file", path=parts[2]))
            continue
        if kind != "gen":
            raise ParseError(f"unknown manifest kind {kind!r}", line_no)
        family = parts[2]
        params: dict[str, float] = {}
        seed = None
        for kv in parts[3:]:
            if "=" not in kv:
                raise ParseError(f"bad parameter {kv!r}", line_no)
            key, val = kv.split("=", 1)
            try:
                num = float(val) if "." in val else int(val)
            except ValueError:
                raise ParseError(f"bad parameter value {kv!r}", line_no) from None
            if key == "seed":
                seed = int(num)
            else:
                params[key] = num
        if seed is None:
            raise ParseError("gen entry missing seed", line_no)
        entries.append(ManifestEntry(instance_id, "gen", spec=GenSpec(family, params, seed)))
    ids = [e.instance_id for e in entries]
    if len(set(ids)) != len(ids):
        raise ParseError("duplicate instance ids in manifest")
    return entries


def load_manifest_instance(entry: ManifestEntry, base: Path) -> Graph:
    if entry.kind == "file":
        g, _ = read_graph(base / entry.path)
        return g
    return generate(entry.spec).graph


@dataclass(frozen=True)
class BatchResult:
    report: str
    discrepancies: int
    anomalies: tuple[str, ...]


def run_batch(manifest_path: str | Path, oracle_budget: OracleBudget | None = None,
              timing: bool = False, replay_dir: str | Path | None = None) -> BatchResult:
    """Solve every manifest instance, cross-check against the oracle, and
    emit the report; discrepancies are the tool's most important signal.

    Records are ordered by instance id.  Oracle cross-checks are skipped
    (marked "-") when the oracle exhausts its budget; a discrepancy is
    counted only for decided disagreements.
    """
    manifest_path = Path(manifest_path)
    entries = sorted(parse_manifest(manifest_path.read_text(encoding="utf-8")),
                     key=lambda e: e.instance_id)
    budget = oracle_budget or OracleBudget(nodes=2_000_000, seconds=30.0)
    lines: list[str] = []
    anomalies: list[str] = []
    discrepancies = 0
    for entry in entries:
        g = load_manifest_instance(entry, manifest_path.parent)
        t0 = time.perf_counter()
        try:
            outcome = solve(g, oracle_budget=budget)
        except NotSplitGraph as exc:
            lines.append(_record(entry.instance_id, "not-split", "error",
                                 "-", 0, f"witness {exc.kind}"))
            continue
        micros = int((time.perf_counter() - t0) * 1e6) if timing else 0
        cert = certificate_string(outcome)
        if outcome.cycle is not None:
            # Round-trip the certificate and re-validate on load.
            reloaded = parse_cycle(render_cycle(outcome.cycle))
            if not validate_ham_cycle(g, reloaded):
                raise AssertionError(f"certificate failed revalidation: {entry.instance_id}")
        oracle_res = oracle_solve(g, budget)
        agree = True
        if oracle_res.decided:
            agree = oracle_res.has_cycle == outcome.has_cycle
        if not agree:
            discrepancies += 1
            anomalies.append(f"{entry.instance_id}: solver={outcome.verdict} "
                             f"oracle={'cycle' if oracle_res.has_cycle else 'no-cycle'}")
            if replay_dir is not None:
                _dump_replay(Path(replay_dir), entry.instance_id, g, "verdict-mismatch")
        if outcome.anomaly:
            anomalies.append(f"{entry.instance_id}: {outcome.anomaly}")
            if replay_dir is not None:
                _dump_replay(Path(replay_dir), entry.instance_id, g, outcome.anomaly)
        lines.append(_record(entry.instance_id, outcome.premise, outcome.verdict,
                             outcome.method, micros, cert))
    return BatchResult("\n".join(lines) + "\n", discrepancies, tuple(anomalies))


def _record(instance_id: str, premise: str, verdict: str, method: str,
            micros: int, certificate: str) -> str:
    return "\t".join((instance_id, premise, verdict, method, str(micros), certificate))


def _dump_replay(replay_dir: Path, instance_id: str, g: Graph, tag: str) -> None:
    replay_dir.mkdir(parents=True, exist_ok=True)
    body = f"# replay {instance_id}: {tag}\n" + render_graph(g)
    (replay_dir / f"{instance_id}.graph").write_text(body, encoding="utf-8")


def pretty_report(report: str) -> str:
    """Human-readable table of a machine report."""
    rows = [line.split("\t") for line in report.splitlines() if line]
    if not rows:
        return "(empty report)\n"
    headers = ["id", "premise", "verdict", "method", "micros", "certificate"]
    widths = [max(len(h), *(len(r[i]) if i < len(r) else 0 for r in rows))
              for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for r in rows:
        out.append("  ".join((r[i] if i < len(r) else "").ljust(w)
                             for i, w in enumerate(widths)))
    return "\n".join(out) + "\n"
