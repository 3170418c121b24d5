"""Census pipelines: enumerate or ingest graphs, measure, verify, persist.

A job scans either the internal labeled enumeration (n <= 7) or a
graph6 stream file, measures each graph per the compute set, checks
every applicable bound, and emits CensusRecord rows in deterministic
seq order regardless of worker count. Producer chunks feed a thread
pool (the kernels release the GIL); a sliding window restores input
order before records reach the sink, so output bytes are identical for
any worker count and across checkpoint interruptions.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple

import numpy as np

from ._bits import pair_count
from .backend import kernels
from .bounds import BoundReport, bound_half, bound_half_minus_eleventh, bound_report
from .canon import CANON_MAX_N, canonical_form
from .errors import BudgetExceededError, CheckpointError, Graph6Error, GraphError, RecordSchemaError
from .graph6 import HEADER, encode_pair_mask, parse_graph6
from .graphs import from_pair_mask
from .solver import DEFAULT_NODE_BUDGET

INTERNAL_MAX_N = 7
GAMMA_MAX_N = 24  # dominating-set search uses a dense 2^n sweep
COMPUTE_ALL = frozenset({"gamma", "gamma_g", "gamma_g_prime"})

CHECKPOINT_VERSION = 1

_INTERNAL_CHUNK_MASKS = 1 << 14
_STREAM_CHUNK_LINES = 1024
_MAX_TRACKED_WINNERS = 50_000
_MAX_REPORTED_VIOLATIONS = 100


# ---------------------------------------------------------------------------
# records


RECORD_FIELDS = (
    "graph6", "n", "m", "delta", "Delta", "diam",
    "gamma", "gamma_g", "gamma_g_prime", "bounds",
    "eq_half", "eq_half_minus", "violation", "seq",
)


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    m: int
    delta: int
    Delta: int
    diam: int | None
    gamma: int | None
    gamma_g: int | None
    gamma_g_prime: int | None
    bounds: BoundReport
    eq_half: bool
    eq_half_minus: bool
    violation: bool
    seq: int

    def to_json(self) -> dict:
        d = {f: getattr(self, f) for f in RECORD_FIELDS}
        d["bounds"] = self.bounds.to_json()
        return d

    @classmethod
    def from_json(cls, data: dict) -> "CensusRecord":
        if set(data) != set(RECORD_FIELDS):
            missing = set(RECORD_FIELDS) - set(data)
            extra = set(data) - set(RECORD_FIELDS)
            raise RecordSchemaError(
                f"record schema mismatch (missing {sorted(missing)}, unexpected {sorted(extra)})"
            )
        kw = dict(data)
        kw["bounds"] = BoundReport.from_json(data["bounds"])
        return cls(**kw)


def _record_violation(rep: BoundReport, gamma: int | None, gg: int | None) -> bool:
    if gg is not None:
        for b in (rep.two_delta, rep.delta_corollary, rep.half,
                  rep.half_minus_eleventh, rep.total_dom):
            if b is not None and gg > b:
                return True
    if gamma is not None:
        for b in (rep.gamma_diam2, rep.meierling):
            if b is not None and gamma > b:
                return True
    return False


def _build_record(
    seq: int, g6: str, n: int, m: int, delta: int, Delta: int, diam: int,
    gamma: int, gg: int, ggp: int,
) -> CensusRecord:
    diam_v = None if diam < 0 else diam
    gamma_v = None if gamma < 0 else gamma
    gg_v = None if gg < 0 else gg
    ggp_v = None if ggp < 0 else ggp
    rep = bound_report(n, delta, Delta, diam_v)
    return CensusRecord(
        graph6=g6, n=n, m=m, delta=delta, Delta=Delta, diam=diam_v,
        gamma=gamma_v, gamma_g=gg_v, gamma_g_prime=ggp_v, bounds=rep,
        eq_half=gg_v is not None and gg_v == bound_half(n),
        eq_half_minus=gg_v is not None and gg_v == bound_half_minus_eleventh(n),
        violation=_record_violation(rep, gamma_v, gg_v),
        seq=seq,
    )


# ---------------------------------------------------------------------------
# job specification


@dataclass(frozen=True)
class JobSpec:
    """What to scan, how to filter it, and what to compute.

    Exactly one of internal_n / stream_path must be set; filters
    compose conjunctively. compute lists the invariants to solve
    (structural metrics are always measured).
    """

    internal_n: int | None = None
    stream_path: str | None = None
    require_diam2: bool = False
    min_delta: int = 0
    max_Delta: int | None = None
    require_hamiltonian: bool = False
    compute: frozenset = COMPUTE_ALL
    workers: int = 1
    checkpoint_interval: int = 0
    checkpoint_path: str | None = None
    skip_bad: bool = False
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if (self.internal_n is None) == (self.stream_path is None):
            raise GraphError("exactly one of internal_n / stream_path must be set")
        if self.internal_n is not None and not 1 <= self.internal_n <= INTERNAL_MAX_N:
            raise GraphError(f"internal enumeration requires 1 <= n <= {INTERNAL_MAX_N}")
        if not set(self.compute) <= COMPUTE_ALL:
            raise GraphError(f"compute set must be within {sorted(COMPUTE_ALL)}")
        if self.workers < 1:
            raise GraphError("workers must be >= 1")

    def digest(self) -> str:
        payload = {k: sorted(v) if isinstance(v, frozenset) else v
                   for k, v in self.__dict__.items()}
        return hashlib.sha256(
            json.dumps(payload, sort_keys=True).encode()
        ).hexdigest()


# ---------------------------------------------------------------------------
# summary


@dataclass
class OrderStats:
    scanned: int = 0
    passed: int = 0
    diam2: int = 0
    eq_half: int = 0
    eq_half_minus: int = 0
    violations: int = 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class CensusSummary:
    orders: dict[int, OrderStats] = field(default_factory=dict)
    records: int = 0
    nodes_visited: int = 0
    wall_time: float = 0.0
    skipped_bad_lines: int = 0
    violations: list[dict] = field(default_factory=list)
    eq_half_winners: dict[int, list[str]] = field(default_factory=dict)
    eq_half_classes: dict[int, int | None] = field(default_factory=dict)

    def order(self, n: int) -> OrderStats:
        return self.orders.setdefault(n, OrderStats())

    @property
    def total_violations(self) -> int:
        return sum(o.violations for o in self.orders.values())

    def note_record(self, rec: CensusRecord) -> None:
        st = self.order(rec.n)
        st.passed += 1
        self.records += 1
        if rec.diam == 2:
            st.diam2 += 1
        if rec.eq_half:
            st.eq_half += 1
            winners = self.eq_half_winners.setdefault(rec.n, [])
            if len(winners) < _MAX_TRACKED_WINNERS:
                winners.append(rec.graph6)
        if rec.eq_half_minus:
            st.eq_half_minus += 1
        if rec.violation:
            st.violations += 1
            if len(self.violations) < _MAX_REPORTED_VIOLATIONS:
                self.violations.append({"graph6": rec.graph6, "seq": rec.seq})

    def finish_classes(self) -> None:
        """Isomorphism-class counts of the half-bound equality winners."""
        for n, winners in self.eq_half_winners.items():
            if n > CANON_MAX_N or len(winners) >= _MAX_TRACKED_WINNERS:
                self.eq_half_classes[n] = None
                continue
            keys = {canonical_form(parse_graph6(w)) for w in winners}
            self.eq_half_classes[n] = len(keys)

    def to_json(self) -> dict:
        return {
            "orders": {str(n): o.to_json() for n, o in sorted(self.orders.items())},
            "records": self.records,
            "nodes_visited": self.nodes_visited,
            "wall_time": self.wall_time,
            "skipped_bad_lines": self.skipped_bad_lines,
            "violations": self.violations,
            "eq_half_winners": {str(n): w for n, w in self.eq_half_winners.items()},
            "eq_half_classes": {str(n): c for n, c in self.eq_half_classes.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "CensusSummary":
        s = cls()
        for n, o in data["orders"].items():
            s.orders[int(n)] = OrderStats(**o)
        s.records = data["records"]
        s.nodes_visited = data["nodes_visited"]
        s.wall_time = data["wall_time"]
        s.skipped_bad_lines = data["skipped_bad_lines"]
        s.violations = list(data["violations"])
        s.eq_half_winners = {int(n): list(w) for n, w in data["eq_half_winners"].items()}
        s.eq_half_classes = {int(n): c for n, c in data["eq_half_classes"].items()}
        return s


# ---------------------------------------------------------------------------
# chunked scanning


class InternalRow(NamedTuple):
    seq: int
    mask: int
    n: int
    m: int
    delta: int
    Delta: int
    diam: int
    twin_free: int
    hamiltonian: int
    gamma: int
    gamma_g: int
    gamma_g_prime: int


@dataclass
class _Chunk:
    next_input: int          # next mask (internal) or byte offset (stream)
    rows: list                # resolved row tuples
    scanned: dict             # order -> newly scanned inputs
    nodes: int
    skipped_bad: int = 0


def _scan_chunk_internal(args):
    (n, lo, hi, require_diam2, min_delta, max_delta, require_ham,
     want_twin, want_ham, want_gamma, want_gg, want_ggp, budget) = args
    size = hi - lo
    out_mask = np.zeros(size, dtype=np.uint32)
    out = [np.zeros(size, dtype=np.int8) for _ in range(9)]
    out_ord = np.zeros(size, dtype=np.int64)
    emitted, connected, nodes, status = kernels.scan_labeled(
        n, lo, hi, require_diam2, min_delta, max_delta, require_ham,
        want_twin, want_ham, want_gamma, want_gg, want_ggp, budget,
        out_mask, *out, out_ord,
    )
    if status:
        raise BudgetExceededError("census scan exceeded the solver node budget")
    return (out_mask[:emitted].copy(), [o[:emitted].copy() for o in out],
            out_ord[:emitted].copy(), connected, nodes)


def _windowed(executor: ThreadPoolExecutor | None, fn, tasks: Iterator, window: int):
    if executor is None:
        for t in tasks:
            yield fn(t)
        return
    pending: deque = deque()
    for t in tasks:
        pending.append(executor.submit(fn, t))
        if len(pending) >= window:
            yield pending.popleft().result()
    while pending:
        yield pending.popleft().result()


def _iter_internal_chunks(
    n: int, require_diam2: bool, min_delta: int, max_delta: int, require_ham: bool,
    wants: frozenset, workers: int, budget: int,
    start_mask: int, seq_base: int,
) -> Iterator[_Chunk]:
    total = 1 << pair_count(n)
    want_twin = "twin_free" in wants
    want_ham = "hamiltonian" in wants
    want_gamma = "gamma" in wants
    want_gg = "gamma_g" in wants
    want_ggp = "gamma_g_prime" in wants

    def tasks():
        lo = start_mask
        while lo < total:
            hi = min(lo + _INTERNAL_CHUNK_MASKS, total)
            yield (n, lo, hi, require_diam2, min_delta, max_delta, require_ham,
                   want_twin, want_ham, want_gamma, want_gg, want_ggp, budget)
            lo = hi

    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        seq = seq_base
        lo = start_mask
        for masks, cols, ords, connected, nodes in _windowed(
            executor, _scan_chunk_internal, tasks(), 2 * workers
        ):
            hi = min(lo + _INTERNAL_CHUNK_MASKS, total)
            rows = []
            m_, d_, D_, diam_, twin_, ham_, gam_, gg_, ggp_ = cols
            for i in range(len(masks)):
                rows.append(InternalRow(
                    seq + int(ords[i]), int(masks[i]), n,
                    int(m_[i]), int(d_[i]), int(D_[i]), int(diam_[i]),
                    int(twin_[i]), int(ham_[i]),
                    int(gam_[i]), int(gg_[i]), int(ggp_[i]),
                ))
            seq += connected
            yield _Chunk(next_input=hi, rows=rows, scanned={n: connected}, nodes=int(nodes))
            lo = hi
    finally:
        if executor is not None:
            executor.shutdown(wait=True)


class StreamRow(NamedTuple):
    seq: int
    graph6: str
    n: int
    m: int
    delta: int
    Delta: int
    diam: int
    twin_free: int
    hamiltonian: int
    gamma: int
    gamma_g: int
    gamma_g_prime: int


def _measure_stream_chunk(args):
    (entries, require_diam2, min_delta, max_delta, require_ham,
     want_twin, want_ham, want_gamma, want_gg, want_ggp, budget) = args
    rows = []
    scanned: dict[int, int] = {}
    nodes = 0
    for local_idx, text, g in entries:
        if want_gamma and g.n > GAMMA_MAX_N:
            raise BudgetExceededError(
                f"dominating-set computation needs n <= {GAMMA_MAX_N}; "
                f"stream graph has n = {g.n} (drop gamma from the compute set)"
            )
        scanned[g.n] = scanned.get(g.n, 0) + 1
        need_ham = want_ham or require_ham
        m, delta, Delta, diam, twin, ham, gamma, gg, ggp, nd, status = kernels.measure_graph(
            g.adj_array(), g.closed_array(), g.n,
            want_twin, need_ham, False, False, False, budget,
        )
        if delta < min_delta or Delta > max_delta:
            continue
        if require_diam2 and diam != 2:
            continue
        if require_ham and ham != 1:
            continue
        gamma = gg = ggp = -1
        if want_gamma or want_gg or want_ggp:
            _, _, _, _, _, _, gamma, gg, ggp, nd2, status = kernels.measure_graph(
                g.adj_array(), g.closed_array(), g.n,
                False, False, want_gamma, want_gg, want_ggp, budget,
            )
            nd += nd2
            if status:
                raise BudgetExceededError("census scan exceeded the solver node budget")
        nodes += nd
        rows.append((local_idx, text, g.n, m, delta, Delta, diam, twin, ham, gamma, gg, ggp))
    return rows, scanned, nodes


def _iter_stream_chunks(
    path: str, require_diam2: bool, min_delta: int, max_delta: int, require_ham: bool,
    wants: frozenset, workers: int, budget: int, skip_bad: bool,
    start_offset: int, seq_base: int,
) -> Iterator[_Chunk]:
    want_twin = "twin_free" in wants
    want_ham = "hamiltonian" in wants
    want_gamma = "gamma" in wants
    want_gg = "gamma_g" in wants
    want_ggp = "gamma_g_prime" in wants

    def tasks():
        with open(path, "rb") as fh:
            fh.seek(start_offset)
            lineno = 0
            bad = 0
            while True:
                entries = []
                while len(entries) < _STREAM_CHUNK_LINES:
                    raw = fh.readline()
                    if not raw:
                        break
                    lineno += 1
                    line = raw.strip()
                    if not line or line == HEADER:
                        continue
                    try:
                        g = parse_graph6(line)
                    except Graph6Error as exc:
                        if skip_bad:
                            bad += 1
                            continue
                        raise Graph6Error(f"stream offset {fh.tell()}: {exc}") from exc
                    entries.append((len(entries), line.decode("ascii"), g))
                if not entries:
                    break
                offset = fh.tell()
                yield (entries, offset, bad)
                bad = 0

    def run(task):
        entries, offset, bad = task
        rows, scanned, nodes = _measure_stream_chunk(
            (entries, require_diam2, min_delta, max_delta, require_ham,
             want_twin, want_ham, want_gamma, want_gg, want_ggp, budget)
        )
        return rows, scanned, nodes, offset, bad, len(entries)

    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        seq = seq_base
        for rows, scanned, nodes, offset, bad, n_entries in _windowed(
            executor, run, tasks(), 2 * workers
        ):
            resolved = [
                StreamRow(seq + local, text, n, m, d, D, diam, tw, hm, ga, gg, ggp)
                for local, text, n, m, d, D, diam, tw, hm, ga, gg, ggp in rows
            ]
            seq += n_entries
            yield _Chunk(next_input=offset, rows=resolved, scanned=scanned,
                         nodes=nodes, skipped_bad=bad)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)


def _iter_chunks(spec: JobSpec, start_input: int, seq_base: int) -> Iterator[_Chunk]:
    max_delta = spec.max_Delta if spec.max_Delta is not None else 127
    wants = frozenset(spec.compute) | (
        frozenset({"hamiltonian"}) if spec.require_hamiltonian else frozenset()
    )
    if spec.internal_n is not None:
        return _iter_internal_chunks(
            spec.internal_n, spec.require_diam2, spec.min_delta, max_delta,
            spec.require_hamiltonian, wants, spec.workers, spec.node_budget,
            start_input, seq_base,
        )
    return _iter_stream_chunks(
        spec.stream_path, spec.require_diam2, spec.min_delta, max_delta,
        spec.require_hamiltonian, wants, spec.workers, spec.node_budget,
        spec.skip_bad, start_input, seq_base,
    )


def iter_internal_rows(
    n: int,
    *,
    require_diam2: bool = False,
    min_delta: int = 0,
    max_Delta: int | None = None,
    require_hamiltonian: bool = False,
    wants: Iterable[str] = ("gamma", "gamma_g", "gamma_g_prime"),
    workers: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Iterator[InternalRow]:
    """Measured rows of the internal enumeration, ascending mask order.

    Row fields use -1 for anything not computed; wants may include
    gamma, gamma_g, gamma_g_prime, twin_free, hamiltonian.
    """
    if not 1 <= n <= INTERNAL_MAX_N:
        raise GraphError(f"internal enumeration requires 1 <= n <= {INTERNAL_MAX_N}")
    for chunk in _iter_internal_chunks(
        n, require_diam2, min_delta,
        max_Delta if max_Delta is not None else 127,
        require_hamiltonian, frozenset(wants)
        | (frozenset({"hamiltonian"}) if require_hamiltonian else frozenset()),
        workers, node_budget, 0, 0,
    ):
        yield from chunk.rows


# ---------------------------------------------------------------------------
# the scan driver


def _row_to_record(row) -> CensusRecord:
    if isinstance(row, InternalRow):
        g6 = encode_pair_mask(row.n, row.mask).decode("ascii")
    else:
        g6 = row.graph6
    return _build_record(
        row.seq, g6, row.n, row.m, row.delta, row.Delta, row.diam,
        row.gamma, row.gamma_g, row.gamma_g_prime,
    )


def scan_stream(
    spec: JobSpec,
    sink: Callable[[CensusRecord], None],
    *,
    _start_input: int | None = None,
    _seq_base: int = 0,
    _summary: CensusSummary | None = None,
    _on_chunk: Callable[[int], None] | None = None,
) -> CensusSummary:
    """Run a census job, feeding every record to sink in seq order.

    Returns the exact summary. The underscore keywords are the resume
    hooks used by scan_to_file / resume_to_file.
    """
    start = time.monotonic()
    summary = _summary if _summary is not None else CensusSummary()
    start_input = _start_input if _start_input is not None else 0
    for chunk in _iter_chunks(spec, start_input, _seq_base):
        for row in chunk.rows:
            rec = _row_to_record(row)
            summary.note_record(rec)
            sink(rec)
        for order, cnt in chunk.scanned.items():
            summary.order(order).scanned += cnt
        summary.nodes_visited += chunk.nodes
        summary.skipped_bad_lines += chunk.skipped_bad
        if _on_chunk is not None:
            _on_chunk(chunk.next_input)
    summary.finish_classes()
    summary.wall_time = time.monotonic() - start
    return summary


def _source_digest(spec: JobSpec) -> str:
    if spec.internal_n is not None:
        return f"internal:{spec.internal_n}"
    h = hashlib.sha256()
    with open(spec.stream_path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def _checkpoint_path(spec: JobSpec, output_path: str) -> str:
    return spec.checkpoint_path or output_path + ".ckpt"


def write_checkpoint(path: str, state: dict) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, path)


def scan_to_file(spec: JobSpec, output_path: str) -> CensusSummary:
    """Fresh census run writing JSONL records plus a CSV summary.

    With checkpoint_interval > 0 a checkpoint file tracks progress so
    an interrupted run can be continued by resume_to_file with output
    identical to an uninterrupted run. Successful completion removes
    the checkpoint.
    """
    return _run_to_file(spec, output_path, resume_state=None)


def resume_to_file(spec: JobSpec, output_path: str) -> CensusSummary:
    """Continue an interrupted run (or run fresh when no checkpoint)."""
    ckpt = _checkpoint_path(spec, output_path)
    if not os.path.exists(ckpt):
        return _run_to_file(spec, output_path, resume_state=None)
    with open(ckpt, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    if state.get("version") != CHECKPOINT_VERSION:
        raise CheckpointError(f"unsupported checkpoint version {state.get('version')}")
    if state["spec_digest"] != spec.digest():
        raise CheckpointError("checkpoint does not match this job spec; refusing to resume")
    if state["source_digest"] != _source_digest(spec):
        raise CheckpointError("source changed since checkpoint; refusing to resume")
    return _run_to_file(spec, output_path, resume_state=state)


def _run_to_file(spec: JobSpec, output_path: str, resume_state: dict | None) -> CensusSummary:
    ckpt_path = _checkpoint_path(spec, output_path)
    use_ckpt = spec.checkpoint_interval > 0
    source_digest = _source_digest(spec) if use_ckpt else ""

    if resume_state is not None:
        summary = CensusSummary.from_json(resume_state["summary"])
        start_input = resume_state["next_input"]
        seq_base = resume_state["next_seq"]
        out_offset = resume_state["output_offset"]
        with open(output_path, "r+b") as fh:
            fh.truncate(out_offset)
        out = open(output_path, "ab")
    else:
        summary = CensusSummary()
        start_input = None
        seq_base = 0
        out = open(output_path, "wb")

    written = summary.records
    last_ckpt = written

    def sink(rec: CensusRecord) -> None:
        nonlocal written
        out.write(json.dumps(rec.to_json(), sort_keys=True).encode())
        out.write(b"\n")
        written += 1

    def on_chunk(next_input: int) -> None:
        nonlocal last_ckpt
        if use_ckpt and written - last_ckpt >= spec.checkpoint_interval:
            out.flush()
            write_checkpoint(ckpt_path, {
                "version": CHECKPOINT_VERSION,
                "spec_digest": spec.digest(),
                "source_digest": source_digest,
                "next_input": next_input,
                "next_seq": _total_scanned(summary),
                "output_offset": out.tell(),
                "summary": summary.to_json(),
            })
            last_ckpt = written

    try:
        result = scan_stream(
            spec, sink,
            _start_input=start_input, _seq_base=seq_base,
            _summary=summary, _on_chunk=on_chunk,
        )
    finally:
        out.close()
    _write_summary_csv(_summary_csv_path(output_path), result)
    if use_ckpt and os.path.exists(ckpt_path):
        os.remove(ckpt_path)
    return result


def _total_scanned(summary: CensusSummary) -> int:
    return sum(o.scanned for o in summary.orders.values())


# ---------------------------------------------------------------------------
# persistence


def write_records(path: str, records: Iterable[CensusRecord]) -> None:
    """JSONL, one record per line, plus a sibling per-order CSV summary."""
    summary = CensusSummary()
    with open(path, "wb") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json(), sort_keys=True).encode())
            fh.write(b"\n")
            summary.note_record(rec)
    _write_summary_csv(_summary_csv_path(path), summary)


def read_records(path: str) -> list[CensusRecord]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(CensusRecord.from_json(json.loads(line)))
            except (json.JSONDecodeError, RecordSchemaError, TypeError) as exc:
                raise RecordSchemaError(f"line {lineno}: {exc}") from exc
    return out


def _summary_csv_path(records_path: str) -> str:
    base, _ = os.path.splitext(records_path)
    return base + ".summary.csv"


def _write_summary_csv(path: str, summary: CensusSummary) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("n,scanned,diam2,eq_half,eq_half_minus,violations\n")
        for n in sorted(summary.orders):
            o = summary.orders[n]
            fh.write(f"{n},{o.scanned},{o.diam2},{o.eq_half},{o.eq_half_minus},{o.violations}\n")


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class BoundViolation:
    graph6: str
    bound: str
    limit: int
    actual: int


_GG_BOUNDS = ("two_delta", "delta_corollary", "half", "half_minus_eleventh", "total_dom")
_GAMMA_BOUNDS = ("gamma_diam2", "meierling")


def verify_bounds(records: Iterable[CensusRecord]) -> list[BoundViolation]:
    """Re-derive every applicable bound and compare with measured values.

    Returns the empty list iff no record breaches any applicable bound.
    Records lacking a value a bound needs raise RecordSchemaError.
    """
    violations = []
    for rec in records:
        rep = bound_report(rec.n, rec.delta, rec.Delta, rec.diam)
        for name in _GG_BOUNDS:
            limit = getattr(rep, name)
            if limit is None:
                continue
            if rec.gamma_g is None:
                raise RecordSchemaError(
                    f"record {rec.graph6!r} lacks gamma_g needed by bound {name}"
                )
            if rec.gamma_g > limit:
                violations.append(BoundViolation(rec.graph6, name, limit, rec.gamma_g))
        for name in _GAMMA_BOUNDS:
            limit = getattr(rep, name)
            if limit is None:
                continue
            if rec.gamma is None:
                raise RecordSchemaError(
                    f"record {rec.graph6!r} lacks gamma needed by bound {name}"
                )
            if rec.gamma > limit:
                violations.append(BoundViolation(rec.graph6, name, limit, rec.gamma))
    return violations


# ---------------------------------------------------------------------------
# campaign helpers


@dataclass(frozen=True)
class EqualityClasses:
    """Isomorphism classes of gamma_g = ceil(n/2) graphs at one order."""

    n: int
    classes: tuple[str, ...]            # canonical graph6 keys, sorted
    labeled_counts: dict[str, int]
    connected_labeled: int


def equality_census_small(max_n: int, *, workers: int = 1) -> dict[int, EqualityClasses]:
    """Exhaustive half-bound equality classes over diameter-2 graphs, n <= max_n."""
    if not 1 <= max_n <= INTERNAL_MAX_N:
        raise GraphError(f"equality census requires max_n <= {INTERNAL_MAX_N}")
    out: dict[int, EqualityClasses] = {}
    for n in range(1, max_n + 1):
        half = bound_half(n)
        counts: dict[bytes, int] = {}
        connected = 0
        for chunk in _iter_internal_chunks(
            n, True, 0, 127, False, frozenset({"gamma_g"}), workers,
            DEFAULT_NODE_BUDGET, 0, 0,
        ):
            connected += chunk.scanned[n]
            for row in chunk.rows:
                if row.gamma_g == half:
                    key = canonical_form(from_pair_mask(n, row.mask))
                    counts[key] = counts.get(key, 0) + 1
        classes = tuple(sorted(k.decode("ascii") for k in counts))
        out[n] = EqualityClasses(
            n=n,
            classes=classes,
            labeled_counts={k.decode("ascii"): v for k, v in counts.items()},
            connected_labeled=connected,
        )
    return out


@dataclass(frozen=True)
class RallOrderReport:
    n: int
    connected: int
    skipped_min_degree: int
    non_hamiltonian: int
    checked: int
    violations: tuple[str, ...]


@dataclass(frozen=True)
class RallReport:
    orders: tuple[RallOrderReport, ...]
    nodes_visited: int

    @property
    def total_violations(self) -> int:
        return sum(len(o.violations) for o in self.orders)


RALL_MAX_N = 8


def rall_check(max_n: int, *, workers: int = 1, node_budget: int = DEFAULT_NODE_BUDGET) -> RallReport:
    """Half-of-order conjecture check over Hamiltonian graphs, n <= max_n.

    Graphs with minimum degree >= 5 are skipped outright (their game
    value is known to stay below the bound) and counted per order.
    """
    if not 1 <= max_n <= RALL_MAX_N:
        raise GraphError(f"Hamiltonian check limited to n <= {RALL_MAX_N}")
    orders = []
    total_nodes = 0
    for n in range(3, max_n + 1):
        total = 1 << pair_count(n)
        tasks = [(n, lo, min(lo + _INTERNAL_CHUNK_MASKS, total), node_budget)
                 for lo in range(0, total, _INTERNAL_CHUNK_MASKS)]

        def run(t):
            return kernels.rall_scan(*t)

        executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
        connected = skipped = non_ham = checked = 0
        viols: list[str] = []
        try:
            for res in _windowed(executor, run, iter(tasks), 2 * workers):
                c, s, nh, ch, nv, vmasks, nodes, status = res
                if status:
                    raise BudgetExceededError("Hamiltonian check exceeded the node budget")
                connected += c
                skipped += s
                non_ham += nh
                checked += ch
                total_nodes += nodes
                for k in range(min(nv, 64)):
                    viols.append(encode_pair_mask(n, int(vmasks[k])).decode("ascii"))
        finally:
            if executor is not None:
                executor.shutdown(wait=True)
        orders.append(RallOrderReport(
            n=n, connected=connected, skipped_min_degree=skipped,
            non_hamiltonian=non_ham, checked=checked, violations=tuple(viols),
        ))
    return RallReport(orders=tuple(orders), nodes_visited=total_nodes)
