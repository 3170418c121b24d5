import json
import os

import pytest

from domgame import GraphError, encode_graph6, family_build, parse_graph6, random_graph
from domgame.census import (
    CensusRecord,
    JobSpec,
    RecordSchemaError,
    equality_census_small,
    iter_internal_rows,
    rall_check,
    read_records,
    resume_to_file,
    scan_stream,
    scan_to_file,
    verify_bounds,
    write_records,
)


def collect(spec: JobSpec):
    recs = []
    summary = scan_stream(spec, recs.append)
    return recs, summary


def test_internal_n4_diam2():
    from domgame import canonical_form

    recs, summary = collect(JobSpec(internal_n=4, require_diam2=True))
    assert summary.orders[4].scanned == 38
    assert summary.eq_half_classes[4] == 1
    # every half-bound winner is a relabeled 4-cycle
    c4_key = canonical_form(family_build("cycle", 4))
    winners = [r for r in recs if r.eq_half]
    assert winners
    assert all(canonical_form(parse_graph6(r.graph6)) == c4_key for r in winners)
    # 4 isomorphism classes of diameter-2 graphs on 4 vertices
    classes = {canonical_form(parse_graph6(r.graph6)) for r in recs}
    assert len(classes) == 4


def test_stream_k2_filtered(tmp_path):
    path = tmp_path / "in.g6"
    path.write_bytes(b"A_\n")
    recs, summary = collect(JobSpec(stream_path=str(path), require_diam2=True))
    assert recs == []
    assert summary.orders[2].scanned == 1
    assert summary.orders[2].passed == 0


def test_stream_vs_internal_agree(tmp_path):
    # the same graphs through both sources give identical measurements
    rows = list(iter_internal_rows(4, require_diam2=True))
    path = tmp_path / "in.g6"
    from domgame.graph6 import encode_pair_mask

    path.write_bytes(b"".join(
        encode_pair_mask(4, r.mask) + b"\n" for r in rows
    ))
    recs_stream, _ = collect(JobSpec(stream_path=str(path)))
    recs_internal, _ = collect(JobSpec(internal_n=4, require_diam2=True))
    assert len(recs_stream) == len(recs_internal)
    for a, b in zip(recs_stream, recs_internal):
        assert (a.graph6, a.n, a.m, a.gamma, a.gamma_g, a.gamma_g_prime) == \
            (b.graph6, b.n, b.m, b.gamma, b.gamma_g, b.gamma_g_prime)


def test_worker_determinism(tmp_path, monkeypatch):
    import domgame.census as census

    monkeypatch.setattr(census, "_INTERNAL_CHUNK_MASKS", 64)
    out1 = tmp_path / "w1.jsonl"
    out8 = tmp_path / "w8.jsonl"
    scan_to_file(JobSpec(internal_n=5, require_diam2=True, workers=1), str(out1))
    scan_to_file(JobSpec(internal_n=5, require_diam2=True, workers=8), str(out8))
    assert out1.read_bytes() == out8.read_bytes()


def test_worker_determinism_stream(tmp_path, monkeypatch):
    import domgame.census as census

    monkeypatch.setattr(census, "_STREAM_CHUNK_LINES", 16)
    path = tmp_path / "in.g6"
    with open(path, "wb") as fh:
        fh.write(b">>graph6<<\n")
        for seed in range(150):
            fh.write(encode_graph6(random_graph(4 + seed % 5, 1, 2, seed)) + b"\n")
    out1 = tmp_path / "w1.jsonl"
    out8 = tmp_path / "w8.jsonl"
    scan_to_file(JobSpec(stream_path=str(path), workers=1), str(out1))
    scan_to_file(JobSpec(stream_path=str(path), workers=8), str(out8))
    assert out1.read_bytes() == out8.read_bytes()
    assert len(out1.read_bytes().splitlines()) == 150


def test_filters_compose():
    recs, _ = collect(JobSpec(internal_n=5, require_diam2=True, min_delta=2))
    assert all(r.delta >= 2 and r.diam == 2 for r in recs)
    recs, _ = collect(JobSpec(internal_n=5, max_Delta=3))
    assert all(r.Delta <= 3 for r in recs)
    recs, _ = collect(JobSpec(internal_n=5, require_hamiltonian=True))
    assert len(recs) == 218  # Hamiltonian connected labeled graphs on 5 vertices


def test_seq_is_input_ordinal():
    recs, summary = collect(JobSpec(internal_n=4, require_diam2=True))
    assert all(0 <= r.seq < summary.orders[4].scanned for r in recs)
    assert sorted(set(r.seq for r in recs)) == [r.seq for r in recs]


def test_eq_flag_implication_small_orders():
    # below order 11 the stronger bound coincides with half, so the flags agree
    for n in (4, 5, 6):
        recs, _ = collect(JobSpec(internal_n=n, require_diam2=True))
        for r in recs:
            assert r.eq_half == r.eq_half_minus


def test_compute_subset():
    recs, _ = collect(JobSpec(internal_n=4, require_diam2=True,
                              compute=frozenset({"gamma_g"})))
    assert all(r.gamma is None and r.gamma_g is not None and r.gamma_g_prime is None
               for r in recs)


def test_records_roundtrip(tmp_path):
    recs, _ = collect(JobSpec(internal_n=4, require_diam2=True))
    path = tmp_path / "records.jsonl"
    write_records(str(path), recs)
    back = read_records(str(path))
    assert back == recs
    csv_path = tmp_path / "records.summary.csv"
    assert csv_path.exists()
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "n,scanned,diam2,eq_half,eq_half_minus,violations"


def test_empty_census_files(tmp_path):
    path = tmp_path / "empty.jsonl"
    write_records(str(path), [])
    assert path.read_bytes() == b""
    assert read_records(str(path)) == []
    lines = (tmp_path / "empty.summary.csv").read_text().strip().splitlines()
    assert lines == ["n,scanned,diam2,eq_half,eq_half_minus,violations"]


def test_read_records_rejects_schema_drift(tmp_path):
    recs, _ = collect(JobSpec(internal_n=4, require_diam2=True))
    path = tmp_path / "records.jsonl"
    write_records(str(path), recs[:1])
    data = json.loads(path.read_text())
    data["extra_field"] = 1
    path.write_text(json.dumps(data) + "\n")
    with pytest.raises(RecordSchemaError, match="line 1"):
        read_records(str(path))
    del data["extra_field"]
    del data["gamma"]
    path.write_text(json.dumps(data) + "\n")
    with pytest.raises(RecordSchemaError):
        read_records(str(path))


def test_petersen_record_value(tmp_path, petersen):
    path = tmp_path / "p.g6"
    path.write_bytes(encode_graph6(petersen) + b"\n")
    recs, _ = collect(JobSpec(stream_path=str(path)))
    assert len(recs) == 1
    rec = recs[0]
    assert rec.gamma_g == 5 and rec.gamma == 3
    assert rec.eq_half and not rec.violation
    line = json.dumps(rec.to_json(), sort_keys=True)
    assert '"gamma_g": 5' in line


def test_verify_bounds_clean_and_fault_injection():
    recs, _ = collect(JobSpec(internal_n=5, require_diam2=True))
    assert verify_bounds(recs) == []
    fake = recs[0].__class__(**{**recs[0].__dict__, "gamma_g": 6})
    viols = verify_bounds([fake])
    assert viols and any(v.bound == "half" for v in viols)


def test_verify_bounds_missing_field():
    recs, _ = collect(JobSpec(internal_n=4, require_diam2=True,
                              compute=frozenset({"gamma"})))
    with pytest.raises(RecordSchemaError):
        verify_bounds(recs)


def test_jobspec_validation(tmp_path):
    with pytest.raises(GraphError):
        JobSpec()
    with pytest.raises(GraphError):
        JobSpec(internal_n=4, stream_path="x")
    with pytest.raises(GraphError):
        JobSpec(internal_n=8)
    with pytest.raises(GraphError):
        JobSpec(internal_n=4, compute=frozenset({"nope"}))


def test_stream_gamma_guard_large_order(tmp_path):
    from domgame import BudgetExceededError

    path = tmp_path / "big.g6"
    path.write_bytes(encode_graph6(random_graph(30, 1, 2, 1)) + b"\n")
    with pytest.raises(BudgetExceededError, match="n <= 24"):
        collect(JobSpec(stream_path=str(path)))
    # without gamma in the compute set the order is fine
    recs, _ = collect(JobSpec(
        stream_path=str(path), compute=frozenset({"gamma_g", "gamma_g_prime"})
    ))
    assert len(recs) == 1 and recs[0].gamma is None
    assert recs[0].gamma_g is not None


def test_bad_stream_line_aborts_or_skips(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_bytes(b"A_\nZZ!bad\nA_\n")
    from domgame import Graph6Error

    with pytest.raises(Graph6Error):
        collect(JobSpec(stream_path=str(path)))
    recs, summary = collect(JobSpec(stream_path=str(path), skip_bad=True))
    assert len(recs) == 2
    assert summary.skipped_bad_lines == 1


class _Stop(RuntimeError):
    pass


def test_checkpoint_resume_identical_output(tmp_path, monkeypatch):
    spec = JobSpec(internal_n=5, require_diam2=True, checkpoint_interval=20)
    ref = tmp_path / "ref.jsonl"
    scan_to_file(JobSpec(internal_n=5, require_diam2=True), str(ref))

    out = tmp_path / "out.jsonl"
    # small chunks so the run crosses many checkpoints, then break it
    import domgame.census as census

    monkeypatch.setattr(census, "_INTERNAL_CHUNK_MASKS", 128)
    original = census._scan_chunk_internal
    calls = {"n": 0}

    def flaky(args):
        calls["n"] += 1
        if calls["n"] == 6:
            raise _Stop()
        return original(args)

    monkeypatch.setattr(census, "_scan_chunk_internal", flaky)
    with pytest.raises(_Stop):
        scan_to_file(spec, str(out))
    monkeypatch.setattr(census, "_scan_chunk_internal", original)

    ckpt = str(out) + ".ckpt"
    assert os.path.exists(ckpt)
    summary = resume_to_file(spec, str(out))
    assert not os.path.exists(ckpt)
    assert out.read_bytes() == ref.read_bytes()
    assert summary.orders[5].scanned == 728


def test_resume_refuses_edited_spec(tmp_path, monkeypatch):
    spec = JobSpec(internal_n=5, require_diam2=True, checkpoint_interval=20)
    out = tmp_path / "out.jsonl"
    import domgame.census as census

    monkeypatch.setattr(census, "_INTERNAL_CHUNK_MASKS", 128)
    original = census._scan_chunk_internal
    calls = {"n": 0}

    def flaky(args):
        calls["n"] += 1
        if calls["n"] == 6:
            raise _Stop()
        return original(args)

    monkeypatch.setattr(census, "_scan_chunk_internal", flaky)
    with pytest.raises(_Stop):
        scan_to_file(spec, str(out))

    edited = JobSpec(internal_n=5, require_diam2=False, checkpoint_interval=20)
    from domgame import CheckpointError

    with pytest.raises(CheckpointError):
        resume_to_file(edited, str(out))


def test_resume_without_checkpoint_runs_fresh(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_bytes(b"")
    out = tmp_path / "out.jsonl"
    spec = JobSpec(stream_path=str(path), checkpoint_interval=10)
    summary = resume_to_file(spec, str(out))
    assert summary.records == 0
    assert out.read_bytes() == b""


def test_equality_census_small_counts():
    eq = equality_census_small(6)
    assert [len(eq[n].classes) for n in range(1, 7)] == [0, 0, 0, 1, 1, 5]
    assert eq[4].connected_labeled == 38
    assert eq[5].connected_labeled == 728
    # labeled multiplicity of C4 among 4-vertex diameter-2 graphs
    assert sum(eq[4].labeled_counts.values()) == 3


def test_rall_check_small():
    report = rall_check(5)
    by_n = {o.n: o for o in report.orders}
    assert by_n[5].checked == 218
    assert by_n[4].checked == 10
    assert report.total_violations == 0
    with pytest.raises(GraphError):
        rall_check(9)


def test_sampled_stronger_bound_large_orders():
    # orders above the dense-solver window run on the dict path; a graph
    # that exhausts its budget is reported skipped, never mis-valued
    from domgame import BudgetExceededError, gamma_g, is_diam2
    from domgame.bounds import bound_half_minus_eleventh

    for n in (30, 44):
        solved = 0
        skipped = 0
        seed = 0
        while solved + skipped < 15:
            g = random_graph(n, 1, 2, n * 13_000_003 + seed)
            seed += 1
            if not is_diam2(g):
                continue
            try:
                gg = gamma_g(g, node_budget=2_000_000)
            except BudgetExceededError:
                skipped += 1
                continue
            assert gg <= bound_half_minus_eleventh(n)
            solved += 1
        assert solved > 0, f"all samples at n={n} skipped"
